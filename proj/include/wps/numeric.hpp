#ifndef WPS_NUMERIC_HPP
#define WPS_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "wps/errors.hpp"
#include "wps/rational.hpp"

namespace wps {

using Int = long long;
using Wide = __int128;
using Rat = Rational;
using BigInt = boost::multiprecision::cpp_int;

inline Int floor_div(Int a, Int b)
{
    Int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline Int iabs(Int a)
{
    return a < 0 ? -a : a;
}

Int isqrt(Int n); // floor of sqrt, exact

inline BigInt big_pow(BigInt const & base, unsigned long long e)
{
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

double rat_to_double(Rat const & q);

/* Largest n >= 0 with n^den <= base^num (base > 0 rational, num >= 0,
 * den >= 1).  Exact via big-integer cross powers. */
Int floor_power(Rat const & base, Int num, Int den);

/* Trial division up to `bound`; a surviving cofactor <= bound^2 is prime.
 * Throws budget_error if the cofactor cannot be certified. */
std::vector<std::pair<Int, int>> factor_int(Int n, Int bound = 1'000'000);

int moebius_int(Int n);

/* Kronecker symbol (a/n), full generalization of Jacobi. */
int kronecker(Int a, Int n);

/* Square root of a mod odd prime p (Tonelli-Shanks); -1 if a is a
 * non-residue. */
Int sqrt_mod(Int a, Int p);

/* mu(1..n) by linear sieve. */
std::vector<signed char> moebius_table(Int n);

/* Smallest-prime-factor sieve for fast repeated factoring. */
class SpfTable {
  public:
    explicit SpfTable(Int limit);
    Int limit() const { return static_cast<Int>(spf_.size()) - 1; }
    /* distinct prime divisors of n; falls back to trial division above
     * the table limit */
    void distinct_primes(Int n, std::vector<Int> & out) const;

  private:
    std::vector<int32_t> spf_;
};

inline uint64_t splitmix64(uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace wps

#endif
