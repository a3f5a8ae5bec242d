#include "wps/numeric.hpp"

#include <cmath>

namespace wps {

Int isqrt(Int n)
{
    if (n < 0)
        throw internal_error("isqrt of negative value");
    if (n == 0)
        return 0;
    Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

double rat_to_double(Rat const & q)
{
    return static_cast<double>(q.numerator()) /
           static_cast<double>(q.denominator());
}

Int floor_power(Rat const & base, Int num, Int den)
{
    if (base <= 0 || den <= 0 || num < 0)
        throw internal_error("floor_power: bad arguments");
    if (num == 0)
        return 1;
    BigInt const pn = big_pow(BigInt(base.numerator()),
                              static_cast<unsigned long long>(num));
    BigInt const pd = big_pow(BigInt(base.denominator()),
                              static_cast<unsigned long long>(num));
    auto ok = [&](Int n) {
        return big_pow(BigInt(n), static_cast<unsigned long long>(den)) * pd <=
               pn;
    };
    // n <= (num(base)/den(base))^{num/den}; start from a double estimate
    double est = std::pow(rat_to_double(base),
                          static_cast<double>(num) / static_cast<double>(den));
    if (est > 9.0e17)
        throw budget_error("floor_power: bound exceeds 64-bit range");
    Int n = est < 1.0 ? 0 : static_cast<Int>(est);
    while (n > 0 && !ok(n))
        --n;
    while (ok(n + 1))
        ++n;
    return n;
}

std::vector<std::pair<Int, int>> factor_int(Int n, Int bound)
{
    n = iabs(n);
    if (n == 0)
        throw internal_error("factor_int(0)");
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= n && p <= bound; p += (p == 2 ? 1 : 2)) {
        if (n % p)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) {
        if (n > bound * bound)
            throw budget_error("factor_int: cofactor " + std::to_string(n) +
                               " above factoring bound");
        out.emplace_back(n, 1); // no divisor <= bound <= sqrt(n): prime
    }
    return out;
}

int moebius_int(Int n)
{
    int mu = 1;
    for (auto const & [p, e] : factor_int(n)) {
        (void)p;
        if (e >= 2)
            return 0;
        mu = -mu;
    }
    return mu;
}

int kronecker(Int a, Int n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0)
        return 0;
    int k = 1;
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    if (v % 2 == 1) {
        Int r = a % 8;
        if (r < 0)
            r += 8;
        k = (r == 1 || r == 7) ? 1 : -1; // (a/2) for odd a
    }
    if (n < 0) {
        n = -n;
        if (a < 0)
            k = -k;
    }
    // Jacobi loop for odd positive n
    a %= n;
    if (a < 0)
        a += n;
    while (a != 0) {
        v = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++v;
        }
        if (v % 2 == 1 && (n % 8 == 3 || n % 8 == 5))
            k = -k;
        if (a % 4 == 3 && n % 4 == 3)
            k = -k;
        Int t = n % a;
        n = a;
        a = t;
    }
    return n == 1 ? k : 0;
}

static Int pow_mod(Int b, Int e, Int m)
{
    Wide r = 1, x = b % m;
    if (x < 0)
        x += m;
    while (e) {
        if (e & 1)
            r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<Int>(r);
}

Int sqrt_mod(Int a, Int p)
{
    a %= p;
    if (a < 0)
        a += p;
    if (a == 0)
        return 0;
    if (p == 2)
        return a;
    if (pow_mod(a, (p - 1) / 2, p) != 1)
        return -1;
    if (p % 4 == 3)
        return pow_mod(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    Int q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1)
        ++z;
    Int m = s;
    Int c = pow_mod(z, q, p);
    Int t = pow_mod(a, q, p);
    Int r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        Int i = 0, tt = t;
        while (tt != 1) {
            tt = static_cast<Int>(Wide(tt) * tt % p);
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j)
            b = static_cast<Int>(Wide(b) * b % p);
        m = i;
        c = static_cast<Int>(Wide(b) * b % p);
        t = static_cast<Int>(Wide(t) * c % p);
        r = static_cast<Int>(Wide(r) * b % p);
    }
    return r;
}

std::vector<signed char> moebius_table(Int n)
{
    std::vector<signed char> mu(n + 1, 0);
    std::vector<Int> primes;
    std::vector<char> composite(n + 1, 0);
    mu[1] = 1;
    for (Int i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (Int p : primes) {
            if (i * p > n)
                break;
            composite[i * p] = 1;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    return mu;
}

SpfTable::SpfTable(Int limit) : spf_(limit + 1, 0)
{
    for (Int i = 2; i <= limit; ++i) {
        if (spf_[i] == 0)
            for (Int j = i; j <= limit; j += i)
                if (spf_[j] == 0)
                    spf_[j] = static_cast<int32_t>(i);
    }
}

void SpfTable::distinct_primes(Int n, std::vector<Int> & out) const
{
    out.clear();
    n = iabs(n);
    if (n <= limit()) {
        while (n > 1) {
            Int p = spf_[n];
            out.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    } else {
        for (auto const & [p, e] : factor_int(n)) {
            (void)e;
            out.push_back(p);
        }
    }
}

} // namespace wps
