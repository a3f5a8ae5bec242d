#ifndef WPS_ALGEBRAIC_HPP
#define WPS_ALGEBRAIC_HPP

#include <compare>
#include <vector>

#include "wps/numeric.hpp"

namespace wps {

/* Exact positive real of the shape  q * prod_i n_i^{p_i/q_i}  with q a
 * positive rational, n_i >= 2 integers and p_i/q_i rational exponents.
 * Comparisons use long-double logarithms and fall back to exact
 * big-integer cross powers when the difference is too close to call, so
 * boundary cases Size = T are decided exactly. */
class AlgebraicReal {
  public:
    AlgebraicReal() = default; // value 1

    static AlgebraicReal from_rational(Rat const & q);
    /* base^{num/den}, base >= 1, den >= 1 */
    static AlgebraicReal root(Int base, Int num, Int den);

    AlgebraicReal operator*(AlgebraicReal const & o) const;
    AlgebraicReal pow(Int num, Int den) const; // value^{num/den}

    std::strong_ordering compare(AlgebraicReal const & o) const;
    bool operator<(AlgebraicReal const & o) const
    {
        return compare(o) == std::strong_ordering::less;
    }
    bool operator<=(AlgebraicReal const & o) const
    {
        return compare(o) != std::strong_ordering::greater;
    }
    bool operator==(AlgebraicReal const & o) const
    {
        return compare(o) == std::strong_ordering::equal;
    }

    double to_double() const;
    double log() const;

  private:
    struct Factor {
        Int base; // >= 2
        Int num;  // exponent num/den, num != 0
        Int den;  // >= 1
    };
    Rat scale_{1};
    std::vector<Factor> factors_;

    void push_factor(Int base, Int num, Int den);
};

} // namespace wps

#endif
