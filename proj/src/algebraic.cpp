#include "wps/algebraic.hpp"

#include <cmath>
#include <numeric>

namespace wps {

void AlgebraicReal::push_factor(Int base, Int num, Int den)
{
    invariant(base >= 1 && den >= 1, "AlgebraicReal: bad factor");
    if (base == 1 || num == 0)
        return;
    Int g = std::gcd(iabs(num), den);
    factors_.push_back({base, num / g, den / g});
}

AlgebraicReal AlgebraicReal::from_rational(Rat const & q)
{
    invariant(q > 0, "AlgebraicReal must be positive");
    AlgebraicReal r;
    r.scale_ = q;
    return r;
}

AlgebraicReal AlgebraicReal::root(Int base, Int num, Int den)
{
    AlgebraicReal r;
    if (den == 1) { // rational fast path keeps factor lists short
        invariant(num >= 0 && num <= 62, "AlgebraicReal::root exponent");
        Int v = 1;
        for (Int i = 0; i < num; ++i) {
            invariant(v <= (Int(1) << 62) / std::max<Int>(base, 1),
                      "AlgebraicReal::root overflow");
            v *= base;
        }
        r.scale_ = Rat(v);
        return r;
    }
    r.push_factor(base, num, den);
    return r;
}

AlgebraicReal AlgebraicReal::operator*(AlgebraicReal const & o) const
{
    AlgebraicReal r;
    r.scale_ = scale_ * o.scale_;
    r.factors_ = factors_;
    for (auto const & f : o.factors_)
        r.push_factor(f.base, f.num, f.den);
    return r;
}

AlgebraicReal AlgebraicReal::pow(Int num, Int den) const
{
    invariant(den >= 1, "AlgebraicReal::pow bad exponent");
    AlgebraicReal r;
    if (den == 1 && num >= 0) {
        r.scale_ = 1;
        for (Int i = 0; i < num; ++i)
            r.scale_ *= scale_;
    } else {
        // move the rational scale into the factor list
        r.scale_ = 1;
        if (scale_.numerator() != 1)
            r.push_factor(scale_.numerator(), num, den);
        if (scale_.denominator() != 1)
            r.push_factor(scale_.denominator(), -num, den);
    }
    for (auto const & f : factors_)
        r.push_factor(f.base, f.num * num, f.den * den);
    return r;
}

double AlgebraicReal::log() const
{
    long double s = std::log(static_cast<long double>(scale_.numerator())) -
                    std::log(static_cast<long double>(scale_.denominator()));
    for (auto const & f : factors_)
        s += static_cast<long double>(f.num) / f.den *
             std::log(static_cast<long double>(f.base));
    return static_cast<double>(s);
}

double AlgebraicReal::to_double() const
{
    return std::exp(log());
}

std::strong_ordering AlgebraicReal::compare(AlgebraicReal const & o) const
{
    double dl = log(), dr = o.log();
    double margin = 1e-9 * (2.0 + std::fabs(dl) + std::fabs(dr));
    if (dl < dr - margin)
        return std::strong_ordering::less;
    if (dl > dr + margin)
        return std::strong_ordering::greater;

    // exact cross-power comparison
    Int L = 1;
    for (auto const & f : factors_)
        L = std::lcm(L, f.den);
    for (auto const & f : o.factors_)
        L = std::lcm(L, f.den);
    invariant(L <= 1'000'000, "AlgebraicReal: exponent lcm too large");
    auto side = [&](AlgebraicReal const & x, BigInt & P, BigInt & Q) {
        P = big_pow(BigInt(x.scale_.numerator()),
                    static_cast<unsigned long long>(L));
        Q = big_pow(BigInt(x.scale_.denominator()),
                    static_cast<unsigned long long>(L));
        for (auto const & f : x.factors_) {
            Int e = f.num * (L / f.den);
            if (e > 0)
                P *= big_pow(BigInt(f.base),
                             static_cast<unsigned long long>(e));
            else
                Q *= big_pow(BigInt(f.base),
                             static_cast<unsigned long long>(-e));
        }
    };
    BigInt Pl, Ql, Pr, Qr;
    side(*this, Pl, Ql);
    side(o, Pr, Qr);
    BigInt lhs = Pl * Qr, rhs = Pr * Ql;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace wps
