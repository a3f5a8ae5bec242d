#ifndef WPS_RATIONAL_HPP
#define WPS_RATIONAL_HPP

#include <compare>
#include <numeric>

#include "wps/errors.hpp"

namespace wps {

/* Exact rational over 64-bit integers, always normalized (den > 0,
 * gcd(num, den) = 1).  Arithmetic goes through 128-bit intermediates and
 * throws internal_error if a normalized result leaves the 64-bit range.
 * (boost::rational is unusable here: its operators.hpp base classes
 * recurse infinitely under C++20 comparison rewriting.) */
class Rational {
  public:
    using Int = long long;

    constexpr Rational() = default;
    constexpr Rational(Int n) : num_(n) {} // NOLINT: implicit by design
    Rational(Int n, Int d)
    {
        if (d == 0)
            throw internal_error("rational with zero denominator");
        num_ = n;
        den_ = d;
        normalize();
    }

    constexpr Int numerator() const { return num_; }
    constexpr Int denominator() const { return den_; }

    friend Rational operator+(Rational const & a, Rational const & b)
    {
        return from_wide(W(a.num_) * b.den_ + W(b.num_) * a.den_,
                         W(a.den_) * b.den_);
    }
    friend Rational operator-(Rational const & a, Rational const & b)
    {
        return from_wide(W(a.num_) * b.den_ - W(b.num_) * a.den_,
                         W(a.den_) * b.den_);
    }
    friend Rational operator*(Rational const & a, Rational const & b)
    {
        return from_wide(W(a.num_) * b.num_, W(a.den_) * b.den_);
    }
    friend Rational operator/(Rational const & a, Rational const & b)
    {
        if (b.num_ == 0)
            throw internal_error("rational division by zero");
        return from_wide(W(a.num_) * b.den_, W(a.den_) * b.num_);
    }
    Rational operator-() const
    {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational & operator+=(Rational const & o) { return *this = *this + o; }
    Rational & operator-=(Rational const & o) { return *this = *this - o; }
    Rational & operator*=(Rational const & o) { return *this = *this * o; }
    Rational & operator/=(Rational const & o) { return *this = *this / o; }

    friend bool operator==(Rational const & a, Rational const & b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(Rational const & a,
                                            Rational const & b)
    {
        return W(a.num_) * b.den_ <=> W(b.num_) * a.den_;
    }

  private:
    using W = __int128;
    Int num_ = 0;
    Int den_ = 1;

    void normalize()
    {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static Rational from_wide(W n, W d)
    {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        W g = wgcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr W lim = W(9'223'372'036'854'775'807LL);
        if (n > lim || n < -lim || d > lim)
            throw internal_error("rational overflow");
        Rational r;
        r.num_ = static_cast<Int>(n);
        r.den_ = static_cast<Int>(d);
        return r;
    }

    static constexpr W wgcd(W a, W b)
    {
        while (b) {
            W t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
};

} // namespace wps

#endif
