#include "wps/ideal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wps {

bool ideal_is_integral(IdealRep const & I)
{
    return I.scale.denominator() == 1;
}

Rat ideal_norm(FieldData const & F, IdealRep const & I)
{
    if (F.is_rational())
        return I.scale;
    return I.scale * I.scale * Rat(I.a);
}

namespace {

struct Row {
    Wide u, v; // element u + v*omega
};

Wide wgcd(Wide a, Wide b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/* xgcd: returns g = gcd(a,b) and s,t with s*a + t*b = g */
Wide wxgcd(Wide a, Wide b, Wide & s, Wide & t)
{
    Wide old_r = a, r = b;
    Wide old_s = 1, s1 = 0;
    Wide old_t = 0, t1 = 1;
    while (r != 0) {
        Wide q = old_r / r;
        Wide tmp;
        tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s1;
        old_s = s1;
        s1 = tmp;
        tmp = old_t - q * t1;
        old_t = t1;
        t1 = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
}

Int to_int(Wide x)
{
    invariant(x <= Wide(9'000'000'000'000'000'000LL) &&
                  x >= -Wide(9'000'000'000'000'000'000LL),
              "ideal arithmetic overflow");
    return static_cast<Int>(x);
}

/* Hermite form of the Z-module spanned by rows; returns (A, B, C) with
 * module = Z(A,0) + Z(B,C), A,C > 0, 0 <= B < A.  Rows must span a rank-2
 * module. */
void hnf2(std::vector<Row> const & rows, Wide & A, Wide & B, Wide & C)
{
    // accumulate the second row (gcd of omega parts)
    Wide U = 0, V = 0;
    for (auto const & r : rows) {
        if (r.v == 0)
            continue;
        if (V == 0) {
            U = r.u;
            V = r.v;
            if (V < 0) {
                U = -U;
                V = -V;
            }
            continue;
        }
        Wide s, t;
        Wide g = wxgcd(V, r.v, s, t);
        U = s * U + t * r.u;
        V = g;
    }
    invariant(V > 0, "hnf2: module has rank < 2");
    // eliminate omega parts, gcd the units
    Wide Ag = 0;
    for (auto const & r : rows) {
        Wide q = r.v / V;
        invariant(q * V == r.v, "hnf2: non-lattice row");
        Ag = wgcd(Ag, r.u - q * U);
    }
    invariant(Ag > 0, "hnf2: module has rank < 2");
    A = Ag;
    C = V;
    B = U % A;
    if (B < 0)
        B += A;
}

/* normal form from an integer-basis HNF triple: scale out the content C */
IdealRep normalize_triple(Wide A, Wide B, Wide C, Rat extra_scale)
{
    invariant(A % C == 0 && B % C == 0,
              "module is not an ideal (content does not divide)");
    Wide a = A / C, b = (B / C) % (A / C);
    return {extra_scale * Rat(to_int(C)), to_int(a), to_int(b)};
}

} // namespace

IdealRep ideal_mul_rat(IdealRep const & I, Rat const & c)
{
    require(c > 0, "ideal scaling must be positive");
    return {I.scale * c, I.a, I.b};
}

IdealRep ideal_mul(FieldData const & F, IdealRep const & I,
                   IdealRep const & J)
{
    if (F.is_rational())
        return {I.scale * J.scale, 1, 0};
    Wide a1 = I.a, b1 = I.b, a2 = J.a, b2 = J.b;
    Wide tr = F.omega_trace, nm = F.omega_norm;
    std::vector<Row> rows = {
        {a1 * a2, 0},
        {a1 * b2, a1},
        {a2 * b1, a2},
        {b1 * b2 - nm, b1 + b2 + tr},
    };
    Wide A, B, C;
    hnf2(rows, A, B, C);
    return normalize_triple(A, B, C, I.scale * J.scale);
}

IdealRep ideal_add(FieldData const & F, IdealRep const & I,
                   IdealRep const & J)
{
    if (F.is_rational()) {
        // gcd of rational ideals
        Int l = std::lcm(I.scale.denominator(), J.scale.denominator());
        Int n1 = I.scale.numerator() * (l / I.scale.denominator());
        Int n2 = J.scale.numerator() * (l / J.scale.denominator());
        return {Rat(std::gcd(n1, n2), l), 1, 0};
    }
    Int l = std::lcm(I.scale.denominator(), J.scale.denominator());
    Wide s1 = I.scale.numerator() * (l / I.scale.denominator());
    Wide s2 = J.scale.numerator() * (l / J.scale.denominator());
    std::vector<Row> rows = {
        {s1 * I.a, 0},
        {s1 * I.b, s1},
        {s2 * J.a, 0},
        {s2 * J.b, s2},
    };
    Wide A, B, C;
    hnf2(rows, A, B, C);
    return normalize_triple(A, B, C, Rat(1, l));
}

IdealRep ideal_conj(FieldData const & F, IdealRep const & I)
{
    if (F.is_rational())
        return I;
    Int b = (-I.b - F.omega_trace) % I.a;
    if (b < 0)
        b += I.a;
    return {I.scale, I.a, b};
}

IdealRep ideal_inv(FieldData const & F, IdealRep const & I)
{
    if (F.is_rational())
        return {Rat(1) / I.scale, 1, 0};
    return ideal_mul_rat(ideal_conj(F, I), Rat(1) / ideal_norm(F, I));
}

IdealRep ideal_pow(FieldData const & F, IdealRep const & I, Int e)
{
    invariant(e >= 0, "ideal_pow: negative exponent");
    IdealRep r = unit_ideal(), b = I;
    while (e) {
        if (e & 1)
            r = ideal_mul(F, r, b);
        b = ideal_mul(F, b, b);
        e >>= 1;
    }
    return r;
}

IdealRep principal_ideal(FieldData const & F, FieldElement const & x)
{
    require(!x.is_zero(), "principal ideal of zero");
    if (F.is_rational()) {
        Rat s = x.a < 0 ? -x.a : x.a;
        return {s, 1, 0};
    }
    Int den = std::lcm(x.a.denominator(), x.b.denominator());
    Wide p = x.a.numerator() * (den / x.a.denominator());
    Wide q = x.b.numerator() * (den / x.b.denominator());
    Wide tr = F.omega_trace, nm = F.omega_norm;
    // generators x, omega*x over Z
    std::vector<Row> rows = {
        {p, q},
        {-q * nm, p + q * tr},
    };
    Wide A, B, C;
    hnf2(rows, A, B, C);
    return normalize_triple(A, B, C, Rat(1, den));
}

bool ideal_contains_element(FieldData const & F, IdealRep const & I,
                            FieldElement const & x)
{
    Rat av = x.a / I.scale, bv = x.b / I.scale;
    if (F.is_rational())
        return x.b == 0 && av.denominator() == 1;
    if (av.denominator() != 1 || bv.denominator() != 1)
        return false;
    Int n = bv.numerator();
    Rat rem = av - Rat(n) * Rat(I.b);
    return rem.numerator() % I.a == 0;
}

bool ideal_contains(FieldData const & F, IdealRep const & I,
                    IdealRep const & J)
{
    FieldElement g1{J.scale * Rat(J.a), Rat(0)};
    if (F.is_rational())
        return ideal_contains_element(F, I, g1);
    FieldElement g2{J.scale * Rat(J.b), J.scale};
    return ideal_contains_element(F, I, g1) &&
           ideal_contains_element(F, I, g2);
}

Int ideal_valuation(FieldData const & F, IdealRep const & I,
                    IdealRep const & p)
{
    // numerator/denominator split: I = J / t with J integral
    Int t = I.scale.denominator();
    IdealRep J = ideal_mul_rat(I, Rat(t));
    auto v_integral = [&](IdealRep K) {
        Int e = 0;
        IdealRep pinv = ideal_inv(F, p);
        while (ideal_contains(F, p, K)) {
            K = ideal_mul(F, K, pinv);
            ++e;
            invariant(e < 256, "ideal_valuation runaway");
        }
        return e;
    };
    Int v = v_integral(J);
    if (t != 1)
        v -= v_integral({Rat(t), 1, 0});
    return v;
}

std::optional<Int> element_valuation(FieldData const & F,
                                     FieldElement const & x,
                                     IdealRep const & p)
{
    if (x.is_zero())
        return std::nullopt; // infinite valuation
    return ideal_valuation(F, principal_ideal(F, x), p);
}

std::vector<std::pair<IdealRep, int>>
factor_ideal(FieldData const & F, IdealRep const & I, Int trial_bound)
{
    require(ideal_is_integral(I), "factor_ideal needs an integral ideal");
    std::vector<std::pair<IdealRep, int>> out;
    if (F.is_rational()) {
        for (auto const & [p, e] : factor_int(I.scale.numerator(), trial_bound))
            out.push_back({{Rat(p), 1, 0}, e});
        return out;
    }
    Rat nq = ideal_norm(F, I);
    invariant(nq.denominator() == 1, "integral ideal with fractional norm");
    Int n = nq.numerator();
    if (n == 1)
        return out;
    for (auto const & [p, en] : factor_int(n, trial_bound)) {
        (void)en;
        int chi = kronecker(F.disc_signed(), p);
        std::vector<IdealRep> primes_above;
        if (chi == -1) {
            primes_above.push_back({Rat(p), 1, 0}); // inert, norm p^2
        } else {
            // roots of y^2 + tr*y + nm mod p
            Int y1;
            if (p == 2) {
                y1 = -1;
                for (Int y = 0; y < 2; ++y)
                    if ((y * y + F.omega_trace * y + F.omega_norm) % 2 == 0) {
                        y1 = y;
                        break;
                    }
                invariant(y1 >= 0, "no root mod 2 for non-inert prime");
            } else {
                Int s = sqrt_mod(F.disc_signed() % p, p);
                invariant(s >= 0, "sqrt_mod failed for non-inert prime");
                // y = (-tr + s) / 2 mod p
                Int inv2 = (p + 1) / 2;
                y1 = static_cast<Int>(Wide(s - F.omega_trace) % p * inv2 % p);
                if (y1 < 0)
                    y1 += p;
            }
            primes_above.push_back({Rat(1), p, y1});
            if (chi == 1) {
                Int y2 = ((-F.omega_trace - y1) % p + p) % p;
                primes_above.push_back({Rat(1), p, y2});
            }
        }
        for (auto const & P : primes_above) {
            Int e = ideal_valuation(F, I, P);
            if (e > 0)
                out.push_back({P, static_cast<int>(e)});
        }
    }
    std::sort(out.begin(), out.end(), [&](auto const & x, auto const & y) {
        Rat nx = ideal_norm(F, x.first), ny = ideal_norm(F, y.first);
        if (nx != ny)
            return nx < ny;
        return x.first.b < y.first.b;
    });
    // round-trip safety: the factors must reproduce the input
    IdealRep prod = unit_ideal();
    for (auto const & [P, e] : out)
        prod = ideal_mul(F, prod, ideal_pow(F, P, e));
    invariant(prod == I, "factor_ideal round-trip failed");
    return out;
}

int moebius_ideal(FieldData const & F, IdealRep const & I)
{
    int mu = 1;
    for (auto const & [P, e] : factor_ideal(F, I)) {
        (void)P;
        if (e >= 2)
            return 0;
        mu = -mu;
    }
    return mu;
}

QuadForm reduce_form(QuadForm f)
{
    Int D = f.b * f.b - 4 * f.a * f.c;
    auto normalize = [&]() {
        Int q = floor_div(f.b + f.a, 2 * f.a);
        f.b -= 2 * f.a * q;
        if (f.b == -f.a)
            f.b = f.a;
        f.c = (f.b * f.b - D) / (4 * f.a);
    };
    normalize();
    while (f.a > f.c) {
        f.b = -f.b;
        std::swap(f.a, f.c);
        normalize();
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    return f;
}

QuadForm class_label(FieldData const & F, IdealRep const & I)
{
    if (F.is_rational())
        return {1, 0, 0};
    // norm form of the primitive part Z a + Z (b + omega), divided by a
    Int a = I.a, b = I.b;
    Int nb = b * b + F.omega_trace * b + F.omega_norm;
    invariant(nb % a == 0, "not an ideal triple");
    return reduce_form({a, 2 * b + F.omega_trace, nb / a});
}

bool ideal_is_principal(FieldData const & F, IdealRep const & I)
{
    return class_label(F, I) == class_label(F, unit_ideal());
}

FieldElement principal_generator(FieldData const & F, IdealRep const & I)
{
    if (F.is_rational())
        return {I.scale, Rat(0)};
    // search gamma in the primitive part with Norm(gamma) = a
    Int a = I.a, b = I.b;
    Int tr = F.omega_trace;
    Int nb = b * b + tr * b + F.omega_norm;
    Int Dabs = F.disc_abs;
    Int vmax = isqrt(4 * a / Dabs) + 1;
    for (Int v = 0; v <= vmax; ++v) {
        // a^2 u^2 + a(2b+tr) u v + nb v^2 = a
        for (int sv = (v == 0 ? 1 : -1); sv <= 1; sv += 2) {
            Int vv = sv * v;
            double A = static_cast<double>(a) * a;
            double B = static_cast<double>(a) * (2 * b + tr) * vv;
            double Cc = static_cast<double>(nb) * vv * vv - a;
            double disc = B * B - 4 * A * Cc;
            if (disc < 0)
                continue;
            double r = std::sqrt(disc);
            Int lo = static_cast<Int>(std::floor((-B - r) / (2 * A))) - 1;
            Int hi = static_cast<Int>(std::ceil((-B + r) / (2 * A))) + 1;
            for (Int u = lo; u <= hi; ++u) {
                Wide q = Wide(a) * a * u * u +
                         Wide(a) * (2 * b + tr) * u * vv + Wide(nb) * vv * vv;
                if (q == Wide(a)) {
                    FieldElement g{Rat(u * a + vv * b), Rat(vv)};
                    return elem_mul_rat(g, I.scale);
                }
            }
        }
    }
    throw internal_error("principal_generator: ideal is not principal");
}

std::vector<IdealRep> integral_ideals_up_to(FieldData const & F, Int max_norm)
{
    std::vector<IdealRep> out;
    if (F.is_rational()) {
        for (Int n = 1; n <= max_norm; ++n)
            out.push_back({Rat(n), 1, 0});
        return out;
    }
    for (Int g = 1; g * g <= max_norm; ++g) {
        Int amax = max_norm / (g * g);
        for (Int a = 1; a <= amax; ++a) {
            for (Int b = 0; b < a; ++b) {
                if ((b * b + F.omega_trace * b + F.omega_norm) % a == 0)
                    out.push_back({Rat(g), a, b});
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](auto const & x, auto const & y) {
        Rat nx = ideal_norm(F, x), ny = ideal_norm(F, y);
        if (nx != ny)
            return nx < ny;
        if (x.a != y.a)
            return x.a < y.a;
        return x.b < y.b;
    });
    return out;
}

std::string format_ideal(FieldData const & F, IdealRep const & I)
{
    std::ostringstream os;
    auto scale_str = [&]() {
        std::ostringstream s;
        s << I.scale.numerator();
        if (I.scale.denominator() != 1)
            s << '/' << I.scale.denominator();
        return s.str();
    };
    if (F.is_rational() || I.a == 1) {
        os << '(' << scale_str() << ')';
        return os.str();
    }
    if (I.scale != 1)
        os << scale_str() << '*';
    os << '<' << I.a << ", " << format_element({Rat(I.b), Rat(1)}) << '>';
    return os.str();
}

} // namespace wps
