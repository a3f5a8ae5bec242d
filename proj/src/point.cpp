#include "wps/point.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wps {

std::vector<FieldElement> scale_action(FieldData const & F,
                                       FieldElement const & lambda,
                                       std::vector<FieldElement> const & x,
                                       Weight const & W)
{
    invariant(static_cast<int>(x.size()) == W.size(), "coordinate count");
    std::vector<FieldElement> y(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        y[i] = elem_mul(F, elem_pow(F, lambda, W[static_cast<int>(i)]), x[i]);
    return y;
}

static bool all_zero(std::vector<FieldElement> const & x)
{
    return std::all_of(x.begin(), x.end(),
                       [](FieldElement const & c) { return c.is_zero(); });
}

/* common denominator t with t_* x integral (t^{w_i} clears coordinate i) */
static Int clearing_scalar(std::vector<FieldElement> const & x)
{
    Int t = 1;
    for (auto const & c : x) {
        t = std::lcm(t, c.a.denominator());
        t = std::lcm(t, c.b.denominator());
    }
    return t;
}

static IdealRep integral_content(FieldData const & F,
                                 std::vector<FieldElement> const & x,
                                 Weight const & W)
{
    if (F.is_rational()) {
        Int g = 0;
        for (auto const & c : x)
            if (!c.is_zero())
                g = std::gcd(g, iabs(c.a.numerator()));
        Int content = 1;
        if (g > 1) {
            for (auto const & [p, gexp] : factor_int(g)) {
                (void)gexp;
                Int e = -1;
                for (size_t i = 0; i < x.size() && e != 0; ++i) {
                    if (x[i].is_zero())
                        continue;
                    Int v = 0, n = iabs(x[i].a.numerator());
                    while (n % p == 0) {
                        n /= p;
                        ++v;
                    }
                    Int ei = v / W[static_cast<int>(i)];
                    e = e < 0 ? ei : std::min(e, ei);
                }
                for (Int j = 0; j < e; ++j)
                    content *= p;
            }
        }
        return {Rat(content), 1, 0};
    }
    // candidate primes divide the coordinate of least norm
    int jmin = -1;
    Rat best;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        Rat n = elem_norm(F, x[i]);
        if (jmin < 0 || n < best) {
            jmin = static_cast<int>(i);
            best = n;
        }
    }
    IdealRep content = unit_ideal();
    for (auto const & [P, je] : factor_ideal(F, principal_ideal(F, x[jmin]))) {
        (void)je;
        Int e = -1;
        for (size_t i = 0; i < x.size() && e != 0; ++i) {
            if (x[i].is_zero())
                continue;
            auto v = element_valuation(F, x[i], P);
            invariant(v.has_value(), "valuation of nonzero element");
            Int ei = *v / W[static_cast<int>(i)];
            e = e < 0 ? ei : std::min(e, ei);
        }
        if (e > 0)
            content = ideal_mul(F, content, ideal_pow(F, P, e));
    }
    return content;
}

IdealRep weighted_content(FieldData const & F,
                          std::vector<FieldElement> const & x,
                          Weight const & W)
{
    require(static_cast<int>(x.size()) == W.size(),
            "coordinate count does not match weight length");
    require(!all_zero(x), "weighted content of the zero tuple");
    Int t = clearing_scalar(x);
    if (t == 1)
        return integral_content(F, x, W);
    // content(x) = content(t_* x) / t by the scaling law
    std::vector<FieldElement> y(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        Rat tw(1);
        for (int j = 0; j < W[static_cast<int>(i)]; ++j)
            tw *= Rat(t);
        y[i] = elem_mul_rat(x[i], tw);
    }
    return ideal_mul_rat(integral_content(F, y, W), Rat(1, t));
}

double h_infinity(FieldData const & F, std::vector<FieldElement> const & x,
                  Weight const & W)
{
    require(static_cast<int>(x.size()) == W.size(),
            "coordinate count does not match weight length");
    require(!all_zero(x), "H_infinity of the zero tuple");
    double best = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        double nv = F.is_rational()
                        ? std::fabs(rat_to_double(x[i].a))
                        : rat_to_double(elem_norm(F, x[i]));
        best = std::max(best, std::pow(nv, 1.0 / W[static_cast<int>(i)]));
    }
    return best;
}

AlgebraicReal h_infinity_exact(FieldData const & F,
                               std::vector<FieldElement> const & x,
                               Weight const & W)
{
    require(!all_zero(x), "H_infinity of the zero tuple");
    bool have = false;
    AlgebraicReal best;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        Rat nv = F.is_rational() ? (x[i].a < 0 ? -x[i].a : x[i].a)
                                 : elem_norm(F, x[i]);
        AlgebraicReal v =
            AlgebraicReal::from_rational(nv).pow(1, W[static_cast<int>(i)]);
        if (!have || best < v) {
            best = v;
            have = true;
        }
    }
    return best;
}

/* lexicographically smallest tuple among the unit-group images */
static std::vector<FieldElement>
unit_minimum(FieldData const & F, std::vector<FieldElement> const & x,
             Weight const & W)
{
    auto less = [](std::vector<FieldElement> const & u,
                   std::vector<FieldElement> const & v) {
        for (size_t i = 0; i < u.size(); ++i) {
            if (u[i] == v[i])
                continue;
            return elem_less(u[i], v[i]);
        }
        return false;
    };
    std::vector<FieldElement> best = x;
    for (auto const & u : F.roots_of_unity) {
        auto img = scale_action(F, u, x, W);
        if (less(img, best))
            best = img;
    }
    return best;
}

WpsPoint canonicalize(FieldData const & F, std::vector<FieldElement> coords,
                      Weight const & W)
{
    require(static_cast<int>(coords.size()) == W.size(),
            "coordinate count does not match weight length");
    require(!all_zero(coords), "cannot canonicalize the zero tuple");
    // clear denominators
    Int t = clearing_scalar(coords);
    if (t != 1)
        coords = scale_action(F, {Rat(t), Rat(0)}, coords, W);
    IdealRep I = integral_content(F, coords, W);

    if (F.is_rational()) {
        Int g = I.scale.numerator();
        if (g != 1) {
            FieldElement inv{Rat(1, g), Rat(0)};
            coords = scale_action(F, inv, coords, W);
        }
        // sign rule: first nonzero odd-weight coordinate positive
        for (size_t i = 0; i < coords.size(); ++i) {
            if (W[static_cast<int>(i)] % 2 == 0 || coords[i].is_zero())
                continue;
            if (coords[i].a < 0)
                coords = scale_action(F, {Rat(-1), Rat(0)}, coords, W);
            break;
        }
        return {F.tag(), W, std::move(coords), unit_ideal()};
    }

    // move the content to the class representative of its ideal class
    QuadForm lab = class_label(F, I);
    IdealRep const * rep = nullptr;
    for (auto const & A : F.class_reps)
        if (class_label(F, A) == lab) {
            rep = &A;
            break;
        }
    invariant(rep != nullptr, "ideal class without representative");
    if (!(I == *rep)) {
        FieldElement lambda =
            principal_generator(F, ideal_mul(F, *rep, ideal_inv(F, I)));
        coords = scale_action(F, lambda, coords, W);
    }
    coords = unit_minimum(F, coords, W);
    invariant(integral_content(F, coords, W) == *rep,
              "canonical content mismatch");
    return {F.tag(), W, std::move(coords), *rep};
}

double point_size(FieldData const & F, WpsPoint const & P)
{
    return h_infinity(F, P.coords, P.weight) /
           rat_to_double(ideal_norm(F, P.content));
}

AlgebraicReal point_size_exact(FieldData const & F, WpsPoint const & P)
{
    Rat n = ideal_norm(F, P.content);
    return h_infinity_exact(F, P.coords, P.weight) *
           AlgebraicReal::from_rational(Rat(n.denominator(), n.numerator()));
}

QuadForm point_class_label(FieldData const & F, WpsPoint const & P)
{
    return class_label(F, P.content);
}

double divisor_size(FieldData const & F, ProductPoint const & P,
                    DivisorClass const & D)
{
    require(P.factors.size() == D.exponents.size(),
            "divisor length does not match the number of factors");
    double s = 1;
    for (size_t i = 0; i < P.factors.size(); ++i)
        s *= std::pow(point_size(F, P.factors[i]),
                      static_cast<double>(D.exponents[i]));
    return s;
}

AlgebraicReal divisor_size_exact(FieldData const & F, ProductPoint const & P,
                                 DivisorClass const & D)
{
    require(P.factors.size() == D.exponents.size(),
            "divisor length does not match the number of factors");
    AlgebraicReal s;
    for (size_t i = 0; i < P.factors.size(); ++i)
        s = s * point_size_exact(F, P.factors[i]).pow(D.exponents[i], 1);
    return s;
}

std::vector<FieldElement> parse_point(std::string const & text)
{
    std::vector<FieldElement> coords;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        coords.push_back(parse_element(tok));
    require(!coords.empty(), "empty point");
    return coords;
}

std::string format_point(std::vector<FieldElement> const & coords)
{
    std::ostringstream os;
    for (size_t i = 0; i < coords.size(); ++i)
        os << (i ? "," : "") << format_element(coords[i]);
    return os.str();
}

} // namespace wps
