#include "wps/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "wps/ideal.hpp"

namespace wps {

FieldElement elem_add(FieldElement const & x, FieldElement const & y)
{
    return {x.a + y.a, x.b + y.b};
}

FieldElement elem_sub(FieldElement const & x, FieldElement const & y)
{
    return {x.a - y.a, x.b - y.b};
}

FieldElement elem_neg(FieldElement const & x)
{
    return {-x.a, -x.b};
}

FieldElement elem_mul(FieldData const & F, FieldElement const & x,
                      FieldElement const & y)
{
    // (a1 + b1 w)(a2 + b2 w) with w^2 = tr*w - nm
    Rat tr(F.omega_trace), nm(F.omega_norm);
    return {x.a * y.a - x.b * y.b * nm, x.a * y.b + x.b * y.a + x.b * y.b * tr};
}

FieldElement elem_conj(FieldData const & F, FieldElement const & x)
{
    return {x.a + x.b * Rat(F.omega_trace), -x.b};
}

Rat elem_norm(FieldData const & F, FieldElement const & x)
{
    return x.a * x.a + x.a * x.b * Rat(F.omega_trace) +
           x.b * x.b * Rat(F.omega_norm);
}

Rat elem_trace(FieldData const & F, FieldElement const & x)
{
    return Rat(2) * x.a + x.b * Rat(F.omega_trace);
}

FieldElement elem_inv(FieldData const & F, FieldElement const & x)
{
    Rat n = elem_norm(F, x);
    require(n != 0, "division by zero field element");
    FieldElement c = elem_conj(F, x);
    return {c.a / n, c.b / n};
}

FieldElement elem_mul_rat(FieldElement const & x, Rat const & c)
{
    return {x.a * c, x.b * c};
}

bool elem_is_integral(FieldElement const & x)
{
    return x.a.denominator() == 1 && x.b.denominator() == 1;
}

FieldElement elem_pow(FieldData const & F, FieldElement const & x, Int e)
{
    invariant(e >= 0, "elem_pow: negative exponent");
    FieldElement r{Rat(1), Rat(0)}, b = x;
    while (e) {
        if (e & 1)
            r = elem_mul(F, r, b);
        b = elem_mul(F, b, b);
        e >>= 1;
    }
    return r;
}

FieldData make_rational_field()
{
    FieldData F;
    F.kind = FieldKind::rational;
    F.class_reps = {unit_ideal()};
    F.roots_of_unity = {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}};
    return F;
}

/* reduced primitive forms (A,B,C) of discriminant -disc_abs, sorted */
static std::vector<QuadForm> reduced_forms(Int disc_abs)
{
    std::vector<QuadForm> forms;
    for (Int A = 1; 3 * A * A <= disc_abs; ++A) {
        for (Int B = -A + 1; B <= A; ++B) {
            if (((B * B + disc_abs) % (4 * A)) != 0)
                continue;
            Int C = (B * B + disc_abs) / (4 * A);
            if (C < A)
                continue;
            if (B < 0 && (A == C || iabs(B) == A))
                continue; // reduced forms require B >= 0 on the boundary
            Int g = std::gcd(std::gcd(A, iabs(B)), C);
            if (g != 1)
                continue;
            forms.push_back({A, B, C});
        }
    }
    std::sort(forms.begin(), forms.end());
    return forms;
}

/* form (A,B,C) -> ideal Z*A + Z*((-B + sqrt(D))/2) in HNF */
static IdealRep ideal_from_form(FieldData const & F, QuadForm const & f)
{
    Int b0;
    if (F.omega_trace == 0) { // D = -4d even, B even, omega = sqrt(-d)
        invariant(f.b % 2 == 0, "form parity");
        b0 = -f.b / 2;
    } else { // D = -d odd, B odd, omega = (1+sqrt(-d))/2
        invariant(iabs(f.b) % 2 == 1, "form parity");
        b0 = (-f.b - 1) / 2;
    }
    b0 %= f.a;
    if (b0 < 0)
        b0 += f.a;
    return {Rat(1), f.a, b0};
}

FieldData make_imaginary_quadratic_field(Int d)
{
    require(d >= 1, "imaginary quadratic field needs d >= 1");
    for (auto const & [p, e] : factor_int(d)) {
        (void)p;
        require(e == 1, "d = " + std::to_string(d) + " is not squarefree");
    }
    FieldData F;
    F.kind = FieldKind::imaginary_quadratic;
    F.d = d;
    F.r1 = 0;
    F.r2 = 1;
    F.regulator = 1.0;
    if (d % 4 == 3) {
        F.disc_abs = d;
        F.omega_trace = 1; // omega = (1+sqrt(-d))/2
        F.omega_norm = (1 + d) / 4;
    } else {
        F.disc_abs = 4 * d;
        F.omega_trace = 0; // omega = sqrt(-d)
        F.omega_norm = d;
    }
    if (d == 1) {
        F.w = 4;
        F.roots_of_unity = {{Rat(1), Rat(0)},
                            {Rat(0), Rat(1)},
                            {Rat(-1), Rat(0)},
                            {Rat(0), Rat(-1)}};
    } else if (d == 3) {
        // sixth roots: 1, w, w-1, -1, -w, 1-w  (w = (1+sqrt(-3))/2)
        F.w = 6;
        F.roots_of_unity = {{Rat(1), Rat(0)},  {Rat(0), Rat(1)},
                            {Rat(-1), Rat(1)}, {Rat(-1), Rat(0)},
                            {Rat(0), Rat(-1)}, {Rat(1), Rat(-1)}};
    } else {
        F.w = 2;
        F.roots_of_unity = {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}};
    }
    auto forms = reduced_forms(F.disc_abs);
    F.h = static_cast<Int>(forms.size());
    F.class_reps.clear();
    for (auto const & f : forms)
        F.class_reps.push_back(ideal_from_form(F, f));
    invariant(!F.class_reps.empty() && F.class_reps.front() == unit_ideal(),
              "principal class rep must be the unit ideal");
    return F;
}

FieldData make_field(FieldTag const & tag)
{
    return tag.kind == FieldKind::rational
               ? make_rational_field()
               : make_imaginary_quadratic_field(tag.d);
}

FieldTag parse_field_spec(std::string const & spec)
{
    if (spec == "Q")
        return {FieldKind::rational, 0};
    if (spec == "Q(i)" || spec == "Qi")
        return {FieldKind::imaginary_quadratic, 1};
    if (spec.rfind("d=", 0) == 0) {
        try {
            size_t pos = 0;
            Int d = std::stoll(spec.substr(2), &pos);
            require(pos == spec.size() - 2, "trailing junk in field spec");
            return {FieldKind::imaginary_quadratic, d};
        } catch (std::logic_error const &) {
            throw input_error("bad field spec '" + spec + "'");
        }
    }
    throw input_error("bad field spec '" + spec +
                      "' (expected Q, Q(i) or d=<squarefree>)");
}

std::string format_field(FieldTag const & tag)
{
    if (tag.kind == FieldKind::rational)
        return "Q";
    return "d=" + std::to_string(tag.d);
}

static Rat parse_rat(std::string const & s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            size_t pos = 0;
            Int n = std::stoll(s, &pos);
            require(pos == s.size(), "bad rational '" + s + "'");
            return Rat(n);
        }
        size_t p1 = 0, p2 = 0;
        Int n = std::stoll(s.substr(0, slash), &p1);
        Int m = std::stoll(s.substr(slash + 1), &p2);
        require(p1 == slash && p2 == s.size() - slash - 1 && m != 0,
                "bad rational '" + s + "'");
        return Rat(n, m);
    } catch (std::logic_error const &) {
        throw input_error("bad rational '" + s + "'");
    }
}

FieldElement parse_element(std::string const & text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    require(!s.empty(), "empty coordinate");
    FieldElement out;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-')
            ++j;
        std::string term = s.substr(i, j - i);
        require(!term.empty(), "bad coordinate '" + text + "'");
        if (term.back() == 'w') {
            term.pop_back();
            if (!term.empty() && term.back() == '*')
                term.pop_back();
            Rat c = term.empty() ? Rat(1) : parse_rat(term);
            out.b += Rat(sign) * c;
        } else {
            out.a += Rat(sign) * parse_rat(term);
        }
        i = j;
    }
    return out;
}

static std::string rat_str(Rat const & q)
{
    std::ostringstream os;
    os << q.numerator();
    if (q.denominator() != 1)
        os << '/' << q.denominator();
    return os.str();
}

std::string format_element(FieldElement const & x)
{
    if (x.b == 0)
        return rat_str(x.a);
    std::string wpart;
    if (x.b == 1)
        wpart = "w";
    else if (x.b == -1)
        wpart = "-w";
    else
        wpart = rat_str(x.b) + "w";
    if (x.a == 0)
        return wpart;
    if (wpart[0] == '-')
        return rat_str(x.a) + wpart;
    return rat_str(x.a) + "+" + wpart;
}

} // namespace wps
