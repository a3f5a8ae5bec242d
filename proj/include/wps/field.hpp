#ifndef WPS_FIELD_HPP
#define WPS_FIELD_HPP

#include <string>
#include <vector>

#include "wps/numeric.hpp"

namespace wps {

enum class FieldKind { rational, imaginary_quadratic };

/* Lightweight field identity, enough to rebuild the full FieldData. */
struct FieldTag {
    FieldKind kind = FieldKind::rational;
    Int d = 0; // squarefree d > 0 encoding Q(sqrt(-d)); 0 for Q
    bool operator==(FieldTag const &) const = default;
};

/* Exact element a + b*omega over the fixed integral basis (1, omega);
 * b = 0 over Q. */
struct FieldElement {
    Rat a{0}, b{0};
    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(FieldElement const &) const = default;
};

/* Fractional ideal in its unique normal form
 *     scale * (Z a + Z (b + omega)),   0 <= b < a,  a | Norm(b + omega),
 * with scale a positive rational.  Over Q always a = 1, b = 0 and the value
 * is scale * Z.  Two IdealReps are equal iff componentwise equal. */
struct IdealRep {
    Rat scale{1};
    Int a = 1;
    Int b = 0;
    bool operator==(IdealRep const &) const = default;
};

struct FieldData {
    FieldKind kind = FieldKind::rational;
    Int d = 0;         // Q(sqrt(-d))
    Int disc_abs = 1;  // |D_k|
    int r1 = 1, r2 = 0;
    Int h = 1;
    int w = 2;                        // roots of unity
    double regulator = 1.0;           // exactly 1 for both supported kinds
    Int omega_trace = 0;              // omega^2 = trace*omega - norm
    Int omega_norm = 0;
    std::vector<IdealRep> class_reps; // one integral ideal of minimal norm
                                      // per class, principal class first
    std::vector<FieldElement> roots_of_unity;

    int degree() const { return r1 + 2 * r2; }
    bool is_rational() const { return kind == FieldKind::rational; }
    Int disc_signed() const { return is_rational() ? 1 : -disc_abs; }
    FieldTag tag() const { return {kind, d}; }
};

FieldData make_rational_field();
FieldData make_imaginary_quadratic_field(Int d); // d squarefree > 0
FieldData make_field(FieldTag const & tag);
FieldTag parse_field_spec(std::string const & spec); // "Q", "Q(i)", "d=5"
std::string format_field(FieldTag const & tag);

/* element arithmetic (exact) */
FieldElement elem_add(FieldElement const &, FieldElement const &);
FieldElement elem_sub(FieldElement const &, FieldElement const &);
FieldElement elem_neg(FieldElement const &);
FieldElement elem_mul(FieldData const &, FieldElement const &,
                      FieldElement const &);
FieldElement elem_conj(FieldData const &, FieldElement const &);
FieldElement elem_inv(FieldData const &, FieldElement const &);
FieldElement elem_mul_rat(FieldElement const &, Rat const &);
Rat elem_norm(FieldData const &, FieldElement const &);  // a^2+ab*tr+b^2*nm
Rat elem_trace(FieldData const &, FieldElement const &); // 2a + b*tr
bool elem_is_integral(FieldElement const &);
FieldElement elem_pow(FieldData const &, FieldElement const &, Int e);

/* total order used for canonical unit representatives: lexicographic on
 * (coefficient of 1, coefficient of omega) */
inline bool elem_less(FieldElement const & x, FieldElement const & y)
{
    if (x.a != y.a)
        return x.a < y.a;
    return x.b < y.b;
}

FieldElement parse_element(std::string const & text); // "3/2-2w", "1+w", "4"
std::string format_element(FieldElement const & x);

} // namespace wps

#endif
