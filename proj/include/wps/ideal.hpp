#ifndef WPS_IDEAL_HPP
#define WPS_IDEAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wps/field.hpp"

namespace wps {

inline IdealRep unit_ideal()
{
    return {};
}

/* integral <=> the module sits inside the ring of integers */
bool ideal_is_integral(IdealRep const & I);

Rat ideal_norm(FieldData const & F, IdealRep const & I);

IdealRep ideal_mul(FieldData const & F, IdealRep const & I,
                   IdealRep const & J);
IdealRep ideal_mul_rat(IdealRep const & I, Rat const & c); // c > 0 scaling
/* module sum (ideal gcd) */
IdealRep ideal_add(FieldData const & F, IdealRep const & I,
                   IdealRep const & J);
IdealRep ideal_conj(FieldData const & F, IdealRep const & I);
IdealRep ideal_inv(FieldData const & F, IdealRep const & I);
IdealRep ideal_pow(FieldData const & F, IdealRep const & I, Int e); // e >= 0

IdealRep principal_ideal(FieldData const & F, FieldElement const & x); // x!=0

bool ideal_contains_element(FieldData const & F, IdealRep const & I,
                            FieldElement const & x);
/* J subset of I, i.e. I | J for integral ideals */
bool ideal_contains(FieldData const & F, IdealRep const & I,
                    IdealRep const & J);

/* Prime factorization of an integral ideal; factors sorted by (norm, b).
 * Prime norms are p or p^2.  trial_bound limits rational-norm factoring. */
std::vector<std::pair<IdealRep, int>>
factor_ideal(FieldData const & F, IdealRep const & I,
             Int trial_bound = 1'000'000);

int moebius_ideal(FieldData const & F, IdealRep const & I);

/* exponent of the prime `p` in the integral or fractional ideal I */
Int ideal_valuation(FieldData const & F, IdealRep const & I,
                    IdealRep const & p);

/* exponent of `p` in (x); empty optional encodes the infinite valuation of
 * x = 0 */
std::optional<Int> element_valuation(FieldData const & F,
                                     FieldElement const & x,
                                     IdealRep const & p);

/* Reduced primitive binary quadratic form attached to the ideal class of I;
 * equal labels <=> same class. */
struct QuadForm {
    Int a = 1, b = 0, c = 0;
    auto operator<=>(QuadForm const &) const = default;
};
QuadForm class_label(FieldData const & F, IdealRep const & I);
QuadForm reduce_form(QuadForm f);

bool ideal_is_principal(FieldData const & F, IdealRep const & I);
/* some generator of a principal fractional ideal (deterministic choice) */
FieldElement principal_generator(FieldData const & F, IdealRep const & I);

/* all integral ideals of norm <= max_norm, sorted by (norm, a, b) */
std::vector<IdealRep> integral_ideals_up_to(FieldData const & F,
                                            Int max_norm);

std::string format_ideal(FieldData const & F, IdealRep const & I);

} // namespace wps

#endif
