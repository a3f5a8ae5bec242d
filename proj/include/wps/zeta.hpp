#ifndef WPS_ZETA_HPP
#define WPS_ZETA_HPP

#include <vector>

#include "wps/field.hpp"

namespace wps {

struct ZetaValue {
    double value = 0;
    double error_bound = 0;
};

/* chi_D(n) for n mod |D|, D the signed discriminant (Kronecker symbol) */
std::vector<int> kronecker_character_table(Int disc_signed);

/* L(s, chi_D) by direct summation, truncation tail N^{1-s}/(s-1) <= tol */
ZetaValue dirichlet_l(Int disc_signed, int s, double tol);

/* Dedekind zeta at integer s >= 2: zeta(s) over Q, zeta(s)*L(s, chi_D)
 * over imaginary quadratic fields. */
ZetaValue dedekind_zeta(FieldData const & F, int s, double tol);

} // namespace wps

#endif
