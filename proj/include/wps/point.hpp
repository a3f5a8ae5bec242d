#ifndef WPS_POINT_HPP
#define WPS_POINT_HPP

#include <string>
#include <vector>

#include "wps/algebraic.hpp"
#include "wps/field.hpp"
#include "wps/ideal.hpp"
#include "wps/weight.hpp"

namespace wps {

/* Canonical orbit representative of a rational point on P(W).  Coordinates
 * are integral, the weighted content equals `content` exactly (the unit
 * ideal over Q, a class representative over imaginary quadratic fields),
 * and the representative is the distinguished element of its finite
 * unit-group orbit.  Two points are equal iff their coordinates agree. */
struct WpsPoint {
    FieldTag field;
    Weight weight;
    std::vector<FieldElement> coords;
    IdealRep content;

    bool operator==(WpsPoint const & o) const
    {
        return field == o.field && weight == o.weight && coords == o.coords;
    }
};

struct ProductPoint {
    std::vector<WpsPoint> factors;
};

/* weighted scaling action lambda_* x = (lambda^{w_i} x_i) */
std::vector<FieldElement> scale_action(FieldData const & F,
                                       FieldElement const & lambda,
                                       std::vector<FieldElement> const & x,
                                       Weight const & W);

/* The fractional content ideal: its inverse is the set of scalars a with
 * a_* x integral; on integral tuples the exponent at a prime p is
 * min over nonzero coordinates of floor(v_p(x_i) / w_i). */
IdealRep weighted_content(FieldData const & F,
                          std::vector<FieldElement> const & x,
                          Weight const & W);

/* archimedean factor prod_v max_i |x_i|_v^{1/w_i} with |.|_v normalized
 * (squared modulus at the complex place) */
double h_infinity(FieldData const & F, std::vector<FieldElement> const & x,
                  Weight const & W);
AlgebraicReal h_infinity_exact(FieldData const & F,
                               std::vector<FieldElement> const & x,
                               Weight const & W);

WpsPoint canonicalize(FieldData const & F, std::vector<FieldElement> coords,
                      Weight const & W);

/* Size = H_infinity / Norm(content); scaling invariant */
double point_size(FieldData const & F, WpsPoint const & P);
AlgebraicReal point_size_exact(FieldData const & F, WpsPoint const & P);

QuadForm point_class_label(FieldData const & F, WpsPoint const & P);

double divisor_size(FieldData const & F, ProductPoint const & P,
                    DivisorClass const & D);
AlgebraicReal divisor_size_exact(FieldData const & F, ProductPoint const & P,
                                 DivisorClass const & D);

std::vector<FieldElement> parse_point(std::string const & text); // "1+2w,0,3"
std::string format_point(std::vector<FieldElement> const & coords);

} // namespace wps

#endif
