#ifndef WPS_ASYM_HPP
#define WPS_ASYM_HPP

#include <vector>

#include "wps/count.hpp"
#include "wps/field.hpp"
#include "wps/weight.hpp"
#include "wps/zeta.hpp"

namespace wps {

/* growth law C * T^alpha * (log T)^beta */
struct AsymptoticForm {
    double C = 0;
    Rat alpha{1};
    Int beta = 0;
};

struct ConstantBreakdown {
    Int h = 1;
    double zeta = 0;       // zeta_k(|W|), or the product over factors
    double zeta_error = 0;
    double disc_factor = 1; // (2^{r1+r2} pi^{r2} / sqrt(D))^m
    double unit_factor = 1; // R / w
    double weight_factor = 1; // |W|^{r1+r2-1}
};

struct ConstantValue {
    double value = 0;
    double error_bound = 0;
    ConstantBreakdown parts;
};

/* leading coefficient of N(P(W)(k), T, Size) ~ C T^{|W|} */
ConstantValue space_constant(FieldData const & F, Weight const & W,
                             double tol);

/* C * T^{|W|/e} for the count with Size^e <= T */
double predicted_count(FieldData const & F, Weight const & W, Int e, double T,
                       double tol = 1e-9);

/* Composition of counting asymptotics for a product of two sets; the
 * second argument must have beta = 0 and alpha(X) >= alpha(Y). */
AsymptoticForm combine_asymptotics(AsymptoticForm const & X,
                                   AsymptoticForm const & Y);

/* Two normalizations of the anticanonical product constant: `factorial`
 * divides the product of per-factor data by k!, `composed` iterates the
 * two-factor composition and yields the (k-1)! law.  They differ by the
 * factor k; the sweep experiments arbitrate. */
enum class ProductMode { factorial, composed };

ConstantValue product_constant(FieldData const & F,
                               std::vector<Weight> const & weights,
                               ProductMode mode, double tol);

/* leading form of N(prod P(W_i), T, Size_D) via iterated composition */
AsymptoticForm divisor_asymptotic(FieldData const & F,
                                  std::vector<Weight> const & weights,
                                  DivisorClass const & D, double tol);

struct FitPoint {
    double T = 0;
    double ratio = 0; // count / (C T^alpha (log T)^beta)
};

struct FitReport {
    std::vector<FitPoint> points;
    bool has_slope = false; // regression of count/T^alpha on (log T)^beta
    double slope = 0;
    double intercept = 0;
};

FitReport fit_series(CountSeries const & series, AsymptoticForm const & form);

double evaluate_form(AsymptoticForm const & form, double T);

} // namespace wps

#endif
