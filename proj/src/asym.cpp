#include "wps/asym.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wps {

namespace {

/* h * (2^{r1+r2} pi^{r2} / sqrt(D))^m * (R/w) * |W|^{r1+r2-1} */
ConstantBreakdown prefactor(FieldData const & F, Weight const & W)
{
    ConstantBreakdown parts;
    parts.h = F.h;
    double bracket = std::pow(2.0, F.r1 + F.r2) *
                     std::pow(std::numbers::pi, F.r2) /
                     std::sqrt(static_cast<double>(F.disc_abs));
    parts.disc_factor = std::pow(bracket, W.size());
    parts.unit_factor = F.regulator / F.w;
    parts.weight_factor =
        std::pow(static_cast<double>(W.total()), F.r1 + F.r2 - 1);
    return parts;
}

} // namespace

ConstantValue space_constant(FieldData const & F, Weight const & W,
                             double tol)
{
    require(tol > 0, "tolerance must be positive");
    require_well_formed(W);
    require(W.total() >= 2,
            "constant undefined for |W| = 1 (zeta diverges at 1)");
    ConstantValue out;
    out.parts = prefactor(F, W);
    double A = static_cast<double>(out.parts.h) * out.parts.disc_factor *
               out.parts.unit_factor * out.parts.weight_factor;
    // pick the zeta tolerance that lands the constant inside tol
    ZetaValue rough = dedekind_zeta(F, static_cast<int>(W.total()), 1e-6);
    double ztol = std::clamp(0.5 * tol * rough.value * rough.value / A,
                             1e-13, 1e-6);
    ZetaValue z = dedekind_zeta(F, static_cast<int>(W.total()), ztol);
    out.parts.zeta = z.value;
    out.parts.zeta_error = z.error_bound;
    out.value = A / z.value;
    out.error_bound = A * z.error_bound /
                          (z.value * (z.value - z.error_bound)) +
                      1e-14 * out.value;
    if (out.error_bound > tol)
        throw budget_error("constant tolerance below achievable precision");
    return out;
}

double predicted_count(FieldData const & F, Weight const & W, Int e, double T,
                       double tol)
{
    require(e >= 1, "exponent must be >= 1");
    require(T >= 0, "bound must be nonnegative");
    if (T == 0)
        return 0;
    double C = space_constant(F, W, tol).value;
    double alpha = static_cast<double>(W.total()) / static_cast<double>(e);
    return C * std::pow(T, alpha);
}

AsymptoticForm combine_asymptotics(AsymptoticForm const & X,
                                   AsymptoticForm const & Y)
{
    require(Y.beta == 0, "second factor must have beta = 0");
    require(X.alpha >= Y.alpha,
            "combine_asymptotics: order arguments by descending alpha");
    if (X.alpha == Y.alpha) {
        double C = X.C * Y.C * rat_to_double(X.alpha) /
                   static_cast<double>(X.beta + 1);
        return {C, X.alpha, X.beta + 1};
    }
    double C = X.C * Y.C * rat_to_double(Y.alpha) /
               rat_to_double(X.alpha - Y.alpha);
    return {C, X.alpha, X.beta};
}

ConstantValue product_constant(FieldData const & F,
                               std::vector<Weight> const & weights,
                               ProductMode mode, double tol)
{
    require(!weights.empty(), "product constant needs at least one factor");
    size_t k = weights.size();
    double per_tol = tol / static_cast<double>(k);

    if (mode == ProductMode::composed) {
        // fold the two-factor composition over per-factor anticanonical forms
        ConstantValue out;
        AsymptoticForm acc;
        double rel_err = 0;
        for (size_t i = 0; i < k; ++i) {
            ConstantValue ci = space_constant(F, weights[i], per_tol);
            rel_err += ci.error_bound / ci.value;
            if (i == 0) {
                acc = {ci.value, Rat(1), 0};
                out.parts = space_constant(F, weights[i], per_tol).parts;
            } else {
                acc = combine_asymptotics(acc, {ci.value, Rat(1), 0});
            }
        }
        out.value = acc.C;
        out.error_bound = acc.C * rel_err + 1e-14 * acc.C;
        out.parts.zeta = 0; // per-factor breakdowns differ; not aggregated
        return out;
    }

    // verbatim product formula with the k! denominator
    ConstantValue out;
    out.parts.h = 1;
    double bracket = std::pow(2.0, F.r1 + F.r2) *
                     std::pow(std::numbers::pi, F.r2) /
                     std::sqrt(static_cast<double>(F.disc_abs));
    double kfact = 1;
    Int coords = 0;
    double zeta_prod = 1, rel_err = 0, weight_pow = 1;
    for (size_t i = 0; i < k; ++i) {
        kfact *= static_cast<double>(i + 1);
        coords += weights[i].size();
        require_well_formed(weights[i]);
        require(weights[i].total() >= 2,
                "constant undefined for |W| = 1 (zeta diverges at 1)");
        ZetaValue z =
            dedekind_zeta(F, static_cast<int>(weights[i].total()),
                          std::clamp(per_tol, 1e-13, 1e-6));
        zeta_prod *= z.value;
        rel_err += z.error_bound / z.value;
        weight_pow *= std::pow(static_cast<double>(weights[i].total()),
                               F.r1 + F.r2 - 1);
    }
    out.parts.h = F.h;
    out.parts.zeta = zeta_prod;
    out.parts.disc_factor = std::pow(bracket, static_cast<double>(coords));
    out.parts.unit_factor = F.regulator / F.w;
    out.parts.weight_factor = weight_pow;
    out.value = std::pow(static_cast<double>(F.h), static_cast<double>(k)) /
                (kfact * zeta_prod) * out.parts.disc_factor *
                std::pow(out.parts.unit_factor, static_cast<double>(k)) *
                weight_pow;
    out.error_bound = out.value * rel_err + 1e-14 * out.value;
    return out;
}

AsymptoticForm divisor_asymptotic(FieldData const & F,
                                  std::vector<Weight> const & weights,
                                  DivisorClass const & D, double tol)
{
    require(weights.size() == D.exponents.size(),
            "divisor length does not match the number of factors");
    for (Int a : D.exponents)
        require(a >= 1, "asymptotics need a divisor positive on every factor");
    size_t k = weights.size();
    std::vector<AsymptoticForm> forms;
    for (size_t i = 0; i < k; ++i) {
        ConstantValue ci =
            space_constant(F, weights[i], tol / static_cast<double>(k));
        forms.push_back(
            {ci.value, Rat(weights[i].total(), D.exponents[i]), 0});
    }
    std::stable_sort(forms.begin(), forms.end(),
                     [](AsymptoticForm const & x, AsymptoticForm const & y) {
                         return x.alpha > y.alpha;
                     });
    AsymptoticForm acc = forms[0];
    for (size_t i = 1; i < k; ++i)
        acc = combine_asymptotics(acc, forms[i]);
    return acc;
}

double evaluate_form(AsymptoticForm const & form, double T)
{
    double v = form.C * std::pow(T, rat_to_double(form.alpha));
    if (form.beta > 0)
        v *= std::pow(std::log(T), static_cast<double>(form.beta));
    return v;
}

FitReport fit_series(CountSeries const & series, AsymptoticForm const & form)
{
    require(!series.rows.empty(), "empty series");
    FitReport rep;
    std::vector<double> xs, ys;
    for (auto const & [T, res] : series.rows) {
        double t = rat_to_double(T);
        FitPoint p;
        p.T = t;
        p.ratio = static_cast<double>(res.count) / evaluate_form(form, t);
        rep.points.push_back(p);
        if (form.beta >= 1) {
            xs.push_back(std::pow(std::log(t),
                                  static_cast<double>(form.beta)));
            ys.push_back(static_cast<double>(res.count) /
                         std::pow(t, rat_to_double(form.alpha)));
        }
    }
    if (form.beta >= 1 && xs.size() >= 2) {
        double mx = 0, my = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= static_cast<double>(xs.size());
        my /= static_cast<double>(xs.size());
        double sxx = 0, sxy = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            sxx += (xs[i] - mx) * (xs[i] - mx);
            sxy += (xs[i] - mx) * (ys[i] - my);
        }
        invariant(sxx > 0, "degenerate regression");
        rep.has_slope = true;
        rep.slope = sxy / sxx;
        rep.intercept = my - rep.slope * mx;
    }
    return rep;
}

} // namespace wps
