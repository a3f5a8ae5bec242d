#include "wps/zeta.hpp"

#include <algorithm>
#include <cmath>

namespace wps {

std::vector<int> kronecker_character_table(Int disc_signed)
{
    Int m = iabs(disc_signed);
    std::vector<int> chi(m);
    for (Int n = 0; n < m; ++n)
        chi[n] = kronecker(disc_signed, n);
    return chi;
}

namespace {

/* bound on |sum of chi over any interval|: spread of the periodic prefix
 * sums (the full-period sum vanishes) */
double character_sum_bound(std::vector<int> const & chi)
{
    Int run = 0, lo = 0, hi = 0;
    for (size_t n = 1; n < chi.size(); ++n) {
        run += chi[n];
        lo = std::min(lo, run);
        hi = std::max(hi, run);
    }
    return static_cast<double>(hi - lo);
}

} // namespace

ZetaValue dirichlet_l(Int disc_signed, int s, double tol)
{
    require(s >= 2, "L-series evaluation needs s >= 2");
    require(tol > 0, "tolerance must be positive");
    auto chi = kronecker_character_table(disc_signed);
    Int m = iabs(disc_signed);
    double M = character_sum_bound(chi);
    // Abel summation: |sum_{n>N} chi(n) n^-s| <= M N^-s; the monotone
    // integral bound N^{1-s}/(s-1) is kept as a fallback
    double target = tol / 2;
    double n_abel = std::pow(M / target, 1.0 / s);
    double n_mono = std::pow(1.0 / (target * (s - 1)), 1.0 / (s - 1));
    Int N = static_cast<Int>(std::min(n_abel, n_mono)) + 2;
    if (N > 300'000'000)
        throw budget_error("L-series tolerance needs too many terms");
    double sum = 0;
    for (Int n = N; n >= 1; --n) { // ascending term size for rounding
        int c = chi[n % m];
        if (c)
            sum += c * std::pow(static_cast<double>(n), -s);
    }
    double tail = std::min(M * std::pow(static_cast<double>(N), -s),
                           std::pow(static_cast<double>(N), 1 - s) / (s - 1));
    return {sum, tail + 1e-14 * std::fabs(sum)};
}

ZetaValue dedekind_zeta(FieldData const & F, int s, double tol)
{
    require(s >= 2, "dedekind_zeta needs s >= 2");
    require(tol > 0, "tolerance must be positive");
    double z = std::riemann_zeta(static_cast<double>(s));
    if (F.is_rational())
        return {z, 1e-14 * z};
    ZetaValue L = dirichlet_l(F.disc_signed(), s, tol / (2 * z));
    double value = z * L.value;
    double err = z * L.error_bound + 1e-14 * std::fabs(value);
    return {value, err};
}

} // namespace wps
