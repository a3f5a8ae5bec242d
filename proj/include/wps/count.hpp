#ifndef WPS_COUNT_HPP
#define WPS_COUNT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wps/algebraic.hpp"
#include "wps/field.hpp"
#include "wps/ideal.hpp"
#include "wps/weight.hpp"

namespace wps {

/* Size <= base^{num/den}; kept in exact rational-power form so boundary
 * ties are decided without rounding. */
struct SizeBound {
    Rat base{1};
    Int num = 1;
    Int den = 1;
};

/* "coordinate `coord` of factor `factor` is nonzero" (0-based) */
struct OpenConstraint {
    int factor = 0;
    int coord = 0;
};

enum class CountMethod { direct, moebius };

struct EnumConfig {
    unsigned long long budget = 1'000'000'000ULL; // lattice visits
    int threads = 0;                              // 0 = hardware default
};

struct ClassCount {
    IdealRep rep;
    unsigned long long count = 0;
};

struct CountResult {
    unsigned long long count = 0;
    std::vector<ClassCount> per_class; // quadratic single-space counts only
    double wall_seconds = 0;
};

/* Exact counts of canonical points with Size <= bound. */
CountResult count_points_rational(Weight const & W, SizeBound const & bound,
                                  std::optional<OpenConstraint> const & oc,
                                  EnumConfig const & cfg);
CountResult count_points_quadratic(FieldData const & F, Weight const & W,
                                   SizeBound const & bound,
                                   std::optional<OpenConstraint> const & oc,
                                   EnumConfig const & cfg);

/* Same values through the ideal Moebius inversion; an independent
 * implementation used for cross-validation. */
CountResult count_moebius_rational(Weight const & W, SizeBound const & bound,
                                   std::optional<OpenConstraint> const & oc,
                                   EnumConfig const & cfg);
CountResult count_moebius_quadratic(FieldData const & F, Weight const & W,
                                    SizeBound const & bound,
                                    EnumConfig const & cfg);

struct SizeClass {
    AlgebraicReal value;
    unsigned long long multiplicity = 0;
};

/* Distinct exact sizes (ascending) with multiplicities, over canonical
 * points with Size <= bound. */
std::vector<SizeClass> size_spectrum(FieldData const & F, Weight const & W,
                                     SizeBound const & bound,
                                     std::optional<OpenConstraint> const & oc,
                                     EnumConfig const & cfg);

/* Points of prod P(W_i) with Size_D <= T, counted factor-recursively over
 * per-factor size spectra. */
CountResult count_product(FieldData const & F,
                          std::vector<Weight> const & weights,
                          DivisorClass const & D, Rat const & T,
                          std::optional<OpenConstraint> const & oc,
                          EnumConfig const & cfg);

struct CountQuery {
    FieldTag field;
    std::vector<Weight> weights;
    DivisorClass divisor;       // single entry e for one factor
    Rat bound{1};               // T
    std::optional<OpenConstraint> open_constraint;
    CountMethod method = CountMethod::direct;
};

CountResult run_count(FieldData const & F, CountQuery const & q,
                      EnumConfig const & cfg);

struct CountSeries {
    std::vector<std::pair<Rat, CountResult>> rows; // ascending in T
};

CountSeries sweep_counts(FieldData const & F, CountQuery const & q,
                         std::vector<Rat> const & grid,
                         EnumConfig const & cfg);

std::vector<Rat> geometric_grid(Rat const & t0, Rat const & tmax,
                                Rat const & ratio);

/* "125", "0.5", "2.5e3" -> exact rational */
Rat parse_decimal_rat(std::string const & text);

} // namespace wps

#endif
