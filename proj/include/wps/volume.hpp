#ifndef WPS_VOLUME_HPP
#define WPS_VOLUME_HPP

#include <cstdint>
#include <vector>

#include "wps/weight.hpp"

namespace wps {

/* Archimedean data of a unit lattice of rank r1 + r2 - 1 <= 1: place
 * degrees N_v, fundamental-unit log vectors and their dual functionals on
 * the trace-zero hyperplane.  Supported signatures: (1,0), (0,1), (2,0). */
struct UnitLatticeFrame {
    int r1 = 1, r2 = 0;
    double regulator = 1.0;
    std::vector<int> place_degrees;             // N_v per archimedean place
    std::vector<std::vector<double>> unit_logs; // basis of the log lattice
    std::vector<std::vector<double>> dual;      // dual functionals

    int rank() const { return r1 + r2 - 1; }
    int degree() const { return r1 + 2 * r2; }
};

UnitLatticeFrame make_frame(int r1, int r2, double regulator);

/* closed form 2^{m r1} pi^{m r2} R |W|^{r1+r2-1} */
double fundamental_domain_volume(int r1, int r2, double regulator,
                                 Weight const & W);

struct McEstimate {
    double value = 0;
    double std_error = 0;
    unsigned long long samples = 0;
    unsigned long long hits = 0;
};

/* Rejection sampling of the weighted unit ball intersected with the
 * unit-lattice fundamental domain, inside the box |Z_{v,i}| <= e^{R w_i}
 * (radius 1 for rank-0 frames).  Deterministic for a given seed via a
 * fixed per-chunk seed schedule, independent of the worker count. */
McEstimate monte_carlo_volume(UnitLatticeFrame const & frame, Weight const & W,
                              unsigned long long samples, std::uint64_t seed,
                              int threads = 0);

} // namespace wps

#endif
