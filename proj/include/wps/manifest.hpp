#ifndef WPS_MANIFEST_HPP
#define WPS_MANIFEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace wps {

inline constexpr char const * kToolName = "wpscount";
inline constexpr char const * kToolVersion = "0.1.0";
inline constexpr int kManifestSchema = 1;

/* Everything needed to reproduce a run bit-identically: the command and
 * all inputs including seeds, budgets and tolerances.  wall_seconds is
 * informational. */
struct RunManifest {
    std::string command;          // constant | count | sweep | volume
    std::string field = "Q";
    std::vector<std::string> weights; // one "w1,w2,..." per factor
    std::string divisor;          // "" = default
    std::string bound;            // T, for count
    std::string grid;             // "T0:Tmax:ratio", for sweep
    std::string method = "direct";
    std::string mode = "lemma-derived";
    std::string open_constraint;  // "x<j>!=0", 1-based
    int open_factor = 1;          // 1-based factor of the constraint
    double tolerance = 1e-9;
    std::string frame;            // volume: rational|complex|real-quadratic
    double regulator = 1.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    unsigned long long budget = 1'000'000'000ULL;
    int threads = 0;
    bool per_class = false;
    double wall_seconds = 0;
};

nlohmann::json manifest_to_json(RunManifest const & m);
RunManifest manifest_from_json(nlohmann::json const & j);

/* command line equivalent to the manifest (without the program name) */
std::vector<std::string> manifest_to_args(RunManifest const & m);

} // namespace wps

#endif
