#ifndef WPS_ERRORS_HPP
#define WPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wps {

/* The CLI maps these to exit codes: input_error -> 2, budget_error -> 3,
 * internal_error -> 4. */
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, std::string const & msg)
{
    if (!cond)
        throw input_error(msg);
}

/* Invariant check that survives release builds. */
inline void invariant(bool cond, std::string const & msg)
{
    if (!cond)
        throw internal_error(msg);
}

} // namespace wps

#endif
