#ifndef WPS_CLI_HPP
#define WPS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wps {

/* Full command-line surface; returns the process exit code.
 * 0 success, 2 input error, 3 budget exceeded, 4 internal failure. */
int run_cli(std::vector<std::string> const & args, std::ostream & out,
            std::ostream & err);

} // namespace wps

#endif
