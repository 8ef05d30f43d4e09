#ifndef SIDONLAB_CLI_HPP
#define SIDONLAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sidonlab {

// Runs one subcommand. Exit code 0 on success, 1 on domain errors, 2 on
// usage errors. Reports go to `out`; diagnostics and progress to `err`.
// Identical argument vectors produce identical `out` bytes for any --jobs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sidonlab

#endif
