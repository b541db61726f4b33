#ifndef CSMCALC_CLI_HPP
#define CSMCALC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "csmcalc/error.hpp"

namespace csmcalc::cli {

enum ExitCode : int {
  ok = 0,
  scenario_failed = 1,
  parse_error = 2,
  validation_error = 3,
  degenerate_error = 4,
  inconsistent_error = 5,
  underdetermined_error = 6,
};

int exit_code_for(ErrorKind kind) noexcept;

/// Runs one command line (args excludes the program name). Results go to
/// out, one-line diagnostics to err; in backs the "-" input source.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace csmcalc::cli

#endif  // CSMCALC_CLI_HPP
