#ifndef TRICHOW_CLI_HPP
#define TRICHOW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "trichow/system.hpp"

namespace trichow {

/// Bezout inputs read off a system: the largest total degree and the largest
/// coefficient height of the primitive integer generators.
struct SystemSize {
  unsigned long d = 0;
  double h = 0;
  mpq_class h_upper;  // h as an exact rational, rounded up
};

SystemSize system_size(const SystemInput& sys);

/// Integrality and degree checks for a_n N_n and a_n^{G_n} T~_n, plus the
/// comparison of observed coefficient sizes of N_l and T_l with the height
/// and degree bounds at the Bezout-substituted (d_V, h_V).
struct VerifyReport {
  bool prop_dh = false;
  bool theorem1 = false;
  nlohmann::json details;
};

/// Throws the solver's errors (NotZeroDim, NotLazardShape, NonRadical).
VerifyReport verify_system(const SystemInput& sys);

enum ExitCode { kOk = 0, kOther = 1, kParse = 2, kAssumption = 3, kVerifyFailed = 4 };

/// Runs one command line (without the program name); writes the report to
/// `out` and diagnostics to `err`, and returns the exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trichow

#endif  // TRICHOW_CLI_HPP
