#ifndef TRICHOW_SYSTEM_HPP
#define TRICHOW_SYSTEM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "trichow/ratfunc.hpp"

namespace trichow {

/// Parametric system: generators in Q[Y1..Ym, X1..Xn], all over the variable
/// list (Y1..Ym, X1..Xn).
struct SystemInput {
  unsigned m = 0;
  unsigned n = 0;
  VarSet vars;
  std::vector<MPoly<mpq_class>> gens;

  static SystemInput make(unsigned m, unsigned n, std::vector<MPoly<mpq_class>> gens);
  /// Parses each string with parse_poly over the standard variable list.
  static SystemInput from_strings(unsigned m, unsigned n, const std::vector<std::string>& gens);

  VarSet yvars() const;
  VarSet xvars() const;
};

VarSet standard_vars(unsigned m, unsigned n);

/// Parses one polynomial expression: integers, variables, + - * ^ and
/// parentheses, with `/` allowed only by a nonzero constant. Positions in
/// errors are reported relative to (line, first_column).
MPoly<mpq_class> parse_poly(std::string_view text, const VarSet& vars, int line = 1, int first_column = 1);

/// Parses a system file: a `params m=<m> n=<n>` header, then one `poly <expr>`
/// per line; `#` starts a comment.
SystemInput parse_system(std::string_view text);

/// Prints a system in the file format accepted by parse_system.
std::string print_system(const SystemInput& sys);

}  // namespace trichow

#endif  // TRICHOW_SYSTEM_HPP
