#ifndef TRICHOW_VALUATION_HPP
#define TRICHOW_VALUATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "trichow/ratfunc.hpp"

namespace trichow {

/// An absolute value on Q or Q(Y), identified by kind. For the S-adic and
/// degree kinds, `params` names the variables Y forming the coefficient ring;
/// every other variable of a polynomial is a main variable.
struct Valuation {
  enum class Kind { Archimedean, PAdic, SAdic, Deg };

  Kind kind = Kind::Archimedean;
  mpz_class p;
  std::optional<MPoly<mpz_class>> s;
  std::vector<std::string> params;

  static Valuation archimedean() { return {}; }
  /// Throws NotPrime when p fails a probabilistic primality test.
  static Valuation padic(const mpz_class& p);
  /// S must be non-constant with content ±1; irreducibility is the caller's
  /// responsibility.
  static Valuation sadic(const MPoly<mpz_class>& s, std::vector<std::string> params);
  static Valuation deg(std::vector<std::string> params);
};

/// Natural logarithm of |x| for x != 0.
double log_abs(const mpz_class& x);

/// l_v(f) = max over the nonzero coefficients of l_v(coefficient), natural-log
/// scale. For PAdic this is -min ord_p(c) * ln p; for SAdic and Deg the
/// coefficients are taken with respect to the main variables.
double log_abs(const MPoly<mpz_class>& f, const Valuation& v);

/// Maximum of log|c| over the integer coefficients (the usual height).
inline double height(const MPoly<mpz_class>& f) { return log_abs(f, Valuation::archimedean()); }

/// Number of times p divides x (x != 0).
unsigned long ord_p(const mpz_class& x, const mpz_class& p);

}  // namespace trichow

#endif  // TRICHOW_VALUATION_HPP
