#ifndef TRICHOW_MODULAR_HPP
#define TRICHOW_MODULAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "trichow/solve.hpp"

namespace trichow {

/// A system with coefficients reduced modulo p, over the same variables.
struct ModularSystem {
  mpz_class p;
  unsigned m = 0, n = 0;
  VarSet vars;
  std::vector<MPoly<ModP>> gens;

  std::vector<YXPoly<ModP>> nested() const;
};

/// Coefficientwise reduction. Throws DenominatorVanishesModP when p divides a
/// coefficient denominator, BadPrime when a generator vanishes or loses
/// X-degree, NotPrime when p fails primality testing.
ModularSystem reduce_mod_p(const SystemInput& sys, const mpz_class& p);

/// Coefficientwise reduction over F_p(Y), each coefficient in lowest terms
/// again. Throws DenominatorVanishesModP.
MPoly<FpY> reduce_mod_p(const MPoly<QY>& f, const mpz_class& p);
TriangularSet<FpY> reduce_mod_p(const TriangularSet<QY>& t, const mpz_class& p);

struct ModularRun {
  mpz_class p;
  std::optional<std::vector<long>> profile;  // delta(T_l,p) per level on success
  std::optional<TriangularSet<FpY>> set;
  ErrorKind failure = ErrorKind::Structural;  // meaningful only without a profile
  std::string reason;
  bool ok() const { return profile.has_value(); }
};

/// Solves the reduced system over F_p(Y) and measures every level. Solver
/// errors become failures, never a wrong profile.
ModularRun degree_profile(const SystemInput& sys, const mpz_class& p);

/// delta profile of triangularize(sys) over Q(Y).
std::vector<long> exact_profile(const SystemInput& sys);

/// Miller-Rabin with `rounds` random bases drawn from rng.
bool is_probable_prime(const mpz_class& n, gmp_randclass& rng, int rounds = 40);

/// Deterministic sequence of probable primes drawn uniformly from ranges.
class PrimeSampler {
 public:
  explicit PrimeSampler(unsigned long seed);
  /// Up to ceil(10 ln hi) uniform draws in [lo, hi]; throws RangeTooNarrow
  /// when none passes 40 rounds of Miller-Rabin or the range is empty.
  mpz_class next(const mpz_class& lo, const mpz_class& hi);

 private:
  gmp_randclass rng_;
};

mpz_class random_prime_in_range(const mpz_class& lo, const mpz_class& hi, unsigned long seed);

struct JacobianReport {
  bool invertible = false;
  std::string jacobian;     // det(df_i/dX_j) over Q(Y)
  std::string normal_form;  // its normal form modulo the triangular set
  std::string witness;      // nonzero g with J g = 0 when not invertible
};

/// Whether the Jacobian determinant is a unit modulo triangularize(sys).
/// Requires as many generators as unknowns; solver errors propagate.
JacobianReport jacobian_check(const SystemInput& sys);

struct PrimeComparison {
  mpz_class p;
  ModularRun run;
  bool agrees = false;
  std::string certificate;  // for a mismatch: the structure divisible by p
};

struct CrossCheckReport {
  std::vector<long> exact;
  std::vector<PrimeComparison> rows;  // in the order of the input primes
  std::size_t agreements = 0, mismatches = 0, failures = 0;
  bool all_mismatches_certified() const;
};

/// Compares degree_profile at each prime with the exact profile. A mismatch
/// is certified by a coefficient of T_l over Q(Y) whose denominator reduces
/// to zero, whose numerator or denominator loses degree modulo p, or whose
/// numerator and denominator acquire a common factor modulo p.
CrossCheckReport cross_check(const SystemInput& sys, const std::vector<mpz_class>& primes);

/// Explanation of why reducing t modulo p may change its shape, or "" when
/// every coefficient reduces with its degree and coprimality intact.
std::string bad_reduction_certificate(const TriangularSet<QY>& t, const mpz_class& p);

}  // namespace trichow

#endif  // TRICHOW_MODULAR_HPP
