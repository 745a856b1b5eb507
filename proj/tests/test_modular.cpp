#include "doctest.h"
#include "support.hpp"
#include "trichow/bounds.hpp"
#include "trichow/modular.hpp"

using namespace trichow;
using namespace trichow::testing;

namespace {

SystemInput worked() { return SystemInput::from_strings(2, 2, {"X1+1+Y1*X2", "X2+Y2*X1"}); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Structural;
}

// Primality by trial division, for the Miller-Rabin comparison.
bool trial_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("reduction modulo p") {
  auto r = reduce_mod_p(worked(), 7);
  REQUIRE(r.gens.size() == 2);
  CHECK(r.gens[0].nterms() == 3);
  CHECK(r.gens[1].nterms() == 2);
  CHECK(r.gens[0].str() == worked().gens[0].str());

  auto two = reduce_mod_p(SystemInput::from_strings(0, 1, {"3*X1-1"}), 2);
  CHECK(two.gens[0].str() == "X1 + 1");
  auto third = reduce_mod_p(SystemInput::from_strings(0, 1, {"X1-1/3"}), 5);
  CHECK(third.gens[0].str() == "X1 + 3");  // -1/3 = -2 = 3 mod 5

  CHECK(kind_of([] { reduce_mod_p(SystemInput::from_strings(0, 1, {"7*X1+14"}), 7); }) == ErrorKind::BadPrime);
  CHECK(kind_of([] { reduce_mod_p(SystemInput::from_strings(0, 1, {"2*X1-1"}), 2); }) == ErrorKind::BadPrime);
  CHECK(kind_of([] { reduce_mod_p(SystemInput::from_strings(0, 1, {"X1-1/3"}), 3); }) ==
        ErrorKind::DenominatorVanishesModP);
  CHECK(kind_of([] { reduce_mod_p(worked(), 9); }) == ErrorKind::NotPrime);
  // A parameter-only term may vanish without changing the X-degree.
  CHECK(reduce_mod_p(SystemInput::from_strings(1, 1, {"X1+5*Y1"}), 5).gens[0].str() == "X1");
}

TEST_CASE("degree profiles") {
  CHECK(exact_profile(worked()) == std::vector<long>{2, 1});
  auto run = degree_profile(worked(), 7);
  REQUIRE(run.ok());
  CHECK(*run.profile == std::vector<long>{2, 1});
  CHECK(run.set->size() == 2);

  auto bad = degree_profile(SystemInput::from_strings(0, 1, {"2*X1-1"}), 2);
  CHECK_FALSE(bad.ok());
  CHECK(bad.failure == ErrorKind::BadPrime);
  auto den = degree_profile(SystemInput::from_strings(0, 1, {"X1-1/3"}), 3);
  CHECK(den.failure == ErrorKind::DenominatorVanishesModP);
  // Modulo 2 the two generators coincide and the set is no longer finite.
  auto flat = degree_profile(SystemInput::from_strings(0, 2, {"X1+X2", "X1+3*X2"}), 2);
  CHECK_FALSE(flat.ok());
  CHECK(flat.failure == ErrorKind::NotZeroDim);
}

TEST_CASE("Miller-Rabin agrees with trial division") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(3);
  for (unsigned long n = 0; n < 5000; ++n) CHECK_MESSAGE(is_probable_prime(n, rng) == trial_prime(n), n);
  for (unsigned long c : {561ul, 1105ul, 1729ul, 2465ul, 2821ul, 6601ul, 8911ul, 41041ul, 825265ul})
    CHECK_FALSE(is_probable_prime(c, rng));
  CHECK(is_probable_prime(mpz_class("170141183460469231731687303715884105727"), rng));  // 2^127 - 1
  CHECK_FALSE(is_probable_prime(mpz_class("170141183460469231731687303715884105729"), rng));
}

TEST_CASE("random primes in a range") {
  for (unsigned long seed = 0; seed < 20; ++seed) {
    auto p = random_prime_in_range(10, 20, seed);
    CHECK((p == 11 || p == 13 || p == 17 || p == 19));
    CHECK(random_prime_in_range(10, 20, seed) == p);
  }
  CHECK(kind_of([] { random_prime_in_range(24, 28, 1); }) == ErrorKind::RangeTooNarrow);
  CHECK(kind_of([] { random_prime_in_range(30, 20, 1); }) == ErrorKind::RangeTooNarrow);
  CHECK(random_prime_in_range(2, 2, 0) == 2);

  auto bound = modular_prime_bound(1, 12, 3, 20);
  auto p = random_prime_in_range(bound.lo, bound.hi, 7);
  CHECK(p >= bound.lo);
  CHECK(p <= bound.hi);
  CHECK(mpz_probab_prime_p(p.get_mpz_t(), 30) > 0);
  auto bits = mpz_sizeinbase(p.get_mpz_t(), 2);
  CHECK(bits >= 123);
  CHECK(bits <= 125);

  PrimeSampler a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.next(1000, 100000) == b.next(1000, 100000));
}

TEST_CASE("Jacobian check") {
  auto j = jacobian_check(worked());
  CHECK(j.invertible);
  CHECK(j.jacobian == "(-1*Y1*Y2 + 1)");
  auto rep = jacobian_check(SystemInput::from_strings(0, 1, {"X1^2"}));
  CHECK_FALSE(rep.invertible);
  CHECK(rep.jacobian == "2*X1");
  CHECK(rep.witness == "X1");
  auto lin = jacobian_check(SystemInput::from_strings(1, 1, {"X1-Y1"}));
  CHECK(lin.invertible);
  CHECK(lin.jacobian == "1");
  auto dbl = jacobian_check(SystemInput::from_strings(1, 2, {"X1^2-Y1", "(X2-X1)^2"}));
  CHECK_FALSE(dbl.invertible);
  CHECK_THROWS_AS(jacobian_check(SystemInput::from_strings(0, 2, {"X1-1", "X2-1", "X1-X2"})), Error);
}

TEST_CASE("cross check") {
  auto rep = cross_check(worked(), {5, 7, 11, 13});
  CHECK(rep.exact == std::vector<long>{2, 1});
  CHECK(rep.agreements == 4);
  CHECK(rep.mismatches == 0);
  CHECK(rep.failures == 0);

  auto third = cross_check(SystemInput::from_strings(1, 1, {"X1^2-Y1/3"}), {3, 5});
  CHECK(third.failures == 1);
  CHECK_FALSE(third.rows[0].run.ok());
  CHECK(third.agreements == 1);

  auto none = cross_check(worked(), {});
  CHECK(none.rows.empty());
  CHECK(none.agreements + none.mismatches + none.failures == 0);

  // T1 = X1 - (Y1^2 + 1)/(2*Y1): its denominator vanishes modulo 2 only.
  auto drop = SystemInput::from_strings(1, 1, {"2*Y1*X1 - Y1^2 - 1"});
  auto t = triangularize(drop);
  CHECK(bad_reduction_certificate(t, 2).find("vanishes") != std::string::npos);
  CHECK(bad_reduction_certificate(t, 3).empty());
}

TEST_CASE("reduction commutes with solving for good primes") {
  std::mt19937_64 rng(77);
  PrimeSampler primes(9);
  int compared = 0;
  for (int trial = 0; trial < 16; ++trial) {
    auto sys = random_system(rng, trial % 3, 1 + trial % 2);
    TriangularSet<QY> t;
    try {
      t = triangularize(sys);
    } catch (const Error&) {
      continue;
    }
    for (int k = 0; k < 8; ++k) {
      mpz_class p = k < 2 ? mpz_class(k == 0 ? 5 : 7) : primes.next(1000, 100000);
      auto run = degree_profile(sys, p);
      if (!run.ok() || !bad_reduction_certificate(t, p).empty()) continue;
      ++compared;
      CHECK(*run.set == reduce_mod_p(t, p));
      CHECK(*run.profile == delta_measure(t));
    }
  }
  CHECK(compared >= 40);
}

TEST_CASE("profiles agree for most random primes and every mismatch is explained") {
  std::mt19937_64 rng(2024);
  PrimeSampler sampler(1);
  std::size_t agree = 0, mismatch = 0;
  for (int trial = 0; trial < 8; ++trial) {
    auto sys = random_system(rng, 1 + trial % 2, 1 + trial % 2);
    try {
      (void)triangularize(sys);
    } catch (const Error&) {
      continue;
    }
    std::vector<mpz_class> ps;
    for (int k = 0; k < 50; ++k) ps.push_back(sampler.next(1000, 100000));
    auto rep = cross_check(sys, ps);
    agree += rep.agreements;
    mismatch += rep.mismatches;
    CHECK(rep.all_mismatches_certified());
  }
  REQUIRE(agree + mismatch > 0);
  CHECK(static_cast<double>(agree) / static_cast<double>(agree + mismatch) >= 0.95);
}
