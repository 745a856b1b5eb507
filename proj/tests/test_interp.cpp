#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "trichow/interp.hpp"
#include "trichow/linalg.hpp"

using namespace trichow;
using namespace trichow::testing;

namespace {

using Points = std::vector<std::vector<unsigned long>>;

// Dense Gauss-Jordan solve of the Vandermonde system: shares nothing with the
// divided-difference route.
std::vector<mpq_class> vandermonde_oracle(const std::vector<unsigned long>& x, const std::vector<mpq_class>& a) {
  Matrix<mpq_class> v(x.size(), std::vector<mpq_class>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    mpq_class p = 1;
    for (std::size_t k = 0; k < x.size(); ++k) {
      v[i][k] = p;
      p *= x[i];
    }
  }
  return *solve_square(v, a).solution;
}

mpq_class random_value(std::mt19937_64& rng, double a) {
  const long cap = static_cast<long>(std::floor(std::exp(a)));
  std::uniform_int_distribution<long> d(-cap, cap);
  return mpq_class(d(rng));
}

}  // namespace

TEST_CASE("equiprojectable set construction") {
  auto g = build_equiprojectable(2, 3, 2, [](const std::vector<unsigned long>& p) {
    return p.size() == 2 && p[0] == 2 && p[1] == 2;
  });
  CHECK(g.points == Points{{1, 1}, {1, 2}, {2, 1}, {2, 3}});
  CHECK(build_equiprojectable(1, 5, 3).points == Points{{1}, {2}, {3}});
  try {
    (void)build_equiprojectable(2, 2, 2, [](const std::vector<unsigned long>& p) { return p[0] == 1; });
    FAIL("expected GridExhausted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GridExhausted);
  }
  CHECK_THROWS_AS(build_equiprojectable(1, 2, 3), Error);
}

TEST_CASE("equiprojectable fibers") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    unsigned m = 1 + trial % 3;
    unsigned long L = 2 + trial % 3, M = 2 * L + 3;
    auto avoid = [&](const std::vector<unsigned long>& p) { return (p.back() * 7 + p.size() * 3 + trial) % 5 == 0; };
    auto g = build_equiprojectable(m, M, L, avoid);
    CHECK(g.size() == static_cast<std::size_t>(std::pow(L, m)));
    for (unsigned i = 1; i <= m; ++i) {
      std::map<std::vector<unsigned long>, std::size_t> fibers;
      for (const auto& p : g.points) ++fibers[std::vector<unsigned long>(p.begin(), p.begin() + i)];
      for (const auto& [prefix, count] : fibers) {
        CHECK(count == static_cast<std::size_t>(std::pow(L, m - i)));
        CHECK_FALSE(avoid(prefix));
        CHECK(prefix.back() <= M);
      }
    }
    CHECK(std::is_sorted(g.points.begin(), g.points.end()));
  }
}

TEST_CASE("Vandermonde examples") {
  auto a = vandermonde_solve({1, 2}, {1, 1}, 3);
  CHECK(a.coefficients == std::vector<mpq_class>{1, 0});
  CHECK(a.norms.bound == doctest::Approx(2 * std::log(4.0) + std::log(2.0)));
  CHECK(a.norms.bound == doctest::Approx(3.47).epsilon(0.001));
  CHECK(a.norms.observed_log == 0);
  CHECK(a.norms.within());
  auto b = vandermonde_solve({1, 2}, {2, 3}, 3);
  CHECK(b.coefficients == std::vector<mpq_class>{1, 1});
  CHECK(vandermonde_solve({1}, {7}, 1).coefficients == std::vector<mpq_class>{7});
  try {
    (void)vandermonde_solve({2, 2}, {1, 1}, 3);
    FAIL("expected SingularGrid");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularGrid);
  }
}

TEST_CASE("Vandermonde solve agrees with dense elimination and respects the norm bound") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned long L = 1 + trial % 6, M = L + trial % 20;
    std::vector<unsigned long> nodes;
    for (unsigned long v = 1; v <= M; ++v) nodes.push_back(v);
    std::shuffle(nodes.begin(), nodes.end(), rng);
    nodes.resize(L);
    double a = 1 + trial % 7;
    std::vector<mpq_class> values;
    for (unsigned long i = 0; i < L; ++i) values.push_back(random_value(rng, a));
    auto s = vandermonde_solve(nodes, values, M);
    CHECK(s.coefficients == vandermonde_oracle(nodes, values));
    CHECK(s.norms.within());
  }
}

TEST_CASE("evaluation and interpolation examples") {
  auto g = build_equiprojectable(2, 3, 2, [](const std::vector<unsigned long>& p) {
    return p.size() == 2 && p[0] == 2 && p[1] == 2;
  });
  VarSet ys = VarSet::numbered("Y", 2);
  CHECK(evaluate_at_set(qp("Y1*Y2", ys), g) == std::vector<mpq_class>{1, 2, 2, 6});
  CHECK(evaluate_at_set(qp("0", ys), g) == std::vector<mpq_class>(4, 0));
  CHECK(evaluate_at_set(qp("Y1+Y2", ys), g) == std::vector<mpq_class>{2, 3, 3, 5});
  try {
    (void)evaluate_at_set(qp("Y1^2", ys), g);
    FAIL("expected DegreeOverflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeOverflow);
  }
  CHECK(interpolate({1, 2, 2, 6}, g).poly == qp("Y1*Y2", ys));
  CHECK(interpolate({0, 0, 0, 0}, g).poly.is_zero());
  CHECK(interpolate({1, 1, 1, 1}, g).poly == qp("1", ys));
  CHECK_THROWS_AS(interpolate({1, 2, 3}, g), Error);
}

TEST_CASE("interpolation round trips and norm bound") {
  std::mt19937_64 rng(23);
  struct Shape {
    unsigned long L, M;
    unsigned m;
  };
  for (Shape s : {Shape{2, 3, 1}, Shape{3, 10, 2}, Shape{5, 117, 2}, Shape{2, 5, 3}}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto g = build_equiprojectable(s.m, s.M, s.L, [&](const std::vector<unsigned long>& p) {
        return (p.back() + static_cast<unsigned long>(trial) * p.size()) % 4 == 0;
      });
      VarSet ys = VarSet::numbered("Y", s.m);
      // Random polynomial in Q[Y]_L.
      std::vector<QPoly::Term> terms;
      std::uniform_int_distribution<long> c(-50, 50), e(0, static_cast<long>(s.L) - 1);
      for (int k = 0; k < 6; ++k) {
        Monomial mono(s.m);
        for (unsigned i = 0; i < s.m; ++i) mono[i] = static_cast<Monomial::Exp>(e(rng));
        mpq_class q(c(rng), 1 + trial % 3);
        q.canonicalize();
        terms.emplace_back(mono, q);
      }
      auto f = QPoly::from_terms(ys, NoCtx{}, terms);
      CHECK(interpolate(evaluate_at_set(f, g), g).poly == f);

      double a = 2 + trial % 5;
      std::vector<mpq_class> v;
      for (std::size_t i = 0; i < g.size(); ++i) v.push_back(random_value(rng, a));
      auto r = interpolate(v, g);
      CHECK(evaluate_at_set(r.poly, g) == v);
      CHECK(r.norms.within());
      CHECK(r.norms.bound == doctest::Approx(r.norms.input_log + s.m * s.L * std::log(s.M + 1.0) +
                                             s.m * std::log(static_cast<double>(s.L))));
    }
  }
}
