#ifndef TRICHOW_TESTS_SUPPORT_HPP
#define TRICHOW_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "trichow/solve.hpp"

namespace trichow::testing {

using ZPoly = MPoly<mpz_class>;
using QPoly = MPoly<mpq_class>;

inline QPoly qp(const std::string& s, const VarSet& v) { return parse_poly(s, v); }

inline ZPoly zp(const std::string& s, const VarSet& v) {
  auto [p, den] = clear_denominators(parse_poly(s, v));
  if (den != 1) throw std::runtime_error("zp: non-integral literal " + s);
  return p;
}

/// Polynomial over Q(Y1..Ym) in X1..Xn from text over (Y, X).
inline MPoly<QY> qyx(const std::string& s, unsigned m, unsigned n) {
  VarSet all = standard_vars(m, n);
  auto [z, den] = clear_denominators(parse_poly(s, all));
  auto nested = nest(z, VarSet::numbered("X", n), VarSet::numbered("Y", m));
  return to_ratfunc_poly(nested, MPoly<mpz_class>::constant(nested.ctx().vars, NoCtx{}, den));
}

inline TriangularSet<QY> tset(const std::vector<std::string>& polys, unsigned m, unsigned n) {
  std::vector<MPoly<QY>> ps;
  for (const auto& s : polys) ps.push_back(qyx(s, m, n));
  return TriangularSet<QY>(std::move(ps));
}

/// Random integer polynomial with up to `nterms` terms of total degree <= deg
/// and coefficients in [-c, c].
inline ZPoly random_zpoly(std::mt19937_64& rng, const VarSet& v, unsigned deg, unsigned nterms, long c) {
  std::uniform_int_distribution<long> coef(-c, c);
  std::uniform_int_distribution<unsigned> pick(0, v.size() ? v.size() - 1 : 0);
  std::uniform_int_distribution<unsigned> dpick(0, deg);
  std::vector<ZPoly::Term> terms;
  for (unsigned i = 0; i < nterms; ++i) {
    Monomial m(v.size());
    unsigned d = dpick(rng);
    for (unsigned k = 0; k < d && v.size(); ++k) m[pick(rng)] += 1;
    long a = coef(rng);
    if (a == 0) a = 1;
    terms.emplace_back(m, mpz_class(a));
  }
  return ZPoly::from_terms(v, NoCtx{}, std::move(terms));
}

/// Determinant by cofactor expansion along the first row; an oracle that
/// shares no code with the fraction-free elimination.
template <class R>
MPoly<R> laplace_det(const std::vector<std::vector<MPoly<R>>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  MPoly<R> acc = a[0][0].zero_like();
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<MPoly<R>>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MPoly<R>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    MPoly<R> t = a[0][j] * laplace_det(minor);
    acc = (j % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

/// Sylvester matrix built directly from the coefficient definition.
template <class R>
MPoly<R> sylvester_oracle(const MPoly<R>& f, const MPoly<R>& g, std::size_t var) {
  auto fc = f.coeffs_in(var), gc = g.coeffs_in(var);
  std::size_t p = fc.size() - 1, q = gc.size() - 1;
  if (p == 0) return f.pow(static_cast<unsigned>(q));
  if (q == 0) return g.pow(static_cast<unsigned>(p));
  std::size_t n = p + q;
  std::vector<std::vector<MPoly<R>>> s(n, std::vector<MPoly<R>>(n, f.zero_like()));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t col = 0; col < n; ++col) {
      if (row < q) {
        long k = static_cast<long>(col) - static_cast<long>(row);
        if (k >= 0 && k <= static_cast<long>(p)) s[row][col] = fc[p - k];
      } else {
        long k = static_cast<long>(col) - static_cast<long>(row - q);
        if (k >= 0 && k <= static_cast<long>(q)) s[row][col] = gc[q - k];
      }
    }
  return laplace_det(s);
}

// Random system of n dense polynomials of degree <= 2 in X with small
// coefficients that are affine in the parameters.
inline SystemInput random_system(std::mt19937_64& rng, unsigned m, unsigned n) {
  VarSet all = standard_vars(m, n);
  std::uniform_int_distribution<long> c(-3, 3);
  std::vector<QPoly> gens;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<QPoly::Term> terms;
    // Degree-2 part in Xi keeps the system zero-dimensional generically.
    Monomial lead(all.size());
    lead[m + i] = 2;
    terms.emplace_back(lead, mpq_class(1));
    for (unsigned j = 0; j < n; ++j) {
      Monomial x(all.size());
      x[m + j] = 1;
      terms.emplace_back(x, mpq_class(c(rng)));
      if (m > 0) {
        Monomial yx = x;
        yx[rng() % m] += 1;
        terms.emplace_back(yx, mpq_class(c(rng)));
      }
    }
    Monomial one(all.size());
    terms.emplace_back(one, mpq_class(c(rng)));
    if (m > 0) {
      Monomial y(all.size());
      y[rng() % m] = 1;
      terms.emplace_back(y, mpq_class(c(rng)));
    }
    auto g = QPoly::from_terms(all, NoCtx{}, std::move(terms));
    gens.push_back(g);
  }
  return SystemInput::make(m, n, std::move(gens));
}


}  // namespace trichow::testing

#endif  // TRICHOW_TESTS_SUPPORT_HPP
