#ifndef TRICHOW_POLYALG_HPP
#define TRICHOW_POLYALG_HPP

#include <iterator>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "trichow/mpoly.hpp"

namespace trichow {

template <class B>
struct PolyCtx {
  VarSet vars;
  typename CoeffOps<B>::Ctx base{};
  friend bool operator==(const PolyCtx& a, const PolyCtx& b) { return a.vars == b.vars && a.base == b.base; }
};

template <class R>
std::optional<MPoly<R>> divide_exact(const MPoly<R>& f, const MPoly<R>& g);
template <class B>
MPoly<B> poly_gcd(const MPoly<B>& f, const MPoly<B>& g);

/// Polynomials over a gcd domain or field, used as coefficients of other
/// polynomials (e.g. Z[Y] inside Z[Y][X]).
template <class B>
struct CoeffOps<MPoly<B>> {
  using P = MPoly<B>;
  using Ctx = PolyCtx<B>;
  static constexpr bool is_field = false;
  static constexpr bool has_gcd = true;
  static Ctx ctx_of(const P& a) { return {a.vars(), a.ctx()}; }
  static P zero(const Ctx& c) { return P(c.vars, c.base); }
  static P one(const Ctx& c) { return P::constant(c.vars, c.base, CoeffOps<B>::one(c.base)); }
  static P from_int(const Ctx& c, const mpz_class& v) { return P::from_int(c.vars, c.base, v); }
  static bool is_zero(const P& a) { return a.is_zero(); }
  static bool is_one(const P& a) { return a.is_one(); }
  static std::optional<P> try_divexact(const P& a, const P& b) { return divide_exact(a, b); }
  static P gcd(const P& a, const P& b) { return poly_gcd(a, b); }
  static bool is_negative(const P& a) { return !a.is_zero() && CoeffOps<B>::is_negative(a.lc()); }
  static bool is_atomic(const P& a) { return a.nterms() <= 1; }
  static std::string str(const P& a) { return a.str(); }
};

/// Exact quotient f/g, or nullopt when g does not divide f.
template <class R>
std::optional<MPoly<R>> divide_exact(const MPoly<R>& f, const MPoly<R>& g) {
  using Ops = CoeffOps<R>;
  if (g.is_zero()) throw Error(ErrorKind::Domain, "division by zero polynomial");
  if (f.is_zero()) return f.zero_like();
  if (g.is_constant()) {
    std::vector<typename MPoly<R>::Term> out;
    out.reserve(f.nterms());
    for (const auto& [m, c] : f.terms()) {
      auto q = Ops::try_divexact(c, g.lc());
      if (!q) return std::nullopt;
      out.emplace_back(m, std::move(*q));
    }
    return MPoly<R>::from_terms(f.vars(), f.ctx(), std::move(out));
  }
  // Ordered remainder so that each step touches only the terms of g.
  auto desc = [](const Monomial& a, const Monomial& b) { return Monomial::grlex(a, b) > 0; };
  std::map<Monomial, R, decltype(desc)> r(desc);
  for (const auto& [m, c] : f.terms()) r.emplace(m, c);
  std::vector<typename MPoly<R>::Term> quot;
  const auto& [gm, gc] = g.lead();
  while (!r.empty()) {
    auto top = r.begin();
    if (!gm.divides(top->first)) return std::nullopt;
    auto qc = Ops::try_divexact(top->second, gc);
    if (!qc) return std::nullopt;
    Monomial qm = top->first / gm;
    r.erase(top);
    for (auto it = std::next(g.terms().begin()); it != g.terms().end(); ++it) {
      R v = it->second * *qc;
      auto [pos, fresh] = r.try_emplace(it->first * qm, -v);
      if (!fresh) {
        pos->second -= v;
        if (Ops::is_zero(pos->second)) r.erase(pos);
      }
    }
    quot.emplace_back(std::move(qm), std::move(*qc));
  }
  return MPoly<R>::from_terms(f.vars(), f.ctx(), std::move(quot));
}

template <class R>
MPoly<R> divide_or_throw(const MPoly<R>& f, const MPoly<R>& g) {
  auto q = divide_exact(f, g);
  if (!q) throw Error(ErrorKind::Domain, "inexact polynomial division");
  return std::move(*q);
}

/// Divides out the unit part of the leading coefficient: leading coefficient
/// positive over Z, monic over a field.
template <class B>
MPoly<B> normalize_unit(const MPoly<B>& f) {
  using Ops = CoeffOps<B>;
  if (f.is_zero()) return f;
  if constexpr (Ops::is_field) {
    if (Ops::is_one(f.lc())) return f;
    return f.scale(Ops::inv(f.lc()));
  } else {
    return Ops::is_negative(f.lc()) ? -f : f;
  }
}

/// gcd of the coefficients of f with respect to `var`.
template <class B>
MPoly<B> content_in(const MPoly<B>& f, std::size_t var) {
  MPoly<B> g = f.zero_like();
  for (const auto& c : f.coeffs_in(var)) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_constant() && CoeffOps<B>::is_one(g.lc())) break;
  }
  return g;
}

/// Pseudo-remainder of f by g in `var`, up to a power of g's leading coefficient.
template <class R>
MPoly<R> pseudo_remainder(const MPoly<R>& f, const MPoly<R>& g, std::size_t var) {
  auto dg = g.degree(var);
  MPoly<R> lcg = g.coeff_in(var, dg);
  MPoly<R> r = f;
  while (!r.is_zero() && r.degree(var) >= dg) {
    auto e = r.degree(var);
    MPoly<R> lcr = r.coeff_in(var, e);
    r = r * lcg - lcr * g * g.var_like(var, e - dg);
  }
  return r;
}

/// gcd over Z[vars] (positive leading coefficient) or over F[vars] (monic),
/// by recursive primitive polynomial remainder sequences.
template <class B>
MPoly<B> poly_gcd(const MPoly<B>& f, const MPoly<B>& g) {
  using Ops = CoeffOps<B>;
  if (f.is_zero()) return normalize_unit(g);
  if (g.is_zero()) return normalize_unit(f);
  long v = -1;
  for (std::size_t i = f.vars().size(); i-- > 0;) {
    if (f.degree(i) > 0 || g.degree(i) > 0) {
      v = static_cast<long>(i);
      break;
    }
  }
  if (v < 0) {
    if constexpr (Ops::is_field) {
      return f.one_like();
    } else {
      return f.constant_like(Ops::gcd(f.lc(), g.lc()));
    }
  }
  std::size_t var = static_cast<std::size_t>(v);
  MPoly<B> cf = content_in(f, var), cg = content_in(g, var);
  MPoly<B> c = poly_gcd(cf, cg);
  MPoly<B> a = divide_or_throw(f, cf), b = divide_or_throw(g, cg);
  if (a.degree(var) < b.degree(var)) std::swap(a, b);
  while (true) {
    if (b.is_zero()) break;
    if (b.degree(var) == 0) {
      a = a.one_like();
      break;
    }
    MPoly<B> r = pseudo_remainder(a, b, var);
    a = std::move(b);
    b = r.is_zero() ? r : divide_or_throw(r, content_in(r, var));
  }
  if (a.degree(var) > 0) a = divide_or_throw(a, content_in(a, var));
  return normalize_unit(c * a);
}

template <class B>
MPoly<B> poly_lcm(const MPoly<B>& f, const MPoly<B>& g) {
  if (f.is_zero() || g.is_zero()) return f.zero_like();
  return normalize_unit(divide_or_throw(f, poly_gcd(f, g)) * g);
}

/// Integer content (sign chosen so the primitive part has positive leading
/// coefficient) and primitive part.
inline std::pair<mpz_class, MPoly<mpz_class>> content_primpart(const MPoly<mpz_class>& f) {
  if (f.is_zero()) throw Error(ErrorKind::Domain, "content of the zero polynomial");
  mpz_class g = 0;
  for (const auto& t : f.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
  if (f.lc() < 0) g = -g;
  auto q = divide_exact(f, f.constant_like(g));
  return {g, std::move(*q)};
}

/// Content with respect to the variables in `main` (a polynomial in the
/// remaining variables) and the corresponding primitive part.
inline std::pair<MPoly<mpz_class>, MPoly<mpz_class>> content_primpart_in(
    const MPoly<mpz_class>& f, const std::vector<std::size_t>& main) {
  if (f.is_zero()) throw Error(ErrorKind::Domain, "content of the zero polynomial");
  std::vector<std::pair<Monomial, std::vector<MPoly<mpz_class>::Term>>> groups;
  for (const auto& [m, c] : f.terms()) {
    Monomial key(m.size()), rest = m;
    for (std::size_t i : main) {
      key[i] = m[i];
      rest[i] = 0;
    }
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& gr) { return gr.first == key; });
    if (it == groups.end()) {
      groups.emplace_back(key, std::vector<MPoly<mpz_class>::Term>{});
      it = groups.end() - 1;
    }
    it->second.emplace_back(rest, c);
  }
  MPoly<mpz_class> g = f.zero_like();
  for (auto& gr : groups) g = poly_gcd(g, MPoly<mpz_class>::from_terms(f.vars(), f.ctx(), std::move(gr.second)));
  if (f.lc() < 0) g = -g;
  return {g, divide_or_throw(f, g)};
}

/// Determinant by fraction-free (Bareiss) elimination; entries must lie in an
/// integral domain where divide_exact is available.
template <class R>
MPoly<R> bareiss_det(std::vector<std::vector<MPoly<R>>> a) {
  const std::size_t n = a.size();
  if (n == 0) throw Error(ErrorKind::Structural, "determinant of an empty matrix");
  bool negate = false;
  MPoly<R> prev = a[0][0].one_like();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      if (piv == n || a[i][k].nterms() < a[piv][k].nterms()) piv = i;
    }
    if (piv == n) return a[0][0].zero_like();
    if (piv != k) {
      std::swap(a[piv], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly<R> num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = prev.is_one() ? std::move(num) : divide_or_throw(num, prev);
      }
      a[i][k] = a[i][k].zero_like();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// Sylvester matrix of f and g with respect to `var`.
template <class R>
std::vector<std::vector<MPoly<R>>> sylvester_matrix(const MPoly<R>& f, const MPoly<R>& g, std::size_t var) {
  auto fc = f.coeffs_in(var), gc = g.coeffs_in(var);
  std::size_t p = fc.size() - 1, q = gc.size() - 1, n = p + q;
  std::vector<std::vector<MPoly<R>>> s(n, std::vector<MPoly<R>>(n, f.zero_like()));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t k = 0; k <= p; ++k) s[i][i + k] = fc[p - k];
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k <= q; ++k) s[q + i][i + k] = gc[q - k];
  return s;
}

/// Resultant in `var` as the Sylvester determinant; res(c, g) = c^deg(g) when
/// c does not involve var (and symmetrically).
template <class R>
MPoly<R> resultant(const MPoly<R>& f, const MPoly<R>& g, std::size_t var) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::Domain, "resultant of a zero polynomial");
  auto p = f.degree(var), q = g.degree(var);
  if (p == 0 && q == 0) throw Error(ErrorKind::Domain, "resultant of two polynomials constant in the variable");
  if (p == 0) return f.pow(q);
  if (q == 0) return g.pow(p);
  return bareiss_det(sylvester_matrix(f, g, var));
}

/// Clears denominators: returns (integer polynomial, positive common denominator).
inline std::pair<MPoly<mpz_class>, mpz_class> clear_denominators(const MPoly<mpq_class>& f) {
  mpz_class den = 1;
  for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den_mpz_t());
  auto g = f.map_coeffs<mpz_class>(NoCtx{}, [&](const mpq_class& c) {
    return mpz_class(c.get_num() * (den / c.get_den()));
  });
  return {g, den};
}

inline MPoly<mpq_class> to_rational(const MPoly<mpz_class>& f) {
  return f.map_coeffs<mpq_class>(NoCtx{}, [](const mpz_class& c) { return mpq_class(c); });
}

/// Splits a polynomial over (outer ∪ inner) variables into a polynomial in
/// `outer` whose coefficients are polynomials in `inner`.
template <class B>
MPoly<MPoly<B>> nest(const MPoly<B>& f, const VarSet& outer, const VarSet& inner) {
  std::vector<std::size_t> oi(f.vars().size()), ii(f.vars().size());
  std::vector<int> side(f.vars().size());
  for (std::size_t i = 0; i < f.vars().size(); ++i) {
    if (auto j = outer.index_of(f.vars()[i])) {
      side[i] = 0;
      oi[i] = *j;
    } else if (auto k = inner.index_of(f.vars()[i])) {
      side[i] = 1;
      ii[i] = *k;
    } else {
      throw Error(ErrorKind::Structural, "variable " + f.vars()[i] + " in neither group");
    }
  }
  std::vector<std::pair<Monomial, std::vector<typename MPoly<B>::Term>>> groups;
  std::map<std::vector<Monomial::Exp>, std::size_t> index;
  for (const auto& [m, c] : f.terms()) {
    Monomial mo(outer.size()), mi(inner.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (side[i] == 0)
        mo[oi[i]] += m[i];
      else
        mi[ii[i]] += m[i];
    }
    std::vector<Monomial::Exp> key(outer.size());
    for (std::size_t i = 0; i < outer.size(); ++i) key[i] = mo[i];
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, groups.size()).first;
      groups.emplace_back(mo, std::vector<typename MPoly<B>::Term>{});
    }
    groups[it->second].second.emplace_back(mi, c);
  }
  PolyCtx<B> ctx{inner, f.ctx()};
  std::vector<typename MPoly<MPoly<B>>::Term> terms;
  for (auto& [mo, ts] : groups) terms.emplace_back(mo, MPoly<B>::from_terms(inner, f.ctx(), std::move(ts)));
  return MPoly<MPoly<B>>::from_terms(outer, ctx, std::move(terms));
}

/// Inverse of nest: a flat polynomial over `all` (which must contain both groups).
template <class B>
MPoly<B> flatten(const MPoly<MPoly<B>>& f, const VarSet& all) {
  std::vector<std::size_t> oi(f.vars().size()), ii(f.ctx().vars.size());
  for (std::size_t i = 0; i < oi.size(); ++i) oi[i] = all.require(f.vars()[i]);
  for (std::size_t i = 0; i < ii.size(); ++i) ii[i] = all.require(f.ctx().vars[i]);
  std::vector<typename MPoly<B>::Term> out;
  for (const auto& [mo, c] : f.terms()) {
    for (const auto& [mi, b] : c.terms()) {
      Monomial m(all.size());
      for (std::size_t i = 0; i < oi.size(); ++i) m[oi[i]] += mo[i];
      for (std::size_t i = 0; i < ii.size(); ++i) m[ii[i]] += mi[i];
      out.emplace_back(std::move(m), b);
    }
  }
  return MPoly<B>::from_terms(all, f.ctx().base, std::move(out));
}

}  // namespace trichow

#endif  // TRICHOW_POLYALG_HPP
