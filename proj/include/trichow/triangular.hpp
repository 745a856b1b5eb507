#ifndef TRICHOW_TRIANGULAR_HPP
#define TRICHOW_TRIANGULAR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trichow/linalg.hpp"
#include "trichow/ratfunc.hpp"

namespace trichow {

/// Monic triangular set T1..Tl over a field K, every Ti stored over the same
/// variable list X1..Xn (n >= l); Ti involves only X1..Xi and is monic in Xi.
/// Tails need not be reduced modulo the earlier polynomials; see reduce_tails.
template <class K>
class TriangularSet {
 public:
  using Poly = MPoly<K>;

  TriangularSet() = default;
  /// Validates the shape; throws Structural when an invariant fails.
  explicit TriangularSet(std::vector<Poly> polys) : polys_(std::move(polys)) {
    if (polys_.empty()) return;
    const VarSet& v = polys_[0].vars();
    if (polys_.size() > v.size()) throw Error(ErrorKind::Structural, "more polynomials than variables");
    for (std::size_t l = 0; l < polys_.size(); ++l) {
      const Poly& t = polys_[l];
      if (!(t.vars() == v)) throw Error(ErrorKind::Structural, "triangular set over mixed variable lists");
      if (t.is_zero()) throw Error(ErrorKind::Structural, "zero polynomial in triangular set");
      for (std::size_t r = l + 1; r < v.size(); ++r)
        if (t.degree(r) > 0) throw Error(ErrorKind::Structural, "T" + std::to_string(l + 1) + " involves " + v[r]);
      auto d = t.degree(l);
      if (d == 0) throw Error(ErrorKind::Structural, "T" + std::to_string(l + 1) + " has degree 0 in " + v[l]);
      if (!t.coeff_in(l, d).is_one())
        throw Error(ErrorKind::Structural, "T" + std::to_string(l + 1) + " is not monic in " + v[l]);
      degrees_.push_back(d);
    }
  }

  std::size_t size() const { return polys_.size(); }
  const Poly& operator[](std::size_t i) const { return polys_[i]; }
  const std::vector<Poly>& polys() const { return polys_; }
  const std::vector<Monomial::Exp>& degrees() const { return degrees_; }
  const VarSet& vars() const { return polys_.at(0).vars(); }
  /// True when deg(Ti, Xr) < deg(Tr, Xr) for all r < i.
  bool is_reduced() const {
    for (std::size_t l = 0; l < polys_.size(); ++l)
      for (std::size_t r = 0; r < l; ++r)
        if (polys_[l].degree(r) >= degrees_[r]) return false;
    return true;
  }
  /// Product of the main degrees (the number of points of the variety).
  unsigned long dimension() const {
    unsigned long d = 1;
    for (auto x : degrees_) d *= x;
    return d;
  }
  TriangularSet prefix(std::size_t l) const {
    TriangularSet t;
    t.polys_.assign(polys_.begin(), polys_.begin() + l);
    t.degrees_.assign(degrees_.begin(), degrees_.begin() + l);
    return t;
  }

  friend bool operator==(const TriangularSet& a, const TriangularSet& b) { return a.polys_ == b.polys_; }

 private:
  std::vector<Poly> polys_;
  std::vector<Monomial::Exp> degrees_;
};

/// Reduces f modulo a polynomial monic of degree d in variable `var`.
template <class K>
MPoly<K> reduce_monic(const MPoly<K>& f, const MPoly<K>& t, std::size_t var, Monomial::Exp d) {
  if (f.degree(var) < d) return f;
  auto c = f.coeffs_in(var);
  auto r = t.coeffs_in(var);  // r[d] == 1
  for (std::size_t k = c.size(); k-- > d;) {
    if (c[k].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (!r[j].is_zero()) c[k - d + j] = c[k - d + j] - c[k] * r[j];
    c[k] = f.zero_like();
  }
  std::vector<typename MPoly<K>::Term> out;
  for (std::size_t k = 0; k < d && k < c.size(); ++k) {
    for (const auto& [m, a] : c[k].terms()) {
      Monomial mk = m;
      mk[var] = static_cast<Monomial::Exp>(k);
      out.emplace_back(std::move(mk), a);
    }
  }
  return MPoly<K>::from_terms(f.vars(), f.ctx(), std::move(out));
}

/// Normal form modulo the triangular set by successive monic division from
/// the last level down to the first. f may carry extra variables besides the
/// ones of t (they are treated as coefficients).
template <class K>
MPoly<K> normal_form(const MPoly<K>& f, const TriangularSet<K>& t) {
  if (t.size() == 0) return f;
  MPoly<K> r = f;
  const bool same = f.vars() == t.vars();
  for (std::size_t l = t.size(); l-- > 0;) {
    std::size_t var = same ? l : f.vars().require(t.vars()[l]);
    if (r.degree(var) < t.degrees()[l]) continue;
    r = reduce_monic(r, same ? t[l] : t[l].remap(f.vars()), var, t.degrees()[l]);
  }
  return r;
}

/// Same ideal, with each Ti replaced by its normal form modulo T1..T(i-1):
/// the reduced Groebner basis over K.
template <class K>
TriangularSet<K> reduce_tails(const TriangularSet<K>& t) {
  std::vector<MPoly<K>> out;
  for (std::size_t l = 0; l < t.size(); ++l) out.push_back(normal_form(t[l], t.prefix(l)));
  return TriangularSet<K>(std::move(out));
}

/// Monomials X^a with a_r < d_r for the levels of t, in a fixed order.
template <class K>
std::vector<Monomial> quotient_basis(const TriangularSet<K>& t) {
  std::vector<Monomial> basis{Monomial(t.vars().size())};
  for (std::size_t l = 0; l < t.size(); ++l) {
    std::vector<Monomial> next;
    for (const auto& m : basis)
      for (Monomial::Exp e = 0; e < t.degrees()[l]; ++e) {
        Monomial x = m;
        x[l] = e;
        next.push_back(x);
      }
    basis = std::move(next);
  }
  return basis;
}

/// Coordinates of a reduced polynomial on the quotient basis.
template <class K>
std::vector<K> coordinates(const MPoly<K>& reduced, const std::vector<Monomial>& basis) {
  std::vector<K> v(basis.size(), CoeffOps<K>::zero(reduced.ctx()));
  for (const auto& [m, c] : reduced.terms()) {
    auto it = std::find(basis.begin(), basis.end(), m);
    if (it == basis.end()) throw Error(ErrorKind::Structural, "polynomial not reduced");
    v[it - basis.begin()] = c;
  }
  return v;
}

template <class K>
MPoly<K> from_coordinates(const std::vector<K>& v, const std::vector<Monomial>& basis, const MPoly<K>& like) {
  std::vector<typename MPoly<K>::Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!CoeffOps<K>::is_zero(v[i])) terms.emplace_back(basis[i], v[i]);
  return MPoly<K>::from_terms(like.vars(), like.ctx(), std::move(terms));
}

/// Matrix of multiplication by f on the quotient basis (column j holds the
/// coordinates of nf(f * basis[j])).
template <class K>
Matrix<K> multiplication_matrix(const MPoly<K>& f, const TriangularSet<K>& t, const std::vector<Monomial>& basis) {
  const std::size_t n = basis.size();
  Matrix<K> m(n, std::vector<K>(n, CoeffOps<K>::zero(f.ctx())));
  for (std::size_t j = 0; j < n; ++j) {
    auto col = coordinates(normal_form(f.mul_term(basis[j], CoeffOps<K>::one(f.ctx())), t), basis);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = std::move(col[i]);
  }
  return m;
}

/// Inverse of f modulo t by a linear solve on the quotient basis. Throws
/// ZeroDivisorError (with a witness g != 0, f*g = 0) when f is not invertible.
template <class K>
MPoly<K> invert_modulo(const MPoly<K>& f, const TriangularSet<K>& t) {
  MPoly<K> r = normal_form(f, t);
  if (r.is_zero()) throw Error(ErrorKind::Domain, "cannot invert zero modulo the triangular set");
  if (r.is_constant()) return r.constant_like(CoeffOps<K>::inv(r.lc()));
  auto basis = quotient_basis(t);
  auto m = multiplication_matrix(r, t, basis);
  std::vector<K> rhs(basis.size(), CoeffOps<K>::zero(r.ctx()));
  rhs[0] = CoeffOps<K>::one(r.ctx());  // basis[0] is the monomial 1
  auto sol = solve_square(std::move(m), std::move(rhs));
  if (!sol.solution) {
    MPoly<K> witness = from_coordinates(sol.kernel, basis, r);
    throw ZeroDivisorError(r.str() + " is a zero divisor modulo the triangular set", witness.str());
  }
  return from_coordinates(*sol.solution, basis, r);
}

/// The regular chain N1..Nn with leading coefficients D1..Dn.
template <class K>
struct RegularChain {
  std::vector<MPoly<K>> denoms;
  std::vector<MPoly<K>> polys;
};

/// D_l = prod_{i<l} dT_i/dX_i mod (T1..T_{l-1}), N_l = D_l T_l mod (T1..T_{l-1}).
/// Throws NonRadical when some D_l vanishes or is a zero divisor.
template <class K>
RegularChain<K> regular_chain(const TriangularSet<K>& t) {
  RegularChain<K> out;
  if (t.size() == 0) return out;
  MPoly<K> d = t[0].one_like();
  out.denoms.push_back(d);
  out.polys.push_back(t[0]);
  for (std::size_t l = 1; l < t.size(); ++l) {
    auto pre = t.prefix(l);
    d = normal_form(d * t[l - 1].derivative(l - 1), pre);
    if (d.is_zero()) throw Error(ErrorKind::NonRadical, "D" + std::to_string(l + 1) + " vanishes");
    try {
      (void)invert_modulo(d, pre);
    } catch (const ZeroDivisorError& e) {
      throw Error(ErrorKind::NonRadical, "D" + std::to_string(l + 1) + " is a zero divisor; witness " + e.witness());
    }
    out.denoms.push_back(d);
    out.polys.push_back(normal_form(d * t[l], pre));
  }
  return out;
}

/// Iterated resultants e_i and the scaled polynomials e1...e_{l-1} T_l.
template <class K>
struct ScaledSet {
  std::vector<K> resultants;
  std::vector<MPoly<K>> polys;
  bool radical = true;  // false when some e_i vanishes
};

/// res(...res(A, T_l, X_l)..., T_1, X_1) for A over the variables of t.
template <class K>
K iterated_resultant(const MPoly<K>& a, const TriangularSet<K>& t, std::size_t top) {
  MPoly<K> r = a;
  for (std::size_t l = top + 1; l-- > 0;) {
    if (r.is_zero()) break;
    r = resultant(r, t[l], l);
  }
  return r.constant_coeff();
}

template <class K>
ScaledSet<K> iterated_resultants(const TriangularSet<K>& t) {
  ScaledSet<K> out;
  if (t.size() == 0) return out;
  K scale = CoeffOps<K>::one(t[0].ctx());
  for (std::size_t i = 0; i < t.size(); ++i) {
    out.polys.push_back(t[i].scale(scale));
    K e = iterated_resultant(t[i].derivative(i), t, i);
    if (CoeffOps<K>::is_zero(e)) out.radical = false;
    scale = scale * e;
    out.resultants.push_back(std::move(e));
  }
  return out;
}

/// True when every dT_i/dX_i is invertible modulo T1..T_i, i.e. all
/// iterated resultants e_i are nonzero.
template <class K>
bool is_radical(const TriangularSet<K>& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto pre = t.prefix(i + 1);
    MPoly<K> dt = normal_form(t[i].derivative(i), pre);
    if (dt.is_zero()) return false;
    try {
      (void)invert_modulo(dt, pre);
    } catch (const ZeroDivisorError&) {
      return false;
    }
  }
  return true;
}

/// delta(T_l): max over the coefficients a/b of deg(a) + deg(b), per level.
template <class B>
std::vector<long> delta_measure(const TriangularSet<RatFunc<B>>& t) {
  std::vector<long> out;
  for (const auto& p : t.polys()) {
    long best = 0;
    for (const auto& [m, c] : p.terms()) best = std::max(best, c.num().total_degree() + c.den().total_degree());
    out.push_back(best);
  }
  return out;
}

enum class SpecializationVerdict { Good, DenominatorVanishes, ResultantVanishes };

std::string_view to_string(SpecializationVerdict v);

struct Specialization {
  SpecializationVerdict verdict = SpecializationVerdict::Good;
  std::string witness;                        // offending denominator or resultant index
  std::optional<TriangularSet<QY>> set;       // over Q (no parameters) unless a denominator vanished
  bool good() const { return verdict == SpecializationVerdict::Good; }
};

/// Substitutes Y <- y into every coefficient. Good requires every coefficient
/// denominator to be nonzero at y and every specialized iterated resultant
/// e_i(y) to be nonzero.
Specialization specialize(const TriangularSet<QY>& t, const std::vector<mpz_class>& y);

/// Value of a rational function at an integer point; nullopt when the
/// denominator vanishes there.
std::optional<mpq_class> evaluate(const QY& f, const std::vector<mpz_class>& y);

}  // namespace trichow

#endif  // TRICHOW_TRIANGULAR_HPP
