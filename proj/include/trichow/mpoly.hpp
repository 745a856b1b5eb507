#ifndef TRICHOW_MPOLY_HPP
#define TRICHOW_MPOLY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trichow/coeff.hpp"
#include "trichow/monomial.hpp"

namespace trichow {

/// Sparse polynomial over R in a named variable list. Terms are kept sorted by
/// descending graded-lex order with no zero coefficients.
template <class R>
class MPoly {
 public:
  using Ops = CoeffOps<R>;
  using Ctx = typename Ops::Ctx;
  using Term = std::pair<Monomial, R>;

  MPoly() = default;
  MPoly(VarSet vars, Ctx ctx) : vars_(std::move(vars)), ctx_(std::move(ctx)) {}

  static MPoly constant(VarSet vars, Ctx ctx, const R& c) {
    MPoly p(std::move(vars), std::move(ctx));
    if (!Ops::is_zero(c)) p.terms_.emplace_back(Monomial(p.vars_.size()), c);
    return p;
  }
  static MPoly from_int(VarSet vars, Ctx ctx, const mpz_class& c) {
    R v = Ops::from_int(ctx, c);
    return constant(std::move(vars), std::move(ctx), v);
  }
  static MPoly variable(VarSet vars, Ctx ctx, std::size_t i, Monomial::Exp e = 1) {
    MPoly p(std::move(vars), std::move(ctx));
    Monomial m(p.vars_.size());
    m[i] = e;
    p.terms_.emplace_back(std::move(m), Ops::one(p.ctx_));
    return p;
  }
  static MPoly variable(VarSet vars, Ctx ctx, std::string_view name, Monomial::Exp e = 1) {
    std::size_t i = vars.require(name);
    return variable(std::move(vars), std::move(ctx), i, e);
  }
  /// Accepts terms in any order, possibly repeated or zero.
  static MPoly from_terms(VarSet vars, Ctx ctx, std::vector<Term> terms) {
    MPoly p(std::move(vars), std::move(ctx));
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return Monomial::grlex(a.first, b.first) > 0;
    });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
      } else {
        if (!p.terms_.empty() && Ops::is_zero(p.terms_.back().second)) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && Ops::is_zero(p.terms_.back().second)) p.terms_.pop_back();
    return p;
  }

  const VarSet& vars() const { return vars_; }
  const Ctx& ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t nterms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_one() const { return is_constant() && !terms_.empty() && Ops::is_one(terms_[0].second); }
  const Term& lead() const { return terms_.front(); }
  const R& lc() const { return terms_.front().second; }
  R constant_coeff() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return Ops::zero(ctx_);
  }
  R coeff(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.first == m) return t.second;
    return Ops::zero(ctx_);
  }
  MPoly zero_like() const { return MPoly(vars_, ctx_); }
  MPoly one_like() const { return constant(vars_, ctx_, Ops::one(ctx_)); }
  MPoly constant_like(const R& c) const { return constant(vars_, ctx_, c); }
  MPoly var_like(std::size_t i, Monomial::Exp e = 1) const { return variable(vars_, ctx_, i, e); }

  MPoly operator+(const MPoly& o) const { return merge(o, false); }
  MPoly operator-(const MPoly& o) const { return merge(o, true); }
  MPoly operator-() const {
    MPoly r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  MPoly operator*(const MPoly& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return zero_like();
    if (o.is_constant()) return scale(o.terms_[0].second);
    if (is_constant()) return o.scale(terms_[0].second);
    if (terms_.size() * o.terms_.size() <= 64) {
      std::vector<Term> acc;
      acc.reserve(terms_.size() * o.terms_.size());
      for (const auto& a : terms_)
        for (const auto& b : o.terms_) acc.emplace_back(a.first * b.first, a.second * b.second);
      return from_terms(vars_, ctx_, std::move(acc));
    }
    // Large products collapse many terms; accumulate in order instead of sorting them all.
    auto desc = [](const Monomial& x, const Monomial& y) { return Monomial::grlex(x, y) > 0; };
    std::map<Monomial, R, decltype(desc)> acc(desc);
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) {
        auto [it, fresh] = acc.try_emplace(a.first * b.first, a.second * b.second);
        if (!fresh) it->second += a.second * b.second;
      }
    }
    MPoly r(vars_, ctx_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!Ops::is_zero(c)) r.terms_.emplace_back(m, std::move(c));
    return r;
  }
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly scale(const R& c) const {
    if (Ops::is_zero(c)) return zero_like();
    MPoly r(vars_, ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      R v = t.second * c;
      if (!Ops::is_zero(v)) r.terms_.emplace_back(t.first, std::move(v));
    }
    return r;
  }
  /// Multiplies by c * m; monomial multiplication preserves the term order.
  MPoly mul_term(const Monomial& m, const R& c) const {
    MPoly r(vars_, ctx_);
    if (Ops::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      R v = t.second * c;
      if (!Ops::is_zero(v)) r.terms_.emplace_back(t.first * m, std::move(v));
    }
    return r;
  }
  MPoly pow(unsigned e) const {
    MPoly result = one_like(), base = *this;
    while (e) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e) base = base * base;
    }
    return result;
  }

  Monomial::Exp degree(std::size_t var) const {
    Monomial::Exp d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first[var]);
    return d;
  }
  Monomial::Exp degree(std::string_view name) const { return degree(vars_.require(name)); }
  /// Total degree; -1 for the zero polynomial.
  long total_degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_[0].first.degree()); }
  /// Total degree in a subset of the variables; -1 for zero.
  long total_degree_in(const std::vector<std::size_t>& idx) const {
    long best = -1;
    for (const auto& t : terms_) {
      long d = 0;
      for (std::size_t i : idx) d += t.first[i];
      best = std::max(best, d);
    }
    return best;
  }
  bool involves(std::size_t var) const { return degree(var) > 0; }

  /// Coefficients with respect to one variable; entry k multiplies var^k and
  /// has that variable's exponent cleared.
  std::vector<MPoly> coeffs_in(std::size_t var) const {
    std::vector<std::vector<Term>> buckets(degree(var) + 1);
    for (const auto& t : terms_) {
      Monomial m = t.first;
      auto k = m[var];
      m[var] = 0;
      buckets[k].emplace_back(std::move(m), t.second);
    }
    std::vector<MPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
      MPoly p(vars_, ctx_);
      p.terms_ = std::move(b);  // removing one variable's exponent keeps grlex order within a bucket
      std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& a, const Term& c) {
        return Monomial::grlex(a.first, c.first) > 0;
      });
      out.push_back(std::move(p));
    }
    return out;
  }
  MPoly coeff_in(std::size_t var, Monomial::Exp k) const {
    std::vector<Term> sel;
    for (const auto& t : terms_)
      if (t.first[var] == k) {
        Monomial m = t.first;
        m[var] = 0;
        sel.emplace_back(std::move(m), t.second);
      }
    return from_terms(vars_, ctx_, std::move(sel));
  }

  MPoly derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      auto e = t.first[var];
      if (e == 0) continue;
      Monomial m = t.first;
      m[var] = e - 1;
      out.emplace_back(std::move(m), t.second * Ops::from_int(ctx_, mpz_class(e)));
    }
    return from_terms(vars_, ctx_, std::move(out));
  }

  /// Re-expresses the polynomial over another variable list, matching names.
  /// Variables missing from `target` must not occur.
  MPoly remap(const VarSet& target) const {
    if (target == vars_) return *this;
    std::vector<long> where(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (auto j = target.index_of(vars_[i])) where[i] = static_cast<long>(*j);
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target.size());
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (t.first[i] == 0) continue;
        if (where[i] < 0)
          throw Error(ErrorKind::Structural, "variable " + vars_[i] + " not present in target variable list");
        m[where[i]] += t.first[i];
      }
      out.emplace_back(std::move(m), t.second);
    }
    return from_terms(target, ctx_, std::move(out));
  }

  /// Replaces variable i by images[i] (all images share one variable list).
  MPoly substitute(const std::vector<MPoly>& images) const {
    if (images.size() != vars_.size()) throw Error(ErrorKind::Structural, "substitution arity mismatch");
    const VarSet& tv = images.empty() ? vars_ : images[0].vars();
    MPoly result(tv, ctx_);
    std::vector<std::map<Monomial::Exp, MPoly>> cache(vars_.size());
    auto power = [&](std::size_t i, Monomial::Exp e) -> const MPoly& {
      auto it = cache[i].find(e);
      if (it != cache[i].end()) return it->second;
      return cache[i].emplace(e, images[i].pow(e)).first->second;
    };
    std::vector<Term> acc;
    for (const auto& t : terms_) {
      MPoly prod = constant(tv, ctx_, t.second);
      for (std::size_t i = 0; i < vars_.size() && !prod.is_zero(); ++i)
        if (t.first[i]) prod = prod * power(i, t.first[i]);
      for (auto& pt : prod.terms_) acc.push_back(std::move(pt));
    }
    return from_terms(tv, ctx_, std::move(acc));
  }

  /// Evaluates every variable; values.size() must equal the variable count.
  R evaluate(const std::vector<R>& values) const {
    R acc = Ops::zero(ctx_);
    for (const auto& t : terms_) {
      R v = t.second;
      for (std::size_t i = 0; i < vars_.size(); ++i)
        for (Monomial::Exp k = 0; k < t.first[i]; ++k) v = v * values[i];
      acc += v;
    }
    return acc;
  }

  template <class S, class F>
  MPoly<S> map_coeffs(typename CoeffOps<S>::Ctx ctx, F&& f) const {
    std::vector<typename MPoly<S>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.emplace_back(t.first, f(t.second));
    return MPoly<S>::from_terms(vars_, std::move(ctx), std::move(out));
  }

  std::string monomial_str(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += vars_[i];
      if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s;
  }

  /// Canonical text: `coef*V1^e1*V2^e2` terms in descending graded-lex order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      R a = c;
      if (!first) {
        if (Ops::is_negative(c)) {
          s += " - ";
          a = -c;
        } else {
          s += " + ";
        }
      }
      std::string cs = Ops::is_atomic(a) ? Ops::str(a) : "(" + Ops::str(a) + ")";
      if (m.is_one()) {
        s += cs;
      } else if (Ops::is_one(a)) {
        s += monomial_str(m);
      } else {
        s += cs + '*' + monomial_str(m);
      }
      first = false;
    }
    return s;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

 private:
  void check(const MPoly& o) const {
    if (!(vars_ == o.vars_)) throw Error(ErrorKind::Structural, "mismatched variable lists");
  }
  MPoly merge(const MPoly& o, bool subtract) const {
    check(o);
    MPoly r(vars_, ctx_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      if (i == terms_.size()) {
        const auto& t = o.terms_[j++];
        r.terms_.emplace_back(t.first, subtract ? R(-t.second) : t.second);
        continue;
      }
      auto cmp = Monomial::grlex(terms_[i].first, o.terms_[j].first);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.emplace_back(t.first, subtract ? R(-t.second) : t.second);
      } else {
        R v = subtract ? R(terms_[i].second - o.terms_[j].second) : R(terms_[i].second + o.terms_[j].second);
        if (!Ops::is_zero(v)) r.terms_.emplace_back(terms_[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return r;
  }

  VarSet vars_;
  Ctx ctx_{};
  std::vector<Term> terms_;
};

}  // namespace trichow

#endif  // TRICHOW_MPOLY_HPP
