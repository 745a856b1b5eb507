#ifndef TRICHOW_RATFUNC_HPP
#define TRICHOW_RATFUNC_HPP

#include <string>

#include "trichow/polyalg.hpp"

namespace trichow {

/// Element of Frac(B[Y]) kept in lowest terms: gcd(num, den) = 1 including any
/// integer content, and den has positive (Z) or unit (F_p) leading coefficient.
template <class B>
class RatFunc {
 public:
  using P = MPoly<B>;

  RatFunc() = default;
  explicit RatFunc(P num) : num_(std::move(num)), den_(num_.one_like()) {}
  RatFunc(P num, P den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  static RatFunc zero(const VarSet& ys, const typename CoeffOps<B>::Ctx& base) { return RatFunc(P(ys, base)); }
  static RatFunc from_int(const VarSet& ys, const typename CoeffOps<B>::Ctx& base, const mpz_class& v) {
    return RatFunc(P::from_int(ys, base, v));
  }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  const VarSet& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator+(const RatFunc& o) const { return add(o, false); }
  RatFunc operator-(const RatFunc& o) const { return add(o, true); }
  RatFunc operator-() const { return raw(-num_, den_); }
  RatFunc operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return raw(num_.zero_like(), den_.one_like());
    if (den_.is_one() && o.den_.is_one()) return raw(num_ * o.num_, den_);
    P g1 = poly_gcd(num_, o.den_), g2 = poly_gcd(o.num_, den_);
    P a = g1.is_one() ? num_ : divide_or_throw(num_, g1);
    P d = g1.is_one() ? o.den_ : divide_or_throw(o.den_, g1);
    P c = g2.is_one() ? o.num_ : divide_or_throw(o.num_, g2);
    P b = g2.is_one() ? den_ : divide_or_throw(den_, g2);
    return normalized_sign(a * c, b * d);
  }
  RatFunc inverse() const {
    if (is_zero()) throw Error(ErrorKind::Domain, "inverse of zero rational function");
    return normalized_sign(den_, num_);
  }
  RatFunc operator/(const RatFunc& o) const { return *this * o.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.nterms() > 1 ? "(" + num_.str() + ")" : num_.str();
    return n + "/" + (den_.is_constant() ? den_.str() : "(" + den_.str() + ")");
  }

 private:
  static RatFunc raw(P num, P den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }
  static RatFunc normalized_sign(P num, P den) {
    using Ops = CoeffOps<B>;
    if constexpr (Ops::is_field) {
      if (!Ops::is_one(den.lc())) {
        auto u = Ops::inv(den.lc());
        return raw(num.scale(u), den.scale(u));
      }
    } else {
      if (Ops::is_negative(den.lc())) return raw(-num, -den);
    }
    return raw(std::move(num), std::move(den));
  }
  RatFunc add(const RatFunc& o, bool subtract) const {
    const P& c = o.num_;
    if (den_ == o.den_) {
      P n = subtract ? num_ - c : num_ + c;
      if (n.is_zero()) return raw(std::move(n), den_.one_like());
      if (den_.is_one()) return raw(std::move(n), den_);
      return RatFunc(std::move(n), den_);
    }
    P g = poly_gcd(den_, o.den_);
    P bq = divide_or_throw(den_, g), dq = divide_or_throw(o.den_, g);
    P n = subtract ? num_ * dq - c * bq : num_ * dq + c * bq;
    if (n.is_zero()) return raw(std::move(n), den_.one_like());
    P den = den_ * dq;
    if (!g.is_one()) {
      P g2 = poly_gcd(n, g);
      if (!g2.is_one()) {
        n = divide_or_throw(n, g2);
        den = divide_or_throw(den, g2);
      }
    }
    return normalized_sign(std::move(n), std::move(den));
  }
  void reduce() {
    if (den_.is_zero()) throw Error(ErrorKind::Domain, "zero denominator");
    if (num_.is_zero()) {
      den_ = den_.one_like();
      return;
    }
    P g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divide_or_throw(num_, g);
      den_ = divide_or_throw(den_, g);
    }
    *this = normalized_sign(std::move(num_), std::move(den_));
  }

  P num_;
  P den_;
};

template <class B>
struct RatCtx {
  VarSet vars;
  typename CoeffOps<B>::Ctx base{};
  friend bool operator==(const RatCtx& a, const RatCtx& b) { return a.vars == b.vars && a.base == b.base; }
};

template <class B>
struct CoeffOps<RatFunc<B>> {
  using F = RatFunc<B>;
  using Ctx = RatCtx<B>;
  static constexpr bool is_field = true;
  static constexpr bool has_gcd = false;
  static Ctx ctx_of(const F& a) { return {a.vars(), a.num().ctx()}; }
  static F zero(const Ctx& c) { return F::zero(c.vars, c.base); }
  static F one(const Ctx& c) { return F::from_int(c.vars, c.base, 1); }
  static F from_int(const Ctx& c, const mpz_class& v) { return F::from_int(c.vars, c.base, v); }
  static bool is_zero(const F& a) { return a.is_zero(); }
  static bool is_one(const F& a) { return a.is_one(); }
  static F inv(const F& a) { return a.inverse(); }
  static std::optional<F> try_divexact(const F& a, const F& b) {
    if (b.is_zero()) return std::nullopt;
    return a / b;
  }
  static F unit(const F& a) { return a; }
  static bool is_negative(const F& a) { return !a.is_zero() && CoeffOps<B>::is_negative(a.num().lc()); }
  static bool is_atomic(const F& a) {
    if (a.den().is_one()) return a.num().nterms() <= 1;
    return a.num().is_constant() && a.den().is_constant();
  }
  static std::string str(const F& a) { return a.str(); }
};

/// Q(Y) and F_p(Y).
using QY = RatFunc<mpz_class>;
using FpY = RatFunc<ModP>;

}  // namespace trichow

#endif  // TRICHOW_RATFUNC_HPP
