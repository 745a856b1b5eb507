#ifndef TRICHOW_COEFF_HPP
#define TRICHOW_COEFF_HPP

#include <memory>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "trichow/errors.hpp"

namespace trichow {

/// Residue modulo a prime. The modulus is shared between all residues of
/// one computation; value is kept in [0, p).
class ModP {
 public:
  ModP() = default;
  ModP(mpz_class v, std::shared_ptr<const mpz_class> p) : v_(std::move(v)), p_(std::move(p)) {
    normalize();
  }

  const mpz_class& value() const { return v_; }
  const std::shared_ptr<const mpz_class>& modulus_ptr() const { return p_; }
  const mpz_class& modulus() const { return *p_; }

  ModP operator+(const ModP& o) const { return ModP(v_ + o.v_, p_); }
  ModP operator-(const ModP& o) const { return ModP(v_ - o.v_, p_); }
  ModP operator*(const ModP& o) const { return ModP(v_ * o.v_, p_); }
  ModP operator-() const { return ModP(-v_, p_); }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }

  ModP inverse() const {
    if (v_ == 0) throw Error(ErrorKind::Domain, "inverse of zero modulo p");
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), v_.get_mpz_t(), p_->get_mpz_t()) == 0)
      throw Error(ErrorKind::NotPrime, "residue not invertible; modulus is not prime");
    return ModP(r, p_);
  }

  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }

 private:
  void normalize() {
    if (!p_) return;
    if (v_ < 0 || v_ >= *p_) {
      mpz_fdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), p_->get_mpz_t());
    }
  }

  mpz_class v_;
  std::shared_ptr<const mpz_class> p_;
};

/// Static interface every coefficient type provides. Arithmetic itself uses
/// the ordinary operators.
template <class R>
struct CoeffOps;

struct NoCtx {
  friend bool operator==(const NoCtx&, const NoCtx&) { return true; }
};

template <>
struct CoeffOps<mpz_class> {
  using Ctx = NoCtx;
  static constexpr bool is_field = false;
  static constexpr bool has_gcd = true;
  static Ctx ctx_of(const mpz_class&) { return {}; }
  static mpz_class zero(const Ctx&) { return 0; }
  static mpz_class one(const Ctx&) { return 1; }
  static mpz_class from_int(const Ctx&, const mpz_class& v) { return v; }
  static bool is_zero(const mpz_class& a) { return a == 0; }
  static bool is_one(const mpz_class& a) { return a == 1; }
  static std::optional<mpz_class> try_divexact(const mpz_class& a, const mpz_class& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static mpz_class unit(const mpz_class& a) { return a < 0 ? -1 : 1; }
  static bool is_negative(const mpz_class& a) { return a < 0; }
  static bool is_atomic(const mpz_class&) { return true; }
  static std::string str(const mpz_class& a) { return a.get_str(); }
};

template <>
struct CoeffOps<mpq_class> {
  using Ctx = NoCtx;
  static constexpr bool is_field = true;
  static constexpr bool has_gcd = false;
  static Ctx ctx_of(const mpq_class&) { return {}; }
  static mpq_class zero(const Ctx&) { return 0; }
  static mpq_class one(const Ctx&) { return 1; }
  static mpq_class from_int(const Ctx&, const mpz_class& v) { return mpq_class(v); }
  static bool is_zero(const mpq_class& a) { return a == 0; }
  static bool is_one(const mpq_class& a) { return a == 1; }
  static mpq_class inv(const mpq_class& a) {
    if (a == 0) throw Error(ErrorKind::Domain, "inverse of zero");
    return 1 / a;
  }
  static std::optional<mpq_class> try_divexact(const mpq_class& a, const mpq_class& b) {
    if (b == 0) return std::nullopt;
    return mpq_class(a / b);
  }
  static mpq_class unit(const mpq_class& a) { return a; }
  static bool is_negative(const mpq_class& a) { return a < 0; }
  static bool is_atomic(const mpq_class&) { return true; }
  static std::string str(const mpq_class& a) { return a.get_str(); }
};

struct ModCtx {
  std::shared_ptr<const mpz_class> p;
  friend bool operator==(const ModCtx& a, const ModCtx& b) {
    return a.p == b.p || (a.p && b.p && *a.p == *b.p);
  }
};

template <>
struct CoeffOps<ModP> {
  using Ctx = ModCtx;
  static constexpr bool is_field = true;
  static constexpr bool has_gcd = false;
  static Ctx ctx_of(const ModP& a) { return {a.modulus_ptr()}; }
  static ModP zero(const Ctx& c) { return ModP(0, c.p); }
  static ModP one(const Ctx& c) { return ModP(1, c.p); }
  static ModP from_int(const Ctx& c, const mpz_class& v) { return ModP(v, c.p); }
  static bool is_zero(const ModP& a) { return a.value() == 0; }
  static bool is_one(const ModP& a) { return a.value() == 1; }
  static ModP inv(const ModP& a) { return a.inverse(); }
  static std::optional<ModP> try_divexact(const ModP& a, const ModP& b) {
    if (b.value() == 0) return std::nullopt;
    return a * b.inverse();
  }
  static ModP unit(const ModP& a) { return a; }
  static bool is_negative(const ModP&) { return false; }
  static bool is_atomic(const ModP&) { return true; }
  static std::string str(const ModP& a) { return a.value().get_str(); }
};

inline ModCtx make_mod_ctx(const mpz_class& p) { return {std::make_shared<const mpz_class>(p)}; }

}  // namespace trichow

#endif  // TRICHOW_COEFF_HPP
