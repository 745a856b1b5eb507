#ifndef TRICHOW_MONOMIAL_HPP
#define TRICHOW_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "trichow/errors.hpp"

namespace trichow {

/// Ordered list of variable names shared between polynomials.
///
/// Two VarSets are equal when their name lists are equal; the shared pointer
/// only makes the common case (same list object) cheap.
class VarSet {
 public:
  VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit VarSet(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = std::find(names_->begin(), names_->end(), name);
    if (it == names_->end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_->begin());
  }

  std::size_t require(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw Error(ErrorKind::Structural, "unknown variable " + std::string(name));
    return *i;
  }

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

  /// Names `prefix1 .. prefixN`.
  static VarSet numbered(std::string_view prefix, std::size_t count, std::size_t first = 1) {
    std::vector<std::string> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i) v.push_back(std::string(prefix) + std::to_string(first + i));
    return VarSet(std::move(v));
  }

  VarSet concat(const VarSet& other) const {
    std::vector<std::string> v = names();
    v.insert(v.end(), other.names().begin(), other.names().end());
    return VarSet(std::move(v));
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Exponent vector. Comparison is graded-lex where later variables weigh more,
/// so for (Y1..Ym, X1..Xn) the order refines Y < X1 < ... < Xn.
class Monomial {
 public:
  using Exp = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}

  std::size_t size() const { return e_.size(); }
  Exp operator[](std::size_t i) const { return e_[i]; }
  Exp& operator[](std::size_t i) { return e_[i]; }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (Exp x : e_) d += x;
    return d;
  }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](Exp x) { return x == 0; });
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= divisor.e_[i];
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

  /// Pure lex with the last variable most significant.
  static std::strong_ordering lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = a.e_.size(); i-- > 0;) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
    }
    return std::strong_ordering::equal;
  }
  static std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    return lex(a, b);
  }

 private:
  boost::container::small_vector<Exp, 8> e_;
};

}  // namespace trichow

#endif  // TRICHOW_MONOMIAL_HPP
