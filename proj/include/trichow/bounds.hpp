#ifndef TRICHOW_BOUNDS_HPP
#define TRICHOW_BOUNDS_HPP

#include <mpfr.h>

#include <string>
#include <vector>

#include "json.hpp"
#include "trichow/ratfunc.hpp"

namespace trichow {

/// Multiple-precision real where every operation rounds toward +infinity, so
/// that a formula with nonnegative terms is never under-reported.
class UpReal {
 public:
  static constexpr mpfr_prec_t kPrecision = 256;

  UpReal();
  UpReal(long v);  // NOLINT(google-explicit-constructor)
  UpReal(const mpz_class& v);  // NOLINT(google-explicit-constructor)
  UpReal(const mpq_class& v);  // NOLINT(google-explicit-constructor)
  UpReal(const UpReal& o);
  UpReal(UpReal&& o) noexcept;
  UpReal& operator=(const UpReal& o);
  UpReal& operator=(UpReal&& o) noexcept;
  ~UpReal();

  friend UpReal operator+(const UpReal& a, const UpReal& b);
  friend UpReal operator*(const UpReal& a, const UpReal& b);
  UpReal& operator+=(const UpReal& o) { return *this = *this + o; }
  friend bool operator<(const UpReal& a, const UpReal& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator<=(const UpReal& a, const UpReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator==(const UpReal& a, const UpReal& b) { return mpfr_equal_p(a.v_, b.v_); }

  /// Natural logarithm; requires a positive argument.
  friend UpReal log(const UpReal& a);
  /// a / ln 2, the bit-length rendering of a natural-log height.
  UpReal to_bits() const;

  double upper() const { return mpfr_get_d(v_, MPFR_RNDU); }
  mpz_class ceil() const;
  mpz_class floor() const;
  /// Decimal rendering with `digits` significant digits, rounded up.
  std::string str(int digits = 40) const;
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

struct Constants {
  unsigned long g = 0;  // G_n = 1 + 2 sum_{i<n} (d_i - 1)
  UpReal h;             // H_n = 5 ln(n+3) sum_i d_i
  UpReal i;             // I_n = H_n + 3 ln 2 sum_{i<n} d_i (d_i - 1)
  // Simplified majorants, valid when prod d_i <= d_V.
  bool majorants_apply = false;
  unsigned long g_major = 0;  // 2 d_V
  UpReal h_major;             // 5 ln(n+3) (d_V + n)
  UpReal i_major;             // 3 d_V^2 + 5 ln(n+3) (d_V + n)
};

Constants constants(const std::vector<unsigned long>& d, unsigned long d_v);

/// Height bound for the numerators and denominators of the coefficients of
/// N_l, in terms of the degree and height of the projection V_l.
UpReal theorem1_N_bound(unsigned m, unsigned l, const mpz_class& d_v, const mpq_class& h_v);

/// Same for T_l.
UpReal theorem1_T_bound(unsigned m, unsigned l, const mpz_class& d_v, const mpq_class& h_v);

struct BezoutBound {
  mpz_class degree;  // d^n
  UpReal height;     // d^n (n h + (4m + 2n + 3) ln(m+n+1))
};

/// Degree and height of V for n equations of degree <= d and height <= h.
BezoutBound bezout_substitution(unsigned m, unsigned n, unsigned long d, const mpq_class& h);

/// h_V + 5(m+1) d_V ln(m+n+2): bound on the height of the primitive Chow form.
UpReal chow_height_bound(unsigned m, unsigned n, const mpz_class& d_v, const mpq_class& h_v);

struct SpecializationBounds {
  UpReal n_bound;  // height of a_{n,y} N_{n,y}
  UpReal t_bound;  // height of a_{n,y}^{G_n} T~_{n,y}
};

/// Bounds at an integer point y with |y_i| <= M, M >= 1.
SpecializationBounds specialization_bounds(unsigned m, unsigned n, unsigned long d_v, const mpq_class& h_v,
                                           unsigned long M, const std::vector<unsigned long>& d);

struct GridSizes {
  mpz_class l1, l2, m1, m2;  // L1 = d_V + 1, L2 = G d_V + 1, M_i = (3n d_V + n^2) d_V + L_i
};

GridSizes grid_sizes(unsigned n, unsigned long d_v, unsigned long g);

/// Every quantity entering the height H_A of the integer A whose nonvanishing
/// mod p guarantees good reduction, for n equations of degree <= d and height <= h.
struct PrimeBound {
  UpReal h1;           // h', height of the Jacobian determinant
  mpz_class d1, d2;    // d' = n d, d'' = n d^{n+1} + 1
  UpReal h2;           // h'', height of the polynomial H
  UpReal nu;           // 2(m+n+2) ln(d''+1)
  UpReal ell, ell1, ell2;  // heights of the partially triangulated combinations
  mpz_class delta;     // d^n d' d''
  UpReal eta;
  UpReal h_a0, h_a1, h_a2, h_a3;
  UpReal h_a;          // sum of the four
  mpz_class lo, hi;    // ceil(6 H_A), floor(12 H_A)
};

PrimeBound modular_prime_bound(unsigned m, unsigned n, unsigned long d, const mpq_class& h);

/// Observed sizes of the coefficients num/den of a polynomial over Q(Y):
/// max height and degree over all numerators and denominators and their lcm.
struct ObservedSize {
  double height = 0;
  long degree = 0;
};

ObservedSize observed_size(const MPoly<QY>& f);

/// JSON report keyed by formula identifier; every entry has value_ln,
/// value_bits, inputs and formula_ref, and integer quantities carry "exact".
/// `level` selects l for the N_l and T_l bounds (0 means n).
nlohmann::json bound_report(unsigned m, unsigned n, unsigned long d, const mpq_class& h, unsigned level = 0);

}  // namespace trichow

#endif  // TRICHOW_BOUNDS_HPP
