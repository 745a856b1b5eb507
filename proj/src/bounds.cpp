#include "trichow/bounds.hpp"

#include <algorithm>
#include <optional>

#include "trichow/valuation.hpp"

namespace trichow {

UpReal::UpReal() {
  mpfr_init2(v_, kPrecision);
  mpfr_set_zero(v_, 1);
}
UpReal::UpReal(long v) {
  mpfr_init2(v_, kPrecision);
  mpfr_set_si(v_, v, MPFR_RNDU);
}
UpReal::UpReal(const mpz_class& v) {
  mpfr_init2(v_, kPrecision);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDU);
}
UpReal::UpReal(const mpq_class& v) {
  mpfr_init2(v_, kPrecision);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDU);
}
UpReal::UpReal(const UpReal& o) {
  mpfr_init2(v_, kPrecision);
  mpfr_set(v_, o.v_, MPFR_RNDU);
}
UpReal::UpReal(UpReal&& o) noexcept {
  mpfr_init2(v_, kPrecision);
  mpfr_swap(v_, o.v_);
}
UpReal& UpReal::operator=(const UpReal& o) {
  if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDU);
  return *this;
}
UpReal& UpReal::operator=(UpReal&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
UpReal::~UpReal() { mpfr_clear(v_); }

UpReal operator+(const UpReal& a, const UpReal& b) {
  UpReal r;
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDU);
  return r;
}
UpReal operator*(const UpReal& a, const UpReal& b) {
  UpReal r;
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDU);
  return r;
}
UpReal log(const UpReal& a) {
  if (mpfr_sgn(a.v_) <= 0) throw Error(ErrorKind::Domain, "logarithm of a nonpositive number");
  UpReal r;
  mpfr_log(r.v_, a.v_, MPFR_RNDU);
  return r;
}
UpReal UpReal::to_bits() const {
  mpfr_t ln2;
  mpfr_init2(ln2, kPrecision);
  mpfr_const_log2(ln2, MPFR_RNDD);
  UpReal r;
  mpfr_div(r.v_, v_, ln2, MPFR_RNDU);
  mpfr_clear(ln2);
  return r;
}
mpz_class UpReal::ceil() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDU);
  return z;
}
mpz_class UpReal::floor() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
  return z;
}
std::string UpReal::str(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RUe", digits - 1, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

namespace {

UpReal ln(const mpz_class& x) { return log(UpReal(x)); }
UpReal ln(long x) { return log(UpReal(x)); }

mpz_class pow(unsigned long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace

Constants constants(const std::vector<unsigned long>& d, unsigned long d_v) {
  Constants c;
  const long n = static_cast<long>(d.size());
  mpz_class sum = 0, sq = 0, prod = 1;
  c.g = 1;
  for (long i = 0; i < n; ++i) {
    if (d[i] == 0) throw Error(ErrorKind::Domain, "degrees must be positive");
    sum += d[i];
    prod *= d[i];
    if (i + 1 < n) {
      c.g += 2 * (d[i] - 1);
      sq += mpz_class(d[i]) * (d[i] - 1);
    }
  }
  c.h = UpReal(5) * ln(n + 3) * UpReal(sum);
  c.i = c.h + UpReal(3) * ln(2) * UpReal(sq);
  c.majorants_apply = prod <= d_v;
  c.g_major = 2 * d_v;
  c.h_major = UpReal(5) * ln(n + 3) * UpReal(mpz_class(mpz_class(d_v) + n));
  c.i_major = UpReal(mpz_class(3 * mpz_class(d_v) * d_v)) + c.h_major;
  return c;
}

UpReal theorem1_N_bound(unsigned m, unsigned l, const mpz_class& d_v, const mpq_class& h_v) {
  mpz_class a = (4 * m + 2) * d_v + 4 * m;
  mpz_class b = (10 * m + 16) * d_v + 5 * l + 2 * m;
  return UpReal(mpq_class(2 * h_v)) + UpReal(a) * ln(d_v + 1) + UpReal(b) * ln(long(m + l + 3));
}

UpReal theorem1_T_bound(unsigned m, unsigned l, const mpz_class& d_v, const mpq_class& h_v) {
  mpz_class d2 = d_v * d_v;
  mpz_class a = 4 * ((2 * m + 1) * d2 + m * (d_v + 1));
  mpz_class b = (20 * m + 22) * d2 + 5 * (d_v + l + m);
  return UpReal(mpq_class(4 * d_v * h_v)) + UpReal(mpz_class(3 * d2)) + UpReal(a) * ln(d_v + 1) +
         UpReal(b) * ln(long(m + l + 3));
}

BezoutBound bezout_substitution(unsigned m, unsigned n, unsigned long d, const mpq_class& h) {
  if (d == 0) throw Error(ErrorKind::Domain, "degree bound must be positive");
  BezoutBound b;
  b.degree = pow(d, n);
  b.height = UpReal(b.degree) * (UpReal(mpq_class(n * h)) + UpReal(long(4 * m + 2 * n + 3)) * ln(long(m + n + 1)));
  return b;
}

UpReal chow_height_bound(unsigned m, unsigned n, const mpz_class& d_v, const mpq_class& h_v) {
  return UpReal(h_v) + UpReal(mpz_class(5 * (m + 1) * d_v)) * ln(long(m + n + 2));
}

SpecializationBounds specialization_bounds(unsigned m, unsigned n, unsigned long d_v, const mpq_class& h_v,
                                           unsigned long M, const std::vector<unsigned long>& d) {
  if (M == 0) throw Error(ErrorKind::Domain, "M must be at least 1");
  if (d.size() != n) throw Error(ErrorKind::Structural, "expected one degree per unknown");
  Constants c = constants(d, d_v);
  mpz_class dv = d_v;
  UpReal core = UpReal(mpq_class(2 * h_v)) + UpReal(mpz_class((6 * m + 5) * dv)) * ln(long(m + n + 2)) +
                UpReal(mpz_class((m + 1) * dv)) * ln(mpz_class(M)) + UpReal(long(m)) * ln(dv + 1);
  return {core + c.h, UpReal(long(c.g)) * core + c.i};
}

GridSizes grid_sizes(unsigned n, unsigned long d_v, unsigned long g) {
  GridSizes s;
  mpz_class dv = d_v;
  s.l1 = dv + 1;
  s.l2 = mpz_class(g) * dv + 1;
  mpz_class base = (3 * n * dv + n * n) * dv;
  s.m1 = base + s.l1;
  s.m2 = base + s.l2;
  return s;
}

PrimeBound modular_prime_bound(unsigned m, unsigned n, unsigned long d, const mpq_class& h) {
  if (n == 0 || d == 0) throw Error(ErrorKind::Domain, "n and d must be positive");
  PrimeBound p;
  const mpz_class nd = mpz_class(n) * d;
  const mpz_class dn = pow(d, n);
  const mpz_class ndn1 = n * pow(d, n + 1);
  const long mn1 = m + n + 1, mn2 = m + n + 2;

  p.h1 = UpReal(long(n)) * (UpReal(h) + ln(nd) + UpReal(mpz_class(d)) * ln(long(n + 1)));
  p.d1 = nd;
  p.d2 = ndn1 + 1;
  p.h2 = UpReal(ndn1) * (UpReal(mpq_class(2 * n * h)) + UpReal(long(4 * m + 2 * n + 2)) * ln(mn1) +
                         UpReal(long(n)) * ln(nd) + UpReal(nd) * ln(long(n + 1)) + UpReal(2));
  p.nu = UpReal(long(2 * mn2)) * ln(p.d2 + 1);
  const UpReal ln_n2 = ln(long(n + 2));
  p.ell2 = p.h2 + p.nu + ln_n2;
  p.ell1 = p.h1 + UpReal(2) * p.nu + ln(2) + ln_n2;
  p.ell = UpReal(h) + UpReal(3) * p.nu + ln(6) + ln_n2;
  p.delta = dn * p.d1 * p.d2;
  p.eta = UpReal(dn) * (UpReal(mpz_class(p.d2 * p.d1)) *
                            (UpReal(long(n + 2)) * p.ell + UpReal(long(m + 2 * n + 3)) * ln(mn2)) +
                        p.ell1 * UpReal(p.d2) + p.ell2 * UpReal(p.d1));
  const mpz_class sq = mpz_class(mn2) * mn2;
  p.h_a2 = UpReal(mpz_class(sq * p.d2)) *
           (UpReal(2) * p.eta + (p.h2 + ln_n2) * UpReal(p.delta) +
            UpReal(mpz_class(21 * sq * p.d2 * p.delta)) * ln(p.d2 + 1));
  p.h_a1 = p.h2;

  BezoutBound bz = bezout_substitution(m, n, d, h);
  // h_V is only known through the Bezout bound; use its rounded-up value as
  // an exact rational.
  mpq_class hv;
  mpfr_get_q(hv.get_mpq_t(), bz.height.raw());
  const mpz_class d2n = dn * dn;
  const UpReal tail = UpReal(long(m)) * ln(2 * d2n + 1);
  for (unsigned l = 1; l <= n; ++l) {
    UpReal t = theorem1_T_bound(m, l, bz.degree, hv);
    p.h_a0 += t;
    p.h_a3 += UpReal(mpz_class(2 * d2n * m)) * (t + tail) + UpReal(2) * t;
  }
  p.h_a = p.h_a0 + p.h_a1 + p.h_a2 + p.h_a3;
  p.lo = (UpReal(6) * p.h_a).ceil();
  p.hi = (UpReal(12) * p.h_a).floor();
  return p;
}

ObservedSize observed_size(const MPoly<QY>& f) {
  ObservedSize s;
  std::optional<MPoly<mpz_class>> lcm;
  for (const auto& [mono, c] : f.terms()) {
    s.height = std::max({s.height, height(c.num()), height(c.den())});
    s.degree = std::max({s.degree, c.num().total_degree(), c.den().total_degree()});
    if (!lcm) {
      lcm = c.den();
    } else {
      auto g = poly_gcd(*lcm, c.den());
      lcm = divide_or_throw(MPoly<mpz_class>(*lcm * c.den()), g);
    }
  }
  if (lcm) {
    s.height = std::max(s.height, height(*lcm));
    s.degree = std::max(s.degree, lcm->total_degree());
  }
  return s;
}

namespace {

using nlohmann::json;

json height_entry(const UpReal& v, json inputs, const std::string& ref) {
  return {{"value_ln", v.upper()}, {"value_bits", v.to_bits().upper()}, {"inputs", std::move(inputs)},
          {"formula_ref", ref}};
}

json count_entry(const mpz_class& v, json inputs, const std::string& ref) {
  json e;
  if (v > 0) {
    UpReal l = ln(v);
    e = height_entry(l, std::move(inputs), ref);
  } else {
    e = {{"value_ln", nullptr}, {"value_bits", 0.0}, {"inputs", std::move(inputs)}, {"formula_ref", ref}};
  }
  e["exact"] = v.get_str();
  return e;
}

}  // namespace

nlohmann::json bound_report(unsigned m, unsigned n, unsigned long d, const mpq_class& h, unsigned level) {
  if (level == 0) level = n;
  if (level > n) throw Error(ErrorKind::Domain, "level exceeds n");
  json base = {{"m", m}, {"n", n}, {"d", d}, {"h", h.get_str()}};
  json out;

  BezoutBound bz = bezout_substitution(m, n, d, h);
  mpq_class hv;
  mpfr_get_q(hv.get_mpq_t(), bz.height.raw());
  out["bezout_degree"] = count_entry(bz.degree, base, "d^n");
  out["bezout_height"] = height_entry(bz.height, base, "d^n (n h + (4m+2n+3) ln(m+n+1))");

  json lv = base;
  lv["l"] = level;
  lv["d_V"] = bz.degree.get_str();
  lv["h_V"] = bz.height.str(20);
  out["theorem1_N"] = height_entry(theorem1_N_bound(m, level, bz.degree, hv), lv,
                                   "2h_V + ((4m+2)d_V+4m) ln(d_V+1) + ((10m+16)d_V+5l+2m) ln(m+l+3)");
  out["theorem1_T"] = height_entry(theorem1_T_bound(m, level, bz.degree, hv), lv,
                                   "4d_V h_V + 3d_V^2 + 4((2m+1)d_V^2+m(d_V+1)) ln(d_V+1) + "
                                   "((20m+22)d_V^2+5(d_V+l+m)) ln(m+l+3)");
  json sub = base;
  sub["d_V"] = bz.degree.get_str();
  sub["h_V"] = bz.height.str(20);
  out["chow_height"] = height_entry(chow_height_bound(m, n, bz.degree, hv), sub, "h_V + 5(m+1) d_V ln(m+n+2)");

  if (bz.degree.fits_ulong_p()) {
    unsigned long dv = bz.degree.get_ui();
    Constants c = constants(std::vector<unsigned long>(n, 1), dv);
    out["G_n_major"] = count_entry(c.g_major, sub, "2 d_V");
    out["H_n_major"] = height_entry(c.h_major, sub, "5 ln(n+3) (d_V + n)");
    out["I_n_major"] = height_entry(c.i_major, sub, "3 d_V^2 + 5 ln(n+3) (d_V + n)");
    GridSizes g = grid_sizes(n, dv, c.g_major);
    out["grid_L1"] = count_entry(g.l1, sub, "d_V + 1");
    out["grid_L2"] = count_entry(g.l2, sub, "G d_V + 1 with G = 2 d_V");
    out["grid_M1"] = count_entry(g.m1, sub, "(3n d_V + n^2) d_V + L1");
    out["grid_M2"] = count_entry(g.m2, sub, "(3n d_V + n^2) d_V + L2");
  }

  PrimeBound p = modular_prime_bound(m, n, d, h);
  out["prime_h1"] = height_entry(p.h1, base, "n (h + ln(nd) + d ln(n+1))");
  out["prime_d1"] = count_entry(p.d1, base, "n d");
  out["prime_d2"] = count_entry(p.d2, base, "n d^(n+1) + 1");
  out["prime_h2"] = height_entry(p.h2, base, "n d^(n+1) (2nh + (4m+2n+2) ln(m+n+1) + n ln(nd) + nd ln(n+1) + 2)");
  out["prime_nu"] = height_entry(p.nu, base, "2(m+n+2) ln(d''+1)");
  out["prime_ell"] = height_entry(p.ell, base, "h + 3 nu + ln 6 + ln(n+2)");
  out["prime_ell1"] = height_entry(p.ell1, base, "h' + 2 nu + ln 2 + ln(n+2)");
  out["prime_ell2"] = height_entry(p.ell2, base, "h'' + nu + ln(n+2)");
  out["prime_delta"] = count_entry(p.delta, base, "d^n d' d''");
  out["prime_eta"] = height_entry(p.eta, base, "d^n (d'' d' ((n+2) ell + (m+2n+3) ln(m+n+2)) + ell' d'' + ell'' d')");
  out["height_A0"] = height_entry(p.h_a0, base, "sum over l of the T_l height bound at the Bezout (d_V, h_V)");
  out["height_A1"] = height_entry(p.h_a1, base, "h''");
  out["height_A2"] = height_entry(p.h_a2, base,
                                  "(m+n+2)^2 d'' (2 eta + (h'' + ln(n+2)) delta + 21 (m+n+2)^2 d'' delta ln(d''+1))");
  out["height_A3"] = height_entry(p.h_a3, base,
                                  "sum over l of 2 d^(2n) m (H'_l + m ln(2 d^(2n) + 1)) + 2 H'_l");
  out["H_A"] = height_entry(p.h_a, base, "h(A0) + h(A1) + h(A2) + h(A3)");
  out["prime_range_lo"] = count_entry(p.lo, base, "ceil(6 H_A)");
  out["prime_range_hi"] = count_entry(p.hi, base, "floor(12 H_A)");
  return out;
}

}  // namespace trichow
