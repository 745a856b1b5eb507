#include "trichow/chow.hpp"

#include <functional>
#include <optional>
#include <sstream>

namespace trichow {

VarSet chow_vars(std::size_t n) { return VarSet::numbered("U", n + 1, 0); }

namespace {

// Flattens a polynomial over Q(Y) in U with a common denominator into Z[Y, U].
std::pair<MPoly<mpz_class>, MPoly<mpz_class>> flatten_ratfunc(const MPoly<QY>& f, const VarSet& all) {
  auto [p, den] = clear_ratfunc(f);
  return {flatten(p, all), den};
}

// Determinant by expansion along the first column, with minors memoized by
// their row set; `reduce` is applied to every product. No divisions, so it
// works over a quotient ring with zero divisors.
template <class R, class Reduce>
MPoly<R> det_expand(const std::vector<std::vector<MPoly<R>>>& a, const Reduce& reduce) {
  const std::size_t d = a.size();
  if (d >= 24) throw Error(ErrorKind::Domain, "determinant too large for expansion by minors");
  // minors[mask]: rows in mask against the last popcount(mask) columns.
  std::vector<std::optional<MPoly<R>>> minors(std::size_t{1} << d);
  std::function<const MPoly<R>&(unsigned)> minor = [&](unsigned mask) -> const MPoly<R>& {
    auto& slot = minors[mask];
    if (slot) return *slot;
    const std::size_t col = d - static_cast<std::size_t>(__builtin_popcount(mask));
    MPoly<R> acc = a[0][0].zero_like();
    std::size_t sign = 0;
    for (std::size_t r = 0; r < d; ++r) {
      if (!(mask >> r & 1U)) continue;
      if (!a[r][col].is_zero()) {
        const unsigned rest = mask & ~(1U << r);
        MPoly<R> term = rest ? reduce(a[r][col] * minor(rest)) : a[r][col];
        acc = sign % 2 == 0 ? acc + term : acc - term;
      }
      ++sign;
    }
    slot = std::move(acc);
    return *slot;
  };
  return minor((1U << d) - 1);
}

// Determinant over Q(Y)[W] with rows scaled into Z[Y, W] first, so the
// expansion runs without rational function arithmetic.
MPoly<QY> det_cleared(const std::vector<std::vector<MPoly<QY>>>& a) {
  const VarSet& w = a[0][0].vars();
  const VarSet& ys = a[0][0].ctx().vars;
  const VarSet flat = ys.concat(w);
  const std::size_t d = a.size();
  MPoly<mpz_class> scale = MPoly<mpz_class>::from_int(ys, NoCtx{}, 1);
  std::vector<std::vector<MPoly<mpz_class>>> z(d);
  for (std::size_t r = 0; r < d; ++r) {
    std::vector<std::pair<YXPoly<mpz_class>, MPoly<mpz_class>>> row;
    MPoly<mpz_class> l = MPoly<mpz_class>::from_int(ys, NoCtx{}, 1);
    for (std::size_t c = 0; c < d; ++c) {
      row.push_back(clear_ratfunc(a[r][c]));
      l = poly_lcm(l, row.back().second);
    }
    scale = scale * l;
    for (auto& [p, den] : row) z[r].push_back(flatten(p, flat) * divide_or_throw(l, den).remap(flat));
  }
  auto det = det_expand<mpz_class>(z, [](MPoly<mpz_class> f) { return f; });
  return to_ratfunc_poly(nest(det, w, ys), scale);
}

}  // namespace

ChowForm0 monic_chow(const TriangularSet<QY>& t) {
  if (t.size() == 0 || t.size() != t.vars().size())
    throw Error(ErrorKind::Structural, "Chow form needs a triangular set with one polynomial per variable");
  auto scaled = iterated_resultants(t);
  for (std::size_t i = 0; i < scaled.resultants.size(); ++i)
    if (scaled.resultants[i].is_zero())
      throw Error(ErrorKind::NonRadical, "iterated resultant e" + std::to_string(i + 1) + " vanishes");

  // The norm of U0 + sum Ui Xi from K[X]/(T) down to K, taken one level at a
  // time: at level l it is the determinant of multiplication on the basis
  // 1, Xl, ..., Xl^(dl-1) over K[X1..X(l-1)]/(T1..T(l-1)).
  const std::size_t n = t.size();
  const VarSet us = chow_vars(n);
  const VarSet all = t.vars().concat(us);
  std::vector<MPoly<QY>> polys;
  for (const auto& p : t.polys()) polys.push_back(p.remap(all));
  const TriangularSet<QY> tt(std::move(polys));

  MPoly<QY> f = tt[0].var_like(n);
  for (std::size_t i = 0; i < n; ++i) f = f + tt[0].var_like(n + 1 + i) * tt[0].var_like(i);
  for (std::size_t l = n; l-- > 0;) {
    const auto lower = tt.prefix(l);
    const std::size_t d = tt.degrees()[l];
    std::vector<std::vector<MPoly<QY>>> m(d, std::vector<MPoly<QY>>(d, f.zero_like()));
    MPoly<QY> col = normal_form(f, tt.prefix(l + 1));
    for (std::size_t j = 0; j < d; ++j) {
      auto c = col.coeffs_in(l);
      for (std::size_t k = 0; k < d && k < c.size(); ++k) m[k][j] = c[k];
      if (j + 1 < d) col = normal_form(col * tt[0].var_like(l), tt.prefix(l + 1));
    }
    f = l == 0 ? det_cleared(m) : det_expand<QY>(m, [&](const MPoly<QY>& g) { return normal_form(g, lower); });
  }

  ChowForm0 out;
  out.flavor = ChowFlavor::Monic;
  out.degree = t.dimension();
  out.uvars = us;
  out.monic = f.remap(us);
  Monomial top(n + 1);
  top[0] = static_cast<Monomial::Exp>(out.degree);
  if (!out.monic.coeff(top).is_one()) throw Error(ErrorKind::Structural, "Chow form is not monic in U0");
  return out;
}

ChowForm0 primitive_chow(const ChowForm0& monic) {
  if (monic.flavor != ChowFlavor::Monic) throw Error(ErrorKind::Structural, "primitive_chow expects a monic form");
  const VarSet ys = monic.monic.ctx().vars;
  const VarSet all = ys.concat(monic.uvars);
  auto [flat, den] = flatten_ratfunc(monic.monic, all);
  std::vector<std::size_t> uidx;
  for (std::size_t i = 0; i < monic.uvars.size(); ++i) uidx.push_back(ys.size() + i);
  MPoly<mpz_class> prim = content_primpart_in(flat, uidx).second;
  Monomial top(monic.uvars.size());
  top[0] = static_cast<Monomial::Exp>(monic.degree);
  MPoly<mpz_class> a = nest(prim, monic.uvars, ys).coeff(top);
  if (a.lc() < 0) {
    prim = -prim;
    a = -a;
  }
  ChowForm0 out;
  out.flavor = ChowFlavor::Primitive;
  out.degree = monic.degree;
  out.uvars = monic.uvars;
  out.primitive = std::move(prim);
  out.leading = std::move(a);
  return out;
}

MPoly<QY> chow_root_residual(const ChowForm0& monic, const TriangularSet<QY>& t) {
  const VarSet& xs = t.vars();
  const std::size_t n = xs.size();
  const VarSet xu = xs.concat(VarSet::numbered("U", n, 1));
  const auto& ctx = t[0].ctx();
  std::vector<MPoly<QY>> images;
  MPoly<QY> lin = MPoly<QY>::from_terms(xu, ctx, {});
  for (std::size_t i = 0; i < n; ++i)
    lin = lin + MPoly<QY>::variable(xu, ctx, i) * MPoly<QY>::variable(xu, ctx, n + i);
  images.push_back(-lin);
  for (std::size_t i = 0; i < n; ++i) images.push_back(MPoly<QY>::variable(xu, ctx, n + i));
  return normal_form(monic.monic.substitute(images), t);
}

unsigned long denominator_exponent(const std::vector<Monomial::Exp>& degrees) {
  unsigned long g = 1;
  for (std::size_t i = 0; i + 1 < degrees.size(); ++i) g += 2ul * (degrees[i] - 1);
  return g;
}

namespace {

// Multiplies every coefficient by s and reports integrality and Y-degree.
void integral_multiple(const MPoly<QY>& f, const QY& s, bool& integral, long& degree, std::string& witness) {
  integral = true;
  degree = 0;
  for (const auto& [m, c] : f.terms()) {
    QY v = c * s;
    if (!v.den().is_one()) {
      if (integral && witness.empty()) witness = v.str();
      integral = false;
    }
    degree = std::max(degree, v.num().total_degree());
  }
}

}  // namespace

DenominatorReport denominator_check(const TriangularSet<QY>& t, const MPoly<mpz_class>& a_n,
                                    unsigned long degree_bound) {
  DenominatorReport rep;
  rep.g = denominator_exponent(t.degrees());
  rep.degree_bound = degree_bound;
  const VarSet ys = t[0].ctx().vars;
  MPoly<mpz_class> a = a_n.remap(ys);
  MPoly<mpz_class> one = MPoly<mpz_class>::from_int(ys, NoCtx{}, 1);
  auto chain = regular_chain(t);
  integral_multiple(chain.polys.back(), QY(a, one), rep.an_n_integral, rep.an_n_degree, rep.witness);
  auto scaled = iterated_resultants(reduce_tails(t));
  integral_multiple(scaled.polys.back(), QY(a.pow(static_cast<unsigned>(rep.g)), one), rep.scaled_integral,
                    rep.scaled_degree, rep.witness);
  return rep;
}

VarSet multichow_vars(unsigned m, unsigned n) {
  std::vector<std::string> names;
  for (unsigned i = 0; i <= m; ++i)
    for (unsigned j = 0; j <= m + n; ++j) names.push_back("U" + std::to_string(i) + "_" + std::to_string(j));
  return VarSet(std::move(names));
}

MultiChow::MultiChow(unsigned m_, unsigned n_, MPoly<mpz_class> b) : m(m_), n(n_), body(std::move(b)) {
  const VarSet want = multichow_vars(m, n);
  if (!(body.vars() == want)) {
    if (body.vars().size() != want.size())
      throw Error(ErrorKind::Structural, "Chow form over " + std::to_string(body.vars().size()) +
                                             " variables; expected " + std::to_string(want.size()));
    body = body.remap(want);
  }
  const std::size_t arity = m + n + 1;
  long common = -1;
  for (const auto& [mono, c] : body.terms())
    for (unsigned i = 0; i <= m; ++i) {
      long d = 0;
      for (std::size_t j = 0; j < arity; ++j) d += mono[i * arity + j];
      if (common < 0) common = d;
      if (d != common) throw Error(ErrorKind::Structural, "Chow form is not multi-homogeneous of equal degrees");
    }
}

MultiChow parse_multichow(std::string_view text) {
  std::size_t eol = text.find('\n');
  std::string header(text.substr(0, eol));
  std::istringstream hs(header);
  std::string g_kw, a_kw;
  long groups = 0, arity = 0;
  if (!(hs >> g_kw >> groups >> a_kw >> arity) || g_kw != "groups" || a_kw != "arity" || groups < 1 ||
      arity < groups + 1)
    throw ParseError(ErrorKind::Parse, "expected header 'groups <m+1> arity <m+n+1>'", 1, 1);
  const unsigned m = static_cast<unsigned>(groups - 1), n = static_cast<unsigned>(arity - groups);
  std::string body = eol == std::string_view::npos ? std::string() : std::string(text.substr(eol + 1));
  for (char& c : body)
    if (c == '\n' || c == '\r') c = ' ';
  VarSet vars = multichow_vars(m, n);
  auto [p, den] = clear_denominators(parse_poly(body, vars, 2));
  if (den != 1) throw ParseError(ErrorKind::Parse, "Chow form coefficients must be integers", 2, 1);
  return MultiChow(m, n, std::move(p));
}

std::string print_multichow(const MultiChow& c) {
  return "groups " + std::to_string(c.m + 1) + " arity " + std::to_string(c.m + c.n + 1) + "\n" + c.body.str() + "\n";
}

namespace {

// Images of U<i>_<j> for both substitutions; `eps_row` supplies row i >= 1 of
// the X block (zero for the plain substitution).
std::vector<MPoly<mpz_class>> substitution_images(
    const MultiChow& c, const VarSet& out,
    const std::function<MPoly<mpz_class>(unsigned, unsigned)>& eps_row) {
  const unsigned m = c.m, n = c.n;
  auto var = [&](const std::string& name) { return MPoly<mpz_class>::variable(out, NoCtx{}, name); };
  auto cst = [&](long v) { return MPoly<mpz_class>::from_int(out, NoCtx{}, v); };
  std::vector<MPoly<mpz_class>> images;
  for (unsigned i = 0; i <= m; ++i)
    for (unsigned j = 0; j <= m + n; ++j) {
      if (j == 0)
        images.push_back(i == 0 ? var("U0") : var("Y" + std::to_string(i)));
      else if (j <= m)
        images.push_back(cst(i != 0 && i == j ? -1 : 0));
      else
        images.push_back(i == 0 ? var("U" + std::to_string(j - m)) : eps_row(i, j));
    }
  return images;
}

}  // namespace

MPoly<mpz_class> substitute_kps(const MultiChow& c) {
  const VarSet out = VarSet::numbered("Y", c.m).concat(chow_vars(c.n));
  auto images = substitution_images(c, out, [&](unsigned, unsigned) { return MPoly<mpz_class>::from_int(out, NoCtx{}, 0); });
  return c.body.substitute(images);
}

bool is_degenerate_chow(const MPoly<mpz_class>& f, std::size_t n) {
  if (f.is_zero()) return true;
  auto u0 = f.vars().require("U0");
  std::vector<std::size_t> uidx{u0};
  for (std::size_t k = 1; k <= n; ++k) uidx.push_back(f.vars().require("U" + std::to_string(k)));
  long udeg = 0;
  for (const auto& [m, c] : f.terms()) {
    long d = 0;
    for (auto i : uidx) d += m[i];
    udeg = std::max(udeg, d);
  }
  return static_cast<long>(f.degree(u0)) < udeg;
}

EpsilonSubstitution substitute_epsilon(const MultiChow& c) {
  std::vector<std::string> names = VarSet::numbered("Y", c.m).concat(chow_vars(c.n)).names();
  for (unsigned i = 1; i <= c.m; ++i)
    for (unsigned k = 1; k <= c.n; ++k) names.push_back("U" + std::to_string(i) + "_" + std::to_string(c.m + k));
  const VarSet base(names);
  names.push_back("eps");
  const VarSet out(names);
  const std::size_t eps = out.size() - 1;
  auto images = substitution_images(c, out, [&](unsigned i, unsigned j) {
    return MPoly<mpz_class>::variable(out, NoCtx{}, eps) *
           MPoly<mpz_class>::variable(out, NoCtx{}, "U" + std::to_string(i) + "_" + std::to_string(j));
  });
  EpsilonSubstitution res;
  res.c_eps = c.body.substitute(images);
  if (c.body.is_zero()) {
    res.c0 = MPoly<mpz_class>::from_int(base, NoCtx{}, 0);
    return res;
  }
  if (res.c_eps.is_zero())
    throw Error(ErrorKind::ContradictsTheorem, "epsilon substitution of a nonzero Chow form vanished");
  auto coeffs = res.c_eps.coeffs_in(eps);
  std::size_t k = 0;
  while (coeffs[k].is_zero()) ++k;
  res.valuation = static_cast<unsigned>(k);
  res.c0 = coeffs[k].remap(base);
  return res;
}

bool chow_divides(const ChowForm0& primitive, const MPoly<mpz_class>& f) {
  if (primitive.flavor != ChowFlavor::Primitive) throw Error(ErrorKind::Structural, "expected a primitive Chow form");
  if (f.is_zero()) return true;
  return divide_exact(f, primitive.primitive.remap(f.vars())).has_value();
}

}  // namespace trichow
