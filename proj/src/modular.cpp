#include "trichow/modular.hpp"

#include <cmath>
#include <functional>

namespace trichow {

namespace {

ModP reduce_q(const mpq_class& c, const ModCtx& ctx) {
  const mpz_class& p = *ctx.p;
  if (mpz_divisible_p(c.get_den_mpz_t(), p.get_mpz_t()))
    throw Error(ErrorKind::DenominatorVanishesModP, "p = " + p.get_str() + " divides the denominator of " + c.get_str());
  return ModP(c.get_num(), ctx.p) * ModP(c.get_den(), ctx.p).inverse();
}

MPoly<ModP> reduce_z(const MPoly<mpz_class>& f, const ModCtx& ctx) {
  return f.map_coeffs<ModP>(ctx, [&](const mpz_class& c) { return ModP(c, ctx.p); });
}

std::vector<std::size_t> x_indices(const SystemInput& sys) {
  std::vector<std::size_t> idx;
  for (unsigned i = 0; i < sys.n; ++i) idx.push_back(sys.m + i);
  return idx;
}

void require_prime(const mpz_class& p) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(p);
  if (!is_probable_prime(p, rng)) throw Error(ErrorKind::NotPrime, p.get_str() + " is not prime");
}

MPoly<QY> as_ratfunc(const MPoly<mpq_class>& g, const SystemInput& sys) {
  auto [z, den] = clear_denominators(g);
  auto nested = nest(z, sys.xvars(), sys.yvars());
  return to_ratfunc_poly(nested, MPoly<mpz_class>::constant(sys.yvars(), NoCtx{}, den));
}

// Determinant by cofactor expansion along the first row, every product taken
// modulo t so that the entries stay reduced.
MPoly<QY> det_modulo(const std::vector<std::vector<MPoly<QY>>>& a, const TriangularSet<QY>& t) {
  const std::size_t n = a.size();
  if (n == 1) return normal_form(a[0][0], t);
  MPoly<QY> acc = a[0][0].zero_like();
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<MPoly<QY>>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MPoly<QY>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    MPoly<QY> term = normal_form(a[0][j] * det_modulo(minor, t), t);
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

MPoly<QY> det_plain(const std::vector<std::vector<MPoly<QY>>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  MPoly<QY> acc = a[0][0].zero_like();
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<MPoly<QY>>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MPoly<QY>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    MPoly<QY> term = a[0][j] * det_plain(minor);
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

std::vector<YXPoly<ModP>> ModularSystem::nested() const {
  VarSet xs = VarSet::numbered("X", n), ys = VarSet::numbered("Y", m);
  std::vector<YXPoly<ModP>> out;
  for (const auto& g : gens) out.push_back(nest(g, xs, ys));
  return out;
}

ModularSystem reduce_mod_p(const SystemInput& sys, const mpz_class& p) {
  require_prime(p);
  ModularSystem out;
  out.p = p;
  out.m = sys.m;
  out.n = sys.n;
  out.vars = sys.vars;
  ModCtx ctx = make_mod_ctx(p);
  auto xs = x_indices(sys);
  for (std::size_t i = 0; i < sys.gens.size(); ++i) {
    const auto& g = sys.gens[i];
    auto r = g.map_coeffs<ModP>(ctx, [&](const mpq_class& c) { return reduce_q(c, ctx); });
    if (r.is_zero())
      throw Error(ErrorKind::BadPrime, "generator " + std::to_string(i + 1) + " vanishes modulo " + p.get_str());
    if (r.total_degree_in(xs) < g.total_degree_in(xs))
      throw Error(ErrorKind::BadPrime, "generator " + std::to_string(i + 1) + " loses X-degree modulo " + p.get_str());
    out.gens.push_back(std::move(r));
  }
  return out;
}

MPoly<FpY> reduce_mod_p(const MPoly<QY>& f, const mpz_class& p) {
  ModCtx ctx = make_mod_ctx(p);
  RatCtx<ModP> rctx{f.ctx().vars, ctx};
  std::vector<MPoly<FpY>::Term> terms;
  for (const auto& [mono, c] : f.terms()) {
    auto den = reduce_z(c.den(), ctx);
    if (den.is_zero())
      throw Error(ErrorKind::DenominatorVanishesModP, "p = " + p.get_str() + " divides the denominator " + c.den().str());
    terms.emplace_back(mono, FpY(reduce_z(c.num(), ctx), den));
  }
  return MPoly<FpY>::from_terms(f.vars(), rctx, std::move(terms));
}

TriangularSet<FpY> reduce_mod_p(const TriangularSet<QY>& t, const mpz_class& p) {
  std::vector<MPoly<FpY>> polys;
  for (const auto& f : t.polys()) polys.push_back(reduce_mod_p(f, p));
  return TriangularSet<FpY>(std::move(polys));
}

ModularRun degree_profile(const SystemInput& sys, const mpz_class& p) {
  ModularRun run;
  run.p = p;
  try {
    auto reduced = reduce_mod_p(sys, p);
    auto t = triangularize_generators<ModP>(reduced.nested());
    run.profile = delta_measure(t);
    run.set = std::move(t);
  } catch (const Error& e) {
    run.failure = e.kind();
    run.reason = e.what();
  }
  return run;
}

std::vector<long> exact_profile(const SystemInput& sys) { return delta_measure(triangularize(sys)); }

bool is_probable_prime(const mpz_class& n, gmp_randclass& rng, int rounds) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  mpz_class d = n - 1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  const mpz_class nm1 = n - 1;
  for (int r = 0; r < rounds; ++r) {
    mpz_class a = rng.get_z_range(n - 3) + 2;  // uniform in [2, n-2]
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool witness = true;
    for (unsigned long i = 1; i < s && witness; ++i) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
      if (x == nm1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

PrimeSampler::PrimeSampler(unsigned long seed) : rng_(gmp_randinit_default) { rng_.seed(seed); }

mpz_class PrimeSampler::next(const mpz_class& lo, const mpz_class& hi) {
  if (lo < 2 || lo > hi)
    throw Error(ErrorKind::RangeTooNarrow, "empty range [" + lo.get_str() + ", " + hi.get_str() + "]");
  // 10 ln(hi), with ln taken from the bit length when hi is huge.
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, hi.get_mpz_t());
  double ln_hi = std::log(mant) + static_cast<double>(exp) * std::log(2.0);
  auto draws = static_cast<long>(std::ceil(10 * ln_hi));
  const mpz_class width = hi - lo + 1;
  for (long i = 0; i < draws; ++i) {
    mpz_class c = lo + rng_.get_z_range(width);
    if (is_probable_prime(c, rng_)) return c;
  }
  throw Error(ErrorKind::RangeTooNarrow, "no prime found in [" + lo.get_str() + ", " + hi.get_str() + "] after " +
                                             std::to_string(draws) + " draws");
}

mpz_class random_prime_in_range(const mpz_class& lo, const mpz_class& hi, unsigned long seed) {
  PrimeSampler s(seed);
  return s.next(lo, hi);
}

JacobianReport jacobian_check(const SystemInput& sys) {
  if (sys.gens.size() != sys.n) throw Error(ErrorKind::Structural, "Jacobian needs as many generators as unknowns");
  auto t = triangularize(sys);
  std::vector<std::vector<MPoly<QY>>> jac(sys.n);
  for (unsigned i = 0; i < sys.n; ++i) {
    auto f = as_ratfunc(sys.gens[i], sys);
    for (unsigned j = 0; j < sys.n; ++j) jac[i].push_back(f.derivative(j));
  }
  JacobianReport r;
  r.jacobian = det_plain(jac).str();
  auto nf = det_modulo(jac, t);
  r.normal_form = nf.str();
  if (nf.is_zero()) {
    r.witness = "1";
    return r;
  }
  try {
    (void)invert_modulo(nf, t);
    r.invertible = true;
  } catch (const ZeroDivisorError& e) {
    r.witness = e.witness();
  }
  return r;
}

std::string bad_reduction_certificate(const TriangularSet<QY>& t, const mpz_class& p) {
  ModCtx ctx = make_mod_ctx(p);
  for (std::size_t l = 0; l < t.size(); ++l) {
    for (const auto& [mono, c] : t[l].terms()) {
      std::string where = "coefficient of " + t[l].monomial_str(mono) + " in T" + std::to_string(l + 1);
      auto num = reduce_z(c.num(), ctx), den = reduce_z(c.den(), ctx);
      if (den.is_zero()) return "denominator " + c.den().str() + " of the " + where + " vanishes modulo p";
      if (num.total_degree() < c.num().total_degree())
        return "numerator " + c.num().str() + " of the " + where + " loses degree modulo p";
      if (den.total_degree() < c.den().total_degree())
        return "denominator " + c.den().str() + " of the " + where + " loses degree modulo p";
      auto g = poly_gcd(num, den);
      if (!g.is_constant()) return "numerator and denominator of the " + where + " share " + g.str() + " modulo p";
    }
  }
  return "";
}

bool CrossCheckReport::all_mismatches_certified() const {
  for (const auto& row : rows)
    if (row.run.ok() && !row.agrees && row.certificate.empty()) return false;
  return true;
}

CrossCheckReport cross_check(const SystemInput& sys, const std::vector<mpz_class>& primes) {
  CrossCheckReport rep;
  auto t = triangularize(sys);
  rep.exact = delta_measure(t);
  for (const auto& p : primes) {
    PrimeComparison row;
    row.p = p;
    row.run = degree_profile(sys, p);
    if (!row.run.ok()) {
      ++rep.failures;
    } else if (*row.run.profile == rep.exact) {
      row.agrees = true;
      ++rep.agreements;
    } else {
      ++rep.mismatches;
      row.certificate = bad_reduction_certificate(t, p);
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace trichow
