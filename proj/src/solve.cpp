#include "trichow/solve.hpp"

#include <functional>
#include <set>

namespace trichow {

std::vector<YXPoly<mpz_class>> integral_generators(const SystemInput& sys) {
  std::vector<YXPoly<mpz_class>> out;
  VarSet xs = sys.xvars(), ys = sys.yvars();
  for (const auto& g : sys.gens) {
    auto [z, den] = clear_denominators(g);
    auto [c, prim] = content_primpart(z);
    out.push_back(nest(prim, xs, ys));
  }
  return out;
}

namespace {

// Coefficient-domain helpers for the Buchberger engine: a gcd domain (Z,
// B[Y]) where polynomials are kept primitive, or a field (F_p) where they are
// kept monic.
template <class D>
struct Dom;

template <>
struct Dom<mpz_class> {
  static bool is_one(const mpz_class& a) { return a == 1; }
  static mpz_class gcd(const mpz_class& a, const mpz_class& b) { return CoeffOps<mpz_class>::gcd(a, b); }
  static mpz_class div(const mpz_class& a, const mpz_class& g) { return *CoeffOps<mpz_class>::try_divexact(a, g); }
  static mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
  static mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
  static mpz_class neg(const mpz_class& a) { return -a; }
  static bool is_zero(const mpz_class& a) { return a == 0; }
  template <class Terms>
  static void normalize(Terms& f) {
    mpz_class g = 0;
    for (const auto& t : f) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
      if (g == 1) break;
    }
    if (f.front().second < 0) g = -g;
    if (g != 1)
      for (auto& t : f) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), g.get_mpz_t());
  }
};

template <>
struct Dom<ModP> {
  static bool is_one(const ModP& a) { return a.value() == 1; }
  static ModP gcd(const ModP& a, const ModP&) { return ModP(1, a.modulus_ptr()); }
  static ModP div(const ModP& a, const ModP& g) { return a * g.inverse(); }
  static ModP mul(const ModP& a, const ModP& b) { return a * b; }
  static ModP sub(const ModP& a, const ModP& b) { return a - b; }
  static ModP neg(const ModP& a) { return -a; }
  static bool is_zero(const ModP& a) { return a.value() == 0; }
  template <class Terms>
  static void normalize(Terms& f) {
    if (f.front().second.value() == 1) return;
    ModP inv = f.front().second.inverse();
    for (auto& t : f) t.second = t.second * inv;
  }
};

template <class B>
struct Dom<MPoly<B>> {
  using P = MPoly<B>;
  static bool is_one(const P& a) { return a.is_one(); }
  static P gcd(const P& a, const P& b) { return poly_gcd(a, b); }
  static P div(const P& a, const P& g) { return divide_or_throw(a, g); }
  static P mul(const P& a, const P& b) { return a * b; }
  static P sub(const P& a, const P& b) { return a - b; }
  static P neg(const P& a) { return -a; }
  static bool is_zero(const P& a) { return a.is_zero(); }
  template <class Terms>
  static void normalize(Terms& f) {
    P g = f.front().second.zero_like();
    for (const auto& t : f) {
      g = poly_gcd(g, t.second);
      if (g.is_one()) break;
    }
    if (!g.is_one())
      for (auto& t : f) t.second = divide_or_throw(t.second, g);
    using Ops = CoeffOps<B>;
    const B u = f.front().second.lc();
    if constexpr (Ops::is_field) {
      if (!Ops::is_one(u)) {
        B inv = Ops::inv(u);
        for (auto& t : f) t.second = t.second.scale(inv);
      }
    } else {
      if (Ops::is_negative(u))
        for (auto& t : f) t.second = -t.second;
    }
  }
};

// Buchberger's algorithm over a coefficient domain D for a monomial order
// given as a three-way comparison. Polynomials are term lists sorted in
// descending order.
template <class D>
class Engine {
 public:
  using Term = std::pair<Monomial, D>;
  using Poly = std::vector<Term>;
  using Cmp = std::function<std::strong_ordering(const Monomial&, const Monomial&)>;

  explicit Engine(Cmp cmp) : cmp_(std::move(cmp)) {}

  Poly sorted(std::vector<Term> terms) const {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return cmp_(a.first, b.first) > 0; });
    return terms;
  }

  // a*f - b*(q*g)
  Poly combine(const Poly& f, const D& a, const Poly& g, const D& b, const Monomial& q) const {
    Poly out;
    out.reserve(f.size() + g.size());
    const bool a_one = Dom<D>::is_one(a);
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        out.emplace_back(f[i].first, a_one ? f[i].second : Dom<D>::mul(f[i].second, a));
        ++i;
        continue;
      }
      Monomial gm = g[j].first * q;
      auto c = i == f.size() ? std::strong_ordering::less : cmp_(f[i].first, gm);
      if (c > 0) {
        out.emplace_back(f[i].first, a_one ? f[i].second : Dom<D>::mul(f[i].second, a));
        ++i;
      } else if (c < 0) {
        out.emplace_back(std::move(gm), Dom<D>::neg(Dom<D>::mul(g[j].second, b)));
        ++j;
      } else {
        D v = Dom<D>::sub(a_one ? f[i].second : Dom<D>::mul(f[i].second, a), Dom<D>::mul(g[j].second, b));
        if (!Dom<D>::is_zero(v)) out.emplace_back(f[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Poly reduce(Poly f, const std::vector<Poly>& basis, long skip = -1) const {
    std::size_t i = 0;
    unsigned steps = 0;
    while (i < f.size()) {
      const Poly* red = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (static_cast<long>(k) == skip || basis[k].empty()) continue;
        if (basis[k].front().first.divides(f[i].first)) {
          red = &basis[k];
          break;
        }
      }
      if (!red) {
        ++i;
        continue;
      }
      D a = red->front().second, b = f[i].second;
      D g = Dom<D>::gcd(a, b);
      if (!Dom<D>::is_one(g)) {
        a = Dom<D>::div(a, g);
        b = Dom<D>::div(b, g);
      }
      Monomial q = f[i].first / red->front().first;
      f = combine(f, a, *red, b, q);
      if (++steps % 6 == 0 && !f.empty()) Dom<D>::normalize(f);
    }
    if (!f.empty()) Dom<D>::normalize(f);
    return f;
  }

  Poly spoly(const Poly& f, const Poly& g) const {
    Monomial l = f.front().first.lcm(g.front().first);
    D a = f.front().second, b = g.front().second;
    D c = Dom<D>::gcd(a, b);
    if (!Dom<D>::is_one(c)) {
      a = Dom<D>::div(a, c);
      b = Dom<D>::div(b, c);
    }
    Poly fs;
    Monomial qf = l / f.front().first;
    fs.reserve(f.size());
    for (const auto& t : f) fs.emplace_back(t.first * qf, t.second);
    return combine(fs, b, g, a, l / g.front().first);
  }

  /// Reduced Groebner basis, sorted by increasing leading monomial.
  /// `is_unit` flags leading monomials that make the basis trivial.
  std::vector<Poly> groebner(std::vector<Poly> input, const std::function<bool(const Monomial&)>& is_unit) const {
    std::vector<Poly> basis;
    for (auto& f : input) {
      if (f.empty()) continue;
      Dom<D>::normalize(f);
      if (is_unit(f.front().first)) throw Error(ErrorKind::NotZeroDim, "the ideal is the unit ideal");
      basis.push_back(std::move(f));
    }
    if (basis.empty()) throw Error(ErrorKind::NotZeroDim, "all generators are zero");
    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
    auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    while (!pending.empty()) {
      // Normal strategy: smallest lcm, ties broken by the pair indices.
      auto best = pending.begin();
      Monomial best_l = basis[best->first].front().first.lcm(basis[best->second].front().first);
      for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
        Monomial l = basis[it->first].front().first.lcm(basis[it->second].front().first);
        if (cmp_(l, best_l) < 0) {
          best = it;
          best_l = std::move(l);
        }
      }
      auto [i, j] = *best;
      pending.erase(best);
      const Monomial& li = basis[i].front().first;
      const Monomial& lj = basis[j].front().first;
      if (li * lj == best_l) continue;  // coprime leading monomials
      bool chain = false;
      for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
        if (k == i || k == j || !basis[k].front().first.divides(best_l)) continue;
        chain = !pending.count(key(i, k)) && !pending.count(key(j, k));
      }
      if (chain) continue;
      Poly h = reduce(spoly(basis[i], basis[j]), basis);
      if (h.empty()) continue;
      if (is_unit(h.front().first)) throw Error(ErrorKind::NotZeroDim, "the ideal is the unit ideal");
      std::size_t idx = basis.size();
      basis.push_back(std::move(h));
      for (std::size_t k = 0; k < idx; ++k) pending.emplace(k, idx);
    }
    std::vector<Poly> minimal;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      bool redundant = false;
      for (std::size_t o = 0; o < basis.size() && !redundant; ++o) {
        if (o == k || !basis[o].front().first.divides(basis[k].front().first)) continue;
        redundant = !(basis[o].front().first == basis[k].front().first) || o < k;
      }
      if (!redundant) minimal.push_back(basis[k]);
    }
    for (std::size_t k = 0; k < minimal.size(); ++k) minimal[k] = reduce(minimal[k], minimal, static_cast<long>(k));
    std::sort(minimal.begin(), minimal.end(),
              [&](const Poly& a, const Poly& b) { return cmp_(a.front().first, b.front().first) < 0; });
    return minimal;
  }

 private:
  Cmp cmp_;
};

bool is_pure_power(const Monomial& m, std::size_t var, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i)
    if ((i == var) != (m[i] > 0)) return false;
  return true;
}

// Flat coefficient type for the block-order computation over B[Y, X].
template <class B>
struct FlatCoeff {
  using type = B;
};

}  // namespace

template <class B>
TriangularSet<RatFunc<B>> reduced_lex_basis(const std::vector<YXPoly<B>>& gens) {
  if (gens.empty()) throw Error(ErrorKind::NotZeroDim, "no generators");
  const VarSet xs = gens[0].vars();
  const std::size_t n = xs.size();
  Engine<MPoly<B>> eng([](const Monomial& a, const Monomial& b) { return Monomial::lex(a, b); });
  std::vector<typename Engine<MPoly<B>>::Poly> input;
  for (const auto& g : gens) input.push_back(eng.sorted({g.terms().begin(), g.terms().end()}));
  auto basis = eng.groebner(std::move(input), [](const Monomial& m) { return m.is_one(); });
  for (std::size_t l = 0; l < n; ++l) {
    bool found = std::any_of(basis.begin(), basis.end(),
                             [&](const auto& g) { return is_pure_power(g.front().first, l, 0, n); });
    if (!found) throw Error(ErrorKind::NotZeroDim, "no polynomial with leading monomial a power of " + xs[l]);
  }
  if (basis.size() != n)
    throw Error(ErrorKind::NotLazardShape, "reduced lex basis has " + std::to_string(basis.size()) +
                                               " elements for " + std::to_string(n) + " variables");
  const auto& pctx = gens[0].ctx();
  std::vector<MPoly<RatFunc<B>>> polys;
  for (const auto& g : basis) {
    YXPoly<B> p = YXPoly<B>::from_terms(xs, pctx, g);
    polys.push_back(to_ratfunc_poly(p, g.front().second));
  }
  return TriangularSet<RatFunc<B>>(std::move(polys));
}

template <class B>
TriangularSet<RatFunc<B>> triangularize_generators(const std::vector<YXPoly<B>>& gens) {
  if (gens.empty()) throw Error(ErrorKind::NotZeroDim, "no generators");
  const VarSet xs = gens[0].vars(), ys = gens[0].ctx().vars;
  const std::size_t n = xs.size(), m = ys.size();
  const VarSet all = ys.concat(xs);
  // Block order: X part in lex (X_n most significant), then Y part in grlex.
  auto block = [m, n](const Monomial& a, const Monomial& b) {
    for (std::size_t i = m + n; i-- > m;)
      if (a[i] != b[i]) return a[i] <=> b[i];
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < m; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
    for (std::size_t i = m; i-- > 0;)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  };
  auto x_part_is_one = [m, n](const Monomial& mo) {
    for (std::size_t i = m; i < m + n; ++i)
      if (mo[i]) return false;
    return true;
  };
  Engine<B> eng(block);
  std::vector<typename Engine<B>::Poly> input;
  for (const auto& g : gens) {
    MPoly<B> flat = flatten(g, all);
    input.push_back(eng.sorted({flat.terms().begin(), flat.terms().end()}));
  }
  auto basis = eng.groebner(std::move(input), x_part_is_one);

  // Over Frac(B[Y]) the leading monomials are the X parts; the minimal ones
  // form the leading monomials of the reduced basis there.
  auto x_part = [m, n](const Monomial& mo) {
    Monomial x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = mo[m + i];
    return x;
  };
  std::vector<Monomial> minimal_x;
  for (const auto& g : basis) {
    Monomial x = x_part(g.front().first);
    bool dominated = std::any_of(basis.begin(), basis.end(), [&](const auto& o) {
      Monomial ox = x_part(o.front().first);
      return ox.divides(x) && !(ox == x);
    });
    if (!dominated && std::find(minimal_x.begin(), minimal_x.end(), x) == minimal_x.end()) minimal_x.push_back(x);
  }
  for (std::size_t l = 0; l < n; ++l) {
    bool found = std::any_of(minimal_x.begin(), minimal_x.end(), [&](const Monomial& x) { return is_pure_power(x, l, 0, n); });
    if (!found) throw Error(ErrorKind::NotZeroDim, "no polynomial with leading monomial a power of " + xs[l]);
  }
  if (minimal_x.size() != n)
    throw Error(ErrorKind::NotLazardShape, "reduced lex basis has " + std::to_string(minimal_x.size()) +
                                               " elements for " + std::to_string(n) + " variables");
  std::vector<MPoly<RatFunc<B>>> polys(n);
  for (std::size_t l = 0; l < n; ++l) {
    // The basis is sorted increasingly, so the first match is the smallest.
    for (const auto& g : basis) {
      Monomial x = x_part(g.front().first);
      if (!is_pure_power(x, l, 0, n)) continue;
      if (std::find(minimal_x.begin(), minimal_x.end(), x) == minimal_x.end()) continue;
      MPoly<B> flat = MPoly<B>::from_terms(all, gens[0].ctx().base, g);
      YXPoly<B> nested = nest(flat, xs, ys);
      polys[l] = to_ratfunc_poly(nested, nested.coeff_in(l, x[l]).lc());
      break;
    }
  }
  return TriangularSet<RatFunc<B>>(std::move(polys));
}

template TriangularSet<RatFunc<mpz_class>> triangularize_generators(const std::vector<YXPoly<mpz_class>>&);
template TriangularSet<RatFunc<ModP>> triangularize_generators(const std::vector<YXPoly<ModP>>&);
template TriangularSet<RatFunc<mpz_class>> reduced_lex_basis(const std::vector<YXPoly<mpz_class>>&);
template TriangularSet<RatFunc<ModP>> reduced_lex_basis(const std::vector<YXPoly<ModP>>&);

TriangularSet<QY> triangularize(const SystemInput& sys) {
  if (sys.n == 0) throw Error(ErrorKind::Structural, "system without unknowns");
  return triangularize_generators(integral_generators(sys));
}

namespace {

// Monic polynomial over Q(Y) in the X variables from a flat integer
// polynomial over (Y, X) with positive degree in the variable `main`.
MPoly<QY> monic_in(const MPoly<mpz_class>& f, const SystemInput& sys, std::size_t main_x) {
  auto nested = nest(f, sys.xvars(), sys.yvars());
  auto d = nested.degree(main_x);
  auto lc = nested.coeff_in(main_x, d);
  if (!lc.is_constant()) throw Error(ErrorKind::Structural, "leading coefficient involves lower variables");
  return to_ratfunc_poly(nested, lc.lc());
}

}  // namespace

TriangularSet<QY> eliminate_oracle(const SystemInput& sys) {
  if (sys.n == 0 || sys.n > 2) throw Error(ErrorKind::Structural, "the elimination oracle handles n = 1 or 2");
  std::vector<MPoly<mpz_class>> flat;
  for (const auto& g : sys.gens) flat.push_back(content_primpart(clear_denominators(g).first).second);
  const std::size_t x1 = sys.m, x2 = sys.m + 1;
  std::vector<std::size_t> xidx{x1};
  if (sys.n == 2) xidx.push_back(x2);

  MPoly<mpz_class> r = flat[0].zero_like();
  if (sys.n == 1) {
    for (const auto& f : flat) r = poly_gcd(r, f);
  } else {
    std::size_t pivot = 0;
    while (pivot < flat.size() && flat[pivot].degree(x2) == 0) ++pivot;
    if (pivot == flat.size()) throw Error(ErrorKind::NotZeroDim, "no generator involves X2");
    for (std::size_t j = 0; j < flat.size(); ++j) {
      if (j == pivot) continue;
      r = poly_gcd(r, resultant(flat[pivot], flat[j], x2));
    }
    if (r.is_zero()) throw Error(ErrorKind::NotZeroDim, "resultant vanishes identically");
    MPoly<mpz_class> g = poly_gcd(r, r.derivative(x1));
    r = divide_or_throw(r, g);
  }
  if (r.is_zero() || r.degree(x1) == 0) throw Error(ErrorKind::NotZeroDim, "no univariate polynomial in X1");
  r = content_primpart_in(r, xidx).second;
  MPoly<QY> t1 = monic_in(r, sys, 0);
  if (sys.n == 1) return TriangularSet<QY>({t1});

  TriangularSet<QY> base({t1});
  auto reduce = [&](const MPoly<QY>& p) { return normal_form(p, base); };
  auto rem = [&](MPoly<QY> a, const MPoly<QY>& b) {
    auto db = b.degree(1);
    MPoly<QY> inv = invert_modulo(b.coeff_in(1, db), base);
    while (!a.is_zero() && a.degree(1) >= db) {
      auto da = a.degree(1);
      MPoly<QY> q = reduce(a.coeff_in(1, da) * inv) * a.var_like(1, da - db);
      a = reduce(a - q * b);
    }
    return a;
  };
  auto strip = [&](MPoly<QY> p) {
    // Drop leading coefficients in X2 that vanish modulo T1.
    while (!p.is_zero() && p.degree(1) > 0 && reduce(p.coeff_in(1, p.degree(1))).is_zero()) {
      auto d = p.degree(1);
      p = reduce(p - p.coeff_in(1, d) * p.var_like(1, d));
    }
    return p;
  };
  MPoly<QY> g;
  bool have = false;
  for (const auto& f : flat) {
    MPoly<QY> p = strip(reduce(nest(f, sys.xvars(), sys.yvars()).template map_coeffs<QY>(
        t1.ctx(), [](const MPoly<mpz_class>& c) { return QY(c); })));
    if (p.is_zero()) continue;
    if (!have) {
      g = p;
      have = true;
      continue;
    }
    MPoly<QY> a = g, b = p;
    if (a.degree(1) < b.degree(1)) std::swap(a, b);
    while (!b.is_zero()) {
      if (b.degree(1) == 0) throw Error(ErrorKind::NotZeroDim, "generators have no common root over K[X1]/(T1)");
      MPoly<QY> r2 = strip(rem(a, b));
      a = std::move(b);
      b = std::move(r2);
    }
    g = a;
  }
  if (!have || g.degree(1) == 0) throw Error(ErrorKind::NotZeroDim, "no polynomial in X2");
  auto d = g.degree(1);
  MPoly<QY> t2 = reduce(invert_modulo(g.coeff_in(1, d), base) * g);
  return TriangularSet<QY>({t1, t2});
}

}  // namespace trichow
