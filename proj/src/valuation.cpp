#include "trichow/valuation.hpp"

#include <cmath>
#include <limits>

namespace trichow {

Valuation Valuation::padic(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    throw Error(ErrorKind::NotPrime, p.get_str() + " is not prime");
  Valuation v;
  v.kind = Kind::PAdic;
  v.p = p;
  return v;
}

Valuation Valuation::sadic(const MPoly<mpz_class>& s, std::vector<std::string> params) {
  if (s.is_zero() || s.is_constant()) throw Error(ErrorKind::Domain, "S-adic valuation needs a non-constant S");
  if (abs(content_primpart(s).first) != 1) throw Error(ErrorKind::Domain, "S must have content 1");
  Valuation v;
  v.kind = Kind::SAdic;
  v.s = s;
  v.params = std::move(params);
  return v;
}

Valuation Valuation::deg(std::vector<std::string> params) {
  Valuation v;
  v.kind = Kind::Deg;
  v.params = std::move(params);
  return v;
}

double log_abs(const mpz_class& x) {
  if (x == 0) throw Error(ErrorKind::Domain, "log of zero");
  long e = 0;
  double m = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

unsigned long ord_p(const mpz_class& x, const mpz_class& p) {
  if (x == 0) throw Error(ErrorKind::Domain, "order of zero");
  mpz_class r = x;
  return mpz_remove(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

namespace {

// Coefficients of f with respect to the main (non-parameter) variables.
std::vector<MPoly<mpz_class>> param_coefficients(const MPoly<mpz_class>& f, const std::vector<std::string>& params) {
  std::vector<std::string> mains, ps;
  for (const auto& name : f.vars().names()) {
    bool is_param = std::find(params.begin(), params.end(), name) != params.end();
    (is_param ? ps : mains).push_back(name);
  }
  auto nested = nest(f, VarSet(mains), VarSet(ps));
  std::vector<MPoly<mpz_class>> out;
  for (const auto& t : nested.terms()) out.push_back(t.second);
  return out;
}

}  // namespace

double log_abs(const MPoly<mpz_class>& f, const Valuation& v) {
  if (f.is_zero()) throw Error(ErrorKind::Domain, "log_abs of the zero polynomial");
  double best = -std::numeric_limits<double>::infinity();
  switch (v.kind) {
    case Valuation::Kind::Archimedean:
      for (const auto& t : f.terms()) best = std::max(best, log_abs(t.second));
      return best;
    case Valuation::Kind::PAdic: {
      unsigned long lo = std::numeric_limits<unsigned long>::max();
      for (const auto& t : f.terms()) lo = std::min(lo, ord_p(t.second, v.p));
      return -static_cast<double>(lo) * std::log(v.p.get_d());
    }
    case Valuation::Kind::Deg:
      for (const auto& c : param_coefficients(f, v.params)) best = std::max(best, static_cast<double>(c.total_degree()));
      return best;
    case Valuation::Kind::SAdic: {
      const double ds = static_cast<double>(v.s->total_degree());
      for (const auto& c : param_coefficients(f, v.params)) {
        MPoly<mpz_class> s = v.s->remap(c.vars());
        MPoly<mpz_class> q = c;
        unsigned long ord = 0;
        while (true) {
          auto next = divide_exact(q, s);
          if (!next) break;
          q = std::move(*next);
          ++ord;
        }
        best = std::max(best, -ds * static_cast<double>(ord));
      }
      return best;
    }
  }
  return best;
}

}  // namespace trichow
