#include "trichow/triangular.hpp"

namespace trichow {

std::string_view to_string(SpecializationVerdict v) {
  switch (v) {
    case SpecializationVerdict::Good: return "Good";
    case SpecializationVerdict::DenominatorVanishes: return "DenominatorVanishes";
    case SpecializationVerdict::ResultantVanishes: return "ResultantVanishes";
  }
  return "Unknown";
}

std::optional<mpq_class> evaluate(const QY& f, const std::vector<mpz_class>& y) {
  if (y.size() != f.vars().size()) throw Error(ErrorKind::Structural, "point dimension does not match parameters");
  mpz_class den = f.den().evaluate(y);
  if (den == 0) return std::nullopt;
  mpq_class v(f.num().evaluate(y), den);
  v.canonicalize();
  return v;
}

Specialization specialize(const TriangularSet<QY>& t, const std::vector<mpz_class>& y) {
  Specialization out;
  if (t.size() == 0) {
    out.set = t;
    return out;
  }
  const VarSet none;
  RatCtx<mpz_class> ctx{none, NoCtx{}};
  std::vector<MPoly<QY>> polys;
  for (const auto& p : t.polys()) {
    std::vector<MPoly<QY>::Term> terms;
    for (const auto& [m, c] : p.terms()) {
      auto v = evaluate(c, y);
      if (!v) {
        out.verdict = SpecializationVerdict::DenominatorVanishes;
        out.witness = c.den().str();
        return out;
      }
      QY val(MPoly<mpz_class>::constant(none, NoCtx{}, v->get_num()),
             MPoly<mpz_class>::constant(none, NoCtx{}, v->get_den()));
      terms.emplace_back(m, std::move(val));
    }
    polys.push_back(MPoly<QY>::from_terms(p.vars(), ctx, std::move(terms)));
  }
  TriangularSet<QY> s(std::move(polys));
  auto scaled = iterated_resultants(s);
  for (std::size_t i = 0; i < scaled.resultants.size(); ++i) {
    if (scaled.resultants[i].is_zero()) {
      out.verdict = SpecializationVerdict::ResultantVanishes;
      out.witness = "e" + std::to_string(i + 1);
      break;
    }
  }
  out.set = std::move(s);
  return out;
}

}  // namespace trichow
