#include "trichow/interp.hpp"

#include <cmath>
#include <limits>

#include "trichow/valuation.hpp"

namespace trichow {

namespace {

void build_node(EquiprojectableSet& g, EquiprojectableSet::Node& node, std::vector<unsigned long>& prefix,
                const AvoidPredicate& avoid) {
  for (unsigned long v = 1; v <= g.M && node.values.size() < g.L; ++v) {
    prefix.push_back(v);
    if (!avoid || !avoid(prefix)) node.values.push_back(v);
    prefix.pop_back();
  }
  if (node.values.size() < g.L) {
    std::string where = "(";
    for (std::size_t i = 0; i < prefix.size(); ++i) where += (i ? "," : "") + std::to_string(prefix[i]);
    throw Error(ErrorKind::GridExhausted, "only " + std::to_string(node.values.size()) + " admissible values below " +
                                              where + ")" + " in 1.." + std::to_string(g.M));
  }
  const bool last = prefix.size() + 1 == g.m;
  for (unsigned long v : node.values) {
    prefix.push_back(v);
    if (last) {
      g.points.push_back(prefix);
    } else {
      node.children.emplace_back();
      build_node(g, node.children.back(), prefix, avoid);
    }
    prefix.pop_back();
  }
}

double max_log(const std::vector<mpq_class>& v) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& x : v) best = std::max(best, log_abs_q(x));
  return best;
}

unsigned long ipow(unsigned long b, unsigned e) {
  unsigned long r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

EquiprojectableSet build_equiprojectable(unsigned m, unsigned long M, unsigned long L, const AvoidPredicate& avoid) {
  if (L == 0 || L > M) throw Error(ErrorKind::Domain, "grid needs 1 <= L <= M");
  EquiprojectableSet g;
  g.m = m;
  g.M = M;
  g.L = L;
  if (m == 0) {
    g.points.push_back({});
    return g;
  }
  std::vector<unsigned long> prefix;
  build_node(g, g.root, prefix, avoid);
  return g;
}

double log_abs_q(const mpq_class& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  return log_abs(x.get_num()) - log_abs(x.get_den());
}

VandermondeSolution vandermonde_solve(const std::vector<unsigned long>& nodes, const std::vector<mpq_class>& values,
                                      unsigned long M) {
  const std::size_t L = nodes.size();
  if (values.size() != L) throw Error(ErrorKind::Structural, "node and value counts differ");
  if (L == 0) throw Error(ErrorKind::Structural, "empty Vandermonde system");
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (nodes[i] == nodes[j]) throw Error(ErrorKind::SingularGrid, "repeated node " + std::to_string(nodes[i]));
  // Newton divided differences, then expansion into the monomial basis.
  std::vector<mpq_class> c = values;
  for (std::size_t j = 1; j < L; ++j)
    for (std::size_t i = L - 1; i >= j; --i) {
      c[i] = (c[i] - c[i - 1]) / mpq_class(static_cast<long>(nodes[i]) - static_cast<long>(nodes[i - j]));
      if (i == j) break;
    }
  std::vector<mpq_class> b(L, 0);
  b[0] = c[L - 1];
  for (std::size_t k = L - 1; k-- > 0;) {
    // b <- b * (x - nodes[k]) + c[k]
    mpq_class xk(nodes[k]);
    for (std::size_t d = L - 1; d > 0; --d) b[d] = b[d - 1] - xk * b[d];
    b[0] = c[k] - xk * b[0];
  }
  VandermondeSolution out;
  out.coefficients = std::move(b);
  out.norms.input_log = max_log(values);
  out.norms.observed_log = max_log(out.coefficients);
  out.norms.bound = out.norms.input_log + static_cast<double>(L) * std::log(static_cast<double>(M) + 1) +
                    std::log(static_cast<double>(L));
  return out;
}

std::vector<mpq_class> evaluate_at_set(const MPoly<mpq_class>& f, const EquiprojectableSet& grid) {
  if (f.vars().size() != grid.m) throw Error(ErrorKind::Structural, "polynomial and grid dimensions differ");
  for (std::size_t i = 0; i < grid.m; ++i)
    if (f.degree(i) >= grid.L)
      throw Error(ErrorKind::DegreeOverflow, "degree " + std::to_string(f.degree(i)) + " in " + f.vars()[i] +
                                                 " is not below L = " + std::to_string(grid.L));
  std::vector<mpq_class> out;
  out.reserve(grid.size());
  for (const auto& p : grid.points) {
    std::vector<mpq_class> y(p.begin(), p.end());
    out.push_back(f.evaluate(y));
  }
  return out;
}

namespace {

std::vector<mpq_class> solve_node(const EquiprojectableSet& g, const EquiprojectableSet::Node& node, unsigned depth,
                                  const std::vector<mpq_class>& values, std::size_t& pos) {
  const std::size_t L = g.L;
  const std::size_t sub = ipow(g.L, g.m - depth - 1);
  std::vector<std::vector<mpq_class>> child(L);
  for (std::size_t j = 0; j < L; ++j)
    child[j] = depth + 1 == g.m ? std::vector<mpq_class>{values[pos++]}
                                : solve_node(g, node.children[j], depth + 1, values, pos);
  std::vector<mpq_class> out(L * sub);
  std::vector<mpq_class> column(L);
  for (std::size_t idx = 0; idx < sub; ++idx) {
    for (std::size_t j = 0; j < L; ++j) column[j] = child[j][idx];
    auto b = vandermonde_solve(node.values, column, g.M).coefficients;
    for (std::size_t k = 0; k < L; ++k) out[k * sub + idx] = std::move(b[k]);
  }
  return out;
}

}  // namespace

Interpolation interpolate(const std::vector<mpq_class>& values, const EquiprojectableSet& grid) {
  if (values.size() != grid.size())
    throw Error(ErrorKind::Structural, "expected " + std::to_string(grid.size()) + " values, got " +
                                           std::to_string(values.size()));
  const VarSet ys = VarSet::numbered("Y", grid.m);
  Interpolation out;
  std::vector<mpq_class> coeffs;
  if (grid.m == 0) {
    coeffs = values;
  } else {
    std::size_t pos = 0;
    coeffs = solve_node(grid, grid.root, 0, values, pos);
  }
  std::vector<MPoly<mpq_class>::Term> terms;
  for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
    if (coeffs[flat] == 0) continue;
    Monomial mono(grid.m);
    std::size_t rest = flat;
    for (std::size_t i = grid.m; i-- > 0;) {
      mono[i] = static_cast<Monomial::Exp>(rest % grid.L);
      rest /= grid.L;
    }
    terms.emplace_back(std::move(mono), coeffs[flat]);
  }
  out.poly = MPoly<mpq_class>::from_terms(ys, NoCtx{}, std::move(terms));
  out.norms.input_log = max_log(values);
  out.norms.observed_log = max_log(coeffs);
  const double m = grid.m, L = static_cast<double>(grid.L);
  out.norms.bound = out.norms.input_log + m * L * std::log(static_cast<double>(grid.M) + 1) + m * std::log(L);
  return out;
}

}  // namespace trichow
