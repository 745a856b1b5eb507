#ifndef TRICHOW_INTERP_HPP
#define TRICHOW_INTERP_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "trichow/mpoly.hpp"

namespace trichow {

/// Nested grid in {1..M}^m: L first coordinates and, below every prefix, L
/// choices for the next coordinate.
struct EquiprojectableSet {
  struct Node {
    std::vector<unsigned long> values;  // the L choices at this node, increasing
    std::vector<Node> children;         // one per value, empty at the last level
  };
  unsigned m = 0;
  unsigned long M = 0, L = 0;
  Node root;
  std::vector<std::vector<unsigned long>> points;  // depth-first lex order over the tree

  std::size_t size() const { return points.size(); }
};

/// Rejects a partial point (y1..yi) when it returns true.
using AvoidPredicate = std::function<bool(const std::vector<unsigned long>&)>;

/// Greedy construction: at every node the L smallest admissible values.
/// Throws GridExhausted when a node has fewer than L admissible values.
EquiprojectableSet build_equiprojectable(unsigned m, unsigned long M, unsigned long L,
                                         const AvoidPredicate& avoid = {});

/// Natural log of |x|; -infinity for 0.
double log_abs_q(const mpq_class& x);

struct NormReport {
  double input_log = 0;     // A: max log|a_i| of the data
  double observed_log = 0;  // max log|b_i| of the solution
  double bound = 0;
  bool within() const {
    return (std::isinf(observed_log) && observed_log < 0) || observed_log <= bound + 1e-9 * (1 + std::abs(bound));
  }
};

struct VandermondeSolution {
  std::vector<mpq_class> coefficients;  // b with sum_k b_k x_j^k = a_j
  NormReport norms;                     // bound A + L ln(M+1) + ln L
};

/// Exact solve of the L x L Vandermonde system on distinct nodes in {1..M}.
/// Throws SingularGrid on repeated nodes.
VandermondeSolution vandermonde_solve(const std::vector<unsigned long>& nodes, const std::vector<mpq_class>& values,
                                      unsigned long M);

/// Values of f (degree < L in each of Y1..Ym) at the points of the set, in
/// their canonical order. Throws DegreeOverflow.
std::vector<mpq_class> evaluate_at_set(const MPoly<mpq_class>& f, const EquiprojectableSet& grid);

struct Interpolation {
  MPoly<mpq_class> poly;  // over Y1..Ym
  NormReport norms;       // bound A + mL ln(M+1) + m ln L
};

/// The unique f with degree < L in each variable taking the given values,
/// by level-by-level univariate Vandermonde solves.
Interpolation interpolate(const std::vector<mpq_class>& values, const EquiprojectableSet& grid);

}  // namespace trichow

#endif  // TRICHOW_INTERP_HPP
