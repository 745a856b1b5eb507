#ifndef TRICHOW_LINALG_HPP
#define TRICHOW_LINALG_HPP

#include <optional>
#include <vector>

#include "trichow/coeff.hpp"

namespace trichow {

template <class K>
using Matrix = std::vector<std::vector<K>>;

/// Outcome of solving A x = b over a field: either a solution, or a nonzero
/// kernel vector of A when A is singular.
template <class K>
struct LinearSolve {
  std::optional<std::vector<K>> solution;
  std::vector<K> kernel;
};

/// Gauss-Jordan elimination for a square system over a field K.
template <class K>
LinearSolve<K> solve_square(Matrix<K> a, std::vector<K> b) {
  using Ops = CoeffOps<K>;
  const std::size_t n = a.size();
  std::vector<std::size_t> pivot_col;  // pivot column of each reduced row
  std::vector<bool> is_pivot(n, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = row; i < n; ++i)
      if (!Ops::is_zero(a[i][col])) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    std::swap(b[piv], b[row]);
    K inv = Ops::inv(a[row][col]);
    for (std::size_t j = col; j < n; ++j) a[row][j] = a[row][j] * inv;
    b[row] = b[row] * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || Ops::is_zero(a[i][col])) continue;
      K f = a[i][col];
      for (std::size_t j = col; j < n; ++j)
        if (!Ops::is_zero(a[row][j])) a[i][j] = a[i][j] - f * a[row][j];
      b[i] = b[i] - f * b[row];
    }
    pivot_col.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  LinearSolve<K> out;
  if (row == n) {
    out.solution = std::move(b);
    return out;
  }
  // Singular: a free column gives a kernel vector.
  std::size_t free = 0;
  while (is_pivot[free]) ++free;
  K zero = Ops::zero(Ops::ctx_of(a[0][0]));
  out.kernel.assign(n, zero);
  out.kernel[free] = Ops::one(Ops::ctx_of(a[0][0]));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) out.kernel[pivot_col[r]] = -a[r][free];
  return out;
}

}  // namespace trichow

#endif  // TRICHOW_LINALG_HPP
