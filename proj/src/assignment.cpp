#include "superperm/assignment.hpp"

#include <algorithm>

namespace superperm {

Assignment solve_assignment(const std::vector<TotalWeight>& cost, std::size_t dim) {
  // 1-based potentials formulation; column 0 is a virtual start.
  const std::size_t n = dim;
  std::vector<TotalWeight> u(n + 1, 0);
  std::vector<TotalWeight> v(n + 1, 0);
  std::vector<std::size_t> match(n + 1, 0);  // match[col] = row
  std::vector<std::size_t> way(n + 1, 0);
  std::vector<TotalWeight> minv(n + 1);
  std::vector<bool> used(n + 1);
  const TotalWeight inf = kForbiddenCost * 1000;

  for (std::size_t row = 1; row <= n; ++row) {
    match[0] = row;
    std::size_t col0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[col0] = true;
      const std::size_t i0 = match[col0];
      TotalWeight delta = inf;
      std::size_t col1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const TotalWeight c = std::min(cost[(i0 - 1) * n + (j - 1)], kForbiddenCost);
        const TotalWeight cur = c - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = col0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          col1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  Assignment result;
  result.successor.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) result.successor[match[j] - 1] = static_cast<Vertex>(j - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const TotalWeight c = cost[i * n + result.successor[i]];
    if (c >= kForbiddenCost) result.feasible = false;
    result.cost += c;
  }
  if (!result.feasible) result.cost = kForbiddenCost;
  return result;
}

TotalWeight assignment_lower_bound(const AtspInstance& inst) {
  const std::size_t n = inst.size();
  if (n < 2) return 0;
  std::vector<TotalWeight> cost(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[i * n + j] = i == j ? kForbiddenCost : inst.weights.at(i, j);
  }
  return solve_assignment(cost, n).cost;
}

}  // namespace superperm
