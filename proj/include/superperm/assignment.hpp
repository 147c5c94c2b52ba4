#pragma once

#include <cstdint>
#include <vector>

#include "superperm/atsp_instance.hpp"

namespace superperm {

// Cost entries at or above this value are treated as forbidden.
inline constexpr TotalWeight kForbiddenCost = 1'000'000'000'000;

struct Assignment {
  TotalWeight cost = 0;
  // successor[i] is the column assigned to row i.
  std::vector<Vertex> successor;
  // False when every complete assignment uses a forbidden entry; cost is then
  // kForbiddenCost.
  bool feasible = true;
};

// Minimum-cost perfect assignment on a square row-major cost table
// (Hungarian method with potentials, O(N^3)).
Assignment solve_assignment(const std::vector<TotalWeight>& cost, std::size_t dim);

// Optimal assignment value with self-assignment forbidden; never exceeds the
// optimal circuit weight.
TotalWeight assignment_lower_bound(const AtspInstance& inst);

}  // namespace superperm
