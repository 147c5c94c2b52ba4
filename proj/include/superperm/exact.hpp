#pragma once

#include <cstddef>

#include "superperm/atsp_instance.hpp"
#include "superperm/tour.hpp"

namespace superperm {

inline constexpr std::size_t kHeldKarpMaxVertices = 20;

// Exact minimum circuit by subset dynamic programming, O(2^N N^2) time.
// Throws CapabilityError when N > kHeldKarpMaxVertices.
Tour held_karp(const AtspInstance& inst);

struct BranchAndBoundResult {
  Tour tour;
  // True iff the search finished, so `tour` is optimal.
  bool optimal = false;
  std::size_t nodes = 0;
};

// Depth-first subtour-elimination search: each node solves the assignment
// relaxation with some arcs forced in or out, and branches over the arcs of
// its shortest subtour. Stops with optimal = false once time_limit seconds
// have passed; a budget of 0 returns the starting heuristic tour.
BranchAndBoundResult branch_and_bound(const AtspInstance& inst, double time_limit);

}  // namespace superperm
