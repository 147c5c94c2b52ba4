#include "superperm/exact.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "superperm/assignment.hpp"
#include "superperm/error.hpp"
#include "superperm/local_search.hpp"
#include "superperm/rng.hpp"

namespace superperm {

Tour held_karp(const AtspInstance& inst) {
  const std::size_t n = inst.size();
  if (n > kHeldKarpMaxVertices) {
    throw CapabilityError("held_karp supports at most " + std::to_string(kHeldKarpMaxVertices) +
                          " vertices, instance has " + std::to_string(n) +
                          "; use branch_and_bound or the heuristic solver");
  }
  if (n == 0) throw InputError("empty instance");
  if (n == 1) return Tour({0}, inst.weights);

  // Vertex 0 is the fixed start; bit k of a mask stands for vertex k + 1.
  // cost[mask * m + k]: cheapest path 0 -> ... -> k+1 visiting exactly mask.
  const std::size_t m = n - 1;
  const std::size_t masks = std::size_t{1} << m;
  constexpr TotalWeight inf = std::numeric_limits<TotalWeight>::max() / 2;
  std::vector<TotalWeight> cost(masks * m, inf);
  std::vector<std::uint8_t> parent(masks * m, 0);

  for (std::size_t k = 0; k < m; ++k) cost[(std::size_t{1} << k) * m + k] = inst.weights.arc(0, k + 1);
  for (std::size_t mask = 1; mask < masks; ++mask) {
    for (std::size_t last = 0; last < m; ++last) {
      if ((mask & (std::size_t{1} << last)) == 0) continue;
      const TotalWeight base = cost[mask * m + last];
      if (base >= inf) continue;
      for (std::size_t next = 0; next < m; ++next) {
        if ((mask & (std::size_t{1} << next)) != 0) continue;
        const std::size_t to = (mask | (std::size_t{1} << next)) * m + next;
        const TotalWeight c = base + inst.weights.arc(last + 1, next + 1);
        if (c < cost[to]) {
          cost[to] = c;
          parent[to] = static_cast<std::uint8_t>(last);
        }
      }
    }
  }

  const std::size_t full = masks - 1;
  TotalWeight best = inf;
  std::size_t last = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const TotalWeight c = cost[full * m + k] + inst.weights.arc(k + 1, 0);
    if (c < best) {
      best = c;
      last = k;
    }
  }

  std::vector<Vertex> order(n);
  std::size_t mask = full;
  for (std::size_t slot = n - 1; slot >= 1; --slot) {
    order[slot] = static_cast<Vertex>(last + 1);
    const std::size_t prev = parent[mask * m + last];
    mask &= ~(std::size_t{1} << last);
    last = prev;
  }
  order[0] = 0;
  return Tour(std::move(order), best, inst.weights);
}

namespace {

using Clock = std::chrono::steady_clock;

struct Arc {
  Vertex from;
  Vertex to;
};

class SubtourSearch {
 public:
  SubtourSearch(const AtspInstance& inst, Tour incumbent, Clock::time_point deadline)
      : inst_(inst), n_(inst.size()), best_(std::move(incumbent)), deadline_(deadline) {}

  BranchAndBoundResult run() {
    std::vector<Arc> included;
    std::vector<Arc> excluded;
    const bool finished = explore(included, excluded);
    return {best_, finished, nodes_};
  }

 private:
  // Returns false when the deadline cut the search short.
  bool explore(std::vector<Arc>& included, std::vector<Arc>& excluded) {
    if (Clock::now() >= deadline_) return false;
    ++nodes_;

    const Assignment ap = solve_assignment(node_costs(included, excluded), n_);
    if (!ap.feasible || ap.cost >= best_.weight()) return true;

    const auto cycle = shortest_cycle(ap.successor);
    if (cycle.size() == n_) {
      std::vector<Vertex> order;
      order.reserve(n_);
      Vertex v = 0;
      for (std::size_t k = 0; k < n_; ++k) {
        order.push_back(v);
        v = ap.successor[v];
      }
      best_ = Tour(std::move(order), inst_.weights);
      return true;
    }

    // Child h excludes the h-th free arc of the subtour and includes the
    // earlier ones, so the children partition the remaining tours.
    std::vector<Arc> free_arcs;
    for (const Vertex v : cycle) {
      const Arc a{v, ap.successor[v]};
      const bool fixed = std::any_of(included.begin(), included.end(), [&](const Arc& b) {
        return b.from == a.from && b.to == a.to;
      });
      if (!fixed) free_arcs.push_back(a);
    }
    const std::size_t inc_size = included.size();
    for (const Arc& a : free_arcs) {
      excluded.push_back(a);
      const bool done = explore(included, excluded);
      excluded.pop_back();
      if (!done) {
        included.resize(inc_size);
        return false;
      }
      included.push_back(a);
    }
    included.resize(inc_size);
    return true;
  }

  std::vector<TotalWeight> node_costs(const std::vector<Arc>& included,
                                      const std::vector<Arc>& excluded) const {
    std::vector<TotalWeight> cost(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        cost[i * n_ + j] = i == j ? kForbiddenCost : inst_.weights.at(i, j);
      }
    }
    for (const Arc& a : excluded) cost[a.from * n_ + a.to] = kForbiddenCost;
    for (const Arc& a : included) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (j != a.to) cost[a.from * n_ + j] = kForbiddenCost;
      }
      for (std::size_t i = 0; i < n_; ++i) {
        if (i != a.from) cost[i * n_ + a.to] = kForbiddenCost;
      }
    }
    return cost;
  }

  // Vertices of the shortest cycle of the successor permutation, in order.
  std::vector<Vertex> shortest_cycle(const std::vector<Vertex>& successor) const {
    std::vector<bool> seen(n_, false);
    std::vector<Vertex> best;
    std::vector<Vertex> cur;
    for (Vertex s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      cur.clear();
      for (Vertex v = s; !seen[v]; v = successor[v]) {
        seen[v] = true;
        cur.push_back(v);
      }
      if (best.empty() || cur.size() < best.size()) best = cur;
    }
    return best;
  }

  const AtspInstance& inst_;
  std::size_t n_;
  Tour best_;
  Clock::time_point deadline_;
  std::size_t nodes_ = 0;
};

}  // namespace

BranchAndBoundResult branch_and_bound(const AtspInstance& inst, double time_limit) {
  if (inst.size() == 0) throw InputError("empty instance");
  const auto start = Clock::now();

  // Incumbent from a fixed-seed greedy + local search run.
  Rng rng(0);
  SolverConfig cfg;
  const Tour greedy = nearest_neighbor(inst, inst.home, rng);
  Tour incumbent = local_search(inst, greedy, cfg, rng);
  if (time_limit <= 0) return {std::move(incumbent), false, 0};
  if (inst.size() < 2) return {std::move(incumbent), true, 0};

  const auto budget = std::chrono::duration_cast<Clock::duration>(
      std::chrono::duration<double>(std::min(time_limit, 1e9)));
  SubtourSearch search(inst, std::move(incumbent), start + budget);
  return search.run();
}

}  // namespace superperm
