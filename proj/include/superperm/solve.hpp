#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "superperm/atsp_instance.hpp"
#include "superperm/local_search.hpp"
#include "superperm/tour.hpp"

namespace superperm {

struct SolveResult {
  Tour best;
  // Local-optimum weight of each completed run, in run order.
  std::vector<TotalWeight> weight_history;
  // 1-based run at which the best weight was first reached.
  std::size_t runs_to_best = 0;
  double elapsed = 0.0;  // seconds

  std::size_t runs() const noexcept { return weight_history.size(); }
};

// Called once per finished run (1-based) with its weight and the best weight
// among runs finished so far. Calls are serialized.
using RunObserver = std::function<void(std::size_t run, TotalWeight weight, TotalWeight best)>;

// Independent nearest-neighbour + local-search runs. Run i draws from
// Rng::stream(cfg.seed, i), so without a time limit the result depends only on
// (seed, restarts, target) and not on cfg.workers. With a target, the runs
// kept are those up to and including the first (lowest-index) run that hits it.
// Runs are distributed over cfg.workers OpenMP threads.
SolveResult solve(const AtspInstance& inst, const SolverConfig& cfg,
                  const RunObserver& observer = {});

// Single-threaded reference for solve(); ignores cfg.workers.
SolveResult solve_serial(const AtspInstance& inst, const SolverConfig& cfg,
                         const RunObserver& observer = {});

// The tour one run produces; exposed so tests can replay a run.
Tour solve_single_run(const AtspInstance& inst, const CandidateLists& candidates,
                      const SolverConfig& cfg, std::size_t run_index);

}  // namespace superperm
