#include "superperm/solve.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <optional>

#include <omp.h>

#include "superperm/error.hpp"

namespace superperm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Folds finished runs into a SolveResult. Runs past the first target hit or
// past the first run skipped by the time limit are discarded, and ties go to
// the lower index, so the outcome does not depend on completion order.
SolveResult aggregate(std::vector<std::optional<Tour>>& runs, Clock::time_point start) {
  SolveResult result;
  TotalWeight best = std::numeric_limits<TotalWeight>::max();
  for (std::size_t i = 0; i < runs.size() && runs[i]; ++i) {
    const TotalWeight w = runs[i]->weight();
    result.weight_history.push_back(w);
    if (w < best) {
      best = w;
      result.best = std::move(*runs[i]);
      result.runs_to_best = i + 1;
    }
  }
  result.elapsed = seconds_since(start);
  return result;
}

SolveResult run_all(const AtspInstance& inst, const SolverConfig& cfg,
                    const RunObserver& observer, int workers) {
  cfg.validate();
  if (inst.size() == 0) throw InputError("empty instance");
  const auto start = Clock::now();
  const CandidateLists candidates(inst.weights, cfg.max_candidates);
  const auto restarts = static_cast<std::size_t>(cfg.restarts);

  std::vector<std::optional<Tour>> runs(restarts);
  // Lowest run index that reached the target; later runs are not needed.
  std::atomic<std::size_t> cutoff{restarts};
  std::mutex observe_mu;
  TotalWeight best_seen = std::numeric_limits<TotalWeight>::max();

  const auto body = [&](std::size_t i) {
    if (i > cutoff.load(std::memory_order_relaxed)) return;
    if (cfg.time_limit && seconds_since(start) >= *cfg.time_limit && i > 0) return;
    Tour tour = solve_single_run(inst, candidates, cfg, i);
    const TotalWeight w = tour.weight();
    if (cfg.target_weight && w <= *cfg.target_weight) {
      std::size_t cur = cutoff.load();
      while (i < cur && !cutoff.compare_exchange_weak(cur, i)) {
      }
    }
    runs[i] = std::move(tour);
    if (observer) {
      const std::lock_guard lock(observe_mu);
      best_seen = std::min(best_seen, w);
      observer(i + 1, w, best_seen);
    }
  };

  if (workers <= 1) {
    for (std::size_t i = 0; i < restarts; ++i) body(i);
  } else {
    const auto count = static_cast<std::ptrdiff_t>(restarts);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::ptrdiff_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  }

  const std::size_t keep = std::min(restarts, cutoff.load() + 1);
  runs.resize(keep);
  return aggregate(runs, start);
}

}  // namespace

Tour solve_single_run(const AtspInstance& inst, const CandidateLists& candidates,
                      const SolverConfig& cfg, std::size_t run_index) {
  Rng rng = Rng::stream(cfg.seed, run_index);
  const auto start = static_cast<Vertex>(rng.below(inst.size()));
  const Tour initial = nearest_neighbor(inst, start, rng);
  const Tour improved = local_search(inst, candidates, initial, cfg, rng);
  if (cfg.kicks == 0) return improved;
  return perturb_and_improve(inst, candidates, improved, cfg, rng);
}

SolveResult solve(const AtspInstance& inst, const SolverConfig& cfg, const RunObserver& observer) {
  return run_all(inst, cfg, observer, cfg.workers);
}

SolveResult solve_serial(const AtspInstance& inst, const SolverConfig& cfg,
                         const RunObserver& observer) {
  return run_all(inst, cfg, observer, 1);
}

}  // namespace superperm
