#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "superperm/atsp_instance.hpp"
#include "superperm/rng.hpp"
#include "superperm/tour.hpp"

namespace superperm {

struct SolverConfig {
  std::uint64_t seed = 1;
  int restarts = 1;
  // Per-vertex shortlist size for the move scans.
  int max_candidates = 6;
  // 2: Or-opt segment moves only. 3: also direction-preserving 3-opt.
  int move_depth = 3;
  // Perturbation rounds per run after the first local optimum; 0 gives plain
  // restarts of nearest neighbour + local search.
  int kicks = 1000;
  std::optional<double> time_limit;  // seconds
  std::optional<TotalWeight> target_weight;
  int workers = 1;

  // Throws InputError on restarts < 1, kicks < 0, max_candidates < 2, move_depth not in
  // {2, 3}, workers < 1 or a negative time limit.
  void validate() const;
};

// Cheapest successors (and predecessors) of every vertex, ties by index.
class CandidateLists {
 public:
  CandidateLists(const WeightMatrix& weights, int max_candidates);

  std::span<const Vertex> successors(Vertex v) const noexcept {
    return {out_.data() + v * width_, width_};
  }
  std::span<const Vertex> predecessors(Vertex v) const noexcept {
    return {in_.data() + v * width_, width_};
  }

 private:
  std::size_t width_ = 0;
  std::vector<Vertex> out_;
  std::vector<Vertex> in_;
};

// Greedy tour from `start`; ties between equally cheap successors are broken
// uniformly at random.
Tour nearest_neighbor(const AtspInstance& inst, Vertex start, Rng& rng);

// Iterated local search: `kicks` rounds of a random segment-exchange kick on a
// short stretch followed by local repair. A repaired tour replaces the current
// one if it is at most slightly heavier than the best seen; the best is
// returned, so the result never weighs more than `t`.
Tour perturb_and_improve(const AtspInstance& inst, const CandidateLists& candidates,
                         const Tour& t, const SolverConfig& cfg, Rng& rng);

// Improves `t` until no Or-opt move (segments of 1..3 vertices, never
// reversed) nor, at move_depth 3, segment-exchange 3-opt move helps. The
// result never weighs more than `t`.
Tour local_search(const AtspInstance& inst, const Tour& t, const SolverConfig& cfg, Rng& rng);
Tour local_search(const AtspInstance& inst, const CandidateLists& candidates, const Tour& t,
                  const SolverConfig& cfg, Rng& rng);

}  // namespace superperm
