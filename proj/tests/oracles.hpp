// Brute-force reference computations shared by the test binaries. None of
// these call into the library's algorithms.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "superperm/rng.hpp"
#include "superperm/weight_matrix.hpp"

namespace oracle {

using superperm::TotalWeight;
using superperm::Vertex;
using superperm::Weight;
using superperm::WeightMatrix;

// Every permutation of "12..n" in lexicographic order.
inline std::vector<std::string> all_permutations(int n) {
  std::string s;
  for (int i = 1; i <= n; ++i) s.push_back(static_cast<char>('0' + i));
  std::vector<std::string> out;
  do out.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  return out;
}

// Straight from the definition: least k with suffix(n-k) of s == prefix(n-k) of t.
inline int overlap(const std::string& s, const std::string& t) {
  const int n = static_cast<int>(s.size());
  for (int k = 0; k <= n; ++k) {
    if (s.compare(static_cast<std::size_t>(k), std::string::npos, t, 0,
                  static_cast<std::size_t>(n - k)) == 0) {
      return k;
    }
  }
  return n;
}

// Number of distinct permutations of 1..n appearing as windows of sp.
inline std::size_t covered(const std::string& sp, int n) {
  const std::string identity = all_permutations(n).front();
  std::vector<std::string> seen;
  for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= sp.size(); ++i) {
    std::string w = sp.substr(i, static_cast<std::size_t>(n));
    std::string sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == identity) seen.push_back(w);
  }
  std::sort(seen.begin(), seen.end());
  return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

inline TotalWeight tour_weight(const std::vector<Vertex>& order, const WeightMatrix& w) {
  TotalWeight total = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    total += w.at(order[i], order[(i + 1) % order.size()]);
  }
  return total;
}

// Minimum circuit by trying every order that starts at vertex 0.
inline TotalWeight atsp_optimum(const WeightMatrix& w) {
  std::vector<Vertex> order(w.dim());
  std::iota(order.begin(), order.end(), Vertex{0});
  TotalWeight best = std::numeric_limits<TotalWeight>::max();
  do best = std::min(best, tour_weight(order, w));
  while (std::next_permutation(order.begin() + 1, order.end()));
  return best;
}

// All minimum-weight circuits starting at vertex 0 (both directions of each
// undirected cycle when w is symmetric). Depth-first with pruning only on
// partial weights strictly above the best complete weight, so no optimum is lost.
struct OptimalTours {
  TotalWeight weight = std::numeric_limits<TotalWeight>::max();
  std::vector<std::vector<Vertex>> tours;
};

inline OptimalTours all_optimal_tours(const WeightMatrix& w) {
  const std::size_t n = w.dim();
  OptimalTours result;
  std::vector<Vertex> path{0};
  std::vector<bool> used(n, false);
  used[0] = true;
  auto dfs = [&](auto&& self, TotalWeight partial) -> void {
    if (partial > result.weight) return;
    if (path.size() == n) {
      const TotalWeight total = partial + w.at(path.back(), 0);
      if (total < result.weight) {
        result.weight = total;
        result.tours.clear();
      }
      if (total == result.weight) result.tours.push_back(path);
      return;
    }
    for (Vertex v = 1; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      path.push_back(v);
      self(self, partial + w.at(path[path.size() - 2], v));
      path.pop_back();
      used[v] = false;
    }
  };
  dfs(dfs, 0);
  return result;
}

// Off-diagonal weights uniform in [lo, hi]; diagonal 0.
inline WeightMatrix random_matrix(std::size_t n, Weight lo, Weight hi, superperm::Rng& rng) {
  WeightMatrix w(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) w.at(i, j) = lo + static_cast<Weight>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
  }
  return w;
}

inline std::vector<Vertex> random_order(std::size_t n, superperm::Rng& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  return order;
}

}  // namespace oracle
