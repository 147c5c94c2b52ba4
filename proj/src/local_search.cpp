#include "superperm/local_search.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "superperm/error.hpp"

namespace superperm {

void SolverConfig::validate() const {
  if (restarts < 1) throw InputError("restarts must be >= 1");
  if (kicks < 0) throw InputError("kicks must be >= 0");
  if (max_candidates < 2) throw InputError("max_candidates must be >= 2");
  if (move_depth != 2 && move_depth != 3) throw InputError("move_depth must be 2 or 3");
  if (workers < 1) throw InputError("workers must be >= 1");
  if (time_limit && *time_limit < 0) throw InputError("time limit must be non-negative");
}

CandidateLists::CandidateLists(const WeightMatrix& weights, int max_candidates) {
  const std::size_t n = weights.dim();
  width_ = n == 0 ? 0 : std::min<std::size_t>(static_cast<std::size_t>(max_candidates), n - 1);
  out_.resize(n * width_);
  in_.resize(n * width_);
  std::vector<Vertex> others;
  others.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    others.clear();
    for (Vertex u = 0; u < n; ++u) {
      if (u != v) others.push_back(u);
    }
    const auto by_out = [&](Vertex a, Vertex b) {
      const Weight wa = weights.arc(v, a);
      const Weight wb = weights.arc(v, b);
      return wa != wb ? wa < wb : a < b;
    };
    std::partial_sort(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(width_),
                      others.end(), by_out);
    std::copy_n(others.begin(), width_, out_.begin() + static_cast<std::ptrdiff_t>(v * width_));

    const auto by_in = [&](Vertex a, Vertex b) {
      const Weight wa = weights.arc(a, v);
      const Weight wb = weights.arc(b, v);
      return wa != wb ? wa < wb : a < b;
    };
    std::partial_sort(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(width_),
                      others.end(), by_in);
    std::copy_n(others.begin(), width_, in_.begin() + static_cast<std::ptrdiff_t>(v * width_));
  }
}

Tour nearest_neighbor(const AtspInstance& inst, Vertex start, Rng& rng) {
  const std::size_t n = inst.size();
  if (start >= n) throw InputError("start vertex " + std::to_string(start) + " out of range");
  std::vector<bool> visited(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  Vertex cur = start;
  visited[cur] = true;
  order.push_back(cur);
  for (std::size_t step = 1; step < n; ++step) {
    Weight best = 0;
    Vertex choice = 0;
    std::uint64_t ties = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (visited[v]) continue;
      const Weight w = inst.weights.arc(cur, v);
      if (ties == 0 || w < best) {
        best = w;
        choice = v;
        ties = 1;
      } else if (w == best) {
        // Reservoir sampling over the tied successors.
        ++ties;
        if (rng.below(ties) == 0) choice = v;
      }
    }
    visited[choice] = true;
    order.push_back(choice);
    cur = choice;
  }
  return Tour(std::move(order), inst.weights);
}

namespace {

// Array tour with position index. Moves are applied by rebuilding the order,
// which is O(N) but rare compared with move evaluation.
class Improver {
 public:
  Improver(const WeightMatrix& w, const CandidateLists& cand, const std::vector<Vertex>& order,
           int move_depth)
      : w_(w), cand_(cand), order_(order), pos_(order.size()), scratch_(order.size()),
        queued_(order.size(), false), move_depth_(move_depth) {
    index_positions();
  }

  void run(Rng& rng) {
    const std::size_t n = order_.size();
    // Too small for a segment move with distinct endpoints; already optimal
    // up to rotation for n <= 3 under direction-preserving moves.
    if (n < 4) return;
    std::vector<Vertex> initial(order_);
    for (std::size_t i = n; i > 1; --i) std::swap(initial[i - 1], initial[rng.below(i)]);
    for (const Vertex v : initial) push(v);
    drain();
  }

  // Iterated local search: kick a short stretch of the tour, repair around
  // the touched vertices, and keep the result while it stays within
  // kAcceptSlack of the best weight seen. Ends on the best tour.
  void kick_and_repair(std::size_t kicks, Rng& rng) {
    constexpr TotalWeight kAcceptSlack = 3;
    const std::size_t n = order_.size();
    if (n < 8) return;
    TotalWeight best = circuit_weight(order_, w_);
    std::vector<Vertex> best_order = order_;
    std::vector<Vertex> saved;
    for (std::size_t k = 0; k < kicks; ++k) {
      saved = order_;
      kick(rng);
      drain();
      const TotalWeight w = circuit_weight(order_, w_);
      if (w < best) {
        best = w;
        best_order = order_;
      } else if (w > best + kAcceptSlack) {
        order_.swap(saved);
        index_positions();
      }
    }
    order_ = std::move(best_order);
    index_positions();
  }

  const std::vector<Vertex>& order() const { return order_; }

 private:
  std::size_t n() const { return order_.size(); }
  Vertex succ(Vertex v) const { return order_[pos_[v] + 1 == n() ? 0 : pos_[v] + 1]; }
  Vertex pred(Vertex v) const { return order_[pos_[v] == 0 ? n() - 1 : pos_[v] - 1]; }
  // Offset of x after `from` along the tour, in [0, n).
  std::size_t rel(Vertex from, Vertex x) const { return (pos_[x] + n() - pos_[from]) % n(); }
  TotalWeight arc(Vertex a, Vertex b) const { return w_.arc(a, b); }

  void drain() {
    while (!queue_.empty()) {
      const Vertex v = queue_.back();
      queue_.pop_back();
      queued_[v] = false;
      if (try_or_opt(v) || (move_depth_ >= 3 && try_segment_exchange(v))) push(v);
    }
  }

  // Pure 4-change without reversal: a1 S2 S3 S4 rest -> a1 S4 S3 S2 rest,
  // with the cut points inside a window of at most kKickSpan positions. No
  // single Or-opt or 3-opt move undoes it.
  void kick(Rng& rng) {
    constexpr std::size_t kKickSpan = 10;
    const std::size_t n = order_.size();
    const std::size_t span = std::min(kKickSpan, n - 1);
    std::array<std::size_t, 3> cut{};
    do {
      for (auto& c : cut) c = 1 + rng.below(span);
      std::sort(cut.begin(), cut.end());
    } while (cut[0] == cut[1] || cut[1] == cut[2]);
    const std::size_t base = rng.below(n);
    const Vertex a1 = order_[base];
    const auto at = [&](std::size_t r) { return order_[(base + r) % n]; };
    std::size_t k = 0;
    scratch_[k++] = a1;
    for (std::size_t r = cut[1] + 1; r <= cut[2]; ++r) scratch_[k++] = at(r);
    for (std::size_t r = cut[0] + 1; r <= cut[1]; ++r) scratch_[k++] = at(r);
    for (std::size_t r = 1; r <= cut[0]; ++r) scratch_[k++] = at(r);
    for (std::size_t r = cut[2] + 1; r < n; ++r) scratch_[k++] = at(r);
    const std::array<Vertex, 8> touched = {a1,         at(1),          at(cut[0]), at(cut[0] + 1),
                                           at(cut[1]), at(cut[1] + 1), at(cut[2]), at((cut[2] + 1) % n)};
    order_.swap(scratch_);
    index_positions();
    for (const Vertex v : touched) push(v);
  }

  void push(Vertex v) {
    if (!queued_[v]) {
      queued_[v] = true;
      queue_.push_back(v);
    }
  }

  void index_positions() {
    for (std::size_t i = 0; i < order_.size(); ++i) pos_[order_[i]] = static_cast<Vertex>(i);
  }

  // Tour a1 [a2..b1] [b2..c1] c2 ... becomes a1 [b2..c1] [a2..b1] c2 ...
  // As a cyclic sequence R S1 S2 -> R S2 S1, which equals swapping any two
  // adjacent blocks of the three, so only the cheapest pair is rewritten.
  void exchange(Vertex a1, Vertex b1, Vertex c1) {
    const std::size_t nn = n();
    const std::size_t len1 = rel(a1, b1);
    const std::size_t len2 = rel(b1, c1);
    const std::size_t len_rest = nn - len1 - len2;
    const std::size_t a2 = (pos_[a1] + 1) % nn;
    const std::size_t b2 = (pos_[b1] + 1) % nn;
    const std::size_t c2 = (pos_[c1] + 1) % nn;
    if (len1 + len2 <= len2 + len_rest && len1 + len2 <= len_rest + len1) {
      swap_blocks(a2, len1, len2);
    } else if (len2 + len_rest <= len_rest + len1) {
      swap_blocks(b2, len2, len_rest);
    } else {
      swap_blocks(c2, len_rest, len1);
    }
  }

  // [X Y] starting at array index `first` (cyclically) becomes [Y X].
  void swap_blocks(std::size_t first, std::size_t len_x, std::size_t len_y) {
    const std::size_t nn = n();
    const std::size_t total = len_x + len_y;
    std::size_t idx = first + len_x;
    if (idx >= nn) idx -= nn;
    for (std::size_t k = 0; k < len_y; ++k) {
      scratch_[k] = order_[idx];
      if (++idx == nn) idx = 0;
    }
    idx = first;
    for (std::size_t k = 0; k < len_x; ++k) {
      scratch_[len_y + k] = order_[idx];
      if (++idx == nn) idx = 0;
    }
    idx = first;
    for (std::size_t k = 0; k < total; ++k) {
      order_[idx] = scratch_[k];
      pos_[scratch_[k]] = static_cast<Vertex>(idx);
      if (++idx == nn) idx = 0;
    }
  }

  bool apply(Vertex a1, Vertex b1, Vertex c1) {
    const Vertex a2 = succ(a1);
    const Vertex b2 = succ(b1);
    const Vertex c2 = succ(c1);
    exchange(a1, b1, c1);
    for (const Vertex v : {a1, a2, b1, b2, c1, c2}) push(v);
    return true;
  }

  // Move a segment of 1..3 vertices starting at s1 between two adjacent
  // vertices u -> x elsewhere on the tour, keeping its direction.
  bool try_or_opt(Vertex s1) {
    const Vertex p = pred(s1);
    Vertex s_last = s1;
    for (int len = 1; len <= 3; ++len) {
      if (len > 1) s_last = succ(s_last);
      const Vertex q = succ(s_last);
      if (static_cast<std::size_t>(len) + 2 > n() || q == p || s_last == p) break;
      const TotalWeight removal = arc(p, s1) + arc(s_last, q) - arc(p, q);
      const std::size_t seg_end = rel(s1, s_last);
      const auto in_segment = [&](Vertex v) { return rel(s1, v) <= seg_end; };
      const auto gain_at = [&](Vertex u, Vertex x) {
        return removal + arc(u, x) - arc(u, s1) - arc(s_last, x);
      };
      for (const Vertex x : cand_.successors(s_last)) {
        const Vertex u = pred(x);
        if (in_segment(x) || in_segment(u)) continue;
        if (gain_at(u, x) > 0) return apply(p, s_last, u);
      }
      for (const Vertex u : cand_.predecessors(s1)) {
        const Vertex x = succ(u);
        if (in_segment(u) || in_segment(x)) continue;
        if (gain_at(u, x) > 0) return apply(p, s_last, u);
      }
    }
    return false;
  }

  // Sequential 3-opt without reversal: remove (a1,a2), (b1,b2), (c1,c2) and
  // add (a1,b2), (b1,c2), (c1,a2). The first two added arcs come from the
  // candidate lists; the first partial gain may be zero, later ones must be
  // positive. A move that
  // does not pay off on its own may be applied tentatively and extended by
  // a further exchange starting at c1, whose closing arc (c1,a2) it reopens;
  // the chain is undone unless some prefix of it improves the tour.
  bool try_segment_exchange(Vertex a1) {
    return chain(a1, arc(a1, succ(a1)), 0);
  }

  // `open_gain` is the chain's gain before paying for the closing arc out of a1.
  bool chain(Vertex a1, TotalWeight open_gain, std::size_t depth) {
    const Vertex a2 = succ(a1);
    std::size_t tried = 0;
    for (const Vertex b2 : cand_.successors(a1)) {
      const TotalWeight g1 = open_gain - arc(a1, b2);
      if (g1 < 0 || (g1 == 0 && depth > 0)) break;
      if (b2 == a2) continue;
      const Vertex b1 = pred(b2);
      const std::size_t rb2 = rel(a1, b2);
      for (const Vertex c2 : cand_.successors(b1)) {
        const TotalWeight g2 = g1 + arc(b1, b2) - arc(b1, c2);
        if (g2 <= 0) break;
        std::size_t rc2 = rel(a1, c2);
        if (rc2 == 0) rc2 = n();
        if (rc2 <= rb2) continue;
        const Vertex c1 = pred(c2);
        const TotalWeight reopened = g2 + arc(c1, c2);
        if (reopened - arc(c1, a2) > 0) return apply(a1, b1, c1);
        if (depth + 1 >= kChainBreadth.size() || tried >= kChainBreadth[depth]) continue;
        ++tried;
        exchange(a1, b1, c1);
        if (chain(c1, reopened, depth + 1)) {
          for (const Vertex v : {a1, a2, b1, b2, c1, c2}) push(v);
          return true;
        }
        exchange(a1, c1, b1);
      }
    }
    return false;
  }

  // Tentative moves explored per chain level; the size is the maximum depth.
  static constexpr std::array<std::size_t, 5> kChainBreadth = {5, 3, 2, 1, 1};

  const WeightMatrix& w_;
  const CandidateLists& cand_;
  std::vector<Vertex> order_;
  std::vector<Vertex> pos_;
  std::vector<Vertex> scratch_;
  std::vector<bool> queued_;
  std::vector<Vertex> queue_;
  int move_depth_;
};

}  // namespace

Tour local_search(const AtspInstance& inst, const Tour& t, const SolverConfig& cfg, Rng& rng) {
  const CandidateLists candidates(inst.weights, cfg.max_candidates);
  return local_search(inst, candidates, t, cfg, rng);
}

Tour local_search(const AtspInstance& inst, const CandidateLists& candidates, const Tour& t,
                  const SolverConfig& cfg, Rng& rng) {
  cfg.validate();
  if (t.size() != inst.size()) throw StructuralError("tour does not match the instance size");
  Improver improver(inst.weights, candidates, t.order(), cfg.move_depth);
  improver.run(rng);
  Tour result(improver.order(), inst.weights);
  return result.weight() <= t.weight() ? result : t;
}

Tour perturb_and_improve(const AtspInstance& inst, const CandidateLists& candidates,
                         const Tour& t, const SolverConfig& cfg, Rng& rng) {
  cfg.validate();
  if (t.size() != inst.size()) throw StructuralError("tour does not match the instance size");
  Improver improver(inst.weights, candidates, t.order(), cfg.move_depth);
  improver.kick_and_repair(static_cast<std::size_t>(cfg.kicks), rng);
  Tour result(improver.order(), inst.weights);
  return result.weight() <= t.weight() ? result : t;
}

}  // namespace superperm
