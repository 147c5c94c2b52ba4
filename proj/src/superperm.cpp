#include "superperm/superperm.hpp"

#include <optional>
#include <set>
#include <utility>
#include <string>

#include "superperm/error.hpp"

namespace superperm {

namespace {

void check_instance(const AtspInstance& inst, int n) {
  if (inst.n != n || inst.size() != factorial(n)) {
    throw InputError("instance does not match alphabet size " + std::to_string(n));
  }
}

constexpr std::size_t kTightSearchBudget = 2'000'000;

// Window order whose compress() reproduces sp exactly: starts at position 0,
// ends at the last window, and each chosen window sits overlap_weight places
// after the previous one. Depth-first over window positions, pruned when some
// unused permutation has no occurrence left. Empty if none is found within
// kTightSearchBudget steps.
std::vector<Vertex> tight_order(const Superpermutation& sp, std::size_t vertices) {
  const std::size_t n = static_cast<std::size_t>(sp.n());
  const std::size_t last = sp.length() - n;
  std::vector<std::optional<Permutation>> window(last + 1);
  std::vector<std::uint32_t> rank_at(last + 1, 0);
  std::vector<std::size_t> last_seen(vertices, 0);
  for (auto& w : split(sp)) {
    rank_at[w.position] = rank(w.perm).value;
    last_seen[rank_at[w.position]] = w.position;
    window[w.position] = w.perm;
  }

  // Unused permutations keyed by their last occurrence.
  std::set<std::pair<std::size_t, std::uint32_t>> pending;
  for (std::uint32_t r = 0; r < vertices; ++r) pending.emplace(last_seen[r], r);
  auto take = [&](std::uint32_t r) { pending.erase({last_seen[r], r}); };
  auto give_back = [&](std::uint32_t r) { pending.emplace(last_seen[r], r); };

  // Shifts are tried from n down to 1: a window reached by a short shift is
  // often an incidental occurrence rather than the next appended permutation.
  std::vector<std::size_t> pos{0};
  std::vector<std::size_t> shift{n + 1};
  take(rank_at[0]);
  std::size_t budget = kTightSearchBudget;
  while (!pos.empty()) {
    const std::size_t p = pos.back();
    const std::size_t k = --shift.back();
    if (pending.empty() && p == last) break;
    if (pending.empty() || k == 0 || p + 1 > pending.begin()->first ||
        last - p > n * pending.size()) {
      give_back(rank_at[p]);
      pos.pop_back();
      shift.pop_back();
      continue;
    }
    const std::size_t q = p + k;
    if (q > last || q > pending.begin()->first || !window[q]) continue;
    const auto r = rank_at[q];
    if (!pending.count({last_seen[r], r})) continue;
    // The final window must be the last one chosen.
    if (r == rank_at[last] && q != last) continue;
    if (overlap_weight(*window[p], *window[q]) != static_cast<int>(k)) continue;
    if (--budget == 0) return {};
    take(r);
    pos.push_back(q);
    shift.push_back(n + 1);
  }
  std::vector<Vertex> order;
  order.reserve(pos.size());
  for (const auto p : pos) order.push_back(rank_at[p]);
  return order;
}

}  // namespace

Superpermutation::Superpermutation(std::string text, int n) : text_(std::move(text)), n_(n) {
  if (n < 1 || n > kMaxSymbols) {
    throw InputError("alphabet size must be in [1, " + std::to_string(kMaxSymbols) + "], got " +
                     std::to_string(n));
  }
  for (std::size_t i = 0; i < text_.size(); ++i) {
    const char c = text_[i];
    if (c < '1' || c > '0' + n) {
      throw InputError("character '" + std::string(1, c) + "' at position " + std::to_string(i) +
                       " is outside the alphabet 1.." + std::to_string(n));
    }
  }
}

std::vector<Window> split(const Superpermutation& sp) {
  std::vector<Window> out;
  const auto width = static_cast<std::size_t>(sp.n());
  const std::string_view text = sp.text();
  for (std::size_t i = 0; i + width <= text.size(); ++i) {
    const auto w = text.substr(i, width);
    if (is_permutation_window(w, sp.n())) out.push_back({i, Permutation::from_string(w)});
  }
  return out;
}

VerifyReport verify(const Superpermutation& sp) {
  const std::uint32_t total = factorial(sp.n());
  std::vector<bool> seen(total, false);
  std::size_t distinct = 0;
  for (const auto& w : split(sp)) {
    const auto r = rank(w.perm).value;
    if (!seen[r]) {
      seen[r] = true;
      ++distinct;
    }
  }
  VerifyReport report;
  report.length = sp.length();
  report.distinct_covered = distinct;
  report.missing = total - distinct;
  report.valid = report.missing == 0;
  report.path_weight = static_cast<TotalWeight>(sp.length()) - sp.n();
  return report;
}

Superpermutation tour_to_superperm(const Tour& t, const AtspInstance& inst) {
  if (inst.n < 1 || t.size() != inst.size()) {
    throw StructuralError("tour has " + std::to_string(t.size()) + " vertices, instance has " +
                          std::to_string(inst.size()));
  }
  const int n = inst.n;
  const Tour rotated = t.rotated_to(inst.home);
  const auto& order = rotated.order();

  Permutation prev = unrank(PermIndex{order.front()}, n);
  std::string text = prev.to_string();
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Permutation cur = unrank(PermIndex{order[i]}, n);
    const int k = overlap_weight(prev, cur);
    const std::string digits = cur.to_string();
    text.append(digits, static_cast<std::size_t>(n - k), std::string::npos);
    prev = cur;
  }
  return Superpermutation(std::move(text), n);
}

Tour superperm_to_tour(const Superpermutation& sp, const AtspInstance& inst) {
  const int n = sp.n();
  check_instance(inst, n);
  const auto report = verify(sp);
  if (!report.valid) {
    throw InputError("not a superpermutation: " + std::to_string(report.missing) +
                     " permutations missing");
  }
  const auto home = unrank(PermIndex{inst.home}, n).to_string();
  if (sp.text().compare(0, home.size(), home) != 0) {
    throw InputError("superpermutation must start with " + home);
  }

  std::vector<bool> seen(inst.size(), false);
  std::vector<Vertex> order;
  order.reserve(inst.size());
  for (const auto& w : split(sp)) {
    const auto r = rank(w.perm).value;
    if (!seen[r]) {
      seen[r] = true;
      order.push_back(r);
    }
  }
  Tour first(std::move(order), inst.weights);
  if (first.weight() == report.path_weight) return first;
  auto tight = tight_order(sp, inst.size());
  if (tight.empty()) return first;
  return Tour(std::move(tight), inst.weights);
}

}  // namespace superperm
