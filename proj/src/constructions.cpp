#include "superperm/constructions.hpp"

#include <string>

#include "superperm/error.hpp"

namespace superperm {

PermSequence expand(const PermSequence& seq) {
  if (seq.empty()) throw InputError("expand: empty sequence");
  const int m = seq.front().size();
  if (m + 1 > kMaxSymbols) throw InputError("expand: result would exceed " + std::to_string(kMaxSymbols) + " symbols");
  if (seq.size() != factorial(m)) {
    throw InputError("expand: expected all " + std::to_string(factorial(m)) +
                     " permutations of " + std::to_string(m) + " symbols, got " +
                     std::to_string(seq.size()));
  }
  std::vector<bool> seen(seq.size(), false);
  for (const auto& p : seq) {
    if (p.size() != m) throw InputError("expand: permutations of mixed sizes");
    const auto r = rank(p).value;
    if (seen[r]) throw InputError("expand: permutation " + p.to_string() + " repeated");
    seen[r] = true;
  }

  const int n = m + 1;
  PermSequence out;
  out.reserve(seq.size() * static_cast<std::size_t>(n));
  std::array<Symbol, kMaxSymbols> base{};
  std::array<Symbol, kMaxSymbols> shifted{};
  for (const auto& p : seq) {
    for (int i = 0; i < m; ++i) base[static_cast<std::size_t>(i)] = p[i];
    base[static_cast<std::size_t>(m)] = static_cast<Symbol>(n);
    for (int shift = 0; shift < n; ++shift) {
      for (int i = 0; i < n; ++i) {
        shifted[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>((i + shift) % n)];
      }
      out.push_back(Permutation::from_symbols({shifted.data(), static_cast<std::size_t>(n)}));
    }
  }
  return out;
}

std::string compress(const PermSequence& seq) {
  if (seq.empty()) throw InputError("compress: empty sequence");
  const int n = seq.front().size();
  std::string out = seq.front().to_string();
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const int k = overlap_weight(seq[i - 1], seq[i]);
    const std::string next = seq[i].to_string();
    out.append(next, static_cast<std::size_t>(n - k), std::string::npos);
  }
  return out;
}

PermSequence first_appearance_order(std::string_view sp, int n) {
  if (n < 1 || n > kMaxSymbols) throw InputError("alphabet size out of range: " + std::to_string(n));
  const std::uint32_t total = factorial(n);
  std::vector<bool> seen(total, false);
  PermSequence order;
  order.reserve(total);
  const auto width = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + width <= sp.size() && order.size() < total; ++i) {
    const auto window = sp.substr(i, width);
    if (!is_permutation_window(window, n)) continue;
    auto p = Permutation::from_string(window);
    const auto r = rank(p).value;
    if (!seen[r]) {
      seen[r] = true;
      order.push_back(p);
    }
  }
  if (order.size() != total) {
    throw InputError("not a superpermutation: " + std::to_string(total - order.size()) +
                     " of " + std::to_string(total) + " permutations missing");
  }
  return order;
}

std::string extend_superpermutation(std::string_view seed, int seed_n) {
  return compress(expand(first_appearance_order(seed, seed_n)));
}

std::string palindromic(int n) {
  if (n < 1 || n > kMaxSymbols) {
    throw InputError("alphabet size must be in [1, " + std::to_string(kMaxSymbols) + "], got " +
                     std::to_string(n));
  }
  std::string sp = "1";
  for (int k = 1; k < n; ++k) sp = extend_superpermutation(sp, k);
  return sp;
}

}  // namespace superperm
