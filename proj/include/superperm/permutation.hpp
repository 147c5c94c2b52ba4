#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace superperm {

inline constexpr int kMaxSymbols = 8;

using Symbol = std::uint8_t;

// Lexicographic rank of a permutation among all n! permutations of 1..n.
struct PermIndex {
  std::uint32_t value = 0;

  friend auto operator<=>(const PermIndex&, const PermIndex&) = default;
};

// n! for 0 <= n <= kMaxSymbols.
std::uint32_t factorial(int n);

// An arrangement of the symbols 1..n, 1 <= n <= 8. Always valid once built.
class Permutation {
 public:
  // Throws InputError unless `symbols` holds each of 1..n exactly once.
  static Permutation from_symbols(std::span<const Symbol> symbols);
  // Digit-string form, e.g. "2413".
  static Permutation from_string(std::string_view digits);
  static Permutation identity(int n);

  int size() const noexcept { return n_; }
  Symbol operator[](int i) const noexcept { return symbols_[static_cast<std::size_t>(i)]; }
  std::span<const Symbol> symbols() const noexcept {
    return {symbols_.data(), static_cast<std::size_t>(n_)};
  }
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) noexcept {
    return a.n_ == b.n_ && a.symbols_ == b.symbols_;
  }

 private:
  Permutation() = default;

  std::array<Symbol, kMaxSymbols> symbols_{};
  int n_ = 0;
};

PermIndex rank(const Permutation& p);

// Throws InputError when n is unsupported or i >= n!.
Permutation unrank(PermIndex i, int n);

// Smallest k in [0, n] such that the last n-k symbols of s equal the first
// n-k symbols of t: the number of symbols appended when t follows s.
// Throws InputError if the sizes differ.
int overlap_weight(const Permutation& s, const Permutation& t);

// True iff w has length n and contains each digit 1..n exactly once.
bool is_permutation_window(std::string_view w, int n);

}  // namespace superperm
