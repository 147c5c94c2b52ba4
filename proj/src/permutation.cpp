#include "superperm/permutation.hpp"

#include <string>

#include "superperm/error.hpp"

namespace superperm {

namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxSymbols) {
    throw InputError("alphabet size must be in [1, " + std::to_string(kMaxSymbols) +
                     "], got " + std::to_string(n));
  }
}

}  // namespace

std::uint32_t factorial(int n) {
  std::uint32_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint32_t>(i);
  return f;
}

Permutation Permutation::from_symbols(std::span<const Symbol> symbols) {
  const int n = static_cast<int>(symbols.size());
  check_size(n);
  Permutation p;
  p.n_ = n;
  unsigned seen = 0;
  for (int i = 0; i < n; ++i) {
    const Symbol s = symbols[static_cast<std::size_t>(i)];
    if (s < 1 || s > n || (seen & (1u << s)) != 0) {
      throw InputError("not a permutation of 1.." + std::to_string(n));
    }
    seen |= 1u << s;
    p.symbols_[static_cast<std::size_t>(i)] = s;
  }
  return p;
}

Permutation Permutation::from_string(std::string_view digits) {
  std::array<Symbol, kMaxSymbols> buf{};
  if (digits.empty() || digits.size() > buf.size()) {
    throw InputError("permutation string must have 1.." + std::to_string(kMaxSymbols) +
                     " digits: \"" + std::string(digits) + "\"");
  }
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (c < '1' || c > '9') {
      throw InputError("invalid symbol '" + std::string(1, c) + "' in \"" +
                       std::string(digits) + "\"");
    }
    buf[i] = static_cast<Symbol>(c - '0');
  }
  return from_symbols({buf.data(), digits.size()});
}

Permutation Permutation::identity(int n) {
  check_size(n);
  Permutation p;
  p.n_ = n;
  for (int i = 0; i < n; ++i) p.symbols_[static_cast<std::size_t>(i)] = static_cast<Symbol>(i + 1);
  return p;
}

std::string Permutation::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = static_cast<char>('0' + (*this)[i]);
  return out;
}

// Lehmer code: digit i counts the smaller symbols to the right of position i.
PermIndex rank(const Permutation& p) {
  const int n = p.size();
  std::uint32_t r = 0;
  for (int i = 0; i < n; ++i) {
    std::uint32_t smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += p[j] < p[i] ? 1 : 0;
    r += smaller * factorial(n - 1 - i);
  }
  return PermIndex{r};
}

Permutation unrank(PermIndex i, int n) {
  check_size(n);
  if (i.value >= factorial(n)) {
    throw InputError("permutation index " + std::to_string(i.value) + " out of range for n=" +
                     std::to_string(n));
  }
  std::array<Symbol, kMaxSymbols> pool{};
  for (int k = 0; k < n; ++k) pool[static_cast<std::size_t>(k)] = static_cast<Symbol>(k + 1);
  int remaining = n;

  std::array<Symbol, kMaxSymbols> out{};
  std::uint32_t r = i.value;
  for (int pos = 0; pos < n; ++pos) {
    const std::uint32_t f = factorial(n - 1 - pos);
    const auto digit = static_cast<int>(r / f);
    r %= f;
    out[static_cast<std::size_t>(pos)] = pool[static_cast<std::size_t>(digit)];
    for (int k = digit; k + 1 < remaining; ++k) {
      pool[static_cast<std::size_t>(k)] = pool[static_cast<std::size_t>(k + 1)];
    }
    --remaining;
  }
  return Permutation::from_symbols({out.data(), static_cast<std::size_t>(n)});
}

int overlap_weight(const Permutation& s, const Permutation& t) {
  const int n = s.size();
  if (t.size() != n) {
    throw InputError("overlap_weight: permutations of different sizes (" + std::to_string(n) +
                     " vs " + std::to_string(t.size()) + ")");
  }
  for (int k = 0; k < n; ++k) {
    bool match = true;
    for (int j = 0; j < n - k && match; ++j) match = s[k + j] == t[j];
    if (match) return k;
  }
  return n;
}

bool is_permutation_window(std::string_view w, int n) {
  if (n < 1 || n > kMaxSymbols || w.size() != static_cast<std::size_t>(n)) return false;
  unsigned seen = 0;
  for (const char c : w) {
    const int s = c - '0';
    if (s < 1 || s > n || (seen & (1u << s)) != 0) return false;
    seen |= 1u << s;
  }
  return true;
}

}  // namespace superperm
