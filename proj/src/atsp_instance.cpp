#include "superperm/atsp_instance.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "superperm/error.hpp"
#include "tsplib_format.hpp"

namespace superperm {

namespace {

std::vector<Permutation> all_permutations(int n) {
  const std::uint32_t count = factorial(n);
  std::vector<Permutation> perms;
  perms.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) perms.push_back(unrank(PermIndex{i}, n));
  return perms;
}

void fill_row(const std::vector<Permutation>& perms, std::size_t i, std::span<Weight> out) {
  for (std::size_t j = 0; j < perms.size(); ++j) {
    if (i == j) {
      out[j] = kDiagonalSentinel;
    } else if (j == 0) {
      out[j] = 0;  // arc into home
    } else {
      out[j] = overlap_weight(perms[i], perms[j]);
    }
  }
}

void check_alphabet(int n) {
  if (n < 1 || n > kMaxSymbols) {
    throw InputError("alphabet size must be in [1, " + std::to_string(kMaxSymbols) + "], got " +
                     std::to_string(n));
  }
}

AtspInstance empty_instance(int n) {
  check_alphabet(n);
  AtspInstance inst;
  inst.n = n;
  inst.name = "superperm" + std::to_string(n);
  inst.weights = WeightMatrix(factorial(n));
  inst.home = 0;
  inst.diagonal_sentinel = kDiagonalSentinel;
  return inst;
}

}  // namespace

AtspInstance build_atsp(int n) {
  AtspInstance inst = empty_instance(n);
  const auto perms = all_permutations(n);
  const auto count = static_cast<std::ptrdiff_t>(perms.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    fill_row(perms, static_cast<std::size_t>(i), inst.weights.row(static_cast<std::size_t>(i)));
  }
  return inst;
}

AtspInstance build_atsp_serial(int n) {
  AtspInstance inst = empty_instance(n);
  const auto perms = all_permutations(n);
  for (std::size_t i = 0; i < perms.size(); ++i) fill_row(perms, i, inst.weights.row(i));
  return inst;
}

TotalWeight length_from_circuit_weight(int n, TotalWeight circuit_weight) {
  return n + circuit_weight;
}

void write_tsplib_atsp(const AtspInstance& inst, std::ostream& out) {
  const std::string name =
      inst.name.empty() ? "atsp" + std::to_string(inst.size()) : inst.name;
  tsplib::write_matrix(out, name, "ATSP", std::nullopt, inst.size(),
                       [&](std::size_t i, std::span<Weight> row) {
                         const auto src = inst.weights.row(i);
                         std::copy(src.begin(), src.end(), row.begin());
                       });
}

void write_superperm_atsp(int n, std::ostream& out) {
  check_alphabet(n);
  const auto perms = all_permutations(n);
  tsplib::write_matrix(out, "superperm" + std::to_string(n), "ATSP", std::nullopt, perms.size(),
                       [&](std::size_t i, std::span<Weight> row) { fill_row(perms, i, row); });
}

AtspInstance parse_tsplib_atsp(std::istream& in) {
  auto file = tsplib::read_matrix(in, "ATSP");
  AtspInstance inst;
  inst.name = std::move(file.name);
  inst.weights = std::move(file.weights);
  inst.home = 0;
  inst.diagonal_sentinel = inst.weights.at(0, 0);
  for (int n = 1; n <= kMaxSymbols; ++n) {
    if (factorial(n) == inst.size()) {
      inst.n = n;
      break;
    }
  }
  return inst;
}

}  // namespace superperm
