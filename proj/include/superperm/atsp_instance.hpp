#pragma once

#include <iosfwd>
#include <string>

#include "superperm/permutation.hpp"
#include "superperm/weight_matrix.hpp"

namespace superperm {

inline constexpr Weight kDiagonalSentinel = 9999;

// Complete directed graph on the n! permutations of 1..n. Vertex i is the
// permutation of lexicographic rank i; arcs into `home` (the identity, rank 0)
// weigh zero so that a minimum circuit is a minimum path starting at home.
struct AtspInstance {
  // Alphabet size, or 0 for a parsed instance whose dimension is not n!.
  int n = 0;
  std::string name;
  WeightMatrix weights;
  Vertex home = 0;
  Weight diagonal_sentinel = kDiagonalSentinel;

  std::size_t size() const noexcept { return weights.dim(); }
};

// Rows are filled in parallel with OpenMP.
AtspInstance build_atsp(int n);
// Single-threaded reference for build_atsp.
AtspInstance build_atsp_serial(int n);

// Superpermutation length represented by a circuit of the given weight.
TotalWeight length_from_circuit_weight(int n, TotalWeight circuit_weight);

// TSPLIB ATSP, EXPLICIT / FULL_MATRIX, rows wrapped at 20 values per line.
void write_tsplib_atsp(const AtspInstance& inst, std::ostream& out);

// Same bytes as write_tsplib_atsp(build_atsp(n), out) without holding the
// n! x n! matrix in memory.
void write_superperm_atsp(int n, std::ostream& out);

// Throws ParseError naming the offending line. `n` is recovered when the
// dimension is a factorial; home is vertex 0.
AtspInstance parse_tsplib_atsp(std::istream& in);

}  // namespace superperm
