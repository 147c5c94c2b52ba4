#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "superperm/weight_matrix.hpp"

namespace superperm {

// True iff `order` visits each of 0..dim-1 exactly once.
bool is_hamiltonian(std::span<const Vertex> order, std::size_t dim);

// Sum of arc weights along `order`, including the closing arc. A one-vertex
// circuit weighs zero.
TotalWeight circuit_weight(std::span<const Vertex> order, const WeightMatrix& weights);

// A Hamiltonian circuit with its weight. The weight is always the recomputed
// one; construction fails on anything that is not a circuit over the matrix.
class Tour {
 public:
  Tour() = default;
  Tour(std::vector<Vertex> order, const WeightMatrix& weights);
  // Also checks that `weight` matches the recomputed value.
  Tour(std::vector<Vertex> order, TotalWeight weight, const WeightMatrix& weights);

  const std::vector<Vertex>& order() const noexcept { return order_; }
  TotalWeight weight() const noexcept { return weight_; }
  std::size_t size() const noexcept { return order_.size(); }

  // Same circuit listed from `start`.
  Tour rotated_to(Vertex start) const;

  friend bool operator==(const Tour&, const Tour&) = default;

 private:
  std::vector<Vertex> order_;
  TotalWeight weight_ = 0;
};

struct TourFile {
  std::string name;
  std::size_t dimension = 0;
  std::vector<Vertex> order;  // 0-based
};

// TSPLIB TOUR: 1-based indices one per line, then -1 and EOF.
void write_tsplib_tour(const Tour& tour, std::string_view name, std::string_view comment,
                       std::ostream& out);

// Accepts "KEY: VALUE" and "KEY : VALUE" headers. Throws ParseError when an
// index is outside 1..DIMENSION, repeated, or the count is not DIMENSION.
TourFile parse_tsplib_tour(std::istream& in);

}  // namespace superperm
