#pragma once

#include <iosfwd>

#include "superperm/atsp_instance.hpp"
#include "superperm/tour.hpp"

namespace superperm {

// Jonker-Volgenant doubling of an N-vertex ATSP. Vertex i < N is an original,
// i + N is its ghost. Pairing edges (i, ghost(i)) weigh 0, the arc i->j becomes
// the edge (ghost(i), j) with weight w(i,j) + big_m, and every other edge
// carries `forbidden` = 10 * big_m. An optimal symmetric tour weighs exactly
// `offset` = N * big_m more than the optimal asymmetric circuit.
struct SymInstance {
  std::size_t original_size = 0;
  WeightMatrix weights;
  Weight big_m = 0;
  TotalWeight offset = 0;
  Weight forbidden = 0;

  std::size_t dimension() const noexcept { return weights.dim(); }
  Vertex ghost(Vertex i) const noexcept { return i + static_cast<Vertex>(original_size); }
};

// Smallest big_m satisfying the precondition: N * (max off-diagonal weight) + 1.
Weight default_big_m(const AtspInstance& inst);

// Throws InputError if big_m <= N * max off-diagonal weight, or if the
// inflated weights would not fit in a Weight.
SymInstance symmetrize(const AtspInstance& inst, Weight big_m);

// Reads the originals of an alternating original/ghost circuit in the
// direction where each original is followed by its ghost. Throws
// StructuralError on forbidden edges or broken alternation. The returned tour
// is checked against `atsp_weights` to weigh t.weight() - sym.offset.
Tour desymmetrize_tour(const Tour& t, const SymInstance& sym, const WeightMatrix& atsp_weights);

// TSPLIB TSP with a "COMMENT: jv-transform M=<m> OFFSET=<N*m>" line.
void write_tsplib_tsp(const SymInstance& sym, std::ostream& out);

// Recovers big_m and offset from the jv-transform comment when present.
SymInstance parse_tsplib_tsp(std::istream& in);

}  // namespace superperm
