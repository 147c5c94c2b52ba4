#include "superperm/symmetrize.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "superperm/error.hpp"
#include "tsplib_format.hpp"

namespace superperm {

namespace {

Weight max_off_diagonal(const WeightMatrix& w) {
  Weight best = 0;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    for (std::size_t j = 0; j < w.dim(); ++j) {
      if (i != j) best = std::max(best, w.at(i, j));
    }
  }
  return best;
}

std::string jv_comment(const SymInstance& sym) {
  return "jv-transform M=" + std::to_string(sym.big_m) + " OFFSET=" + std::to_string(sym.offset);
}

}  // namespace

Weight default_big_m(const AtspInstance& inst) {
  const TotalWeight m = static_cast<TotalWeight>(inst.size()) * max_off_diagonal(inst.weights) + 1;
  if (m > std::numeric_limits<Weight>::max()) throw InputError("instance weights too large for symmetrization");
  return static_cast<Weight>(m);
}

SymInstance symmetrize(const AtspInstance& inst, Weight big_m) {
  const std::size_t n = inst.size();
  const Weight max_w = max_off_diagonal(inst.weights);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && inst.weights.at(i, j) < 0) {
        throw InputError("symmetrize: negative arc weights are not supported");
      }
    }
  }
  const TotalWeight floor = static_cast<TotalWeight>(n) * max_w;
  if (big_m <= floor) {
    throw InputError("big M must exceed N * max weight = " + std::to_string(floor) + ", got " +
                     std::to_string(big_m));
  }
  const TotalWeight forbidden = 10 * static_cast<TotalWeight>(big_m);
  if (forbidden > std::numeric_limits<Weight>::max() ||
      static_cast<TotalWeight>(big_m) + max_w > std::numeric_limits<Weight>::max()) {
    throw InputError("big M " + std::to_string(big_m) + " overflows the weight type");
  }

  SymInstance sym;
  sym.original_size = n;
  sym.big_m = big_m;
  sym.offset = static_cast<TotalWeight>(n) * big_m;
  sym.forbidden = static_cast<Weight>(forbidden);
  sym.weights = WeightMatrix(2 * n, sym.forbidden);
  for (std::size_t i = 0; i < n; ++i) {
    sym.weights.at(i, i + n) = 0;
    sym.weights.at(i + n, i) = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Weight w = inst.weights.at(i, j) + big_m;
      sym.weights.at(i + n, j) = w;
      sym.weights.at(j, i + n) = w;
    }
  }
  return sym;
}

Tour desymmetrize_tour(const Tour& t, const SymInstance& sym, const WeightMatrix& atsp_weights) {
  const std::size_t n = sym.original_size;
  const auto& order = t.order();
  if (order.size() != 2 * n || atsp_weights.dim() != n) {
    throw StructuralError("symmetric tour has " + std::to_string(order.size()) +
                          " vertices, expected " + std::to_string(2 * n));
  }
  const auto is_ghost = [n](Vertex v) { return v >= n; };
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Vertex a = order[k];
    const Vertex b = order[(k + 1) % order.size()];
    if (is_ghost(a) == is_ghost(b)) {
      throw StructuralError("tour uses forbidden edge (" + std::to_string(a) + ", " +
                            std::to_string(b) + ")");
    }
  }

  // Orient the walk so that every original is immediately followed by its ghost.
  const std::size_t len = order.size();
  const auto start = static_cast<std::size_t>(std::find(order.begin(), order.end(), Vertex{0}) - order.begin());
  int step = 0;
  if (order[(start + 1) % len] == sym.ghost(0)) {
    step = 1;
  } else if (order[(start + len - 1) % len] == sym.ghost(0)) {
    step = -1;
  } else {
    throw StructuralError("tour does not use the pairing edge of vertex 0");
  }

  std::vector<Vertex> asym;
  asym.reserve(n);
  std::size_t pos = start;
  for (std::size_t k = 0; k < n; ++k) {
    const Vertex v = order[pos];
    const Vertex next = order[(pos + len + static_cast<std::size_t>(step)) % len];
    if (is_ghost(v) || next != sym.ghost(v)) {
      throw StructuralError("tour does not alternate originals with their ghosts at vertex " +
                            std::to_string(v));
    }
    asym.push_back(v);
    pos = (pos + len + 2 * static_cast<std::size_t>(step)) % len;
  }
  return Tour(std::move(asym), t.weight() - sym.offset, atsp_weights);
}

void write_tsplib_tsp(const SymInstance& sym, std::ostream& out) {
  const std::string comment = jv_comment(sym);
  tsplib::write_matrix(out, "jv" + std::to_string(sym.dimension()), "TSP", comment,
                       sym.dimension(), [&](std::size_t i, std::span<Weight> row) {
                         const auto src = sym.weights.row(i);
                         std::copy(src.begin(), src.end(), row.begin());
                       });
}

SymInstance parse_tsplib_tsp(std::istream& in) {
  auto file = tsplib::read_matrix(in, "TSP");
  SymInstance sym;
  sym.weights = std::move(file.weights);
  sym.original_size = sym.weights.dim() / 2;
  long long m = 0;
  long long offset = 0;
  if (std::sscanf(file.comment.c_str(), "jv-transform M=%lld OFFSET=%lld", &m, &offset) == 2) {
    sym.big_m = static_cast<Weight>(m);
    sym.offset = offset;
    sym.forbidden = static_cast<Weight>(10 * m);
  }
  return sym;
}

}  // namespace superperm
