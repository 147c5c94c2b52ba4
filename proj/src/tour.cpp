#include "superperm/tour.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "superperm/error.hpp"
#include "tsplib_format.hpp"

namespace superperm {

bool is_hamiltonian(std::span<const Vertex> order, std::size_t dim) {
  if (order.size() != dim) return false;
  std::vector<bool> seen(dim, false);
  for (const Vertex v : order) {
    if (v >= dim || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

TotalWeight circuit_weight(std::span<const Vertex> order, const WeightMatrix& weights) {
  if (order.size() < 2) return 0;
  TotalWeight total = 0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) total += weights.arc(order[i], order[i + 1]);
  total += weights.arc(order.back(), order.front());
  return total;
}

Tour::Tour(std::vector<Vertex> order, const WeightMatrix& weights) : order_(std::move(order)) {
  if (!is_hamiltonian(order_, weights.dim())) {
    throw StructuralError("tour is not a Hamiltonian circuit on " +
                          std::to_string(weights.dim()) + " vertices");
  }
  weight_ = circuit_weight(order_, weights);
}

Tour::Tour(std::vector<Vertex> order, TotalWeight weight, const WeightMatrix& weights)
    : Tour(std::move(order), weights) {
  if (weight != weight_) {
    throw StructuralError("stored tour weight " + std::to_string(weight) +
                          " differs from recomputed " + std::to_string(weight_));
  }
}

Tour Tour::rotated_to(Vertex start) const {
  const auto it = std::find(order_.begin(), order_.end(), start);
  if (it == order_.end()) {
    throw StructuralError("vertex " + std::to_string(start) + " is not on the tour");
  }
  Tour out = *this;
  std::rotate(out.order_.begin(), out.order_.begin() + (it - order_.begin()), out.order_.end());
  return out;
}

void write_tsplib_tour(const Tour& tour, std::string_view name, std::string_view comment,
                       std::ostream& out) {
  std::string buf;
  buf.append("NAME: ").append(name).append("\n");
  if (!comment.empty()) buf.append("COMMENT: ").append(comment).append("\n");
  buf.append("TYPE: TOUR\n");
  buf.append("DIMENSION: ").append(std::to_string(tour.size())).append("\n");
  buf.append("TOUR_SECTION\n");
  for (const Vertex v : tour.order()) buf.append(std::to_string(v + 1)).push_back('\n');
  buf.append("-1\nEOF\n");
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("write failed");
}

TourFile parse_tsplib_tour(std::istream& in) {
  using tsplib::trim;
  TourFile file;
  std::optional<std::size_t> dim;
  bool have_type = false;
  std::string raw;
  std::size_t line_no = 0;
  bool in_section = false;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line == "TOUR_SECTION") {
      in_section = true;
      break;
    }
    std::string_view key;
    std::string_view value;
    if (!tsplib::split_keyword(line, key, value)) {
      throw ParseError("malformed header line \"" + std::string(line) + "\"", line_no);
    }
    if (key == "TYPE") {
      if (value != "TOUR") throw ParseError("TYPE is " + std::string(value) + ", expected TOUR", line_no);
      have_type = true;
    } else if (key == "DIMENSION") {
      std::size_t d = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), d);
      if (ec != std::errc() || ptr != value.data() + value.size() || d == 0) {
        throw ParseError("invalid DIMENSION \"" + std::string(value) + "\"", line_no);
      }
      dim = d;
    } else if (key == "NAME") {
      file.name = value;
    } else if (key != "COMMENT") {
      throw ParseError("unsupported keyword " + std::string(key), line_no);
    }
  }
  if (!in_section) throw ParseError("missing TOUR_SECTION", line_no);
  if (!have_type) throw ParseError("missing TYPE", line_no);
  if (!dim) throw ParseError("missing DIMENSION", line_no);
  file.dimension = *dim;

  std::vector<bool> seen(*dim, false);
  bool terminated = false;
  while (!terminated && std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    // Indices may share a line; split on whitespace.
    while (!line.empty()) {
      const auto end = line.find_first_of(" \t");
      const std::string_view tok = line.substr(0, end);
      line = end == std::string_view::npos ? std::string_view{} : trim(line.substr(end));
      long long idx = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), idx);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("expected a vertex index, got \"" + std::string(tok) + "\"", line_no);
      }
      if (idx == -1) {
        terminated = true;
        break;
      }
      if (idx < 1 || static_cast<unsigned long long>(idx) > *dim) {
        throw ParseError("vertex index " + std::to_string(idx) + " outside 1.." +
                             std::to_string(*dim),
                         line_no);
      }
      const auto v = static_cast<Vertex>(idx - 1);
      if (seen[v]) throw ParseError("vertex " + std::to_string(idx) + " repeated", line_no);
      seen[v] = true;
      file.order.push_back(v);
    }
  }
  if (!terminated) throw ParseError("TOUR_SECTION not terminated by -1", line_no);
  if (file.order.size() != *dim) {
    throw ParseError("tour lists " + std::to_string(file.order.size()) + " vertices, expected " +
                         std::to_string(*dim),
                     line_no);
  }
  return file;
}

}  // namespace superperm
