#include "tsplib_format.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "superperm/error.hpp"

namespace superperm::tsplib {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool split_keyword(std::string_view line, std::string_view& key, std::string_view& value) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) return false;
  key = trim(line.substr(0, colon));
  value = trim(line.substr(colon + 1));
  return true;
}

void write_matrix(std::ostream& out, std::string_view name, std::string_view type,
                  std::optional<std::string_view> comment, std::size_t dim,
                  const RowFiller& fill_row) {
  std::string buf;
  buf.reserve(64 * 1024);
  buf.append("NAME: ").append(name).append("\n");
  buf.append("TYPE: ").append(type).append("\n");
  if (comment) buf.append("COMMENT: ").append(*comment).append("\n");
  buf.append("DIMENSION: ").append(std::to_string(dim)).append("\n");
  buf.append("EDGE_WEIGHT_TYPE: EXPLICIT\n");
  buf.append("EDGE_WEIGHT_FORMAT: FULL_MATRIX\n");
  buf.append("EDGE_WEIGHT_SECTION\n");

  std::vector<Weight> row(dim);
  char num[16];
  for (std::size_t i = 0; i < dim; ++i) {
    fill_row(i, row);
    for (std::size_t j = 0; j < dim; ++j) {
      const auto [end, ec] = std::to_chars(num, num + sizeof num, row[j]);
      buf.append(num, end);
      const bool line_end = j + 1 == dim || (j + 1) % kValuesPerLine == 0;
      buf.push_back(line_end ? '\n' : ' ');
    }
    if (buf.size() > 60 * 1024) {
      out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
      buf.clear();
    }
  }
  buf.append("EOF\n");
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("write failed");
}

namespace {

std::vector<Weight> parse_values(std::string_view line, std::size_t line_no) {
  std::vector<Weight> values;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    Weight v = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    const auto consumed = static_cast<std::size_t>(ptr - line.data());
    const bool at_separator = consumed == line.size() || line[consumed] == ' ' ||
                              line[consumed] == '\t' || line[consumed] == '\r';
    if (ec != std::errc() || !at_separator) {
      throw ParseError("expected an integer weight", line_no);
    }
    values.push_back(v);
    i = consumed;
  }
  return values;
}

}  // namespace

MatrixFile read_matrix(std::istream& in, std::string_view expected_type) {
  MatrixFile file;
  std::optional<std::size_t> dim;
  bool have_type = false;
  bool have_weight_type = false;
  bool have_format = false;

  std::string raw;
  std::size_t line_no = 0;
  bool in_section = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line == "EDGE_WEIGHT_SECTION") {
      in_section = true;
      break;
    }
    if (line == "EOF") throw ParseError("EOF before EDGE_WEIGHT_SECTION", line_no);
    std::string_view key;
    std::string_view value;
    if (!split_keyword(line, key, value)) {
      throw ParseError("malformed header line \"" + std::string(line) + "\"", line_no);
    }
    if (key == "NAME") {
      file.name = value;
    } else if (key == "COMMENT") {
      if (!file.comment.empty()) file.comment += '\n';
      file.comment += value;
    } else if (key == "TYPE") {
      if (value != expected_type) {
        throw ParseError("TYPE is " + std::string(value) + ", expected " +
                             std::string(expected_type),
                         line_no);
      }
      have_type = true;
    } else if (key == "DIMENSION") {
      std::size_t d = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), d);
      if (ec != std::errc() || ptr != value.data() + value.size() || d == 0) {
        throw ParseError("invalid DIMENSION \"" + std::string(value) + "\"", line_no);
      }
      dim = d;
    } else if (key == "EDGE_WEIGHT_TYPE") {
      if (value != "EXPLICIT") {
        throw ParseError("unsupported EDGE_WEIGHT_TYPE " + std::string(value), line_no);
      }
      have_weight_type = true;
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      if (value != "FULL_MATRIX") {
        throw ParseError("unsupported EDGE_WEIGHT_FORMAT " + std::string(value), line_no);
      }
      have_format = true;
    } else {
      throw ParseError("unsupported keyword " + std::string(key), line_no);
    }
  }
  if (!in_section) throw ParseError("missing EDGE_WEIGHT_SECTION", line_no);
  if (!have_type) throw ParseError("missing TYPE", line_no);
  if (!dim) throw ParseError("missing DIMENSION", line_no);
  if (!have_weight_type) throw ParseError("missing EDGE_WEIGHT_TYPE", line_no);
  if (!have_format) throw ParseError("missing EDGE_WEIGHT_FORMAT", line_no);

  // A row may wrap over several lines, but no line holds values of two rows.
  const std::size_t n = *dim;
  file.weights = WeightMatrix(n);
  std::size_t row = 0;
  std::size_t col = 0;
  std::size_t row_start_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line == "EOF") break;
    const auto values = parse_values(line, line_no);
    if (row == n) {
      throw ParseError("more than " + std::to_string(n) + " matrix rows", line_no);
    }
    if (col == 0) row_start_line = line_no;
    if (col + values.size() > n) {
      if (col > 0) {
        throw ParseError("row " + std::to_string(row + 1) + " has " + std::to_string(col) +
                             " values, expected " + std::to_string(n),
                         row_start_line);
      }
      throw ParseError("row " + std::to_string(row + 1) + " has " +
                           std::to_string(values.size()) + " values, expected " +
                           std::to_string(n),
                       line_no);
    }
    for (const Weight v : values) file.weights.at(row, col++) = v;
    if (col == n) {
      ++row;
      col = 0;
    }
  }
  if (col != 0) {
    throw ParseError("row " + std::to_string(row + 1) + " has " + std::to_string(col) +
                         " values, expected " + std::to_string(n),
                     row_start_line);
  }
  if (row != n) {
    throw ParseError("matrix has " + std::to_string(row) + " rows, expected " + std::to_string(n),
                     line_no);
  }
  // A trailing EOF line is optional; many generators omit it.
  return file;
}

}  // namespace superperm::tsplib
