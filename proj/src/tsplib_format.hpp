#pragma once

// Shared reader/writer for the EXPLICIT FULL_MATRIX flavour of TSPLIB used by
// the ATSP and TSP instance files.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "superperm/weight_matrix.hpp"

namespace superperm::tsplib {

inline constexpr std::size_t kValuesPerLine = 20;

struct MatrixFile {
  std::string name;
  std::string comment;
  WeightMatrix weights;
};

using RowFiller = std::function<void(std::size_t row, std::span<Weight> out)>;

void write_matrix(std::ostream& out, std::string_view name, std::string_view type,
                  std::optional<std::string_view> comment, std::size_t dim,
                  const RowFiller& fill_row);

MatrixFile read_matrix(std::istream& in, std::string_view expected_type);

std::string_view trim(std::string_view s);

// "KEY: VALUE" or "KEY : VALUE". Returns false if there is no colon.
bool split_keyword(std::string_view line, std::string_view& key, std::string_view& value);

}  // namespace superperm::tsplib
