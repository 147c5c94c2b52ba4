#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace superperm {

using Weight = std::int32_t;
using TotalWeight = std::int64_t;
using Vertex = std::uint32_t;

// Dense row-major square matrix of arc weights. at() exposes the diagonal for
// file I/O; arc() is what solvers use and never touches it.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(std::size_t dim, Weight fill = 0) : dim_(dim), data_(dim * dim, fill) {}

  std::size_t dim() const noexcept { return dim_; }

  Weight at(std::size_t i, std::size_t j) const noexcept { return data_[i * dim_ + j]; }
  Weight& at(std::size_t i, std::size_t j) noexcept { return data_[i * dim_ + j]; }

  Weight arc(std::size_t from, std::size_t to) const noexcept {
    assert(from != to && "solvers must not read the diagonal");
    return data_[from * dim_ + to];
  }

  std::span<const Weight> row(std::size_t i) const noexcept {
    return {data_.data() + i * dim_, dim_};
  }
  std::span<Weight> row(std::size_t i) noexcept { return {data_.data() + i * dim_, dim_}; }

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Weight> data_;
};

}  // namespace superperm
