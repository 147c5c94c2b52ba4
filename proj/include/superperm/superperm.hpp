#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "superperm/atsp_instance.hpp"
#include "superperm/permutation.hpp"
#include "superperm/tour.hpp"

namespace superperm {

// A digit string over the alphabet 1..n. It need not cover every permutation;
// verify() decides that.
class Superpermutation {
 public:
  // Throws InputError on a character outside '1'..'0'+n or an unsupported n.
  Superpermutation(std::string text, int n);

  const std::string& text() const noexcept { return text_; }
  int n() const noexcept { return n_; }
  std::size_t length() const noexcept { return text_.size(); }

 private:
  std::string text_;
  int n_;
};

struct VerifyReport {
  bool valid = false;
  std::size_t length = 0;
  std::size_t distinct_covered = 0;
  std::size_t missing = 0;
  // length - n; negative only for strings shorter than n.
  TotalWeight path_weight = 0;
};

struct Window {
  std::size_t position;
  Permutation perm;
};

// Every length-n window that is a permutation, in order, repeats included.
std::vector<Window> split(const Superpermutation& sp);

VerifyReport verify(const Superpermutation& sp);

// Rotates the tour to start at home, drops the closing arc into home and
// appends the new tail of each following permutation. The result has length
// n + t.weight().
Superpermutation tour_to_superperm(const Tour& t, const AtspInstance& inst);

// Tour over the permutations of a valid superpermutation that starts with the
// identity, closed by the zero-weight arc back to home. Uses first-appearance
// order when that order weighs length - n; otherwise searches for a window
// order that does (any output of tour_to_superperm has one), falling back to
// first-appearance order, which may weigh less, if none is found.
// Throws InputError if sp is invalid, does not start with the identity, or
// inst is not the n-symbol instance.
Tour superperm_to_tour(const Superpermutation& sp, const AtspInstance& inst);

}  // namespace superperm
