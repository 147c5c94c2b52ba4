#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "superperm/permutation.hpp"

namespace superperm {

using PermSequence = std::vector<Permutation>;

// Replaces each permutation s of n-1 symbols by the n cyclic shifts of s
// followed by n, shifting left one place at a time from "sn" to "ns". Throws
// InputError unless `seq` lists every permutation of n-1 symbols exactly once.
PermSequence expand(const PermSequence& seq);

// Concatenates the sequence, appending only the non-overlapping tail of each
// permutation. Throws InputError on an empty or mixed-size sequence.
std::string compress(const PermSequence& seq);

// Every permutation of 1..n in the order it first occurs as a window of sp.
// Throws InputError if some permutation never occurs.
PermSequence first_appearance_order(std::string_view sp, int n);

// One step of the recursive construction from an arbitrary superpermutation
// on n-1 symbols.
std::string extend_superpermutation(std::string_view seed, int seed_n);

// The palindromic superpermutation of length 1! + 2! + ... + n!.
std::string palindromic(int n);

}  // namespace superperm
