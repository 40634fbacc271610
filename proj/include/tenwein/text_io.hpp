#pragma once

#include <string>
#include <vector>

#include "tenwein/permutation.hpp"
#include "tenwein/set_partition.hpp"

namespace tenwein {

// Accepts cycle notation "(1 2)(3 4 5)" (also comma-separated "(1,2)") and
// one-line notation "[2,1,4,5,3]". The degree of a cycle-notation input is the
// largest label mentioned, at least min_degree, at least 1 ("()" is id_1).
Permutation parse_permutation(const std::string& text, int min_degree = 0);

// Cycle notation including fixed points, e.g. "(1 2)(3)".
std::string format_permutation(const Permutation& p);

// "{1,2}{3}{4,5}"
SetPartition parse_set_partition(const std::string& text);
std::string format_set_partition(const SetPartition& sp);

// "2,1" or "[2,1]"
CycleType parse_cycle_type(const std::string& text);
std::string format_cycle_type(const CycleType& t);

// Lift all permutations to the common (maximal) degree.
std::vector<Permutation> unify_degrees(std::vector<Permutation> ps);

}  // namespace tenwein
