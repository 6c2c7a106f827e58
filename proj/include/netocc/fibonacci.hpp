#pragma once

#include <cstdint>
#include <vector>

#include "netocc/claims.hpp"
#include "netocc/occurrence.hpp"

namespace netocc {

// One step of the bottom-up evaluation of Theta_{i,j}, the starting positions
// of F_{i-j} in F_i. For j >= 2 the step also records whether the constituent
// sets of the union were pairwise disjoint and whether the maximum matches the
// closed form (f_i - f_{i-j} + 1 for even j, f_i - f_{i-j+1} + 1 for odd j).
// Both flags are trivially true for j < 2.
struct ThetaStep {
  int j = 0;
  PositionSet theta;
  bool disjoint = true;
  bool max_matches = true;
};

// Requires i >= 6 and 0 <= j <= i - 4; other ranges are the oracle's job.
PositionSet theta_set(int i, int j);
std::vector<ThetaStep> theta_trace(int i, int j_max);

// Number of occurrences of F_{i-j} in F_i, i >= 2, 0 <= j <= i - 1.
std::uint64_t theta_count(int i, int j);

// (1, f_{i-2}+|Q_i|), (f_{i-2}+1, 2 f_{i-2}+|Q_i|), (f_{i-1}+1, f_i); i >= 7.
std::vector<Occurrence> predicted_fib_net_occurrences(int i);

// Concatenation identities, checked letter by letter. i >= 6; the Q_i
// identities join from i = 7.
ClaimMap check_fib_identities(int i);

// Occurrence, follower and uniqueness lemmas on F_i by exhaustive scan; i >= 7.
ClaimMap check_fib_lemmas(int i);

}  // namespace netocc
