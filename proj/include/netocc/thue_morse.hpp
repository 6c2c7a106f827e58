#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netocc/claims.hpp"
#include "netocc/occurrence.hpp"
#include "netocc/words.hpp"

namespace netocc {

// Starting positions of T_{i-j} (a_set) and flip(T_{i-j}) (b_set) in T_i.
struct OccurrenceSets {
  PositionSet a_set;
  PositionSet b_set;

  friend bool operator==(const OccurrenceSets&, const OccurrenceSets&) = default;
};

// One step of the mutual recurrence. For j >= 2 the flags record whether
//   A_{j-1} & B'_{j-1} == I_{j-3},  A_{j-1} & A'_{j-2} == {},  B'_{j-1} & A'_{j-2} == {}
// and the primed-double analogues for B held exactly.
struct AbStep {
  int j = 0;
  OccurrenceSets sets;
  bool a_identities = true;
  bool b_identities = true;
};

// Requires i >= 2 and 0 <= j <= i - 2. At j = i - 1 the shift would reference
// tau_0, so single-letter occurrence sets are left to a direct letter scan.
OccurrenceSets ab_sets(int i, int j);
std::vector<AbStep> ab_trace(int i, int j_max);

struct AbCounts {
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;
};

// a_0 = a_1 = 1, a_j = a_{j-1} + 2 a_{j-2};  b_0 = 0, b_j = b_{j-1} + a_{j-1}.
AbCounts ab_counts(int j_max);

// The nine net occurrences of T_i (i >= 5), sorted by (start, end).
std::vector<Occurrence> predicted_tm_net_occurrences(int i);

// The four strings T_{i-2}, flip(T_{i-2}), T_{i-4} flip(T_{i-3}), flip(T_{i-4}) T_{i-3}.
std::vector<Word> tm_net_strings(int i);

struct RepetitionScan {
  std::optional<Occurrence> overlap;  // a factor axaxa, reported as its span
  std::optional<Occurrence> cube;     // a factor xxx
};

// Exhaustive scan of every (position, period) pair.
RepetitionScan scan_repetitions(const Word& w);

// Four factorizations of T_i (i >= 5), plus overlap- and cube-freeness by
// exhaustive scan when i <= 12.
ClaimMap check_tm_identities(int i);

// Occurrence-position corollaries, net-ness of every occurrence of the four
// net strings, and the super-occurrence lemma for T_{i-3} / flip(T_{i-3})
// by exhaustive enumeration; i >= 5.
ClaimMap check_tm_lemmas(int i);

enum class TargetKind { kA, kB };

struct SmallestFactorization {
  Factorization factorization;
  TargetKind kind = TargetKind::kA;
  int i = 0;
  int j = 0;
};

// Smallest factorization of T_i containing every occurrence of T_{i-j} (kind A)
// or flip(T_{i-j}) (kind B) as a whole factor. Built by the next/flip/boxplus
// recurrence for j <= i - 2 and by a letter scan for j = i - 1; kind B with
// j = 0 is the degenerate empty factorization.
SmallestFactorization smallest_factorization(int i, int j, TargetKind kind);

// True iff `fac` holds every occurrence of the target at its position as a
// whole factor and no two consecutive factors both differ from the target.
// Throws DomainError if `fac` does not flatten to T_i.
bool validate_smallest_factorization(int i, int j, TargetKind kind, const Factorization& fac);

struct BasisCheck {
  bool in_basis = false;       // every factor is T_{i-j}, flip, T_{i-j-1} or flip
  bool first_is_target = false;  // x_1 = T_{i-j}
  bool last_matches_parity = false;  // x_m = T_{i-j} (j even) or flip(T_{i-j}) (j odd)
  bool all() const { return in_basis && first_is_target && last_matches_parity; }
};

BasisCheck check_basis(const SmallestFactorization& sf);

}  // namespace netocc
