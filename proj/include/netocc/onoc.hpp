#pragma once

#include <optional>
#include <span>
#include <vector>

#include "netocc/net_frequency.hpp"
#include "netocc/occurrence.hpp"
#include "netocc/words.hpp"

namespace netocc {

// Overlapping net occurrence cover: net occurrences (i_1, j_1) .. (i_c, j_c)
// with i_1 = 1, i_{k+1} <= j_k and j_c = n.
struct Cover {
  std::vector<Occurrence> members;

  friend bool operator==(const Cover&, const Cover&) = default;
};

struct CompletenessReport {
  bool cover_valid = false;
  std::vector<Occurrence> bnsos;
  // Net occurrences outside the cover found among the bridging super-occurrences.
  std::vector<Occurrence> offending_supers;
  // Cover members plus offenders equal the brute-force net occurrences.
  bool oracle_agrees = false;
  std::size_t supers_examined = 0;
};

// Throws DomainError if `candidate` is empty or any member is out of bounds.
bool is_onoc(const Word& text, std::span<const Occurrence> candidate);
bool is_onoc(const RepeatIndex& index, std::span<const Occurrence> candidate);

// (i_2, j_1), (i_3, j_2), ..., (i_c, j_{c-1}). Throws DomainError unless the
// members form a chain (i_{k+1} <= j_k).
std::vector<Occurrence> bnso_set(std::span<const Occurrence> members);
inline std::vector<Occurrence> bnso_set(const Cover& cover) { return bnso_set(cover.members); }

// Visits every (s, e) with s <= bnso.start - 1 and e >= bnso.end + 1, clipped to
// [1, text_length]; a side that touches the text boundary is unconstrained.
template <typename Visitor>
void for_each_bridging_super(std::size_t text_length, Occurrence bnso, Visitor&& visit) {
  require_in_bounds(bnso, text_length);
  const Position max_start = bnso.start > 1 ? bnso.start - 1 : 1;
  const Position min_end = bnso.end < text_length ? bnso.end + 1 : text_length;
  for (Position s = 1; s <= max_start; ++s) {
    for (Position e = min_end; e <= text_length; ++e) visit(Occurrence{s, e});
  }
}

std::vector<Occurrence> enumerate_bridging_supers(std::size_t text_length, Occurrence bnso);

// Validates the cover, scans every bridging super-occurrence of every BNSO for
// net occurrences and cross-checks the result against the brute-force oracle.
// An invalid cover is reported through cover_valid, never thrown.
CompletenessReport prove_completeness(const Word& text, const Cover& cover);

// Greedy chain over sorted net occurrences: start at position 1, then always
// take the reachable occurrence with the furthest end. nullopt if none reaches n.
std::optional<Cover> find_onoc_greedy(std::span<const Occurrence> net_occurrences,
                                      std::size_t text_length);

// Net occurrences outside `cover` that are not a super-occurrence of
// (i - 1, j + 1) for any BNSO (i, j). Empty whenever the super-occurrence lemma holds.
std::vector<Occurrence> super_occurrence_lemma_violations(std::span<const Occurrence> net_occurrences,
                                                          const Cover& cover,
                                                          std::size_t text_length);

}  // namespace netocc
