#include "netocc/onoc.hpp"

#include <algorithm>
#include <set>

namespace netocc {

bool is_onoc(const Word& text, std::span<const Occurrence> candidate) {
  return is_onoc(RepeatIndex(text), candidate);
}

bool is_onoc(const RepeatIndex& index, std::span<const Occurrence> candidate) {
  if (candidate.empty()) throw DomainError("is_onoc: empty candidate cover");
  const std::size_t n = index.text_length();
  for (const auto& occ : candidate) require_in_bounds(occ, n);
  if (candidate.front().start != 1 || candidate.back().end != n) return false;
  for (std::size_t k = 0; k + 1 < candidate.size(); ++k) {
    if (candidate[k + 1].start > candidate[k].end) return false;
  }
  return std::all_of(candidate.begin(), candidate.end(),
                     [&](const Occurrence& occ) { return index.is_net(occ); });
}

std::vector<Occurrence> bnso_set(std::span<const Occurrence> members) {
  std::vector<Occurrence> out;
  for (std::size_t k = 0; k + 1 < members.size(); ++k) {
    const Occurrence bridge{members[k + 1].start, members[k].end};
    if (bridge.start < 1 || bridge.start > bridge.end) {
      throw DomainError("bnso_set: members " + std::to_string(k + 1) + " and " +
                        std::to_string(k + 2) + " do not overlap");
    }
    out.push_back(bridge);
  }
  return out;
}

std::vector<Occurrence> enumerate_bridging_supers(std::size_t text_length, Occurrence bnso) {
  std::vector<Occurrence> out;
  for_each_bridging_super(text_length, bnso, [&](Occurrence o) { out.push_back(o); });
  return out;
}

CompletenessReport prove_completeness(const Word& text, const Cover& cover) {
  CompletenessReport report;
  if (text.empty()) return report;
  const RepeatIndex index(text);
  try {
    report.cover_valid = is_onoc(index, cover.members);
    report.bnsos = bnso_set(cover.members);
  } catch (const DomainError&) {
    report.cover_valid = false;
    report.bnsos.clear();
  }

  std::set<Occurrence> offenders;
  if (report.cover_valid) {
    const std::set<Occurrence> members(cover.members.begin(), cover.members.end());
    for (const auto& bnso : report.bnsos) {
      for_each_bridging_super(text.size(), bnso, [&](Occurrence o) {
        ++report.supers_examined;
        if (index.is_net(o) && !members.contains(o)) offenders.insert(o);
      });
    }
  }
  report.offending_supers.assign(offenders.begin(), offenders.end());

  std::set<Occurrence> predicted(cover.members.begin(), cover.members.end());
  predicted.insert(offenders.begin(), offenders.end());
  const auto oracle = occurrences_of(net_occurrences_bruteforce(text));
  report.oracle_agrees =
      report.cover_valid && std::equal(predicted.begin(), predicted.end(), oracle.begin(), oracle.end());
  return report;
}

std::optional<Cover> find_onoc_greedy(std::span<const Occurrence> net_occurrences,
                                      std::size_t text_length) {
  std::vector<Occurrence> sorted(net_occurrences.begin(), net_occurrences.end());
  std::sort(sorted.begin(), sorted.end());

  Cover cover;
  Position reach = 0;
  while (reach < text_length) {
    const Occurrence* best = nullptr;
    for (const auto& occ : sorted) {
      const bool reachable = cover.members.empty() ? occ.start == 1 : occ.start <= reach;
      if (reachable && occ.end > reach && (best == nullptr || occ.end > best->end)) best = &occ;
    }
    if (best == nullptr) return std::nullopt;
    cover.members.push_back(*best);
    reach = best->end;
  }
  if (cover.members.empty()) return std::nullopt;
  return cover;
}

std::vector<Occurrence> super_occurrence_lemma_violations(std::span<const Occurrence> net_occurrences,
                                                          const Cover& cover,
                                                          std::size_t text_length) {
  const auto bnsos = bnso_set(cover.members);
  const std::set<Occurrence> members(cover.members.begin(), cover.members.end());
  std::vector<Occurrence> violations;
  for (const auto& occ : net_occurrences) {
    if (members.contains(occ)) continue;
    const bool bridged = std::any_of(bnsos.begin(), bnsos.end(), [&](const Occurrence& b) {
      const Position left = b.start > 1 ? b.start - 1 : 1;
      const Position right = b.end < text_length ? b.end + 1 : text_length;
      return occ.start <= left && occ.end >= right;
    });
    if (!bridged) violations.push_back(occ);
  }
  return violations;
}

}  // namespace netocc
