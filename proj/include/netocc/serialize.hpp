#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "netocc/net_frequency.hpp"
#include "netocc/onoc.hpp"
#include "netocc/thue_morse.hpp"
#include "netocc/verifier.hpp"
#include "netocc/words.hpp"

namespace netocc {

// Recurrence output for one (family, i, j) next to the oracle's answer. For
// Fibonacci only `a_*` is used (Theta_{i,j}).
struct OccurrenceSetQuery {
  Family family = Family::kFibonacci;
  int order = 0;
  int j = 0;
  PositionSet a_recurrence, a_oracle;
  PositionSet b_recurrence, b_oracle;

  bool equal() const { return a_recurrence == a_oracle && b_recurrence == b_oracle; }
};

// Theta_{i,j} needs i >= 6, j <= i-4; A/B needs i >= 2, j <= i-2.
OccurrenceSetQuery query_occurrence_sets(Family family, int order, int j);

nlohmann::json to_json(const NetOccurrenceRecord& record);
nlohmann::json to_json(const std::vector<NetOccurrenceRecord>& records);
nlohmann::json to_json(const CompletenessReport& report);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const PropertyReport& report);
nlohmann::json to_json(const FactorRef& factor);
nlohmann::json to_json(const SmallestFactorization& sf);
nlohmann::json to_json(const OccurrenceSetQuery& query);

std::string to_text(const std::vector<NetOccurrenceRecord>& records);
std::string to_text(const CompletenessReport& report);
std::string to_text(const VerificationReport& report);
std::string to_text(const PropertyReport& report);
std::string to_text(const SmallestFactorization& sf);
std::string to_text(const OccurrenceSetQuery& query);

const char* family_name(Family family);

}  // namespace netocc
