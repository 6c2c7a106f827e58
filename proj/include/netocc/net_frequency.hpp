#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netocc/occurrence.hpp"
#include "netocc/words.hpp"

namespace netocc {

struct NetOccurrenceRecord {
  Occurrence occurrence;
  Word substring;
  std::optional<Letter> left;
  std::optional<Letter> right;

  friend bool operator==(const NetOccurrenceRecord&, const NetOccurrenceRecord&) = default;
};

enum class Engine { kOracle, kIndexed };

// Suffix-array backed repeat index. For each start s it stores R[s], the
// length of the longest prefix of text[s..] that occurs at least twice, which
// answers repeat/net queries for any occurrence in O(1).
class RepeatIndex {
 public:
  explicit RepeatIndex(const Word& text);

  std::size_t text_length() const { return repeat_.size(); }
  // R[start], 1-based start.
  std::size_t longest_repeated_prefix(Position start) const { return repeat_[start - 1]; }

  bool is_repeated(Occurrence occ) const;
  bool is_net(Occurrence occ) const;

 private:
  std::vector<std::size_t> repeat_;
};

// Oracle: evaluates the net-occurrence definition for every (start, end) by
// tracking the other occurrences of text[start..end] directly. No index.
std::vector<NetOccurrenceRecord> net_occurrences_bruteforce(const Word& text);

// Same contract via RepeatIndex in O(n log^2 n).
std::vector<NetOccurrenceRecord> net_occurrences_indexed(const Word& text);

std::vector<NetOccurrenceRecord> net_occurrences(const Word& text, Engine engine);

std::vector<Occurrence> occurrences_of(const std::vector<NetOccurrenceRecord>& records);

// Number of net occurrences of `pattern` in `text`; 0 for unique or absent strings.
std::size_t net_frequency(const Word& text, const Word& pattern);

}  // namespace netocc
