#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

#include "netocc/words.hpp"

namespace netocc {

using Position = std::size_t;

// Closed interval [start, end] of 1-based positions.
struct Occurrence {
  Position start = 1;
  Position end = 1;

  std::size_t length() const { return end - start + 1; }

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

// Throws DomainError unless 1 <= start <= end <= text_length.
void require_in_bounds(Occurrence occ, std::size_t text_length);

// Strictly increasing set of positions.
class PositionSet {
 public:
  PositionSet() = default;
  PositionSet(std::initializer_list<Position> values);
  // Throws DomainError if `sorted` is not strictly increasing.
  explicit PositionSet(std::vector<Position> sorted);
  static PositionSet from_unsorted(std::vector<Position> values);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  bool contains(Position p) const;
  Position max() const;  // throws DomainError when empty
  const std::vector<Position>& values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  // {p + d : p in this}
  PositionSet shifted(Position d) const;
  PositionSet united(const PositionSet& other) const;
  PositionSet intersected(const PositionSet& other) const;
  PositionSet minus(const PositionSet& other) const;
  bool disjoint_with(const PositionSet& other) const { return intersected(other).empty(); }

  friend bool operator==(const PositionSet&, const PositionSet&) = default;

 private:
  std::vector<Position> values_;
};

struct ExtensionPair {
  std::optional<Letter> left;   // absent iff start == 1
  std::optional<Letter> right;  // absent iff end == |text|

  friend bool operator==(const ExtensionPair&, const ExtensionPair&) = default;
};

// Relation flags describe `a` relative to `b` ("a is a sub-occurrence of b").
struct RelationDescriptor {
  bool equal = false;
  bool sub = false;
  bool proper_sub = false;
  bool super = false;
  bool proper_super = false;
  bool overlap = false;
  bool disjoint = false;
};

// Naive scan. Throws DomainError on an empty pattern.
PositionSet find_occurrences(const Word& pattern, const Word& text);
std::size_t count_occurrences(std::string_view pattern, std::string_view text);

ExtensionPair extension_characters(const Word& text, Occurrence occ);

RelationDescriptor occurrence_relation(Occurrence a, Occurrence b);

// Definitional check by direct occurrence counting: text[s..e] is repeated and
// both one-letter extensions are unique, a missing extension at either end of
// the text counting as unique.
bool is_net_occurrence(const Word& text, Occurrence occ);

}  // namespace netocc
