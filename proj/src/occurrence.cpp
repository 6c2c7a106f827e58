#include "netocc/occurrence.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace netocc {

void require_in_bounds(Occurrence occ, std::size_t text_length) {
  if (occ.start < 1 || occ.end < occ.start || occ.end > text_length) {
    throw DomainError("occurrence (" + std::to_string(occ.start) + "," + std::to_string(occ.end) +
                      ") invalid for text of length " + std::to_string(text_length));
  }
}

PositionSet::PositionSet(std::initializer_list<Position> values)
    : PositionSet(std::vector<Position>(values)) {}

PositionSet::PositionSet(std::vector<Position> sorted) : values_(std::move(sorted)) {
  for (std::size_t k = 1; k < values_.size(); ++k) {
    if (values_[k - 1] >= values_[k]) throw DomainError("PositionSet: values not strictly increasing");
  }
}

PositionSet PositionSet::from_unsorted(std::vector<Position> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  PositionSet out;
  out.values_ = std::move(values);
  return out;
}

bool PositionSet::contains(Position p) const {
  return std::binary_search(values_.begin(), values_.end(), p);
}

Position PositionSet::max() const {
  if (values_.empty()) throw DomainError("max of an empty position set");
  return values_.back();
}

PositionSet PositionSet::shifted(Position d) const {
  PositionSet out;
  out.values_.reserve(values_.size());
  for (Position p : values_) out.values_.push_back(p + d);
  return out;
}

PositionSet PositionSet::united(const PositionSet& other) const {
  PositionSet out;
  std::set_union(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
                 std::back_inserter(out.values_));
  return out;
}

PositionSet PositionSet::intersected(const PositionSet& other) const {
  PositionSet out;
  std::set_intersection(values_.begin(), values_.end(), other.values_.begin(),
                        other.values_.end(), std::back_inserter(out.values_));
  return out;
}

PositionSet PositionSet::minus(const PositionSet& other) const {
  PositionSet out;
  std::set_difference(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
                      std::back_inserter(out.values_));
  return out;
}

PositionSet find_occurrences(const Word& pattern, const Word& text) {
  if (pattern.empty()) throw DomainError("find_occurrences: empty pattern");
  std::vector<Position> hits;
  const std::string_view p = pattern.view();
  const std::string_view t = text.view();
  if (p.size() <= t.size()) {
    for (std::size_t k = 0; k + p.size() <= t.size(); ++k) {
      if (t.compare(k, p.size(), p) == 0) hits.push_back(k + 1);
    }
  }
  return PositionSet(std::move(hits));
}

std::size_t count_occurrences(std::string_view pattern, std::string_view text) {
  if (pattern.empty()) throw DomainError("count_occurrences: empty pattern");
  std::size_t count = 0;
  for (std::size_t k = 0; k + pattern.size() <= text.size(); ++k) {
    if (text.compare(k, pattern.size(), pattern) == 0) ++count;
  }
  return count;
}

ExtensionPair extension_characters(const Word& text, Occurrence occ) {
  require_in_bounds(occ, text.size());
  ExtensionPair ext;
  if (occ.start > 1) ext.left = text.at(occ.start - 1);
  if (occ.end < text.size()) ext.right = text.at(occ.end + 1);
  return ext;
}

RelationDescriptor occurrence_relation(Occurrence a, Occurrence b) {
  RelationDescriptor r;
  r.equal = a == b;
  r.sub = b.start <= a.start && a.end <= b.end;
  r.super = a.start <= b.start && b.end <= a.end;
  r.proper_sub = r.sub && !r.equal;
  r.proper_super = r.super && !r.equal;
  r.overlap = std::max(a.start, b.start) <= std::min(a.end, b.end);
  r.disjoint = !r.overlap;
  return r;
}

bool is_net_occurrence(const Word& text, Occurrence occ) {
  require_in_bounds(occ, text.size());
  const std::string_view t = text.view();
  const std::size_t s0 = occ.start - 1;
  const std::size_t len = occ.length();
  if (count_occurrences(t.substr(s0, len), t) < 2) return false;
  if (occ.start > 1 && count_occurrences(t.substr(s0 - 1, len + 1), t) != 1) return false;
  if (occ.end < t.size() && count_occurrences(t.substr(s0, len + 1), t) != 1) return false;
  return true;
}

}  // namespace netocc
