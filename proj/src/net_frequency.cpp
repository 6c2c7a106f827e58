#include "netocc/net_frequency.hpp"

#include <algorithm>
#include <cstdint>

#include "netocc/suffix_array.hpp"

namespace netocc {
namespace {

NetOccurrenceRecord make_record(const Word& text, Occurrence occ) {
  const ExtensionPair ext = extension_characters(text, occ);
  return {occ, text.slice(occ.start, occ.end), ext.left, ext.right};
}

}  // namespace

RepeatIndex::RepeatIndex(const Word& text) : repeat_(text.size(), 0) {
  const std::string_view t = text.view();
  const auto sa = build_suffix_array(t);
  const auto lcp = build_lcp_array(t, sa);
  const std::size_t n = t.size();
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t best = lcp[r];
    if (r + 1 < n) best = std::max<std::size_t>(best, lcp[r + 1]);
    repeat_[sa[r]] = best;
  }
}

bool RepeatIndex::is_repeated(Occurrence occ) const {
  require_in_bounds(occ, repeat_.size());
  return occ.length() <= repeat_[occ.start - 1];
}

bool RepeatIndex::is_net(Occurrence occ) const {
  require_in_bounds(occ, repeat_.size());
  const std::size_t len = occ.length();
  const std::size_t r = repeat_[occ.start - 1];
  if (len > r) return false;                                           // unique
  if (occ.end < repeat_.size() && len + 1 <= r) return false;          // right extension repeated
  if (occ.start > 1 && len + 1 <= repeat_[occ.start - 2]) return false;  // left extension repeated
  return true;
}

std::vector<NetOccurrenceRecord> net_occurrences_bruteforce(const Word& text) {
  if (text.empty()) throw DomainError("net_occurrences_bruteforce: empty text");
  const std::string_view t = text.view();
  const std::size_t n = t.size();
  std::vector<NetOccurrenceRecord> out;
  std::vector<std::uint32_t> others;
  others.reserve(n);

  for (std::size_t s = 0; s < n; ++s) {
    // `others` holds every t != s where text[s .. s+len-1] also occurs.
    others.clear();
    for (std::size_t q = 0; q < n; ++q) {
      if (q != s) others.push_back(static_cast<std::uint32_t>(q));
    }
    for (std::size_t len = 1; s + len <= n; ++len) {
      const char c = t[s + len - 1];
      std::erase_if(others, [&](std::uint32_t q) { return q + len > n || t[q + len - 1] != c; });
      if (others.empty()) break;  // unique, and so is every extension

      const std::size_t e = s + len - 1;
      bool left_unique = true;
      if (s > 0) {
        left_unique = std::none_of(others.begin(), others.end(),
                                   [&](std::uint32_t q) { return q > 0 && t[q - 1] == t[s - 1]; });
      }
      if (!left_unique) continue;
      bool right_unique = true;
      if (e + 1 < n) {
        right_unique = std::none_of(others.begin(), others.end(), [&](std::uint32_t q) {
          return q + len < n && t[q + len] == t[e + 1];
        });
      }
      if (right_unique) out.push_back(make_record(text, {s + 1, e + 1}));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.occurrence < y.occurrence; });
  return out;
}

std::vector<NetOccurrenceRecord> net_occurrences_indexed(const Word& text) {
  if (text.empty()) throw DomainError("net_occurrences_indexed: empty text");
  const RepeatIndex index(text);
  std::vector<NetOccurrenceRecord> out;
  // The only candidate end for start s is s + R[s] - 1: shorter is followed by
  // a repeated right extension, longer is unique.
  for (Position s = 1; s <= text.size(); ++s) {
    const std::size_t r = index.longest_repeated_prefix(s);
    if (r == 0) continue;
    if (s > 1 && index.longest_repeated_prefix(s - 1) > r) continue;
    out.push_back(make_record(text, {s, s + r - 1}));
  }
  return out;
}

std::vector<NetOccurrenceRecord> net_occurrences(const Word& text, Engine engine) {
  return engine == Engine::kOracle ? net_occurrences_bruteforce(text)
                                   : net_occurrences_indexed(text);
}

std::vector<Occurrence> occurrences_of(const std::vector<NetOccurrenceRecord>& records) {
  std::vector<Occurrence> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.occurrence);
  return out;
}

std::size_t net_frequency(const Word& text, const Word& pattern) {
  if (pattern.empty()) throw DomainError("net_frequency: empty pattern");
  if (pattern.size() > text.size()) return 0;
  const RepeatIndex index(text);
  std::size_t count = 0;
  for (Position p : find_occurrences(pattern, text)) {
    if (index.is_net({p, p + pattern.size() - 1})) ++count;
  }
  return count;
}

}  // namespace netocc
