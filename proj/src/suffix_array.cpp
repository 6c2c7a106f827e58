#include "netocc/suffix_array.hpp"

#include <algorithm>
#include <numeric>

namespace netocc {

std::vector<std::uint32_t> build_suffix_array(std::string_view text) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> sa(n), rank(n), tmp(n);
  std::iota(sa.begin(), sa.end(), 0u);
  for (std::size_t k = 0; k < n; ++k) rank[k] = static_cast<unsigned char>(text[k]);
  if (n <= 1) return sa;

  for (std::size_t gap = 1;; gap <<= 1) {
    // Key of suffix k is (rank[k], rank[k + gap]) with -1 past the end.
    auto second = [&](std::uint32_t k) -> std::int64_t {
      return k + gap < n ? static_cast<std::int64_t>(rank[k + gap]) : -1;
    };
    auto less = [&](std::uint32_t x, std::uint32_t y) {
      if (rank[x] != rank[y]) return rank[x] < rank[y];
      return second(x) < second(y);
    };
    std::sort(sa.begin(), sa.end(), less);
    tmp[sa[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) tmp[sa[r]] = tmp[sa[r - 1]] + (less(sa[r - 1], sa[r]) ? 1 : 0);
    rank.swap(tmp);
    if (rank[sa[n - 1]] == n - 1) break;
  }
  return sa;
}

std::vector<std::uint32_t> build_lcp_array(std::string_view text,
                                           const std::vector<std::uint32_t>& sa) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> inv(n), lcp(n, 0);
  for (std::size_t r = 0; r < n; ++r) inv[sa[r]] = static_cast<std::uint32_t>(r);
  std::size_t h = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (inv[k] == 0) {
      h = 0;
      continue;
    }
    const std::size_t prev = sa[inv[k] - 1];
    while (k + h < n && prev + h < n && text[k + h] == text[prev + h]) ++h;
    lcp[inv[k]] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace netocc
