#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace netocc {

// 0-based suffix array by prefix doubling, O(n log^2 n).
std::vector<std::uint32_t> build_suffix_array(std::string_view text);

// Kasai et al.: lcp[r] = lcp(text[sa[r-1]..], text[sa[r]..]), lcp[0] = 0.
std::vector<std::uint32_t> build_lcp_array(std::string_view text,
                                           const std::vector<std::uint32_t>& sa);

}  // namespace netocc
