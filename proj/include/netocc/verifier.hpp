#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "netocc/claims.hpp"
#include "netocc/occurrence.hpp"
#include "netocc/onoc.hpp"
#include "netocc/words.hpp"

namespace netocc {

enum class Family { kFibonacci, kThueMorse };

struct OrderClaims {
  int order = 0;
  ClaimMap claims;
};

struct VerificationReport {
  Family family = Family::kFibonacci;
  int min_order = 0;
  int max_order = 0;
  std::vector<OrderClaims> orders;  // ascending by order
  std::chrono::duration<double> wall_time{0};

  std::size_t failed_count() const;
  bool passed() const { return failed_count() == 0; }
};

// Orders 7..max_order. Throws DomainError if max_order < 7 or above the
// generator limit.
VerificationReport verify_fibonacci(int max_order);

// Orders 5..max_order. Throws DomainError if max_order < 5 or above the
// generator limit.
VerificationReport verify_thue_morse(int max_order);

struct PropertyViolation {
  Word text;
  Cover cover;
  Occurrence offending;
};

struct PropertyReport {
  std::size_t samples = 0;
  std::size_t tested = 0;
  std::size_t skipped = 0;  // no ONOC exists
  std::vector<PropertyViolation> violations;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::size_t max_len = 0;

  bool passed() const { return violations.empty(); }
};

// i.i.d. uniform letters, lengths uniform on [min(4, max_len), max_len].
// Requires samples >= 1 and 1 <= max_len <= 32.
PropertyReport verify_onoc_lemma_random(std::uint64_t seed, std::size_t samples, std::size_t max_len);

// Every binary text of length 1..max_len; requires 1 <= max_len <= 20.
PropertyReport verify_onoc_lemma_exhaustive(std::size_t max_len);

// Worker count for sweeps: hardware concurrency, capped by NETOCC_THREADS.
unsigned worker_count();

}  // namespace netocc
