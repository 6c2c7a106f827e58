#include "netocc/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "netocc/fibonacci.hpp"
#include "netocc/net_frequency.hpp"
#include "netocc/thue_morse.hpp"

namespace netocc {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kMaxFibOrder = 40;
constexpr int kMaxTmOrder = 20;

json occurrences_json(const std::vector<Occurrence>& occs) {
  json out = json::array();
  for (const auto& o : occs) out.push_back({o.start, o.end});
  return out;
}

// Runs fn(k) for k in [0, count) on a small pool; results land in slot k.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn fn) {
  std::vector<T> out(count);
  const std::size_t workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) out[k] = fn(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < count;) {
        try {
          out[k] = fn(k);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

// Shared tail of both sweeps: predicted list vs. both engines, then completeness.
void record_net_occurrence_claims(ClaimMap& claims, const Word& text, const std::vector<Occurrence>& predicted) {
  const auto oracle = occurrences_of(net_occurrences_bruteforce(text));
  const auto indexed = occurrences_of(net_occurrences_indexed(text));
  claims.record("net occurrences: oracle equals prediction", oracle == predicted,
                json{{"count", oracle.size()}, {"oracle", occurrences_json(oracle)},
                     {"predicted", occurrences_json(predicted)}});
  claims.record("net occurrences: indexed engine equals oracle", indexed == oracle,
                json{{"indexed", occurrences_json(indexed)}});

  const CompletenessReport report = prove_completeness(text, Cover{predicted});
  claims.record("onoc: predicted occurrences form a complete ONOC",
                report.cover_valid && report.offending_supers.empty() && report.oracle_agrees,
                json{{"cover_valid", report.cover_valid},
                     {"offending_supers", occurrences_json(report.offending_supers)},
                     {"oracle_agrees", report.oracle_agrees},
                     {"supers_examined", report.supers_examined}});
  const auto lemma = report.cover_valid ? super_occurrence_lemma_violations(oracle, Cover{predicted}, text.size())
                                        : std::vector<Occurrence>{};
  claims.record("onoc: outside net occurrences bridge a BNSO", report.cover_valid && lemma.empty(),
                json{{"violations", occurrences_json(lemma)}});
}

ClaimMap fibonacci_order(int i) {
  ClaimMap claims;
  const Word text = fib_word(i);

  {
    const auto steps = theta_trace(i, i - 4);
    json mismatches = json::array();
    bool disjoint = true, max_ok = true;
    for (const auto& step : steps) {
      const PositionSet oracle = find_occurrences(fib_word(i - step.j), text);
      if (step.theta != oracle) {
        mismatches.push_back({{"j", step.j}, {"recurrence", step.theta.values()}, {"oracle", oracle.values()}});
      }
      disjoint = disjoint && step.disjoint;
      max_ok = max_ok && step.max_matches;
    }
    claims.record("theta: recurrence equals oracle for j <= i-4", mismatches.empty(),
                  json{{"mismatches", mismatches}});
    claims.record("theta: unions are disjoint", disjoint);
    claims.record("theta: maximum matches closed form", max_ok);
  }
  {
    json mismatches = json::array();
    for (int j = 0; j <= i - 1; ++j) {
      const std::size_t oracle = find_occurrences(fib_word(i - j), text).size();
      if (theta_count(i, j) != oracle) {
        mismatches.push_back({{"j", j}, {"formula", theta_count(i, j)}, {"oracle", oracle}});
      }
    }
    claims.record("theta: counts match oracle for j <= i-1", mismatches.empty(), json{{"mismatches", mismatches}});
  }
  claims.merge(check_fib_identities(i), "identity: ");
  claims.merge(check_fib_lemmas(i), "lemma: ");
  record_net_occurrence_claims(claims, text, predicted_fib_net_occurrences(i));
  return claims;
}

void record_factorization_claims(ClaimMap& claims, int i) {
  json failures = json::array();
  json last_level = json::array();
  for (int j = 0; j <= i - 1; ++j) {
    for (TargetKind kind : {TargetKind::kA, TargetKind::kB}) {
      if (kind == TargetKind::kB && j == 0) continue;
      const auto sf = smallest_factorization(i, j, kind);
      const bool valid = sf.factorization.valid() && validate_smallest_factorization(i, j, kind, sf.factorization);
      const BasisCheck basis = check_basis(sf);
      const bool shape = basis.first_is_target && basis.last_matches_parity;
      const char* name = kind == TargetKind::kA ? "A" : "B";
      if (j <= i - 2) {
        if (!valid || !basis.all()) {
          failures.push_back({{"j", j}, {"kind", name}, {"valid", valid}, {"in_basis", basis.in_basis},
                              {"first_is_target", basis.first_is_target},
                              {"last_matches_parity", basis.last_matches_parity}});
        }
      } else {
        if (!valid || !shape) {
          failures.push_back({{"j", j}, {"kind", name}, {"valid", valid},
                              {"first_is_target", basis.first_is_target},
                              {"last_matches_parity", basis.last_matches_parity}});
        }
        last_level.push_back({{"kind", name}, {"in_basis", basis.in_basis}, {"factors", sf.factorization.size()}});
      }
    }
  }
  claims.record("factorization: smallest factorizations are valid", failures.empty(),
                json{{"failures", failures}, {"letter_level", last_level}});
}

ClaimMap thue_morse_order(int i) {
  ClaimMap claims;
  const Word text = tm_word(i);
  {
    const auto steps = ab_trace(i, i - 2);
    const AbCounts counts = ab_counts(i - 1);
    json mismatches = json::array();
    json count_mismatches = json::array();
    bool identities = true;
    for (const auto& step : steps) {
      const Word target = tm_word(i - step.j);
      const PositionSet a = find_occurrences(target, text);
      const PositionSet b = find_occurrences(flip_word(target), text);
      if (step.sets.a_set != a || step.sets.b_set != b) {
        mismatches.push_back({{"j", step.j}, {"a_recurrence", step.sets.a_set.values()}, {"a_oracle", a.values()},
                              {"b_recurrence", step.sets.b_set.values()}, {"b_oracle", b.values()}});
      }
      if (a.size() != counts.a[step.j] || b.size() != counts.b[step.j]) {
        count_mismatches.push_back({{"j", step.j}, {"a", counts.a[step.j]}, {"a_oracle", a.size()},
                                    {"b", counts.b[step.j]}, {"b_oracle", b.size()}});
      }
      identities = identities && step.a_identities && step.b_identities;
    }
    claims.record("ab: recurrence equals oracle for j <= i-2", mismatches.empty(), json{{"mismatches", mismatches}});
    claims.record("ab: intersection identities hold", identities);
    claims.record("ab: counts match a_j, b_j for j <= i-2", count_mismatches.empty(),
                  json{{"mismatches", count_mismatches}});

    // j = i-1: single letters, served by a letter scan; report how the count
    // recurrence compares there.
    const std::size_t oracle_count = find_occurrences(tm_word(1), text).size();
    std::size_t scan_count = 0;
    for (char c : text.view()) scan_count += c == 'a';
    const std::uint64_t recurrence_count = counts.a[i - 1];
    claims.record("ab: last_level_letter_scan", scan_count == oracle_count,
                  json{{"oracle_count", oracle_count}, {"recurrence_count", recurrence_count},
                       {"agree", recurrence_count == oracle_count}});
  }
  claims.merge(check_tm_identities(i), "identity: ");
  claims.merge(check_tm_lemmas(i), "lemma: ");
  record_net_occurrence_claims(claims, text, predicted_tm_net_occurrences(i));
  record_factorization_claims(claims, i);
  return claims;
}

template <typename Fn>
VerificationReport sweep(Family family, int min_order, int max_order, Fn per_order) {
  const auto started = Clock::now();
  VerificationReport report;
  report.family = family;
  report.min_order = min_order;
  report.max_order = max_order;
  const std::size_t count = static_cast<std::size_t>(max_order - min_order + 1);
  // Largest orders first so the longest jobs start early; slots keep the order.
  auto results = parallel_map<ClaimMap>(count, [&](std::size_t k) { return per_order(max_order - static_cast<int>(k)); });
  for (std::size_t k = count; k-- > 0;) {
    report.orders.push_back({max_order - static_cast<int>(k), std::move(results[k])});
  }
  report.wall_time = Clock::now() - started;
  return report;
}

// Appends violations for one text; returns false when the text has no ONOC.
bool check_text(const Word& text, std::vector<PropertyViolation>& out) {
  const auto occs = occurrences_of(net_occurrences_bruteforce(text));
  const auto cover = find_onoc_greedy(occs, text.size());
  if (!cover) return false;
  for (const auto& bad : super_occurrence_lemma_violations(occs, *cover, text.size())) {
    out.push_back({text, *cover, bad});
  }
  return true;
}

struct TextOutcome {
  bool tested = false;
  std::vector<PropertyViolation> violations;
};

}  // namespace

std::size_t VerificationReport::failed_count() const {
  std::size_t failed = 0;
  for (const auto& o : orders) failed += o.claims.failed_count();
  return failed;
}

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("NETOCC_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

VerificationReport verify_fibonacci(int max_order) {
  if (max_order < 7 || max_order > kMaxFibOrder) {
    throw DomainError("verify_fibonacci needs 7 <= max_order <= " + std::to_string(kMaxFibOrder));
  }
  return sweep(Family::kFibonacci, 7, max_order, fibonacci_order);
}

VerificationReport verify_thue_morse(int max_order) {
  if (max_order < 5 || max_order > kMaxTmOrder) {
    throw DomainError("verify_thue_morse needs 5 <= max_order <= " + std::to_string(kMaxTmOrder));
  }
  return sweep(Family::kThueMorse, 5, max_order, thue_morse_order);
}

PropertyReport verify_onoc_lemma_random(std::uint64_t seed, std::size_t samples, std::size_t max_len) {
  if (samples < 1) throw DomainError("verify_onoc_lemma_random needs samples >= 1");
  if (max_len < 1 || max_len > 32) throw DomainError("verify_onoc_lemma_random needs 1 <= max_len <= 32");
  PropertyReport report;
  report.seed = seed;
  report.max_len = max_len;
  report.samples = samples;

  // Draw every text up front so the result does not depend on scheduling.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length_dist(std::min<std::size_t>(4, max_len), max_len);
  std::uniform_int_distribution<int> letter_dist(0, 1);
  std::vector<std::string> texts(samples);
  for (auto& t : texts) {
    t.resize(length_dist(rng));
    for (auto& c : t) c = letter_dist(rng) == 0 ? 'a' : 'b';
  }
  auto outcomes = parallel_map<TextOutcome>(samples, [&](std::size_t k) {
    TextOutcome o;
    o.tested = check_text(Word(texts[k]), o.violations);
    return o;
  });
  for (auto& o : outcomes) {
    (o.tested ? report.tested : report.skipped) += 1;
    for (auto& v : o.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

PropertyReport verify_onoc_lemma_exhaustive(std::size_t max_len) {
  if (max_len < 1 || max_len > 20) throw DomainError("verify_onoc_lemma_exhaustive needs 1 <= max_len <= 20");
  PropertyReport report;
  report.exhaustive = true;
  report.max_len = max_len;
  // One job per length; each job walks all 2^len texts in lexicographic order.
  struct LengthOutcome {
    std::size_t tested = 0;
    std::size_t skipped = 0;
    std::vector<PropertyViolation> violations;
  };
  auto outcomes = parallel_map<LengthOutcome>(max_len, [&](std::size_t k) {
    const std::size_t len = max_len - k;
    LengthOutcome o;
    std::string t(len, 'a');
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      for (std::size_t p = 0; p < len; ++p) t[p] = (bits >> (len - 1 - p)) & 1 ? 'b' : 'a';
      (check_text(Word(t), o.violations) ? o.tested : o.skipped) += 1;
    }
    return o;
  });
  for (std::size_t k = max_len; k-- > 0;) {
    report.tested += outcomes[k].tested;
    report.skipped += outcomes[k].skipped;
    for (auto& v : outcomes[k].violations) report.violations.push_back(std::move(v));
  }
  report.samples = report.tested + report.skipped;
  return report;
}

}  // namespace netocc
