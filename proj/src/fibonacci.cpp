#include "netocc/fibonacci.hpp"

#include <string>

#include "netocc/net_frequency.hpp"
#include "netocc/words.hpp"

namespace netocc {
namespace {

using nlohmann::json;

std::uint64_t f(int k) { return fib_length(k); }

// Fibonacci numbers extended with f_{-1} = 1 and f_0 = 0.
std::uint64_t f_ext(int k) {
  if (k == -1) return 1;
  if (k == 0) return 0;
  return fib_length(k);
}

json positions_json(const PositionSet& s) { return json(s.values()); }

void record_positions(ClaimMap& claims, const std::string& name, const Word& pattern,
                      const Word& text, const PositionSet& expected) {
  const PositionSet found = find_occurrences(pattern, text);
  json witness{{"expected", positions_json(expected)}, {"found", positions_json(found)}};
  claims.record(name, found == expected, std::move(witness));
}

bool all_unique(const Word& text, const Word& w) {
  return count_occurrences(w.view(), text.view()) == 1;
}

}  // namespace

std::vector<ThetaStep> theta_trace(int i, int j_max) {
  if (i < 6 || j_max < 0 || j_max > i - 4) {
    throw DomainError("theta recurrence needs i >= 6 and 0 <= j <= i-4, got i=" + std::to_string(i) +
                      " j=" + std::to_string(j_max));
  }
  const std::uint64_t fi = f(i);
  std::vector<ThetaStep> steps;
  steps.push_back({0, PositionSet{1}});
  if (j_max >= 1) steps.push_back({1, PositionSet{1}});
  for (int j = 2; j <= j_max; ++j) {
    const PositionSet& prev = steps[j - 1].theta;
    const PositionSet shifted = steps[j - 2].theta.shifted(f(i - j));
    ThetaStep step;
    step.j = j;
    if (j % 2 == 0) {
      const PositionSet rightmost{fi - f(i - j) + 1};
      step.theta = prev.united(shifted).united(rightmost);
      step.disjoint = prev.disjoint_with(shifted) && prev.disjoint_with(rightmost) &&
                      shifted.disjoint_with(rightmost);
      step.max_matches = step.theta.max() == fi - f(i - j) + 1;
    } else {
      step.theta = prev.united(shifted);
      step.disjoint = prev.disjoint_with(shifted);
      step.max_matches = step.theta.max() == fi - f(i - (j - 1)) + 1;
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

PositionSet theta_set(int i, int j) { return theta_trace(i, j).back().theta; }

std::uint64_t theta_count(int i, int j) {
  if (i < 2 || j < 0 || j > i - 1) {
    throw DomainError("theta_count needs i >= 2 and 0 <= j <= i-1, got i=" + std::to_string(i) +
                      " j=" + std::to_string(j));
  }
  if (j <= i - 4) return f_ext(j + 2) - static_cast<std::uint64_t>(j % 2);
  if (j <= i - 2) return f_ext(j + 1);
  return f_ext(j - 1);
}

std::vector<Occurrence> predicted_fib_net_occurrences(int i) {
  if (i < 7) throw DomainError("predicted_fib_net_occurrences needs i >= 7");
  const std::uint64_t q = q_word(i).size();
  const std::uint64_t f2 = f(i - 2);
  return {
      {1, f2 + q},
      {f2 + 1, 2 * f2 + q},
      {f(i - 1) + 1, f(i)},
  };
}

ClaimMap check_fib_identities(int i) {
  if (i < 6) throw DomainError("check_fib_identities needs i >= 6");
  ClaimMap claims;
  const Word fi = fib_word(i);
  claims.record("F_i = F_{i-2} F_{i-3} F_{i-2}", fi == fib_word(i - 2) + fib_word(i - 3) + fib_word(i - 2));
  claims.record("F_i = F_{i-2} F_{i-2} F_{i-5} F_{i-4}",
                fi == fib_word(i - 2) + fib_word(i - 2) + fib_word(i - 5) + fib_word(i - 4));
  if (i >= 7) {
    const Word q = q_word(i);
    const int parity = i % 2;
    claims.record("|Q_i| = f_{i-3} - 2", q.size() == f(i - 3) - 2,
                  json{{"length", q.size()}, {"expected", f(i - 3) - 2}});
    claims.record("F_{i-4} F_{i-5} = Q_i Delta(1 - (i mod 2))",
                  fib_word(i - 4) + fib_word(i - 5) == q + delta(1 - parity));
    claims.record("F_{i-5} F_{i-4} = Q_i Delta(i mod 2)",
                  fib_word(i - 5) + fib_word(i - 4) == q + delta(parity));
  }
  if (i >= 8) {
    claims.record("F_{i-4} Q_i = F_{i-3} Q_{i-1}",
                  fib_word(i - 4) + q_word(i) == fib_word(i - 3) + q_word(i - 1));
  }
  return claims;
}

ClaimMap check_fib_lemmas(int i) {
  if (i < 7) throw DomainError("check_fib_lemmas needs i >= 7");
  ClaimMap claims;
  const Word text = fib_word(i);
  const std::size_t n = text.size();
  const Word f2 = fib_word(i - 2), f3 = fib_word(i - 3);
  const Word q = q_word(i);
  const Word f2q = f2 + q;

  record_positions(claims, "F_i occurs only twice in F_i F_i", text, text + text, PositionSet{1, n + 1});
  {
    const std::size_t aaa = count_occurrences("aaa", text.view());
    const std::size_t bb = count_occurrences("bb", text.view());
    claims.record("aaa and bb do not occur", aaa == 0 && bb == 0, json{{"aaa", aaa}, {"bb", bb}});
  }
  record_positions(claims, "F_{i-1} only occurs at position 1", fib_word(i - 1), text, PositionSet{1});
  record_positions(claims, "F_{i-2} only occurs at 1, f_{i-2}+1, f_{i-1}+1", f2, text,
                   PositionSet{1, f(i - 2) + 1, f(i - 1) + 1});
  record_positions(claims, "F_{i-3} only occurs at 1, f_{i-3}+1, f_{i-2}+1, f_{i-1}+1", f3, text,
                   PositionSet{1, f(i - 3) + 1, f(i - 2) + 1, f(i - 1) + 1});
  record_positions(claims, "F_{i-2} Q_i only occurs at 1 and f_{i-2}+1", f2q, text,
                   PositionSet{1, f(i - 2) + 1});

  {
    const auto predicted = predicted_fib_net_occurrences(i);
    bool ok = true;
    json witness = json::array();
    for (const auto& occ : predicted) {
      const bool net = is_net_occurrence(text, occ);
      ok = ok && net;
      witness.push_back({{"start", occ.start}, {"end", occ.end}, {"net", net}});
    }
    for (Position p : {Position{1}, f(i - 2) + 1}) {
      const Occurrence occ{p, p + f2.size() - 1};
      const bool net = is_net_occurrence(text, occ);
      ok = ok && !net;
      witness.push_back({{"start", occ.start}, {"end", occ.end}, {"net", net}});
    }
    claims.record("F_{i-2} at f_{i-1}+1 and F_{i-2} Q_i at 1, f_{i-2}+1 are net; other F_{i-2} are not",
                  ok, std::move(witness));
  }

  if (i >= 8) {
    const Word q1 = q_word(i - 1);
    json bad = json::array();
    for (Position p : find_occurrences(f3, text)) {
      const Position follow = p + f3.size();
      const bool ok = follow + q1.size() - 1 <= n && text.view().substr(follow - 1, q1.size()) == q1.view();
      if (!ok) bad.push_back(p);
    }
    claims.record("F_{i-3} is always followed by Q_{i-1}", bad.empty(), json{{"bad_positions", bad}});
  }

  {
    const Word w = f3 + fib_word(i - 6) + fib_word(i - 5);
    const Word prefix = w.slice(1, f(i - 2) - 1);
    claims.record("F_{i-3} F_{i-6} F_{i-5} and its length-(f_{i-2}-1) prefix are unique",
                  all_unique(text, w) && all_unique(text, prefix),
                  json{{"count", count_occurrences(w.view(), text.view())},
                       {"prefix_count", count_occurrences(prefix.view(), text.view())}});
  }

  {
    const Word u = f3.slice(1, f3.size() - 1);
    const Letter follower = f3.at(f3.size());
    // An occurrence that ends the text has no right extension to check.
    json bad = json::array();
    json at_end = json::array();
    for (Position p : find_occurrences(u, text)) {
      const Position next = p + u.size();
      if (next > n) {
        at_end.push_back(p);
      } else if (text.at(next) != follower) {
        bad.push_back(p);
      }
    }
    claims.record("length-(f_{i-3}-1) prefix of F_{i-3} is always followed by F_{i-3}[f_{i-3}]",
                  bad.empty(), json{{"bad_positions", bad}, {"suffix_positions", at_end}});
  }

  {
    json bad = json::array();
    for (Position p : find_occurrences(f2q, text)) {
      const Position e = p + f2q.size() - 1;
      if (p > 1 && count_occurrences(text.view().substr(p - 2, f2q.size() + 1), text.view()) != 1) {
        bad.push_back({{"start", p - 1}, {"end", e}});
      }
      if (e < n && count_occurrences(text.view().substr(p - 1, f2q.size() + 1), text.view()) != 1) {
        bad.push_back({{"start", p}, {"end", e + 1}});
      }
    }
    claims.record("every proper superstring of F_{i-2} Q_i is unique", bad.empty(),
                  json{{"repeated_extensions", bad}});
  }

  const RepeatIndex index(text);
  {
    // Exhaustive enumeration of every super-occurrence of every F_{i-3}.
    json bad = json::array();
    std::uint64_t examined = 0;
    for (Position u : find_occurrences(f3, text)) {
      const Position u_end = u + f3.size() - 1;
      for (Position s = 1; s <= u; ++s) {
        for (Position e = u_end; e <= n; ++e) {
          ++examined;
          if (!index.is_net({s, e})) continue;
          const Word sub = text.slice(s, e);
          if (sub != f2 && sub != f2q && bad.size() < 16) bad.push_back({{"start", s}, {"end", e}});
        }
      }
    }
    claims.record("super-occurrences of F_{i-3} are not net unless F_{i-2} or F_{i-2} Q_i", bad.empty(),
                  json{{"examined", examined}, {"net_offenders", bad}});
  }
  {
    const Occurrence q_occ{f(i - 2) + 1, f(i - 2) + q.size()};
    // The two net occurrences of F_{i-2} Q_i contain this Q_i as well; they are
    // listed as exempt rather than counted against the claim.
    json bad = json::array();
    json exempt = json::array();
    std::uint64_t examined = 0;
    for (Position s = 1; s <= q_occ.start; ++s) {
      for (Position e = q_occ.end; e <= n; ++e) {
        if (Occurrence{s, e} == q_occ) continue;
        ++examined;
        if (!index.is_net({s, e})) continue;
        if (text.slice(s, e) == f2q) {
          exempt.push_back({{"start", s}, {"end", e}});
        } else if (bad.size() < 16) {
          bad.push_back({{"start", s}, {"end", e}});
        }
      }
    }
    claims.record("proper super-occurrences of Q_i at f_{i-2}+1 are not net unless F_{i-2} Q_i", bad.empty(),
                  json{{"examined", examined}, {"net_offenders", bad}, {"exempt", exempt}});
  }
  return claims;
}

}  // namespace netocc
