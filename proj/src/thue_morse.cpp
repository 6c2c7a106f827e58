#include "netocc/thue_morse.hpp"

#include <algorithm>
#include <string>

#include "netocc/net_frequency.hpp"

namespace netocc {
namespace {

using nlohmann::json;

std::uint64_t tau(int k) { return tm_length(k); }

json positions_json(const PositionSet& s) { return json(s.values()); }

}  // namespace

std::vector<AbStep> ab_trace(int i, int j_max) {
  if (i < 2 || j_max < 0 || j_max > i - 2) {
    throw DomainError("ab recurrence needs i >= 2 and 0 <= j <= i-2 (j = i-1 is served by a letter scan), got i=" +
                      std::to_string(i) + " j=" + std::to_string(j_max));
  }
  std::vector<AbStep> steps;
  steps.push_back({0, {PositionSet{1}, PositionSet{}}});
  if (j_max >= 1) steps.push_back({1, {PositionSet{1}, PositionSet{tau(i - 1) + 1}}});
  for (int j = 2; j <= j_max; ++j) {
    const OccurrenceSets& prev1 = steps[j - 1].sets;
    const OccurrenceSets& prev2 = steps[j - 2].sets;
    const std::uint64_t shift1 = tau(i - j);
    const std::uint64_t shift2 = tau(i - j) + tau(i - (j + 1));

    // A_{i,j} = A_{i,j-1} u B'_{i,j-1} u A'_{i,j-2}
    const PositionSet b1 = prev1.b_set.shifted(shift1);
    const PositionSet a2 = prev2.a_set.shifted(shift2);
    // B_{i,j} = B_{i,j-1} u A''_{i,j-1} u B''_{i,j-2}
    const PositionSet a1 = prev1.a_set.shifted(shift1);
    const PositionSet b2 = prev2.b_set.shifted(shift2);

    PositionSet overlap_a, overlap_b;  // I_{i,j-3}, I'_{i,j-3}
    if (j >= 3) {
      const OccurrenceSets& prev3 = steps[j - 3].sets;
      const std::uint64_t long_shift = tau(i - (j - 1)) + tau(i - j);
      const std::uint64_t short_shift = tau(i - (j - 2));
      overlap_a = prev3.a_set.shifted(long_shift).united(prev3.b_set.shifted(short_shift));
      overlap_b = prev3.b_set.shifted(long_shift).united(prev3.a_set.shifted(short_shift));
    }

    AbStep step;
    step.j = j;
    step.sets.a_set = prev1.a_set.united(b1).united(a2);
    step.sets.b_set = prev1.b_set.united(a1).united(b2);
    step.a_identities = prev1.a_set.intersected(b1) == overlap_a && prev1.a_set.disjoint_with(a2) &&
                        b1.disjoint_with(a2);
    step.b_identities = prev1.b_set.intersected(a1) == overlap_b && prev1.b_set.disjoint_with(b2) &&
                        a1.disjoint_with(b2);
    steps.push_back(std::move(step));
  }
  return steps;
}

OccurrenceSets ab_sets(int i, int j) { return ab_trace(i, j).back().sets; }

AbCounts ab_counts(int j_max) {
  if (j_max < 0) throw DomainError("ab_counts needs j_max >= 0");
  AbCounts c;
  c.a.push_back(1);
  c.b.push_back(0);
  for (int j = 1; j <= j_max; ++j) {
    c.a.push_back(j == 1 ? 1 : c.a[j - 1] + 2 * c.a[j - 2]);
    c.b.push_back(c.b[j - 1] + c.a[j - 1]);
  }
  return c;
}

std::vector<Word> tm_net_strings(int i) {
  if (i < 5) throw DomainError("tm_net_strings needs i >= 5");
  return {
      tm_word(i - 2),
      flip_word(tm_word(i - 2)),
      tm_word(i - 4) + flip_word(tm_word(i - 3)),
      flip_word(tm_word(i - 4)) + tm_word(i - 3),
  };
}

std::vector<Occurrence> predicted_tm_net_occurrences(int i) {
  if (i < 5) throw DomainError("predicted_tm_net_occurrences needs i >= 5");
  const std::uint64_t t1 = tau(i - 1), t2 = tau(i - 2), t3 = tau(i - 3), t4 = tau(i - 4);
  std::vector<Occurrence> out;
  auto add = [&](std::uint64_t start, std::uint64_t len) { out.push_back({start, start + len - 1}); };
  for (auto p : {std::uint64_t{1}, t2 + t3 + 1, t1 + t2 + 1}) add(p, t2);    // T_{i-2}
  for (auto p : {t2 + 1, t1 + 1}) add(p, t2);                                 // flip(T_{i-2})
  for (auto p : {t3 + t4 + 1, t1 + t3 + 1}) add(p, t4 + t3);                  // T_{i-4} flip(T_{i-3})
  for (auto p : {t3 + 1, t1 + t3 + t4 + 1}) add(p, t4 + t3);                  // flip(T_{i-4}) T_{i-3}
  std::sort(out.begin(), out.end());
  return out;
}

RepetitionScan scan_repetitions(const Word& w) {
  RepetitionScan scan;
  const std::string_view t = w.view();
  const std::size_t n = t.size();
  for (std::size_t p = 0; p < n && !(scan.overlap && scan.cube); ++p) {
    for (std::size_t d = 1; p + 2 * d < n + 1 && !(scan.overlap && scan.cube); ++d) {
      // lcp of the suffixes at p and p + d, capped at 2d.
      std::size_t h = 0;
      while (h < 2 * d && p + d + h < n && t[p + h] == t[p + d + h]) ++h;
      if (!scan.overlap && h >= d + 1) scan.overlap = Occurrence{p + 1, p + 2 * d + 1};
      if (!scan.cube && h >= 2 * d) scan.cube = Occurrence{p + 1, p + 3 * d};
    }
  }
  return scan;
}

ClaimMap check_tm_identities(int i) {
  if (i < 5) throw DomainError("check_tm_identities needs i >= 5");
  ClaimMap claims;
  const Word ti = tm_word(i);
  const Word t2 = tm_word(i - 2), t3 = tm_word(i - 3), t4 = tm_word(i - 4);
  const Word n2 = flip_word(t2), n3 = flip_word(t3), n4 = flip_word(t4);
  claims.record("T_i = T_{i-2} ~T_{i-2} ~T_{i-2} T_{i-2}", ti == t2 + n2 + n2 + t2);
  claims.record("T_i = T_{i-2} ~T_{i-3} T_{i-2} T_{i-3} T_{i-2}", ti == t2 + n3 + t2 + t3 + t2);
  claims.record("T_i = T_{i-3} ~T_{i-4} T_{i-4} ~T_{i-3} T_{i-2} T_{i-4} ~T_{i-3} ~T_{i-4} ~T_{i-3}",
                ti == t3 + n4 + t4 + n3 + t2 + t4 + n3 + n4 + n3);
  claims.record("T_i = T_{i-3} ~T_{i-4} T_{i-3} T_{i-4} T_{i-2} T_{i-4} ~T_{i-4} T_{i-3} ~T_{i-3}",
                ti == t3 + n4 + t3 + t4 + t2 + t4 + n4 + t3 + n3);
  if (i <= 12) {
    const RepetitionScan scan = scan_repetitions(ti);
    auto span_json = [](const std::optional<Occurrence>& o) {
      return o ? json{{"start", o->start}, {"end", o->end}} : json(nullptr);
    };
    claims.record("T_i is overlap-free", !scan.overlap, json{{"overlap", span_json(scan.overlap)}});
    claims.record("T_i is cube-free", !scan.cube, json{{"cube", span_json(scan.cube)}});
  }
  return claims;
}

ClaimMap check_tm_lemmas(int i) {
  if (i < 5) throw DomainError("check_tm_lemmas needs i >= 5");
  ClaimMap claims;
  const Word text = tm_word(i);
  const std::size_t n = text.size();
  const std::uint64_t t1 = tau(i - 1), t2 = tau(i - 2), t3 = tau(i - 3), t4 = tau(i - 4);
  const auto strings = tm_net_strings(i);

  auto positions = [&](const std::string& name, const Word& pattern, const PositionSet& expected) {
    const PositionSet found = find_occurrences(pattern, text);
    claims.record(name, found == expected,
                  json{{"expected", positions_json(expected)}, {"found", positions_json(found)}});
    return found;
  };
  const PositionSet p0 = positions("T_{i-2} only occurs at 1, t_{i-2}+t_{i-3}+1, t_{i-1}+t_{i-2}+1",
                                   strings[0], PositionSet{1, t2 + t3 + 1, t1 + t2 + 1});
  const PositionSet p1 =
      positions("~T_{i-2} only occurs at t_{i-2}+1, t_{i-1}+1", strings[1], PositionSet{t2 + 1, t1 + 1});
  const PositionSet p2 = positions("T_{i-4} ~T_{i-3} only occurs at t_{i-3}+t_{i-4}+1, t_{i-1}+t_{i-3}+1",
                                   strings[2], PositionSet{t3 + t4 + 1, t1 + t3 + 1});
  const PositionSet p3 = positions("~T_{i-4} T_{i-3} only occurs at t_{i-3}+1, t_{i-1}+t_{i-3}+t_{i-4}+1",
                                   strings[3], PositionSet{t3 + 1, t1 + t3 + t4 + 1});
  positions("T_{i-3} only occurs at its five corollary positions", tm_word(i - 3),
            PositionSet{1, t3 + t4 + 1, t2 + t3 + 1, t1 + t3 + 1, t1 + t2 + 1});

  {
    bool ok = true;
    json witness = json::array();
    const PositionSet* sets[] = {&p0, &p1, &p2, &p3};
    for (std::size_t k = 0; k < strings.size(); ++k) {
      for (Position p : *sets[k]) {
        const Occurrence occ{p, p + strings[k].size() - 1};
        const bool net = is_net_occurrence(text, occ);
        ok = ok && net;
        if (!net) witness.push_back({{"start", occ.start}, {"end", occ.end}});
      }
    }
    claims.record("every occurrence of every net string is a net occurrence", ok,
                  json{{"not_net", witness}});
  }

  {
    const RepeatIndex index(text);
    json bad = json::array();
    std::uint64_t examined = 0;
    const Word base = tm_word(i - 3);
    for (const Word& w : {base, flip_word(base)}) {
      for (Position u : find_occurrences(w, text)) {
        const Occurrence inner{u, u + w.size() - 1};
        for (Position s = 1; s <= inner.start; ++s) {
          for (Position e = inner.end; e <= n; ++e) {
            const Occurrence occ{s, e};
            if (occ == inner) continue;
            ++examined;
            if (!index.is_net(occ)) continue;
            const Word sub = text.slice(s, e);
            if (std::find(strings.begin(), strings.end(), sub) == strings.end() && bad.size() < 16) {
              bad.push_back({{"start", s}, {"end", e}});
            }
          }
        }
      }
    }
    claims.record("proper super-occurrences of T_{i-3} / ~T_{i-3} outside the net strings are not net",
                  bad.empty(), json{{"examined", examined}, {"net_offenders", bad}});
  }
  return claims;
}

namespace {

using Factors = std::vector<FactorRef>;

Factors next_factors(const Factors& in) {
  Factors out;
  out.reserve(in.size());
  for (const auto& f : in) {
    if (f.kind != FactorRef::Kind::kTM && f.kind != FactorRef::Kind::kTMFlip) {
      throw DomainError("next: factor " + to_string(f) + " is not a Thue-Morse factor");
    }
    if (f.order < 2) throw DomainError("next: " + to_string(f) + " has no lower order");
    out.push_back({f.kind, f.order - 1, {}});
  }
  return out;
}

Factors flip_factors(const Factors& in) {
  Factors out;
  out.reserve(in.size());
  for (const auto& f : in) {
    out.push_back(f.kind == FactorRef::Kind::kTM ? FactorRef::tm_flip(f.order) : FactorRef::tm(f.order));
  }
  return out;
}

Factors concat(Factors x, const Factors& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

// X [+] Y: requires x_m = y_1 = ~T_{level}; splices in (~T_{level-1}, T_level, T_{level-1}).
Factors boxplus(const Factors& x, const Factors& y, int level) {
  const FactorRef joint = FactorRef::tm_flip(level);
  if (x.empty() || y.empty() || x.back() != joint || y.front() != joint) {
    throw DomainError("boxplus: boundary factors are not both ~T_" + std::to_string(level));
  }
  if (level < 2) throw DomainError("boxplus: needs T_" + std::to_string(level - 1));
  Factors out(x.begin(), x.end() - 1);
  out.push_back(FactorRef::tm_flip(level - 1));
  out.push_back(FactorRef::tm(level));
  out.push_back(FactorRef::tm(level - 1));
  out.insert(out.end(), y.begin() + 1, y.end());
  return out;
}

struct FactorPair {
  Factors a;
  Factors b;
};

FactorPair factor_recurrence(int i, int j) {
  if (j == 0) return {{FactorRef::tm(i)}, {}};
  FactorPair cur{{FactorRef::tm(i - 1), FactorRef::tm_flip(i - 1)},
                 {FactorRef::tm(i - 1), FactorRef::tm_flip(i - 1)}};
  for (int level = 2; level <= j; ++level) {
    const Factors next_a = next_factors(cur.a);
    const Factors next_b = next_factors(cur.b);
    FactorPair step;
    step.a = level % 2 == 1 ? concat(next_a, flip_factors(next_b))
                            : boxplus(next_a, flip_factors(next_b), i - level);
    step.b = concat(next_b, flip_factors(next_a));
    cur = std::move(step);
  }
  return cur;
}

// Every target letter is its own factor; maximal runs of the other letter are merged.
Factors letter_scan(const Word& text, Letter target) {
  auto single = [](char c) { return c == 'a' ? FactorRef::tm(1) : FactorRef::tm_flip(1); };
  Factors out;
  const std::string_view t = text.view();
  for (std::size_t k = 0; k < t.size();) {
    if (t[k] == to_char(target)) {
      out.push_back(single(t[k]));
      ++k;
      continue;
    }
    std::size_t run = 1;
    while (k + run < t.size() && t[k + run] != to_char(target)) ++run;
    out.push_back(run == 1 ? single(t[k]) : FactorRef::lit(Word(t.substr(k, run))));
    k += run;
  }
  return out;
}

Word target_word(int i, int j, TargetKind kind) {
  const Word w = tm_word(i - j);
  return kind == TargetKind::kA ? w : flip_word(w);
}

}  // namespace

SmallestFactorization smallest_factorization(int i, int j, TargetKind kind) {
  if (i < 2 || j < 0 || j > i - 1) {
    throw DomainError("smallest_factorization needs i >= 2 and 0 <= j <= i-1, got i=" + std::to_string(i) +
                      " j=" + std::to_string(j));
  }
  SmallestFactorization sf;
  sf.kind = kind;
  sf.i = i;
  sf.j = j;
  sf.factorization.target = tm_word(i);
  if (j == i - 1 && i >= 3) {
    sf.factorization.factors = letter_scan(sf.factorization.target, kind == TargetKind::kA ? Letter::kA : Letter::kB);
  } else {
    FactorPair pair = factor_recurrence(i, j);
    sf.factorization.factors = kind == TargetKind::kA ? std::move(pair.a) : std::move(pair.b);
  }
  return sf;
}

bool validate_smallest_factorization(int i, int j, TargetKind kind, const Factorization& fac) {
  const Word text = tm_word(i);
  if (fac.flatten() != text) throw DomainError("validate_smallest_factorization: factors do not flatten to T_i");
  const Word target = target_word(i, j, kind);
  std::vector<Position> held;
  std::vector<bool> is_target;
  Position pos = 1;
  for (const auto& f : fac.factors) {
    const Word w = f.resolve();
    is_target.push_back(w == target);
    if (is_target.back()) held.push_back(pos);
    pos += w.size();
  }
  if (PositionSet(held) != find_occurrences(target, text)) return false;
  for (std::size_t k = 0; k + 1 < is_target.size(); ++k) {
    if (!is_target[k] && !is_target[k + 1]) return false;
  }
  return true;
}

BasisCheck check_basis(const SmallestFactorization& sf) {
  BasisCheck check;
  const auto& factors = sf.factorization.factors;
  if (factors.empty()) return check;
  const int level = sf.i - sf.j;
  std::vector<Word> basis{tm_word(level), flip_word(tm_word(level))};
  if (level >= 2) {
    basis.push_back(tm_word(level - 1));
    basis.push_back(flip_word(tm_word(level - 1)));
  }
  check.in_basis = std::all_of(factors.begin(), factors.end(), [&](const FactorRef& f) {
    return std::find(basis.begin(), basis.end(), f.resolve()) != basis.end();
  });
  check.first_is_target = factors.front().resolve() == basis[0];
  check.last_matches_parity = factors.back().resolve() == basis[sf.j % 2 == 0 ? 0 : 1];
  return check;
}

}  // namespace netocc
