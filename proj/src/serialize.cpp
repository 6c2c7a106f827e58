#include "netocc/serialize.hpp"

#include <sstream>

#include "netocc/fibonacci.hpp"

namespace netocc {
namespace {

using nlohmann::json;

json span_json(const Occurrence& o) { return {{"start", o.start}, {"end", o.end}}; }

json spans_json(const std::vector<Occurrence>& occs) {
  json out = json::array();
  for (const auto& o : occs) out.push_back(span_json(o));
  return out;
}

json letter_json(const std::optional<Letter>& l) {
  return l ? json(std::string(1, to_char(*l))) : json(nullptr);
}

std::string span_text(const Occurrence& o) {
  return "(" + std::to_string(o.start) + "," + std::to_string(o.end) + ")";
}

std::string spans_text(const std::vector<Occurrence>& occs) {
  std::string out;
  for (const auto& o : occs) out += (out.empty() ? "" : " ") + span_text(o);
  return out.empty() ? "-" : out;
}

std::string positions_text(const PositionSet& s) {
  std::string out = "{";
  for (Position p : s) out += (out.size() > 1 ? ", " : "") + std::to_string(p);
  return out + "}";
}

const char* kind_name(TargetKind kind) { return kind == TargetKind::kA ? "A" : "B"; }

}  // namespace

const char* family_name(Family family) { return family == Family::kFibonacci ? "fibonacci" : "thue-morse"; }

OccurrenceSetQuery query_occurrence_sets(Family family, int order, int j) {
  OccurrenceSetQuery q;
  q.family = family;
  q.order = order;
  q.j = j;
  if (family == Family::kFibonacci) {
    q.a_recurrence = theta_set(order, j);
    q.a_oracle = find_occurrences(fib_word(order - j), fib_word(order));
  } else {
    const OccurrenceSets sets = ab_sets(order, j);
    const Word text = tm_word(order);
    const Word target = tm_word(order - j);
    q.a_recurrence = sets.a_set;
    q.b_recurrence = sets.b_set;
    q.a_oracle = find_occurrences(target, text);
    q.b_oracle = find_occurrences(flip_word(target), text);
  }
  return q;
}

json to_json(const NetOccurrenceRecord& r) {
  return {{"start", r.occurrence.start},
          {"end", r.occurrence.end},
          {"string", r.substring.str()},
          {"left", letter_json(r.left)},
          {"right", letter_json(r.right)}};
}

json to_json(const std::vector<NetOccurrenceRecord>& records) {
  json out = json::array();
  for (const auto& r : records) out.push_back(to_json(r));
  return out;
}

json to_json(const CompletenessReport& r) {
  return {{"cover_valid", r.cover_valid},
          {"bnsos", spans_json(r.bnsos)},
          {"offending_supers", spans_json(r.offending_supers)},
          {"oracle_agrees", r.oracle_agrees},
          {"supers_examined", r.supers_examined}};
}

json to_json(const VerificationReport& r) {
  json orders = json::array();
  for (const auto& o : r.orders) {
    json claims = json::object();
    for (const auto& [name, claim] : o.claims.claims()) {
      claims[name] = {{"pass", claim.pass}, {"witness", claim.witness ? *claim.witness : json(nullptr)}};
    }
    orders.push_back({{"order", o.order}, {"claims", std::move(claims)}});
  }
  return {{"family", family_name(r.family)},
          {"min_order", r.min_order},
          {"max_order", r.max_order},
          {"passed", r.passed()},
          {"failed", r.failed_count()},
          {"wall_time_seconds", r.wall_time.count()},
          {"orders", std::move(orders)}};
}

json to_json(const PropertyReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"text", v.text.str()}, {"cover", spans_json(v.cover.members)},
                          {"offending", span_json(v.offending)}});
  }
  json out{{"mode", r.exhaustive ? "exhaustive" : "random"},
           {"max_len", r.max_len},
           {"samples", r.samples},
           {"tested", r.tested},
           {"skipped", r.skipped},
           {"passed", r.passed()},
           {"violations", std::move(violations)}};
  out["seed"] = r.exhaustive ? json(nullptr) : json(r.seed);
  return out;
}

json to_json(const FactorRef& f) {
  switch (f.kind) {
    case FactorRef::Kind::kFib:
      return {{"kind", "Fib"}, {"order", f.order}, {"text", nullptr}};
    case FactorRef::Kind::kTM:
      return {{"kind", "TM"}, {"order", f.order}, {"text", nullptr}};
    case FactorRef::Kind::kTMFlip:
      return {{"kind", "TMflip"}, {"order", f.order}, {"text", nullptr}};
    case FactorRef::Kind::kLiteral:
      break;
  }
  return {{"kind", "lit"}, {"order", nullptr}, {"text", f.literal.str()}};
}

json to_json(const SmallestFactorization& sf) {
  json factors = json::array();
  for (const auto& f : sf.factorization.factors) factors.push_back(to_json(f));
  return {{"order", sf.i}, {"j", sf.j}, {"kind", kind_name(sf.kind)}, {"factors", std::move(factors)}};
}

json to_json(const OccurrenceSetQuery& q) {
  json out{{"family", family_name(q.family)}, {"order", q.order}, {"j", q.j}, {"equal", q.equal()}};
  if (q.family == Family::kFibonacci) {
    out["recurrence"] = q.a_recurrence.values();
    out["oracle"] = q.a_oracle.values();
  } else {
    out["recurrence"] = {{"a", q.a_recurrence.values()}, {"b", q.b_recurrence.values()}};
    out["oracle"] = {{"a", q.a_oracle.values()}, {"b", q.b_oracle.values()}};
  }
  return out;
}

std::string to_text(const std::vector<NetOccurrenceRecord>& records) {
  std::ostringstream out;
  out << records.size() << " net occurrence" << (records.size() == 1 ? "" : "s") << "\n";
  for (const auto& r : records) {
    out << span_text(r.occurrence) << " " << r.substring.str() << " left=" << (r.left ? to_char(*r.left) : '-')
        << " right=" << (r.right ? to_char(*r.right) : '-') << "\n";
  }
  return out.str();
}

std::string to_text(const CompletenessReport& r) {
  std::ostringstream out;
  out << "cover valid: " << (r.cover_valid ? "yes" : "no") << "\n"
      << "bnsos: " << spans_text(r.bnsos) << "\n"
      << "supers examined: " << r.supers_examined << "\n"
      << "offending supers: " << spans_text(r.offending_supers) << "\n"
      << "oracle agrees: " << (r.oracle_agrees ? "yes" : "no") << "\n";
  return out.str();
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& o : r.orders) {
    out << "order " << o.order << ": " << o.claims.size() - o.claims.failed_count() << "/" << o.claims.size()
        << " claims pass\n";
    for (const auto& [name, claim] : o.claims.claims()) {
      if (claim.pass) continue;
      out << "  FAIL " << name << ": " << (claim.witness ? claim.witness->dump() : "") << "\n";
    }
  }
  out << family_name(r.family) << " orders " << r.min_order << ".." << r.max_order << ": "
      << (r.passed() ? "PASS" : "FAIL") << " (" << r.failed_count() << " failed, " << r.wall_time.count()
      << " s)\n";
  return out.str();
}

std::string to_text(const PropertyReport& r) {
  std::ostringstream out;
  out << (r.exhaustive ? "exhaustive" : "random") << " sweep, max length " << r.max_len;
  if (!r.exhaustive) out << ", seed " << r.seed;
  out << "\nsamples: " << r.samples << " (tested " << r.tested << ", skipped " << r.skipped << ")\n";
  for (const auto& v : r.violations) {
    out << "violation: text " << v.text.str() << " cover " << spans_text(v.cover.members) << " offending "
        << span_text(v.offending) << "\n";
  }
  out << "violations: " << r.violations.size() << "\n";
  return out.str();
}

std::string to_text(const SmallestFactorization& sf) {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < sf.factorization.factors.size(); ++k) {
    out << (k ? ", " : "") << to_string(sf.factorization.factors[k]);
  }
  out << ")\n";
  return out.str();
}

std::string to_text(const OccurrenceSetQuery& q) {
  std::ostringstream out;
  if (q.family == Family::kFibonacci) {
    out << "recurrence: " << positions_text(q.a_recurrence) << "\n"
        << "oracle:     " << positions_text(q.a_oracle) << "\n";
  } else {
    out << "A recurrence: " << positions_text(q.a_recurrence) << "\n"
        << "A oracle:     " << positions_text(q.a_oracle) << "\n"
        << "B recurrence: " << positions_text(q.b_recurrence) << "\n"
        << "B oracle:     " << positions_text(q.b_oracle) << "\n";
  }
  out << "equal: " << (q.equal() ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace netocc
