#include "netocc/netocc.h"

#include <filesystem>
#include <new>
#include <string>
#include <vector>

#include "netocc/net_frequency.hpp"
#include "netocc/onoc.hpp"
#include "netocc/serialize.hpp"
#include "netocc/thue_morse.hpp"
#include "netocc/verifier.hpp"
#include "netocc/words.hpp"

struct netocc_word {
  netocc::Word word;
  std::string data;
};

struct netocc_result {
  bool passed = true;
  std::string json;
  std::string text;
  std::vector<netocc_span> spans;
};

namespace {

thread_local std::string last_error;

netocc_status fail(netocc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Maps exceptions onto status codes; `fn` returns nothing and writes outputs.
template <typename Fn>
netocc_status guarded(Fn&& fn) {
  try {
    fn();
    return NETOCC_OK;
  } catch (const netocc::DomainError& e) {
    return fail(NETOCC_ERR_DOMAIN, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(NETOCC_ERR_IO, e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(NETOCC_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NETOCC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NETOCC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NETOCC_ERR_INTERNAL, "unknown error");
  }
}

netocc_word* make_word(netocc::Word w) {
  auto* out = new netocc_word{std::move(w), {}};
  out->data = out->word.str();
  return out;
}

template <typename T>
netocc_result* make_result(const T& value, bool passed) {
  auto* r = new netocc_result;
  r->passed = passed;
  r->json = netocc::to_json(value).dump(2);
  r->text = netocc::to_text(value);
  return r;
}

}  // namespace

extern "C" {

const char* netocc_version(void) { return "1.0.0"; }

const char* netocc_last_error(void) { return last_error.c_str(); }

netocc_status netocc_word_fib(int order, netocc_word** out) {
  if (!out) return fail(NETOCC_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = make_word(netocc::fib_word(order)); });
}

netocc_status netocc_word_tm(int order, int flipped, netocc_word** out) {
  if (!out) return fail(NETOCC_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    netocc::Word w = netocc::tm_word(order);
    *out = make_word(flipped ? netocc::flip_word(w) : std::move(w));
  });
}

netocc_status netocc_word_from_string(const char* data, size_t length, netocc_word** out) {
  if (!out || (!data && length > 0)) return fail(NETOCC_ERR_INVALID_ARGUMENT, "null pointer");
  try {
    *out = make_word(netocc::Word(std::string_view(data ? data : "", length)));
    return NETOCC_OK;
  } catch (const netocc::DomainError& e) {
    return fail(NETOCC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(NETOCC_ERR_INTERNAL, e.what());
  }
}

netocc_status netocc_word_read_file(const char* path, netocc_word** out) {
  if (!path || !out) return fail(NETOCC_ERR_INVALID_ARGUMENT, "null pointer");
  try {
    *out = make_word(netocc::read_word_file(path));
    return NETOCC_OK;
  } catch (const netocc::DomainError& e) {
    return fail(NETOCC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(NETOCC_ERR_IO, e.what());
  }
}

netocc_status netocc_word_write_file(const netocc_word* word, const char* path) {
  if (!word || !path) return fail(NETOCC_ERR_INVALID_ARGUMENT, "null pointer");
  try {
    netocc::write_word_file(path, word->word);
    return NETOCC_OK;
  } catch (const std::exception& e) {
    return fail(NETOCC_ERR_IO, e.what());
  }
}

size_t netocc_word_length(const netocc_word* word) { return word ? word->data.size() : 0; }

const char* netocc_word_data(const netocc_word* word) { return word ? word->data.c_str() : nullptr; }

void netocc_word_free(netocc_word* word) { delete word; }

netocc_status netocc_net_occurrences(const netocc_word* text, netocc_engine engine, netocc_result** out) {
  if (!text || !out) return fail(NETOCC_ERR_INVALID_ARGUMENT, "null pointer");
  if (engine != NETOCC_ENGINE_ORACLE && engine != NETOCC_ENGINE_INDEXED) {
    return fail(NETOCC_ERR_INVALID_ARGUMENT, "unknown engine");
  }
  return guarded([&] {
    const auto records = netocc::net_occurrences(
        text->word, engine == NETOCC_ENGINE_ORACLE ? netocc::Engine::kOracle : netocc::Engine::kIndexed);
    netocc_result* r = make_result(records, true);
    for (const auto& rec : records) r->spans.push_back({rec.occurrence.start, rec.occurrence.end});
    *out = r;
  });
}

netocc_status netocc_net_frequency(const netocc_word* text, const netocc_word* pattern, size_t* out) {
  if (!text || !pattern || !out) return fail(NETOCC_ERR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] { *out = netocc::net_frequency(text->word, pattern->word); });
}

netocc_status netocc_occurrence_sets(netocc_family family, int order, int j, netocc_result** out) {
  if (!out) return fail(NETOCC_ERR_INVALID_ARGUMENT, "null output pointer");
  if (family != NETOCC_FAMILY_FIBONACCI && family != NETOCC_FAMILY_THUE_MORSE) {
    return fail(NETOCC_ERR_INVALID_ARGUMENT, "unknown family");
  }
  return guarded([&] {
    const auto q = netocc::query_occurrence_sets(
        family == NETOCC_FAMILY_FIBONACCI ? netocc::Family::kFibonacci : netocc::Family::kThueMorse, order, j);
    *out = make_result(q, q.equal());
  });
}

netocc_status netocc_smallest_factorization(int order, int j, char kind, netocc_result** out) {
  if (!out) return fail(NETOCC_ERR_INVALID_ARGUMENT, "null output pointer");
  if (kind != 'A' && kind != 'B') return fail(NETOCC_ERR_INVALID_ARGUMENT, "kind must be 'A' or 'B'");
  return guarded([&] {
    const auto k = kind == 'A' ? netocc::TargetKind::kA : netocc::TargetKind::kB;
    const auto sf = netocc::smallest_factorization(order, j, k);
    const bool valid = sf.factorization.factors.empty()
                           ? true
                           : netocc::validate_smallest_factorization(order, j, k, sf.factorization);
    *out = make_result(sf, valid);
  });
}

netocc_status netocc_verify_fibonacci(int max_order, netocc_result** out) {
  if (!out) return fail(NETOCC_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const auto report = netocc::verify_fibonacci(max_order);
    *out = make_result(report, report.passed());
  });
}

netocc_status netocc_verify_thue_morse(int max_order, netocc_result** out) {
  if (!out) return fail(NETOCC_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const auto report = netocc::verify_thue_morse(max_order);
    *out = make_result(report, report.passed());
  });
}

netocc_status netocc_onoc_check(const netocc_word* text, const netocc_span* cover, size_t count,
                                netocc_result** out) {
  if (!text || !out || (!cover && count > 0)) return fail(NETOCC_ERR_INVALID_ARGUMENT, "null pointer");
  if (count == 0) return fail(NETOCC_ERR_INVALID_ARGUMENT, "empty cover");
  return guarded([&] {
    netocc::Cover c;
    for (size_t k = 0; k < count; ++k) {
      if (cover[k].start < 1 || cover[k].start > cover[k].end) {
        throw netocc::DomainError("cover member " + std::to_string(k + 1) + " is not a span");
      }
      c.members.push_back({cover[k].start, cover[k].end});
    }
    const auto report = netocc::prove_completeness(text->word, c);
    *out = make_result(report, report.cover_valid && report.oracle_agrees);
  });
}

netocc_status netocc_verify_onoc_random(uint64_t seed, size_t samples, size_t max_len, netocc_result** out) {
  if (!out) return fail(NETOCC_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const auto report = netocc::verify_onoc_lemma_random(seed, samples, max_len);
    *out = make_result(report, report.passed());
  });
}

netocc_status netocc_verify_onoc_exhaustive(size_t max_len, netocc_result** out) {
  if (!out) return fail(NETOCC_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const auto report = netocc::verify_onoc_lemma_exhaustive(max_len);
    *out = make_result(report, report.passed());
  });
}

int netocc_result_passed(const netocc_result* result) { return result && result->passed ? 1 : 0; }

const char* netocc_result_json(const netocc_result* result) { return result ? result->json.c_str() : nullptr; }

const char* netocc_result_text(const netocc_result* result) { return result ? result->text.c_str() : nullptr; }

size_t netocc_result_span_count(const netocc_result* result) { return result ? result->spans.size() : 0; }

netocc_status netocc_result_span(const netocc_result* result, size_t index, netocc_span* out) {
  if (!result || !out) return fail(NETOCC_ERR_INVALID_ARGUMENT, "null pointer");
  if (index >= result->spans.size()) return fail(NETOCC_ERR_INVALID_ARGUMENT, "span index out of range");
  *out = result->spans[index];
  return NETOCC_OK;
}

void netocc_result_free(netocc_result* result) { delete result; }

}  // extern "C"
