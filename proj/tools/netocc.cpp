// netocc: net occurrences, occurrence-set recurrences and verification sweeps
// for binary texts. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netocc/netocc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

struct WordDeleter {
  void operator()(netocc_word* w) const { netocc_word_free(w); }
};
struct ResultDeleter {
  void operator()(netocc_result* r) const { netocc_result_free(r); }
};
using WordPtr = std::unique_ptr<netocc_word, WordDeleter>;
using ResultPtr = std::unique_ptr<netocc_result, ResultDeleter>;

// Thrown for anything that should end in exit status 2.
struct UsageError {
  std::string message;
};

void check(netocc_status status) {
  if (status != NETOCC_OK) throw UsageError{netocc_last_error()};
}

void write_output(const std::string& body, const std::string& path) {
  if (path.empty()) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << '\n';
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError{"cannot open for writing: " + path};
  out << body;
  if (!body.empty() && body.back() != '\n') out << '\n';
}

int emit(const ResultPtr& result, bool json, const std::string& path) {
  write_output(json ? netocc_result_json(result.get()) : netocc_result_text(result.get()), path);
  return netocc_result_passed(result.get()) ? kExitOk : kExitClaimFailed;
}

// "s1,e1;s2,e2;..."
std::vector<netocc_span> parse_cover(const std::string& arg) {
  std::vector<netocc_span> cover;
  std::size_t pos = 0;
  while (pos <= arg.size()) {
    const std::size_t semi = std::min(arg.find(';', pos), arg.size());
    const std::string item = arg.substr(pos, semi - pos);
    const std::size_t comma = item.find(',');
    if (item.empty() || comma == std::string::npos) throw UsageError{"malformed cover entry '" + item + "'"};
    try {
      std::size_t used_start = 0, used_end = 0;
      const std::string a = item.substr(0, comma), b = item.substr(comma + 1);
      const unsigned long long s = std::stoull(a, &used_start);
      const unsigned long long e = std::stoull(b, &used_end);
      if (used_start != a.size() || used_end != b.size() || a[0] == '-' || b[0] == '-') throw std::invalid_argument("");
      cover.push_back({static_cast<size_t>(s), static_cast<size_t>(e)});
    } catch (const std::logic_error&) {
      throw UsageError{"malformed cover entry '" + item + "'"};
    }
    pos = semi + 1;
  }
  return cover;
}

netocc_family parse_family(const std::string& name) {
  return name == "fib" ? NETOCC_FAMILY_FIBONACCI : NETOCC_FAMILY_THUE_MORSE;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Net occurrences and net frequency in binary texts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(netocc_version()));

  // gen
  std::string gen_family;
  int gen_order = 0;
  bool gen_flip = false;
  std::string gen_output;
  auto* gen = app.add_subcommand("gen", "Print a Fibonacci or Thue-Morse word");
  gen->add_option("family", gen_family, "fib or tm")->required()->check(CLI::IsMember({"fib", "tm"}));
  gen->add_option("--order", gen_order, "Word order")->required();
  gen->add_flag("--flip", gen_flip, "Exchange a and b (Thue-Morse only)");
  gen->add_option("--output,-o", gen_output, "Write to a word file instead of standard output");

  // netocc
  std::string text_path;
  std::optional<int> fib_order, tm_order;
  bool netocc_json = false;
  std::string engine = "oracle";
  auto* netocc_cmd = app.add_subcommand("netocc", "List all net occurrences of a text");
  auto* text_opt = netocc_cmd->add_option("--text", text_path, "Word file")->check(CLI::ExistingFile);
  auto* fib_opt = netocc_cmd->add_option("--fib", fib_order, "Use the Fibonacci word of this order");
  auto* tm_opt = netocc_cmd->add_option("--tm", tm_order, "Use the Thue-Morse word of this order");
  text_opt->excludes(fib_opt, tm_opt);
  fib_opt->excludes(tm_opt);
  netocc_cmd->add_flag("--json", netocc_json, "JSON output");
  netocc_cmd->add_option("--engine", engine, "oracle or indexed")->check(CLI::IsMember({"oracle", "indexed"}));

  // occ-sets
  std::string occ_family;
  int occ_order = 0, occ_j = 0;
  bool occ_json = false;
  auto* occ = app.add_subcommand("occ-sets", "Occurrence positions from the recurrence and from a direct scan");
  occ->add_option("family", occ_family, "fib or tm")->required()->check(CLI::IsMember({"fib", "tm"}));
  occ->add_option("--order", occ_order, "Order i of the text")->required();
  occ->add_option("--j", occ_j, "Pattern is the word of order i - j")->required();
  occ->add_flag("--json", occ_json, "JSON output");

  // factorize
  std::string fac_family, fac_kind;
  int fac_order = 0, fac_j = 0;
  bool fac_json = false;
  auto* fac = app.add_subcommand("factorize", "Smallest factorization of T_i around T_{i-j} or its flip");
  fac->add_option("family", fac_family, "tm")->required()->check(CLI::IsMember({"tm"}));
  fac->add_option("--order", fac_order, "Order i")->required();
  fac->add_option("--j", fac_j, "Level j")->required();
  fac->add_option("--kind", fac_kind, "A (T_{i-j}) or B (flip)")->required()->check(CLI::IsMember({"A", "B"}));
  fac->add_flag("--json", fac_json, "JSON output");

  // verify
  std::string verify_target, verify_output;
  std::optional<int> max_order;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples, max_len;
  bool exhaustive = false, verify_json = false;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("target", verify_target, "fib, tm or onoc")->required()->check(
      CLI::IsMember({"fib", "tm", "onoc"}));
  auto* max_order_opt = verify->add_option("--max-order", max_order, "Highest order (fib: 7.., tm: 5..)");
  auto* seed_opt = verify->add_option("--seed", seed, "Random seed (onoc)");
  auto* samples_opt = verify->add_option("--samples", samples, "Number of random texts (onoc)");
  auto* max_len_opt = verify->add_option("--max-len", max_len, "Longest text (onoc)");
  auto* exhaustive_opt = verify->add_flag("--exhaustive", exhaustive, "Every text up to --max-len (onoc)");
  verify->add_flag("--json", verify_json, "JSON output");
  verify->add_option("--output,-o", verify_output, "Write the report to a file");

  // onoc-check
  std::string onoc_text, cover_arg;
  bool onoc_json = false;
  auto* onoc = app.add_subcommand("onoc-check", "Check a cover and scan its bridging super-occurrences");
  onoc->add_option("--text", onoc_text, "Word file")->required()->check(CLI::ExistingFile);
  onoc->add_option("--cover", cover_arg, "\"s1,e1;s2,e2;...\"")->required();
  onoc->add_flag("--json", onoc_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      if (gen_flip && gen_family != "tm") throw UsageError{"--flip applies to tm only"};
      netocc_word* raw = nullptr;
      check(gen_family == "fib" ? netocc_word_fib(gen_order, &raw) : netocc_word_tm(gen_order, gen_flip, &raw));
      WordPtr word(raw);
      if (gen_output.empty()) {
        write_output(netocc_word_data(word.get()), "");
      } else {
        check(netocc_word_write_file(word.get(), gen_output.c_str()));
      }
      return kExitOk;
    }

    if (netocc_cmd->parsed()) {
      netocc_word* raw = nullptr;
      if (!text_path.empty()) {
        check(netocc_word_read_file(text_path.c_str(), &raw));
      } else if (fib_order) {
        check(netocc_word_fib(*fib_order, &raw));
      } else if (tm_order) {
        check(netocc_word_tm(*tm_order, 0, &raw));
      } else {
        throw UsageError{"one of --text, --fib, --tm is required"};
      }
      WordPtr word(raw);
      netocc_result* result = nullptr;
      check(netocc_net_occurrences(word.get(), engine == "oracle" ? NETOCC_ENGINE_ORACLE : NETOCC_ENGINE_INDEXED,
                                   &result));
      return emit(ResultPtr(result), netocc_json, "");
    }

    if (occ->parsed()) {
      netocc_result* result = nullptr;
      check(netocc_occurrence_sets(parse_family(occ_family), occ_order, occ_j, &result));
      return emit(ResultPtr(result), occ_json, "");
    }

    if (fac->parsed()) {
      netocc_result* result = nullptr;
      check(netocc_smallest_factorization(fac_order, fac_j, fac_kind[0], &result));
      return emit(ResultPtr(result), fac_json, "");
    }

    if (verify->parsed()) {
      netocc_result* result = nullptr;
      if (verify_target == "onoc") {
        if (max_order_opt->count() > 0) throw UsageError{"--max-order does not apply to verify onoc"};
        if (!max_len) throw UsageError{"verify onoc requires --max-len"};
        if (exhaustive) {
          check(netocc_verify_onoc_exhaustive(*max_len, &result));
        } else {
          check(netocc_verify_onoc_random(seed.value_or(42), samples.value_or(1000), *max_len, &result));
        }
      } else {
        for (const auto* opt : {seed_opt, samples_opt, max_len_opt, exhaustive_opt}) {
          if (opt->count() > 0) throw UsageError{opt->get_name() + " applies to verify onoc only"};
        }
        if (verify_target == "fib") {
          check(netocc_verify_fibonacci(max_order.value_or(20), &result));
        } else {
          check(netocc_verify_thue_morse(max_order.value_or(14), &result));
        }
      }
      return emit(ResultPtr(result), verify_json, verify_output);
    }

    if (onoc->parsed()) {
      const auto cover = parse_cover(cover_arg);
      netocc_word* raw = nullptr;
      check(netocc_word_read_file(onoc_text.c_str(), &raw));
      WordPtr word(raw);
      netocc_result* result = nullptr;
      check(netocc_onoc_check(word.get(), cover.data(), cover.size(), &result));
      return emit(ResultPtr(result), onoc_json, "");
    }
  } catch (const UsageError& e) {
    std::cerr << "netocc: " << e.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
