#include "netocc/words.hpp"

#include <fstream>
#include <iterator>
#include <map>
#include <mutex>
#include <sstream>

namespace netocc {
namespace {

// Largest orders we are willing to materialize (~100 MB each).
constexpr int kMaxFibWordOrder = 40;
constexpr int kMaxTmWordOrder = 28;

void require_order(int order, int min_order, const char* what) {
  if (order < min_order) {
    std::ostringstream msg;
    msg << what << ": order must be >= " << min_order << ", got " << order;
    throw DomainError(msg.str());
  }
}

// Generated words are cached per process; callers always receive copies.
class WordCache {
 public:
  template <typename Generate>
  Word get(int key, Generate&& generate) {
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    Word w = generate();
    std::lock_guard lock(mu_);
    return cache_.try_emplace(key, std::move(w)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<int, Word> cache_;
};

WordCache& fib_cache() {
  static WordCache cache;
  return cache;
}

WordCache& tm_cache() {
  static WordCache cache;
  return cache;
}

}  // namespace

Word::Word(std::string_view letters) : letters_(letters) {
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (letters_[k] != 'a' && letters_[k] != 'b') {
      std::ostringstream msg;
      msg << "word contains a byte other than 'a'/'b' at position " << (k + 1);
      throw DomainError(msg.str());
    }
  }
}

Letter Word::at(std::size_t pos) const {
  if (pos < 1 || pos > letters_.size()) {
    throw DomainError("position " + std::to_string(pos) + " outside word of length " +
                      std::to_string(letters_.size()));
  }
  return static_cast<Letter>(letters_[pos - 1]);
}

Word Word::slice(std::size_t start, std::size_t end) const {
  if (start < 1 || end < start || end > letters_.size()) {
    throw DomainError("slice (" + std::to_string(start) + "," + std::to_string(end) +
                      ") outside word of length " + std::to_string(letters_.size()));
  }
  return Word(Trusted{}, letters_.substr(start - 1, end - start + 1));
}

std::uint64_t fib_length(int order) {
  require_order(order, 1, "fib_length");
  if (order > 93) throw DomainError("fib_length: order overflows 64 bits");
  std::uint64_t prev = 1, cur = 1;
  for (int k = 3; k <= order; ++k) {
    std::uint64_t next = cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Word fib_word(int order) {
  require_order(order, 1, "fib_word");
  if (order > kMaxFibWordOrder) throw DomainError("fib_word: order too large to materialize");
  return fib_cache().get(order, [order] {
    std::string prev = "b", cur = "a";
    if (order == 1) return Word(prev);
    for (int k = 3; k <= order; ++k) {
      std::string next = cur + prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return Word(cur);
  });
}

std::uint64_t tm_length(int order) {
  require_order(order, 1, "tm_length");
  if (order > 64) throw DomainError("tm_length: order overflows 64 bits");
  return std::uint64_t{1} << (order - 1);
}

Word tm_word(int order) {
  require_order(order, 1, "tm_word");
  if (order > kMaxTmWordOrder) throw DomainError("tm_word: order too large to materialize");
  return tm_cache().get(order, [order] {
    Word w("a");
    for (int k = 2; k <= order; ++k) w = w + flip_word(w);
    return w;
  });
}

Word flip_word(const Word& w) {
  std::string out(w.view());
  for (char& c : out) c = (c == 'a') ? 'b' : 'a';
  return Word(Word::Trusted{}, std::move(out));
}

Word q_word(int order) {
  require_order(order, 7, "q_word");
  Word out;
  for (int k = order - 5; k >= 2; --k) out += fib_word(k);
  return out;
}

Word delta(int bit) {
  if (bit == 0) return Word("ba");
  if (bit == 1) return Word("ab");
  throw DomainError("delta: bit must be 0 or 1, got " + std::to_string(bit));
}

Word FactorRef::resolve() const {
  switch (kind) {
    case Kind::kFib:
      return fib_word(order);
    case Kind::kTM:
      return tm_word(order);
    case Kind::kTMFlip:
      return flip_word(tm_word(order));
    case Kind::kLiteral:
      return literal;
  }
  throw DomainError("unknown factor kind");
}

std::uint64_t FactorRef::length() const {
  switch (kind) {
    case Kind::kFib:
      return fib_length(order);
    case Kind::kTM:
    case Kind::kTMFlip:
      return tm_length(order);
    case Kind::kLiteral:
      return literal.size();
  }
  throw DomainError("unknown factor kind");
}

std::string to_string(const FactorRef& f) {
  switch (f.kind) {
    case FactorRef::Kind::kFib:
      return "F_" + std::to_string(f.order);
    case FactorRef::Kind::kTM:
      return "T_" + std::to_string(f.order);
    case FactorRef::Kind::kTMFlip:
      return "~T_" + std::to_string(f.order);
    case FactorRef::Kind::kLiteral:
      return "'" + f.literal.str() + "'";
  }
  return "?";
}

Word Factorization::flatten() const {
  Word out;
  for (const auto& f : factors) out += f.resolve();
  return out;
}

bool Factorization::valid() const {
  if (factors.empty()) return false;
  for (const auto& f : factors) {
    if (f.kind != FactorRef::Kind::kLiteral && f.order < 1) return false;
    if (f.length() == 0) return false;
  }
  return flatten() == target;
}

namespace {

void expand_fib(int order, int k, std::vector<FactorRef>& out) {
  if (order <= k + 1) {
    out.push_back(FactorRef::fib(order));
    return;
  }
  expand_fib(order - 1, k, out);
  expand_fib(order - 2, k, out);
}

void expand_tm(int order, bool flipped, int level, std::vector<FactorRef>& out) {
  if (order <= level) {
    out.push_back(flipped ? FactorRef::tm_flip(order) : FactorRef::tm(order));
    return;
  }
  expand_tm(order - 1, flipped, level, out);
  expand_tm(order - 1, !flipped, level, out);
}

}  // namespace

Factorization fib_uniform_factorization(int i, int k) {
  if (k < 1 || k > i) {
    throw DomainError("fib_uniform_factorization: need 1 <= k <= i, got i=" + std::to_string(i) +
                      " k=" + std::to_string(k));
  }
  Factorization fac;
  fac.target = fib_word(i);
  expand_fib(i, k, fac.factors);
  return fac;
}

Factorization tm_uniform_factorization(int i, int j) {
  if (i < 2 || j < 1 || j > i) {
    throw DomainError("tm_uniform_factorization: need i >= 2 and 1 <= j <= i, got i=" +
                      std::to_string(i) + " j=" + std::to_string(j));
  }
  Factorization fac;
  fac.target = tm_word(i);
  expand_tm(i, false, i - (j - 1), fac.factors);
  return fac;
}

Word parse_word_file_contents(std::string_view contents) {
  if (!contents.empty() && contents.back() == '\n') contents.remove_suffix(1);
  return Word(contents);
}

Word read_word_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open word file: " + path.string());
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_word_file_contents(contents);
}

void write_word_file(const std::filesystem::path& path, const Word& w) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << w.view() << '\n';
}

}  // namespace netocc
