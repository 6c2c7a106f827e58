#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace netocc {

// Raised when an operation is called outside its mathematical domain
// (orders below the base case, positions outside the text, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Letter : char { kA = 'a', kB = 'b' };

constexpr Letter flip(Letter x) { return x == Letter::kA ? Letter::kB : Letter::kA; }
constexpr char to_char(Letter x) { return static_cast<char>(x); }

// A finite word over {a, b}. Positions are 1-based throughout the library.
class Word {
 public:
  Word() = default;
  // Throws DomainError on any byte other than 'a' or 'b'.
  explicit Word(std::string_view letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // 1-based access; throws DomainError outside [1, size()].
  Letter at(std::size_t pos) const;

  // Letters start..end inclusive, 1-based.
  Word slice(std::size_t start, std::size_t end) const;

  std::string_view view() const { return letters_; }
  const std::string& str() const { return letters_; }

  Word& operator+=(const Word& rhs) {
    letters_ += rhs.letters_;
    return *this;
  }
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  struct Trusted {};
  Word(Trusted, std::string letters) : letters_(std::move(letters)) {}
  friend Word flip_word(const Word& w);

  std::string letters_;
};

// f_i = |F_i|; f_1 = f_2 = 1.
std::uint64_t fib_length(int order);
// F_1 = b, F_2 = a, F_i = F_{i-1} F_{i-2}.
Word fib_word(int order);

// tau_i = |T_i| = 2^(i-1).
std::uint64_t tm_length(int order);
// T_1 = a, T_i = T_{i-1} flip(T_{i-1}).
Word tm_word(int order);

Word flip_word(const Word& w);

// Q_i = F_{i-5} F_{i-6} ... F_3 F_2, defined for i >= 7.
Word q_word(int order);

// Delta(0) = "ba", Delta(1) = "ab".
Word delta(int bit);

// Symbolic handle for a factor: a Fibonacci word, a Thue-Morse word, its flip,
// or an explicit literal.
struct FactorRef {
  enum class Kind { kFib, kTM, kTMFlip, kLiteral };

  Kind kind = Kind::kLiteral;
  int order = 0;
  Word literal;

  static FactorRef fib(int order) { return {Kind::kFib, order, {}}; }
  static FactorRef tm(int order) { return {Kind::kTM, order, {}}; }
  static FactorRef tm_flip(int order) { return {Kind::kTMFlip, order, {}}; }
  static FactorRef lit(Word w) { return {Kind::kLiteral, 0, std::move(w)}; }

  Word resolve() const;
  std::uint64_t length() const;

  friend bool operator==(const FactorRef&, const FactorRef&) = default;
};

// "F_5", "T_3", "~T_3", or the quoted literal.
std::string to_string(const FactorRef& f);

struct Factorization {
  std::vector<FactorRef> factors;
  Word target;

  std::size_t size() const { return factors.size(); }
  Word flatten() const;
  // Nonempty, every factor nonempty, and the concatenation equals target.
  bool valid() const;
};

// Factorization of F_i where every factor is F_k or F_{k+1}, 1 <= k <= i.
Factorization fib_uniform_factorization(int i, int k);

// Factorization of T_i into T_{i-(j-1)} and flip(T_{i-(j-1)}), 1 <= j <= i.
Factorization tm_uniform_factorization(int i, int j);

// One line of 'a'/'b', optional trailing '\n', nothing else.
Word parse_word_file_contents(std::string_view contents);
Word read_word_file(const std::filesystem::path& path);
void write_word_file(const std::filesystem::path& path, const Word& w);

}  // namespace netocc
