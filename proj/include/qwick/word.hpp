#ifndef QWICK_WORD_HPP
#define QWICK_WORD_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwick/errors.hpp"

namespace qwick {

/// Type of a single letter: `c` (annihilator) or `c+` (creator).
enum class LetterType : unsigned char { Annihilator, Creator };

/// A word in the q-boson operators, read left to right.
///
/// Positions are 0-based internally; everything that leaves the library
/// (diagram strings, JSON, renderings, error messages) is 1-based.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<LetterType> letters) : letters_(std::move(letters)) {}

  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] LetterType operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] bool is_creator(std::size_t i) const {
    return letters_[i] == LetterType::Creator;
  }
  [[nodiscard]] const std::vector<LetterType>& letters() const noexcept { return letters_; }

  [[nodiscard]] auto begin() const noexcept { return letters_.begin(); }
  [[nodiscard]] auto end() const noexcept { return letters_.end(); }

  void push_back(LetterType t) { letters_.push_back(t); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<LetterType> letters_;
};

struct WordCounts {
  std::size_t creators = 0;
  std::size_t annihilators = 0;
  friend bool operator==(const WordCounts&, const WordCounts&) = default;
};

[[nodiscard]] WordCounts word_counts(const Word& w) noexcept;

inline constexpr std::size_t kMaxExponent = 10'000;
inline constexpr std::size_t kMaxExpandedLength = 1'000'000;

/// Parses the textual word grammar
///
///   word   := item* ;  item := atom power? ;  atom := letter | "(" word ")"
///   letter := ("c" | "a") ("+" | "†")? ;  power := "^" positive-integer
///
/// and returns the fully expanded letter sequence.
[[nodiscard]] Word parse_word(std::string_view text);

/// Canonical text form: space separated `c` / `c+` tokens.
[[nodiscard]] std::string render_text(const Word& w);

/// Repeats `w` `times` times.
[[nodiscard]] Word repeat(const Word& w, std::size_t times);

[[nodiscard]] Word concat(const Word& u, const Word& v);

}  // namespace qwick

#endif  // QWICK_WORD_HPP
