#include "qwick/word.hpp"

#include <charconv>

namespace qwick {

WordCounts word_counts(const Word& w) noexcept {
  WordCounts counts;
  for (auto t : w) {
    if (t == LetterType::Creator)
      ++counts.creators;
    else
      ++counts.annihilators;
  }
  return counts;
}

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

namespace {

// UTF-8 encoding of U+2020 DAGGER
constexpr std::string_view kDagger = "\xE2\x80\xA0";

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = parse_sequence();
    skip_ws();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') throw ParseError(pos_, "unbalanced ')'");
      throw ParseError(pos_, "unexpected character '" + std::string(1, text_[pos_]) + "'");
    }
    return w;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  Word parse_sequence() {
    Word out;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == ')') return out;
      Word item = parse_item();
      append(out, item, 1);
    }
  }

  Word parse_item() {
    Word atom;
    const std::size_t start = pos_;
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      atom = parse_sequence();
      skip_ws();
      if (pos_ >= text_.size()) throw ParseError(start, "unbalanced '('");
      if (atom.empty()) throw ParseError(start, "empty group");
      ++pos_;  // ')'
    } else if (ch == 'c' || ch == 'a') {
      ++pos_;
      LetterType t = LetterType::Annihilator;
      if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        t = LetterType::Creator;
      } else if (text_.substr(pos_, kDagger.size()) == kDagger) {
        pos_ += kDagger.size();
        t = LetterType::Creator;
      }
      atom.push_back(t);
    } else {
      throw ParseError(pos_, "unexpected character '" + std::string(1, ch) + "'");
    }

    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      const std::size_t num_start = pos_;
      if (pos_ < text_.size() && text_[pos_] == '-')
        throw ParseError(num_start, "negative exponent");
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
      if (pos_ == num_start) throw ParseError(num_start, "expected exponent after '^'");
      std::size_t k = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + num_start, text_.data() + pos_, k);
      if (ec != std::errc{} || k > kMaxExponent)
        throw ParseError(num_start, "exponent exceeds " + std::to_string(kMaxExponent));
      if (k == 0) throw ParseError(num_start, "exponent must be positive");
      Word powered;
      append(powered, atom, k, num_start);
      return powered;
    }
    return atom;
  }

  void append(Word& out, const Word& w, std::size_t times, std::size_t at = 0) {
    if (out.size() + w.size() * times > kMaxExpandedLength || w.size() * times > kMaxExpandedLength)
      throw ParseError(at ? at : pos_,
                       "expanded word exceeds " + std::to_string(kMaxExpandedLength) + " letters");
    for (std::size_t r = 0; r < times; ++r)
      for (auto t : w) out.push_back(t);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) {
  Parser parser(text);
  return parser.parse();
}

std::string render_text(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w.is_creator(i) ? "c+" : "c";
  }
  return out;
}

Word repeat(const Word& w, std::size_t times) {
  std::vector<LetterType> letters;
  letters.reserve(w.size() * times);
  for (std::size_t r = 0; r < times; ++r) letters.insert(letters.end(), w.begin(), w.end());
  return Word(std::move(letters));
}

Word concat(const Word& u, const Word& v) {
  std::vector<LetterType> letters(u.begin(), u.end());
  letters.insert(letters.end(), v.begin(), v.end());
  return Word(std::move(letters));
}

}  // namespace qwick
