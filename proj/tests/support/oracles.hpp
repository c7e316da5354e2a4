// Test-only reference implementations. Each one follows a definition
// literally and shares no code path with the engines under test beyond the
// Word and QPolynomial value types.
#ifndef QWICK_TESTS_ORACLES_HPP
#define QWICK_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "qwick/qpoly.hpp"
#include "qwick/word.hpp"

namespace qwick::oracle {

using Letters = std::vector<bool>;  // true = creator
using Pair = std::pair<std::size_t, std::size_t>;  // 1-based (annihilator, creator)
using ShapeKey = std::pair<std::size_t, std::size_t>;  // (creators, annihilators)

inline Letters letters_of(const Word& w) {
  Letters out;
  for (auto t : w) out.push_back(t == LetterType::Creator);
  return out;
}

inline Word word_of(const Letters& letters) {
  Word w;
  for (bool c : letters) w.push_back(c ? LetterType::Creator : LetterType::Annihilator);
  return w;
}

/// All words of exactly `length` letters; bit i of the index is letter i.
inline std::vector<Word> all_words(std::size_t length) {
  std::vector<Word> out;
  for (std::uint32_t mask = 0; mask < (1u << length); ++mask) {
    Word w;
    for (std::size_t i = 0; i < length; ++i)
      w.push_back((mask >> i) & 1u ? LetterType::Creator : LetterType::Annihilator);
    out.push_back(std::move(w));
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, std::size_t length) {
  std::bernoulli_distribution coin(0.5);
  Word w;
  for (std::size_t i = 0; i < length; ++i)
    w.push_back(coin(rng) ? LetterType::Creator : LetterType::Annihilator);
  return w;
}

/// Normal ordering by literal rewriting with c c+ -> q c+ c + 1: repeatedly
/// rewrite the leftmost adjacent "c c+" of every non-normal word in the sum.
inline std::map<ShapeKey, QPolynomial> rewrite_by_relation(const Word& w) {
  std::map<Letters, QPolynomial> pending{{letters_of(w), QPolynomial(1)}};
  std::map<ShapeKey, QPolynomial> result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Letters& word = node.key();
    const QPolynomial& coeff = node.mapped();
    std::size_t pos = word.size();
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
      if (!word[i] && word[i + 1]) {
        pos = i;
        break;
      }
    if (pos == word.size()) {
      std::size_t creators = 0;
      for (bool c : word) creators += c;
      result[{creators, word.size() - creators}] += coeff;
      continue;
    }
    Letters swapped = word;
    swapped[pos] = true;
    swapped[pos + 1] = false;
    Letters dropped;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (i != pos && i != pos + 1) dropped.push_back(word[i]);
    pending[swapped] += coeff * QPolynomial::monomial(1);
    pending[dropped] += coeff;
  }
  return result;
}

/// Every Feynman diagram, by trying every subset of admissible
/// (annihilator, creator) pairs and keeping the vertex-disjoint ones.
/// Exponential in the number of pairs; keep words short.
inline std::vector<std::vector<Pair>> brute_force_diagrams(const Letters& w) {
  std::vector<Pair> admissible;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (!w[i] && w[j]) admissible.emplace_back(i + 1, j + 1);
  std::vector<std::vector<Pair>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << admissible.size()); ++mask) {
    std::vector<bool> used(w.size() + 1, false);
    std::vector<Pair> chosen;
    bool ok = true;
    for (std::size_t b = 0; b < admissible.size() && ok; ++b) {
      if (!((mask >> b) & 1u)) continue;
      auto [i, j] = admissible[b];
      if (used[i] || used[j]) ok = false;
      used[i] = used[j] = true;
      chosen.push_back(admissible[b]);
    }
    if (ok) out.push_back(std::move(chosen));
  }
  return out;
}

struct NaiveStats {
  std::uint64_t c = 0, d = 0, l = 0;
};

/// c, d and l straight from their definitions, by scanning all pairs and
/// triples of 1-based positions.
inline NaiveStats naive_stats(const Letters& w, const std::vector<Pair>& edges) {
  const std::size_t n = w.size();
  std::vector<bool> paired(n + 1, false);
  for (auto [i, j] : edges) paired[i] = paired[j] = true;
  NaiveStats s;
  for (auto [ik, jk] : edges)
    for (auto [im, jm] : edges)
      if (ik < im && im < jk && jk < jm) ++s.c;
  for (auto [i, j] : edges)
    for (std::size_t k = 1; k <= n; ++k)
      if (i < k && k < j && !paired[k]) ++s.d;
  for (std::size_t k = 1; k <= n; ++k) {
    if (paired[k] || w[k - 1]) continue;
    for (std::size_t r = k + 1; r <= n; ++r)
      if (!paired[r] && w[r - 1]) ++s.l;
  }
  return s;
}

/// Normal form as the diagram sum, built on the brute-force pieces above.
inline std::map<ShapeKey, QPolynomial> brute_force_wick(const Word& word) {
  const Letters w = letters_of(word);
  std::size_t creators = 0;
  for (bool c : w) creators += c;
  std::map<ShapeKey, QPolynomial> out;
  for (const auto& g : brute_force_diagrams(w)) {
    const auto s = naive_stats(w, g);
    out[{creators - g.size(), w.size() - creators - g.size()}] +=
        QPolynomial::monomial(static_cast<QPolynomial::Exponent>(s.c + s.d + s.l));
  }
  return out;
}

/// Classical Stirling triangle by S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline std::vector<std::vector<BigInt>> stirling_triangle(std::size_t max_n) {
  std::vector<std::vector<BigInt>> s(max_n + 1, std::vector<BigInt>(max_n + 1, 0));
  s[0][0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (std::size_t k = 1; k <= n; ++k) s[n][k] = BigInt(static_cast<unsigned long>(k)) * s[n - 1][k] + s[n - 1][k - 1];
  return s;
}

/// Bell numbers B_0..B_max_n by the Bell triangle.
inline std::vector<BigInt> bell_numbers(std::size_t max_n) {
  std::vector<BigInt> bell{1};
  std::vector<BigInt> row{1};
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

/// Number of set partitions of {1..n} into exactly k blocks, by listing
/// restricted growth strings.
inline std::uint64_t count_set_partitions(std::size_t n, std::size_t k) {
  std::vector<std::size_t> a(n, 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t i, std::size_t blocks) -> void {
    if (i == n) {
      count += blocks == k;
      return;
    }
    for (std::size_t b = 0; b <= blocks && b < k; ++b) {
      a[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) return k == 0;
  a[0] = 0;
  rec(rec, 1, 1);
  return count;
}

}  // namespace qwick::oracle

#endif  // QWICK_TESTS_ORACLES_HPP
