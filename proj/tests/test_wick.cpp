#include <catch_amalgamated.hpp>

#include <random>

#include "qwick/rewrite.hpp"
#include "qwick/wick.hpp"
#include "support/oracles.hpp"

using namespace qwick;

namespace {

constexpr auto A = LetterType::Annihilator;
constexpr auto C = LetterType::Creator;

QPolynomial q_pow(QPolynomial::Exponent e, long c = 1) { return QPolynomial::monomial(e, c); }

const QPolynomial kDegreeOne = q_pow(2) + q_pow(3, 2) + q_pow(4, 2) + q_pow(5);
const QPolynomial kDegreeTwo = QPolynomial(1) + q_pow(1, 2) + q_pow(2, 2) + q_pow(3);

}  // namespace

TEST_CASE("normal_order_diagrams on known words", "[wick]") {
  const NormalForm nf = normal_order_diagrams(parse_word("c^2 c+ c^2 c+"));
  CHECK(nf.size() == 3);
  CHECK(nf.coefficient({2, 4}) == q_pow(6));
  CHECK(nf.coefficient({1, 3}) == kDegreeOne);
  CHECK(nf.coefficient({0, 2}) == kDegreeTwo);

  const NormalForm unit = normal_order_diagrams(Word({A, C}));
  CHECK(unit.size() == 2);
  CHECK(unit.coefficient({1, 1}) == q_pow(1));
  CHECK(unit.coefficient({0, 0}) == QPolynomial(1));

  const NormalForm ordered = normal_order_diagrams(Word({C, A}));
  CHECK(ordered.size() == 1);
  CHECK(ordered.coefficient({1, 1}) == QPolynomial(1));

  CHECK(normal_order_diagrams(Word()) == NormalForm::identity());
}

TEST_CASE("rook_coefficients", "[wick]") {
  CHECK(rook_coefficients(parse_word("c^2 c+ c^2 c+")) ==
        std::vector<QPolynomial>{q_pow(6), kDegreeOne, kDegreeTwo});
  // one entry per degree 0..min(m, n_a); degree 1 has no diagrams here
  CHECK(rook_coefficients(Word({C, A})) == std::vector<QPolynomial>{QPolynomial(1), QPolynomial()});
  CHECK(rook_coefficients(parse_word("c+^3")) == std::vector<QPolynomial>{QPolynomial(1)});
  const Word w = parse_word("c c+ c c c+ c+ c c+");
  const auto rook = rook_coefficients(w);
  const auto counts = count_diagrams_by_degree(w);
  REQUIRE(rook.size() == counts.size());
  for (std::size_t k = 0; k < rook.size(); ++k) CHECK(rook[k].eval(1) == Rational(counts[k]));
}

TEST_CASE("q-Stirling numbers", "[wick]") {
  CHECK(q_stirling(2, 2) == q_pow(1));
  CHECK(q_stirling(2, 1) == QPolynomial(1));
  CHECK(q_stirling(3, 2) == q_pow(1, 2) + q_pow(2));
  CHECK(q_stirling(4, 3) == q_pow(3, 3) + q_pow(4, 2) + q_pow(5));
  for (std::size_t n = 1; n <= 8; ++n) CHECK(q_stirling(n, n).eval(1) == 1);
  CHECK_THROWS_AS(q_stirling(3, 0), DomainError);
  CHECK_THROWS_AS(q_stirling(3, 4), DomainError);
  CHECK_THROWS_AS(q_stirling_row(0), DomainError);
}

TEST_CASE("Stirling backends agree", "[wick]") {
  for (std::size_t n = 1; n <= 9; ++n)
    CHECK(q_stirling_row(n, StirlingBackend::Diagrams) == q_stirling_row(n, StirlingBackend::Rewrite));
  // automatic switches to rewriting above the cutoff
  const auto row = q_stirling_row(14);
  CHECK(row.size() == 14);
  CHECK(row[0] == QPolynomial(1));
}

TEST_CASE("classical Stirling and Bell numbers", "[wick]") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  const auto triangle = oracle::stirling_triangle(9);
  const auto bell = oracle::bell_numbers(9);
  for (std::size_t n = 1; n <= 9; ++n) {
    BigInt sum = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      const BigInt s = stirling2(n, k);
      CHECK(s == triangle[n][k]);
      CHECK(s == BigInt(static_cast<unsigned long>(oracle::count_set_partitions(n, k))));
      CHECK(s == BigInt(static_cast<unsigned long>(
                     enumerate_by_degree(number_operator_power(n), n - k).size())));
      sum += s;
    }
    CHECK(sum == bell[n]);
  }
}

TEST_CASE("diagram sum equals the brute-force diagram sum", "[wick][oracle]") {
  for (std::size_t len = 0; len <= 8; ++len)
    for (const auto& w : oracle::all_words(len)) {
      NormalForm expected;
      for (const auto& [k, p] : oracle::brute_force_wick(w)) expected.add({k.first, k.second}, p);
      REQUIRE(normal_order_diagrams(w) == expected);
    }
}

TEST_CASE("diagram engine equals rewrite engine", "[wick][engines]") {
  for (std::size_t len = 1; len <= 10; ++len)
    for (const auto& w : oracle::all_words(len)) REQUIRE(normal_order_diagrams(w) == normal_order_rewrite(w));

  std::mt19937_64 rng(1414);
  std::uniform_int_distribution<std::size_t> length(11, 14);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = oracle::random_word(rng, length(rng));
    REQUIRE(normal_order_diagrams(w) == normal_order_rewrite(w));
  }
}

TEST_CASE("q = 1 coefficients count diagrams", "[wick][property]") {
  for (std::size_t len = 1; len <= 10; ++len)
    for (const auto& w : oracle::all_words(len)) {
      const auto counts = word_counts(w);
      const auto by_degree = count_diagrams_by_degree(w);
      const NormalForm nf = normal_order_diagrams(w);
      for (std::size_t p = 0; p < by_degree.size(); ++p)
        REQUIRE(nf.coefficient({counts.creators - p, counts.annihilators - p}).eval(1) ==
                Rational(by_degree[p]));
    }
}

TEST_CASE("prepending a creator shifts every shape", "[wick][property]") {
  for (std::size_t len = 0; len <= 9; ++len)
    for (const auto& w : oracle::all_words(len)) {
      const NormalForm base = normal_order_diagrams(w);
      const NormalForm with_creator = normal_order_diagrams(concat(Word({C}), w));
      REQUIRE(base.size() == with_creator.size());
      for (const auto& [shape, coeff] : base)
        REQUIRE(with_creator.coefficient({shape.creators + 1, shape.annihilators}) == coeff);
    }
}

TEST_CASE("powers of the number operator are diagonal", "[wick][property]") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& [shape, coeff] : normal_order_diagrams(number_operator_power(n)))
      CHECK(shape.creators == shape.annihilators);
}

TEST_CASE("rook coefficients reassemble the normal form", "[wick][property]") {
  for (std::size_t len = 0; len <= 10; ++len)
    for (const auto& w : oracle::all_words(len))
      REQUIRE(assemble_rook(w, rook_coefficients(w)) == normal_order_diagrams(w));
}

TEST_CASE("diagram engine respects the limit", "[wick]") {
  const Word w = parse_word("c^6 c+^6");
  CHECK_THROWS_AS(normal_order_diagrams(w, 100), LimitExceeded);
  CHECK_THROWS_AS(rook_coefficients(w, 100), LimitExceeded);
  CHECK(normal_order_diagrams(w, 20000) == normal_order_rewrite(w));
}
