#include <catch_amalgamated.hpp>

#include <random>

#include "qwick/qpoly.hpp"

using namespace qwick;

namespace {

QPolynomial q_pow(QPolynomial::Exponent e) { return QPolynomial::monomial(e); }

QPolynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 6), exps(0, 12), coeffs(-50, 50);
  std::vector<QPolynomial::Term> t;
  for (int i = terms(rng); i > 0; --i)
    t.push_back({static_cast<QPolynomial::Exponent>(exps(rng)), BigInt(coeffs(rng))});
  return QPolynomial::from_terms(std::move(t));
}

}  // namespace

TEST_CASE("addition", "[qpoly]") {
  const QPolynomial p = q_pow(2) + QPolynomial(1);
  CHECK(p + q_pow(2) == QPolynomial::monomial(2, 2) + QPolynomial(1));
  CHECK(p + QPolynomial() == p);

  // degree-one weights of c^2 c+ c^2 c+, summed in listed order
  QPolynomial acc;
  for (auto e : {4u, 5u, 3u, 4u, 3u, 2u}) acc += q_pow(e);
  CHECK(acc == q_pow(2) + QPolynomial::monomial(3, 2) + QPolynomial::monomial(4, 2) + q_pow(5));
  CHECK(acc.to_text() == "q^2 + 2q^3 + 2q^4 + q^5");
}

TEST_CASE("cancellation leaves no zero coefficients", "[qpoly]") {
  QPolynomial p = q_pow(3) + QPolynomial(2);
  p += QPolynomial::monomial(3, -1);
  CHECK(p.terms().size() == 1);
  CHECK(p == QPolynomial(2));
  p.add_monomial(0, -2);
  CHECK(p.is_zero());
}

TEST_CASE("multiplication", "[qpoly]") {
  CHECK(q_pow(3) * q_pow(4) == q_pow(7));
  const QPolynomial p = q_pow(2) + QPolynomial(5);
  CHECK(p * QPolynomial(1) == p);
  CHECK(p * QPolynomial() == QPolynomial());
  CHECK(q_bracket(2) * q_pow(1) == q_pow(1) + q_pow(2));
}

TEST_CASE("q_bracket", "[qpoly]") {
  CHECK(q_bracket(0).is_zero());
  CHECK(q_bracket(1) == QPolynomial(1));
  CHECK(q_bracket(3) == QPolynomial(1) + q_pow(1) + q_pow(2));
  for (std::uint32_t a = 0; a <= 100; ++a) CHECK(q_bracket(a).eval(1) == Rational(a));
}

TEST_CASE("evaluation", "[qpoly]") {
  const QPolynomial p = QPolynomial(1) + QPolynomial::monomial(1, 2) + QPolynomial::monomial(2, 2) + q_pow(3);
  CHECK(p.eval(1) == 6);
  CHECK(p.eval(0) == 1);
  CHECK(q_pow(7).eval(2) == 128);
  CHECK(q_pow(2).eval(Rational(1, 3)) == Rational(1, 9));
  CHECK(QPolynomial().eval(5) == 0);
  // 1 + 2/2 + 2/4 + 1/8
  CHECK(p.eval(Rational(1, 2)) == Rational(21, 8));
}

TEST_CASE("ring axioms and evaluation homomorphism", "[qpoly][property]") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    Rational x(num(rng), den(rng));
    x.canonicalize();
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
  }
}

TEST_CASE("text rendering", "[qpoly]") {
  CHECK(QPolynomial().to_text() == "0");
  CHECK(QPolynomial(1).to_text() == "1");
  CHECK(q_pow(1).to_text() == "q");
  CHECK((QPolynomial::monomial(1, 2) + q_pow(2)).to_text() == "2q + q^2");
  CHECK((QPolynomial(1) + q_pow(1)).to_text(true) == "1+q");
  CHECK((QPolynomial(3) + QPolynomial::monomial(4, -1)).to_text() == "3 - q^4");
  CHECK((QPolynomial(1) + q_pow(12)).to_latex() == "1 + q^{12}");
}

TEST_CASE("arbitrary precision coefficients", "[qpoly]") {
  BigInt big("123456789012345678901234567890");
  const QPolynomial p = QPolynomial::monomial(3, big);
  CHECK((p + p).coefficient(3) == big * 2);
  CHECK((p * p).coefficient(6) == big * big);
}

TEST_CASE("parse_rational", "[qpoly]") {
  CHECK(parse_rational("1") == 1);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("+2/4") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}
