#ifndef QWICK_QPOLY_HPP
#define QWICK_QPOLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qwick {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored sparse: a vector of (exponent, coefficient) sorted by exponent,
/// with no zero coefficients. Two polynomials are equal iff their term
/// vectors are equal.
class QPolynomial {
 public:
  using Exponent = std::uint32_t;

  struct Term {
    Exponent exponent;
    BigInt coeff;
    friend bool operator==(const Term& a, const Term& b) {
      return a.exponent == b.exponent && a.coeff == b.coeff;
    }
  };

  QPolynomial() = default;
  /// The constant polynomial `c`.
  QPolynomial(long c);  // NOLINT(google-explicit-constructor)

  [[nodiscard]] static QPolynomial monomial(Exponent e, BigInt coeff = 1);

  /// Builds a polynomial from a dense coefficient vector (index = exponent),
  /// skipping zeros.
  [[nodiscard]] static QPolynomial from_dense(std::span<const BigInt> dense, Exponent shift = 0);

  /// Builds from unsorted (exponent, coefficient) pairs; duplicates are summed.
  [[nodiscard]] static QPolynomial from_terms(std::vector<Term> terms);

  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] BigInt coefficient(Exponent e) const;
  /// Highest exponent with nonzero coefficient; 0 for the zero polynomial.
  [[nodiscard]] Exponent degree() const noexcept;
  [[nodiscard]] std::vector<BigInt> to_dense() const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);
  void add_monomial(Exponent e, const BigInt& coeff);
  /// Multiplies by q^k in place.
  QPolynomial& shift(Exponent k);

  friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) { return lhs += rhs; }
  friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.terms_ == b.terms_; }

  /// Exact Horner evaluation.
  [[nodiscard]] Rational eval(const Rational& q) const;

  /// "1 + 2q + q^2"; with `compact`, "1+2q+q^2". Zero renders as "0".
  [[nodiscard]] std::string to_text(bool compact = false) const;
  /// "1 + 2q + q^{2}" style output for LaTeX.
  [[nodiscard]] std::string to_latex() const;

 private:
  std::vector<Term> terms_;
};

[[nodiscard]] inline QPolynomial poly_add(const QPolynomial& p, const QPolynomial& r) { return p + r; }
[[nodiscard]] inline QPolynomial poly_mul(const QPolynomial& p, const QPolynomial& r) { return p * r; }
[[nodiscard]] inline Rational poly_eval(const QPolynomial& p, const Rational& q) { return p.eval(q); }

/// [a]_q = 1 + q + ... + q^(a-1); the zero polynomial for a = 0.
[[nodiscard]] QPolynomial q_bracket(std::uint32_t a);

/// Parses "p/q" or an integer into a canonical rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
[[nodiscard]] Rational parse_rational(const std::string& text);

[[nodiscard]] std::string to_string(const BigInt& v);
[[nodiscard]] std::string to_string(const Rational& v);

}  // namespace qwick

#endif  // QWICK_QPOLY_HPP
