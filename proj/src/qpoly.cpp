#include "qwick/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qwick {

QPolynomial::QPolynomial(long c) {
  if (c != 0) terms_.push_back({0, BigInt(c)});
}

QPolynomial QPolynomial::monomial(Exponent e, BigInt coeff) {
  QPolynomial p;
  if (coeff != 0) p.terms_.push_back({e, std::move(coeff)});
  return p;
}

QPolynomial QPolynomial::from_dense(std::span<const BigInt> dense, Exponent shift) {
  QPolynomial p;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (sgn(dense[i]) != 0) p.terms_.push_back({static_cast<Exponent>(i) + shift, dense[i]});
  return p;
}

QPolynomial QPolynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  QPolynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coeff += t.coeff;
      if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

BigInt QPolynomial::coefficient(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.exponent < x; });
  if (it != terms_.end() && it->exponent == e) return it->coeff;
  return 0;
}

QPolynomial::Exponent QPolynomial::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.back().exponent;
}

std::vector<BigInt> QPolynomial::to_dense() const {
  std::vector<BigInt> dense(terms_.empty() ? 0 : degree() + 1);
  for (const auto& t : terms_) dense[t.exponent] = t.coeff;
  return dense;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = rhs.terms_;
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exponent < a->exponent) {
      merged.push_back(*b++);
    } else {
      BigInt sum = a->coeff + b->coeff;
      if (sgn(sum) != 0) merged.push_back({a->exponent, std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

void QPolynomial::add_monomial(Exponent e, const BigInt& coeff) {
  if (sgn(coeff) == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.exponent < x; });
  if (it != terms_.end() && it->exponent == e) {
    it->coeff += coeff;
    if (sgn(it->coeff) == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{e, coeff});
  }
}

QPolynomial& QPolynomial::shift(Exponent k) {
  for (auto& t : terms_) t.exponent += k;
  return *this;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> dense(static_cast<std::size_t>(lhs.degree()) + rhs.degree() + 1);
  for (const auto& a : lhs.terms_)
    for (const auto& b : rhs.terms_) dense[a.exponent + b.exponent] += a.coeff * b.coeff;
  return QPolynomial::from_dense(dense);
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) { return *this = *this * rhs; }

Rational QPolynomial::eval(const Rational& q) const {
  Rational acc = 0;
  if (terms_.empty()) return acc;
  // Horner over the sparse terms: walk exponents downwards, multiplying by
  // q^(gap) between consecutive stored exponents.
  Exponent current = terms_.back().exponent;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (Exponent e = current; e > it->exponent; --e) acc *= q;
    acc += it->coeff;
    current = it->exponent;
  }
  for (Exponent e = current; e > 0; --e) acc *= q;
  acc.canonicalize();
  return acc;
}

namespace {

std::string power_of_q(QPolynomial::Exponent e, bool latex) {
  if (e == 0) return "";
  if (e == 1) return "q";
  if (latex) return "q^{" + std::to_string(e) + "}";
  return "q^" + std::to_string(e);
}

std::string render(const std::vector<QPolynomial::Term>& terms, bool compact, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    const bool negative = sgn(t.coeff) < 0;
    if (!out.empty()) {
      const char* op = negative ? "-" : "+";
      out += compact ? std::string(op) : " " + std::string(op) + " ";
    } else if (negative) {
      out += '-';
    }
    const BigInt magnitude = abs(t.coeff);
    const std::string qpow = power_of_q(t.exponent, latex);
    if (magnitude != 1 || qpow.empty()) out += magnitude.get_str();
    out += qpow;
  }
  return out;
}

}  // namespace

std::string QPolynomial::to_text(bool compact) const {
  return render(terms_, compact, false);
}

std::string QPolynomial::to_latex() const { return render(terms_, false, true); }

QPolynomial q_bracket(std::uint32_t a) {
  std::vector<BigInt> dense(a, BigInt(1));
  return QPolynomial::from_dense(dense);
}

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational '" + text + "'");
  BigInt n(num[0] == '+' ? num.substr(1) : num, 10);
  BigInt d(den, 10);
  if (sgn(d) == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace qwick
