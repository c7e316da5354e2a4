#include "qwick/wick.hpp"

#include <algorithm>
#include <string>

#include "qwick/rewrite.hpp"

namespace qwick {

namespace {

void check_limit(const Word& w, std::uint64_t max_diagrams) {
  const BigInt total = count_diagrams(w);
  if (total > BigInt(std::to_string(max_diagrams)))
    throw LimitExceeded(total.get_str() + " diagrams exceed the limit of " +
                        std::to_string(max_diagrams));
}

// histograms[p][e] = number of degree-p diagrams with weight exponent e
std::vector<std::vector<std::uint64_t>> weight_histograms(const Word& w,
                                                          std::uint64_t max_diagrams) {
  check_limit(w, max_diagrams);
  const auto counts = word_counts(w);
  std::vector<std::vector<std::uint64_t>> histograms(
      std::min(counts.creators, counts.annihilators) + 1);
  for_each_diagram(w, [&](std::span<const Edge> edges) {
    const auto e = unchecked_stats(w, edges).weight_exponent;
    auto& h = histograms[edges.size()];
    if (h.size() <= e) h.resize(e + 1, 0);
    ++h[e];
  });
  return histograms;
}

QPolynomial from_histogram(const std::vector<std::uint64_t>& h) {
  std::vector<QPolynomial::Term> terms;
  for (std::size_t e = 0; e < h.size(); ++e)
    if (h[e]) terms.push_back({static_cast<QPolynomial::Exponent>(e), BigInt(std::to_string(h[e]))});
  return QPolynomial::from_terms(std::move(terms));
}

}  // namespace

std::vector<QPolynomial> rook_coefficients(const Word& w, std::uint64_t max_diagrams) {
  std::vector<QPolynomial> rook;
  for (const auto& h : weight_histograms(w, max_diagrams)) rook.push_back(from_histogram(h));
  return rook;
}

NormalForm assemble_rook(const Word& w, const std::vector<QPolynomial>& rook) {
  const auto counts = word_counts(w);
  NormalForm nf;
  for (std::size_t k = 0; k < rook.size(); ++k)
    nf.add({counts.creators - k, counts.annihilators - k}, rook[k]);
  return nf;
}

NormalForm normal_order_diagrams(const Word& w, std::uint64_t max_diagrams) {
  return assemble_rook(w, rook_coefficients(w, max_diagrams));
}

Word number_operator_power(std::size_t n) {
  return repeat(Word({LetterType::Creator, LetterType::Annihilator}), n);
}

namespace {

NormalForm number_operator_normal_form(std::size_t n, StirlingBackend backend) {
  const Word w = number_operator_power(n);
  const bool use_diagrams = backend == StirlingBackend::Diagrams ||
                            (backend == StirlingBackend::Automatic && n <= kStirlingDiagramCutoff);
  return use_diagrams ? normal_order_diagrams(w, ~std::uint64_t{0}) : normal_order_rewrite(w);
}

void check_domain(std::size_t n, std::size_t k) {
  if (k < 1 || k > n)
    throw DomainError("S_q(n,k) requires 1 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
}

}  // namespace

QPolynomial q_stirling(std::size_t n, std::size_t k, StirlingBackend backend) {
  check_domain(n, k);
  return number_operator_normal_form(n, backend).coefficient({k, k});
}

std::vector<QPolynomial> q_stirling_row(std::size_t n, StirlingBackend backend) {
  if (n < 1) throw DomainError("S_q(n,k) requires n >= 1");
  const NormalForm nf = number_operator_normal_form(n, backend);
  std::vector<QPolynomial> row;
  for (std::size_t k = 1; k <= n; ++k) row.push_back(nf.coefficient({k, k}));
  return row;
}

BigInt stirling2(std::size_t n, std::size_t k) {
  const Rational v = q_stirling(n, k).eval(1);
  return v.get_num();
}

}  // namespace qwick
