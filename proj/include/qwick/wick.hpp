#ifndef QWICK_WICK_HPP
#define QWICK_WICK_HPP

#include <cstdint>
#include <vector>

#include "qwick/diagrams.hpp"
#include "qwick/normal_form.hpp"

namespace qwick {

/// Normal form as the q-weighted sum over all Feynman diagrams:
/// each diagram contributes q^(tc + l) to the coefficient of its double-dot
/// shape. Diagrams are streamed, never materialized. Throws LimitExceeded
/// when the word has more than `max_diagrams` diagrams.
[[nodiscard]] NormalForm normal_order_diagrams(const Word& w,
                                               std::uint64_t max_diagrams = kDefaultMaxDiagrams);

/// R_k(q) = sum of weights of the degree-k diagrams, k = 0..min(m, n_a).
[[nodiscard]] std::vector<QPolynomial> rook_coefficients(
    const Word& w, std::uint64_t max_diagrams = kDefaultMaxDiagrams);

/// Reassembles sum_k R_k (c+)^(m-k) c^(n_a-k) for the word's counts.
[[nodiscard]] NormalForm assemble_rook(const Word& w, const std::vector<QPolynomial>& rook);

/// (c+ c)^n
[[nodiscard]] Word number_operator_power(std::size_t n);

enum class StirlingBackend { Automatic, Diagrams, Rewrite };

/// Largest n for which the automatic backend enumerates diagrams.
inline constexpr std::size_t kStirlingDiagramCutoff = 10;

/// S_q(n, k): coefficient of (c+)^k c^k in the normal form of (c+ c)^n.
/// Throws DomainError unless 1 <= k <= n.
[[nodiscard]] QPolynomial q_stirling(std::size_t n, std::size_t k,
                                     StirlingBackend backend = StirlingBackend::Automatic);

/// S_q(n, 1..n) from a single normal-ordering pass.
[[nodiscard]] std::vector<QPolynomial> q_stirling_row(
    std::size_t n, StirlingBackend backend = StirlingBackend::Automatic);

/// Classical S(n, k) = S_q(n, k) at q = 1.
[[nodiscard]] BigInt stirling2(std::size_t n, std::size_t k);

}  // namespace qwick

#endif  // QWICK_WICK_HPP
