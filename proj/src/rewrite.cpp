#include "qwick/rewrite.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace qwick {

NormalForm prepend_creator(const NormalForm& nf) {
  NormalForm out;
  for (const auto& [shape, coeff] : nf) out.add({shape.creators + 1, shape.annihilators}, coeff);
  return out;
}

NormalForm prepend_annihilator(const NormalForm& nf) {
  NormalForm out;
  for (const auto& [shape, coeff] : nf) {
    const auto a = static_cast<QPolynomial::Exponent>(shape.creators);
    QPolynomial moved = coeff;
    out.add({shape.creators, shape.annihilators + 1}, moved.shift(a));
    if (a > 0) out.add({shape.creators - 1, shape.annihilators}, coeff * q_bracket(a));
  }
  return out;
}

NormalForm prepend(const NormalForm& nf, LetterType letter) {
  return letter == LetterType::Creator ? prepend_creator(nf) : prepend_annihilator(nf);
}

namespace {

// Dense coefficient block: coeffs[i] multiplies q^(low + i) for i < len.
// The buffer only grows, so the mpz limbs are reused across steps.
struct DenseBlock {
  std::uint32_t low = 0;
  std::size_t len = 0;
  std::vector<BigInt> coeffs;

  void reserve(std::size_t n) {
    if (coeffs.size() < n) coeffs.resize(n);
  }
};

// out = q^shift * cur + [width]_q * prev, where [width]_q * prev is a
// sliding window sum over prev's coefficients.
void combine(const DenseBlock& cur, std::uint32_t shift, const DenseBlock* prev, std::uint32_t width,
             DenseBlock& out, BigInt& window) {
  const bool has_cur = cur.len > 0;
  const bool has_prev = prev != nullptr && prev->len > 0 && width > 0;
  if (!has_cur && !has_prev) {
    out.len = 0;
    return;
  }
  std::size_t low = ~std::size_t{0};
  std::size_t high = 0;
  if (has_cur) {
    low = cur.low + std::size_t{shift};
    high = low + cur.len;
  }
  if (has_prev) {
    low = std::min<std::size_t>(low, prev->low);
    high = std::max<std::size_t>(high, prev->low + prev->len + width - 1);
  }
  out.low = static_cast<std::uint32_t>(low);
  out.len = high - low;
  out.reserve(out.len);

  window = 0;
  const std::size_t cur_low = has_cur ? cur.low + std::size_t{shift} : 0;
  for (std::size_t e = low; e < high; ++e) {
    mpz_ptr dst = out.coeffs[e - low].get_mpz_t();
    if (has_prev) {
      // window = sum of prev coefficients at exponents (e - width, e]
      const std::size_t plow = prev->low;
      if (e >= plow && e < plow + prev->len) mpz_add(window.get_mpz_t(), window.get_mpz_t(), prev->coeffs[e - plow].get_mpz_t());
      if (e >= plow + width && e - width < plow + prev->len)
        mpz_sub(window.get_mpz_t(), window.get_mpz_t(), prev->coeffs[e - width - plow].get_mpz_t());
    }
    const bool in_cur = has_cur && e >= cur_low && e < cur_low + cur.len;
    if (in_cur && has_prev)
      mpz_add(dst, window.get_mpz_t(), cur.coeffs[e - cur_low].get_mpz_t());
    else if (in_cur)
      mpz_set(dst, cur.coeffs[e - cur_low].get_mpz_t());
    else if (has_prev)
      mpz_set(dst, window.get_mpz_t());
    else
      mpz_set_ui(dst, 0);
  }
}

}  // namespace

NormalForm normal_order_rewrite(const Word& w) {
  // After processing a suffix with m creators and n annihilators every term
  // has shape (m - p, n - p); blocks[p] holds its coefficient. Prepending a
  // creator only bumps m. Prepending an annihilator maps
  //   blocks'[p] = q^(m - p) blocks[p] + [m - p + 1]_q blocks[p - 1],
  // evaluated for descending p so blocks[p - 1] is still the old value.
  std::vector<DenseBlock> blocks(1);
  blocks[0].reserve(1);
  blocks[0].coeffs[0] = 1;
  blocks[0].len = 1;
  DenseBlock spare;
  BigInt window;
  std::size_t m = 0;
  std::size_t n = 0;
  for (std::size_t x = w.size(); x-- > 0;) {
    if (w.is_creator(x)) {
      ++m;
      continue;
    }
    if (blocks.size() < std::min(m, n + 1) + 1) blocks.emplace_back();
    for (std::size_t p = blocks.size(); p-- > 0;) {
      const DenseBlock* prev = p > 0 ? &blocks[p - 1] : nullptr;
      combine(blocks[p], static_cast<std::uint32_t>(m - p), prev, static_cast<std::uint32_t>(m - p + 1),
              spare, window);
      std::swap(spare, blocks[p]);
    }
    ++n;
  }

  NormalForm nf;
  for (std::size_t p = 0; p < blocks.size(); ++p) {
    if (blocks[p].len == 0) continue;
    nf.add({m - p, n - p},
           QPolynomial::from_dense(std::span<const BigInt>(blocks[p].coeffs.data(), blocks[p].len), blocks[p].low));
  }
  return nf;
}

}  // namespace qwick
