#include "qwick/normal_form.hpp"

namespace qwick {

NormalForm NormalForm::identity() {
  NormalForm nf;
  nf.add({0, 0}, QPolynomial(1));
  return nf;
}

void NormalForm::add(const Shape& shape, const QPolynomial& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(shape, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

QPolynomial NormalForm::coefficient(const Shape& shape) const {
  auto it = terms_.find(shape);
  return it == terms_.end() ? QPolynomial{} : it->second;
}

}  // namespace qwick
