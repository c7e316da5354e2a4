#ifndef QWICK_NORMAL_FORM_HPP
#define QWICK_NORMAL_FORM_HPP

#include <functional>
#include <map>

#include "qwick/diagrams.hpp"
#include "qwick/qpoly.hpp"

namespace qwick {

/// sum over shapes (k, l) of C_{k,l}(q) (c+)^k c^l, with no zero coefficients.
/// Iteration runs from the highest creator power down.
class NormalForm {
 public:
  using Map = std::map<Shape, QPolynomial, std::greater<>>;

  NormalForm() = default;

  /// The empty word: { (0,0): 1 }.
  [[nodiscard]] static NormalForm identity();

  void add(const Shape& shape, const QPolynomial& coeff);
  [[nodiscard]] QPolynomial coefficient(const Shape& shape) const;

  [[nodiscard]] const Map& terms() const noexcept { return terms_; }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] auto begin() const noexcept { return terms_.begin(); }
  [[nodiscard]] auto end() const noexcept { return terms_.end(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  Map terms_;
};

}  // namespace qwick

#endif  // QWICK_NORMAL_FORM_HPP
