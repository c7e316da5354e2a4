#ifndef QWICK_REWRITE_HPP
#define QWICK_REWRITE_HPP

#include "qwick/normal_form.hpp"
#include "qwick/word.hpp"

namespace qwick {

/// c+ . N : every (k, l) moves to (k + 1, l).
[[nodiscard]] NormalForm prepend_creator(const NormalForm& nf);

/// c . N, normal ordered with
///   c (c+)^a c^b = q^a (c+)^a c^(b+1) + [a]_q (c+)^(a-1) c^b.
[[nodiscard]] NormalForm prepend_annihilator(const NormalForm& nf);

[[nodiscard]] NormalForm prepend(const NormalForm& nf, LetterType letter);

/// Normal form of `w` by folding its letters right to left onto the empty
/// word with the two prepend rules. Polynomial in |w|; this is the fast
/// engine and the independent check on the diagram expansion.
[[nodiscard]] NormalForm normal_order_rewrite(const Word& w);

}  // namespace qwick

#endif  // QWICK_REWRITE_HPP
