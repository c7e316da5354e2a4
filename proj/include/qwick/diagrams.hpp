#ifndef QWICK_DIAGRAMS_HPP
#define QWICK_DIAGRAMS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qwick/errors.hpp"
#include "qwick/qpoly.hpp"
#include "qwick/word.hpp"

namespace qwick {

/// One contraction: the annihilator at `annihilator` paired with the
/// creator at `creator`, annihilator < creator. 0-based positions.
struct Edge {
  std::uint32_t annihilator;
  std::uint32_t creator;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A Feynman diagram on a word: a partial matching of annihilators to later
/// creators. Edges are kept sorted by annihilator position.
class FeynmanDiagram {
 public:
  FeynmanDiagram() = default;
  /// Sorts `edges` into canonical order. Validity against a word is checked
  /// separately by validate_diagram.
  explicit FeynmanDiagram(std::vector<Edge> edges);

  [[nodiscard]] std::size_t degree() const noexcept { return edges_.size(); }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }

  friend bool operator==(const FeynmanDiagram&, const FeynmanDiagram&) = default;
  friend auto operator<=>(const FeynmanDiagram& a, const FeynmanDiagram& b) {
    return a.edges_ <=> b.edges_;
  }

 private:
  std::vector<Edge> edges_;
};

struct DiagramStats {
  std::uint64_t crossings = 0;         // c
  std::uint64_t degenerate = 0;        // d
  std::uint64_t total_crossings = 0;   // tc = c + d
  std::uint64_t length = 0;            // l
  std::uint64_t weight_exponent = 0;   // tc + l
  std::uint64_t singleton_creators = 0;
  std::uint64_t singleton_annihilators = 0;
  friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

/// Exponents of the double-dot monomial (c+)^creators c^annihilators.
struct Shape {
  std::size_t creators = 0;
  std::size_t annihilators = 0;
  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;
};

inline constexpr std::uint64_t kDefaultMaxDiagrams = 1'000'000;

/// Throws InvalidDiagram unless every edge pairs an annihilator with a later
/// creator and no position is used twice.
void validate_diagram(const Word& w, const FeynmanDiagram& g);

[[nodiscard]] DiagramStats diagram_stats(const Word& w, const FeynmanDiagram& g);
[[nodiscard]] QPolynomial diagram_weight(const Word& w, const FeynmanDiagram& g);
[[nodiscard]] Shape double_dot(const Word& w, const FeynmanDiagram& g);

/// Statistics of a diagram given as edges sorted by annihilator, without
/// validation. Hot path for the streaming enumerator.
[[nodiscard]] DiagramStats unchecked_stats(const Word& w, std::span<const Edge> edges);

/// Calls `visit(std::span<const Edge>)` once per diagram on `w`, with edges
/// sorted by annihilator. Visit order is depth-first: at each annihilator
/// (left to right) first every pairing with a later free creator in
/// increasing position, then leaving it single. Restricted to one degree
/// this order is lexicographic on the edge list.
template <typename Visitor>
void for_each_diagram(const Word& w, Visitor&& visit);

/// As for_each_diagram, restricted to diagrams with exactly `degree` edges.
template <typename Visitor>
void for_each_diagram_of_degree(const Word& w, std::size_t degree, Visitor&& visit);

/// Every diagram, by degree ascending then lexicographic on edges.
/// Throws LimitExceeded if there are more than `max_diagrams`.
[[nodiscard]] std::vector<FeynmanDiagram> enumerate_diagrams(
    const Word& w, std::uint64_t max_diagrams = kDefaultMaxDiagrams);

/// Degree-`degree` diagrams in lexicographic order; empty when degree > |w|/2.
[[nodiscard]] std::vector<FeynmanDiagram> enumerate_by_degree(
    const Word& w, std::size_t degree, std::uint64_t max_diagrams = kDefaultMaxDiagrams);

/// |F(w)| without enumeration.
[[nodiscard]] BigInt count_diagrams(const Word& w);

/// |F_p(w)| for p = 0..min(m, n_a), without enumeration.
[[nodiscard]] std::vector<BigInt> count_diagrams_by_degree(const Word& w);

/// "1-3,2-6,4-9" (1-based); empty diagram is "".
[[nodiscard]] std::string format_diagram(const FeynmanDiagram& g);
/// Inverse of format_diagram. Throws ParseError on malformed text.
[[nodiscard]] FeynmanDiagram parse_diagram(std::string_view text);

// ---------------------------------------------------------------------------

namespace detail {

template <typename Visitor>
class DiagramWalker {
 public:
  DiagramWalker(const Word& w, Visitor& visit, std::size_t degree, bool fixed_degree)
      : word_(w), visit_(visit), target_(degree), fixed_(fixed_degree), used_(w.size(), 0) {
    edges_.reserve(w.size() / 2);
    annihilators_after_.assign(w.size() + 1, 0);
    for (std::size_t i = w.size(); i-- > 0;)
      annihilators_after_[i] = annihilators_after_[i + 1] + (w.is_creator(i) ? 0 : 1);
  }

  void run() { step(0); }

 private:
  void step(std::size_t pos) {
    while (pos < word_.size() && word_.is_creator(pos)) ++pos;
    if (fixed_) {
      if (edges_.size() == target_) {
        visit_(std::span<const Edge>(edges_));
        return;
      }
      if (edges_.size() + annihilators_after_[pos] < target_) return;
    }
    if (pos >= word_.size()) {
      visit_(std::span<const Edge>(edges_));
      return;
    }
    for (std::size_t j = pos + 1; j < word_.size(); ++j) {
      if (!word_.is_creator(j) || used_[j]) continue;
      used_[j] = 1;
      edges_.push_back({static_cast<std::uint32_t>(pos), static_cast<std::uint32_t>(j)});
      step(pos + 1);
      edges_.pop_back();
      used_[j] = 0;
    }
    step(pos + 1);
  }

  const Word& word_;
  Visitor& visit_;
  std::size_t target_;
  bool fixed_;
  std::vector<unsigned char> used_;
  std::vector<std::size_t> annihilators_after_;
  std::vector<Edge> edges_;
};

}  // namespace detail

template <typename Visitor>
void for_each_diagram(const Word& w, Visitor&& visit) {
  detail::DiagramWalker<Visitor> walker(w, visit, 0, false);
  walker.run();
}

template <typename Visitor>
void for_each_diagram_of_degree(const Word& w, std::size_t degree, Visitor&& visit) {
  if (2 * degree > w.size()) return;
  detail::DiagramWalker<Visitor> walker(w, visit, degree, true);
  walker.run();
}

}  // namespace qwick

#endif  // QWICK_DIAGRAMS_HPP
