#include "qwick/diagrams.hpp"

#include <algorithm>
#include <charconv>

namespace qwick {

FeynmanDiagram::FeynmanDiagram(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
}

void validate_diagram(const Word& w, const FeynmanDiagram& g) {
  std::vector<unsigned char> used(w.size(), 0);
  for (const auto& e : g.edges()) {
    const auto i = e.annihilator + 1;
    const auto j = e.creator + 1;
    const std::string name = std::to_string(i) + "-" + std::to_string(j);
    if (e.annihilator >= e.creator)
      throw InvalidDiagram("edge " + name + ": the annihilator must precede the creator (i < j)");
    if (e.creator >= w.size())
      throw InvalidDiagram("edge " + name + ": position out of range for a word of length " +
                           std::to_string(w.size()));
    if (w.is_creator(e.annihilator))
      throw InvalidDiagram("edge " + name + ": position " + std::to_string(i) +
                           " is a creator, expected an annihilator");
    if (!w.is_creator(e.creator))
      throw InvalidDiagram("edge " + name + ": position " + std::to_string(j) +
                           " is an annihilator, expected a creator");
    if (used[e.annihilator] || used[e.creator])
      throw InvalidDiagram("edge " + name + ": position already used by another edge");
    used[e.annihilator] = used[e.creator] = 1;
  }
}

DiagramStats unchecked_stats(const Word& w, std::span<const Edge> edges) {
  const std::size_t n = w.size();
  std::vector<unsigned char> matched(n, 0);
  for (const auto& e : edges) matched[e.annihilator] = matched[e.creator] = 1;

  DiagramStats s;
  // Left crossings: with edges sorted by annihilator, i_k < i_m holds for
  // k < m, so the pair crosses iff i_m < j_k < j_m.
  for (std::size_t k = 0; k < edges.size(); ++k)
    for (std::size_t m = k + 1; m < edges.size(); ++m)
      if (edges[m].annihilator < edges[k].creator && edges[k].creator < edges[m].creator)
        ++s.crossings;

  // singletons_before[x] = number of singletons at positions < x
  std::vector<std::uint64_t> singletons_before(n + 1, 0);
  for (std::size_t x = 0; x < n; ++x) singletons_before[x + 1] = singletons_before[x] + !matched[x];
  for (const auto& e : edges)
    s.degenerate += singletons_before[e.creator] - singletons_before[e.annihilator + 1];

  std::uint64_t creators_to_right = 0;
  for (std::size_t x = n; x-- > 0;) {
    if (matched[x]) continue;
    if (w.is_creator(x)) {
      ++creators_to_right;
      ++s.singleton_creators;
    } else {
      s.length += creators_to_right;
      ++s.singleton_annihilators;
    }
  }
  s.total_crossings = s.crossings + s.degenerate;
  s.weight_exponent = s.total_crossings + s.length;
  return s;
}

DiagramStats diagram_stats(const Word& w, const FeynmanDiagram& g) {
  validate_diagram(w, g);
  return unchecked_stats(w, g.edges());
}

QPolynomial diagram_weight(const Word& w, const FeynmanDiagram& g) {
  return QPolynomial::monomial(static_cast<QPolynomial::Exponent>(diagram_stats(w, g).weight_exponent));
}

Shape double_dot(const Word& w, const FeynmanDiagram& g) {
  validate_diagram(w, g);
  const auto counts = word_counts(w);
  return {counts.creators - g.degree(), counts.annihilators - g.degree()};
}

namespace {

void check_limit(const BigInt& count, std::uint64_t max_diagrams) {
  if (count > BigInt(std::to_string(max_diagrams)))
    throw LimitExceeded(count.get_str() + " diagrams exceed the limit of " +
                        std::to_string(max_diagrams));
}

void collect_degree(const Word& w, std::size_t p, std::vector<FeynmanDiagram>& out) {
  for_each_diagram_of_degree(w, p, [&](std::span<const Edge> edges) {
    out.emplace_back(std::vector<Edge>(edges.begin(), edges.end()));
  });
}

}  // namespace

std::vector<FeynmanDiagram> enumerate_diagrams(const Word& w, std::uint64_t max_diagrams) {
  check_limit(count_diagrams(w), max_diagrams);
  std::vector<FeynmanDiagram> out;
  const auto counts = word_counts(w);
  const std::size_t max_degree = std::min(counts.creators, counts.annihilators);
  for (std::size_t p = 0; p <= max_degree; ++p) collect_degree(w, p, out);
  return out;
}

std::vector<FeynmanDiagram> enumerate_by_degree(const Word& w, std::size_t degree,
                                                std::uint64_t max_diagrams) {
  const auto by_degree = count_diagrams_by_degree(w);
  if (degree >= by_degree.size()) return {};
  check_limit(by_degree[degree], max_diagrams);
  std::vector<FeynmanDiagram> out;
  collect_degree(w, degree, out);
  return out;
}

std::vector<BigInt> count_diagrams_by_degree(const Word& w) {
  // Right-to-left dynamic programme over (free creators to the right, edges
  // so far). An annihilator either stays single or takes any one of the
  // free creators to its right; which one does not affect later choices.
  const auto counts = word_counts(w);
  const std::size_t max_degree = std::min(counts.creators, counts.annihilators);
  const std::size_t width = max_degree + 1;
  // table[free * width + p]
  std::vector<BigInt> table((counts.creators + 1) * width);
  table[0] = 1;
  std::size_t creators_seen = 0;
  for (std::size_t x = w.size(); x-- > 0;) {
    if (w.is_creator(x)) {
      for (std::size_t f = creators_seen + 1; f-- > 0;)
        for (std::size_t p = 0; p < width; ++p) {
          table[(f + 1) * width + p] = table[f * width + p];
        }
      for (std::size_t p = 0; p < width; ++p) table[p] = 0;
      ++creators_seen;
    } else {
      // pairing consumes a free creator: (f, p) -> (f - 1, p + 1) with multiplicity f
      for (std::size_t f = 1; f <= creators_seen; ++f)
        for (std::size_t p = width - 1; p-- > 0;) {
          if (sgn(table[f * width + p]) == 0) continue;
          table[(f - 1) * width + p + 1] += f * table[f * width + p];
        }
    }
  }
  std::vector<BigInt> result(width);
  for (std::size_t f = 0; f <= counts.creators; ++f)
    for (std::size_t p = 0; p < width; ++p) result[p] += table[f * width + p];
  return result;
}

BigInt count_diagrams(const Word& w) {
  BigInt total = 0;
  for (const auto& c : count_diagrams_by_degree(w)) total += c;
  return total;
}

std::string format_diagram(const FeynmanDiagram& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.annihilator + 1) + "-" + std::to_string(e.creator + 1);
  }
  return out;
}

FeynmanDiagram parse_diagram(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto read_index = [&]() -> std::uint32_t {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, v);
    if (start == pos || ec != std::errc{}) throw ParseError(start, "expected a position");
    if (v == 0) throw ParseError(start, "positions are 1-based");
    skip_ws();
    return v - 1;
  };
  skip_ws();
  if (pos == text.size()) return {};
  for (;;) {
    const auto i = read_index();
    if (pos >= text.size() || text[pos] != '-') throw ParseError(pos, "expected '-'");
    ++pos;
    const auto j = read_index();
    edges.push_back({i, j});
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(pos, "expected ','");
    ++pos;
  }
  return FeynmanDiagram(std::move(edges));
}

}  // namespace qwick
