#include "qwick/format.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qwick {

namespace {

std::string monomial_text(const Shape& s) {
  std::string out;
  if (s.creators == 1) out = "(c+)";
  if (s.creators > 1) out = "(c+)^" + std::to_string(s.creators);
  if (s.annihilators > 0) {
    if (!out.empty()) out += ' ';
    out += s.annihilators == 1 ? "c" : "c^" + std::to_string(s.annihilators);
  }
  return out;
}

std::string monomial_latex(const Shape& s) {
  std::string out;
  if (s.creators == 1) out = "c^{\\dag}";
  if (s.creators > 1) out = "(c^{\\dag})^{" + std::to_string(s.creators) + "}";
  if (s.annihilators == 1) out += "c";
  if (s.annihilators > 1) out += "c^{" + std::to_string(s.annihilators) + "}";
  return out;
}

}  // namespace

std::string to_text(const NormalForm& nf) {
  if (nf.empty()) return "0";
  std::string out;
  for (const auto& [shape, coeff] : nf) {
    if (!out.empty()) out += " + ";
    const std::string mono = monomial_text(shape);
    const bool single = coeff.terms().size() == 1;
    std::string c = coeff.to_text(true);
    if (!single) c = "(" + c + ")";
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + " " + mono;
    }
  }
  return out;
}

std::string to_latex(const NormalForm& nf) {
  if (nf.empty()) return "0";
  std::string out;
  for (const auto& [shape, coeff] : nf) {
    if (!out.empty()) out += " + ";
    const std::string mono = monomial_latex(shape);
    std::string c = coeff.to_latex();
    if (coeff.terms().size() != 1) c = "\\left(" + c + "\\right)";
    if (c == "1" && !mono.empty()) c.clear();
    out += c + mono;
  }
  return out;
}

namespace {

// Height (1 = lowest) of each edge's arc. Shorter edges are placed first and
// sit just above every already placed edge whose span overlaps theirs.
std::vector<int> arc_heights(std::span<const Edge> edges) {
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return edges[a].creator - edges[a].annihilator < edges[b].creator - edges[b].annihilator;
  });
  std::vector<int> height(edges.size(), 0);
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const Edge& e = edges[order[idx]];
    int h = 1;
    for (std::size_t prev = 0; prev < idx; ++prev) {
      const Edge& o = edges[order[prev]];
      const bool overlap = o.annihilator <= e.creator && e.annihilator <= o.creator;
      if (overlap) h = std::max(h, height[order[prev]] + 1);
    }
    height[order[idx]] = h;
  }
  return height;
}

}  // namespace

std::string render_ascii(const Word& w, const FeynmanDiagram& g) {
  validate_diagram(w, g);
  constexpr std::size_t kStep = 4;
  const auto edges = g.edges();
  const auto heights = arc_heights(edges);
  const int top = heights.empty() ? 0 : *std::max_element(heights.begin(), heights.end());
  const std::size_t width = w.empty() ? 0 : (w.size() - 1) * kStep + 1;

  // canvas[0] is the highest arc row; canvas[top] is the vertex row
  std::vector<std::string> canvas(static_cast<std::size_t>(top) + 1, std::string(width, ' '));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::size_t row = static_cast<std::size_t>(top - heights[k]);
    const std::size_t x0 = edges[k].annihilator * kStep;
    const std::size_t x1 = edges[k].creator * kStep;
    for (std::size_t x = x0 + 1; x < x1; ++x)
      if (canvas[row][x] == ' ') canvas[row][x] = '-';
    canvas[row][x0] = '.';
    canvas[row][x1] = '.';
  }
  // verticals win over horizontals of lower arcs
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::size_t row = static_cast<std::size_t>(top - heights[k]);
    for (std::size_t r = row + 1; r < static_cast<std::size_t>(top); ++r) {
      canvas[r][edges[k].annihilator * kStep] = '|';
      canvas[r][edges[k].creator * kStep] = '|';
    }
  }
  for (std::size_t i = 0; i < w.size(); ++i) canvas[top][i * kStep] = w.is_creator(i) ? '*' : 'o';

  std::string labels;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (labels.size() < i * kStep)
      labels.resize(i * kStep, ' ');
    else if (i > 0)
      labels += ' ';
    labels += std::to_string(i + 1);
  }

  std::string out;
  for (auto& line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  out += labels + '\n';
  return out;
}

std::string render_svg(const Word& w, const FeynmanDiagram& g, int spacing) {
  validate_diagram(w, g);
  const auto edges = g.edges();
  const auto heights = arc_heights(edges);
  const int top = heights.empty() ? 0 : *std::max_element(heights.begin(), heights.end());
  const int radius = std::max(3, spacing / 5);
  const int margin = spacing;
  const int rise = spacing / 2;
  const int baseline = margin + rise * (top + 1);
  const int n = static_cast<int>(w.size());
  const int width = 2 * margin + std::max(0, n - 1) * spacing;
  const int height = baseline + radius + spacing;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const int x0 = margin + static_cast<int>(edges[k].annihilator) * spacing;
    const int x1 = margin + static_cast<int>(edges[k].creator) * spacing;
    const int y = baseline - radius;
    // the quadratic peaks halfway to its control point
    const int ctrl = baseline - radius - 2 * rise * heights[k];
    svg << "  <path d=\"M " << x0 << ' ' << y << " Q " << (x0 + x1) / 2 << ' ' << ctrl << ' ' << x1
        << ' ' << y << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (int i = 0; i < n; ++i) {
    const int x = margin + i * spacing;
    const bool creator = w.is_creator(static_cast<std::size_t>(i));
    svg << "  <circle cx=\"" << x << "\" cy=\"" << baseline << "\" r=\"" << radius << "\" fill=\""
        << (creator ? "black" : "white") << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "  <text x=\"" << x << "\" y=\"" << baseline + radius + spacing / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"" << spacing / 3
        << "\">" << i + 1 << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace qwick
