#ifndef QWICK_FORMAT_HPP
#define QWICK_FORMAT_HPP

#include <string>

#include "qwick/diagrams.hpp"
#include "qwick/normal_form.hpp"

namespace qwick {

/// "q^6 (c+)^2 c^4 + (q^2+2q^3) (c+) c^3 + 1"
[[nodiscard]] std::string to_text(const NormalForm& nf);

/// Same, in LaTeX: "q^{6}(c^{\dag})^{2}c^{4} + \left(1 + q\right)c^{2}"
[[nodiscard]] std::string to_latex(const NormalForm& nf);

/// Linear representation of a diagram as ASCII art: vertices on a line
/// ('o' annihilator, '*' creator), arcs above, 1-based labels below.
/// Validates the diagram first.
[[nodiscard]] std::string render_ascii(const Word& w, const FeynmanDiagram& g);

/// The same picture as a standalone SVG document. `spacing` is the
/// horizontal distance between vertices in pixels.
[[nodiscard]] std::string render_svg(const Word& w, const FeynmanDiagram& g, int spacing = 40);

}  // namespace qwick

#endif  // QWICK_FORMAT_HPP
