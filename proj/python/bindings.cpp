#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "qwick/diagrams.hpp"
#include "qwick/format.hpp"
#include "qwick/rewrite.hpp"
#include "qwick/wick.hpp"

namespace py = pybind11;
using namespace qwick;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::dict poly_to_py(const QPolynomial& p) {
  py::dict d;
  for (const auto& t : p.terms()) d[py::int_(t.exponent)] = to_py(t.coeff);
  return d;
}

py::dict normal_form_to_py(const NormalForm& nf) {
  py::dict d;
  for (const auto& [shape, coeff] : nf) d[py::make_tuple(shape.creators, shape.annihilators)] = poly_to_py(coeff);
  return d;
}

using PairList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

PairList diagram_to_py(const FeynmanDiagram& g) {
  PairList out;
  for (const auto& e : g.edges()) out.emplace_back(e.annihilator + 1, e.creator + 1);
  return out;
}

FeynmanDiagram diagram_from_py(const PairList& pairs) {
  std::vector<Edge> edges;
  for (auto [i, j] : pairs) {
    if (i == 0 || j == 0) throw InvalidDiagram("positions are 1-based");
    edges.push_back({i - 1, j - 1});
  }
  return FeynmanDiagram(std::move(edges));
}

NormalForm run_engine(const std::string& word, const std::string& method, std::uint64_t max_diagrams) {
  const Word w = parse_word(word);
  if (method == "rewrite") return normal_order_rewrite(w);
  if (method == "diagrams") return normal_order_diagrams(w, max_diagrams);
  if (method == "both") {
    NormalForm a = normal_order_diagrams(w, max_diagrams);
    NormalForm b = normal_order_rewrite(w);
    if (!(a == b)) throw std::runtime_error("diagram and rewrite engines disagree on '" + word + "'");
    return b;
  }
  throw std::invalid_argument("method must be 'rewrite', 'diagrams' or 'both'");
}

}  // namespace

PYBIND11_MODULE(_qwick, m) {
  m.doc() = "Normal ordering of q-boson words by Feynman diagrams and by rewriting";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidDiagram>(m, "InvalidDiagram", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);

  m.def(
      "parse_word",
      [](const std::string& text) {
        std::string out;
        for (auto t : parse_word(text)) out += t == LetterType::Creator ? 'C' : 'A';
        return out;
      },
      py::arg("text"), "Expanded word as a string of 'A' (c) and 'C' (c+) letters.");

  m.def(
      "normal_order",
      [](const std::string& word, const std::string& method, std::uint64_t max_diagrams) {
        return normal_form_to_py(run_engine(word, method, max_diagrams));
      },
      py::arg("word"), py::arg("method") = "rewrite", py::arg("max_diagrams") = kDefaultMaxDiagrams,
      "{(creators, annihilators): {exponent: coefficient}}");

  m.def(
      "format_normal_form",
      [](const std::string& word, const std::string& format) {
        const NormalForm nf = normal_order_rewrite(parse_word(word));
        return format == "latex" ? to_latex(nf) : to_text(nf);
      },
      py::arg("word"), py::arg("format") = "text");

  m.def(
      "enumerate_diagrams",
      [](const std::string& word, std::optional<std::size_t> degree, std::uint64_t max_diagrams) {
        const Word w = parse_word(word);
        std::vector<PairList> out;
        const auto diagrams = degree ? enumerate_by_degree(w, *degree, max_diagrams)
                                     : enumerate_diagrams(w, max_diagrams);
        for (const auto& g : diagrams) out.push_back(diagram_to_py(g));
        return out;
      },
      py::arg("word"), py::arg("degree") = py::none(), py::arg("max_diagrams") = kDefaultMaxDiagrams,
      "Diagrams as lists of 1-based (annihilator, creator) pairs.");

  m.def(
      "diagram_stats",
      [](const std::string& word, const PairList& diagram) {
        const Word w = parse_word(word);
        const auto g = diagram_from_py(diagram);
        const auto s = diagram_stats(w, g);
        const auto shape = double_dot(w, g);
        py::dict d;
        d["c"] = s.crossings;
        d["d"] = s.degenerate;
        d["tc"] = s.total_crossings;
        d["l"] = s.length;
        d["weight_exponent"] = s.weight_exponent;
        d["double_dot"] = py::make_tuple(shape.creators, shape.annihilators);
        return d;
      },
      py::arg("word"), py::arg("diagram"));

  m.def("count_diagrams", [](const std::string& word) { return to_py(count_diagrams(parse_word(word))); },
        py::arg("word"));

  m.def(
      "rook_coefficients",
      [](const std::string& word, std::uint64_t max_diagrams) {
        py::list out;
        for (const auto& p : rook_coefficients(parse_word(word), max_diagrams)) out.append(poly_to_py(p));
        return out;
      },
      py::arg("word"), py::arg("max_diagrams") = kDefaultMaxDiagrams);

  m.def("q_stirling", [](std::size_t n, std::size_t k) { return poly_to_py(q_stirling(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("stirling2", [](std::size_t n, std::size_t k) { return to_py(stirling2(n, k)); }, py::arg("n"),
        py::arg("k"));

  m.def(
      "render",
      [](const std::string& word, const PairList& diagram, const std::string& format) {
        const Word w = parse_word(word);
        const auto g = diagram_from_py(diagram);
        return format == "svg" ? render_svg(w, g) : render_ascii(w, g);
      },
      py::arg("word"), py::arg("diagram"), py::arg("format") = "ascii");
}
