#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "qwick/diagrams.hpp"
#include "qwick/format.hpp"
#include "qwick/rewrite.hpp"
#include "qwick/wick.hpp"

namespace qwick::cli {

using nlohmann::json;

namespace {

json poly_json(const QPolynomial& p) {
  json arr = json::array();
  for (const auto& t : p.terms()) arr.push_back(json::array({t.exponent, t.coeff.get_str()}));
  return arr;
}

std::string shape_key(const Shape& s) {
  return "(" + std::to_string(s.creators) + "," + std::to_string(s.annihilators) + ")";
}

std::string poly_in(const QPolynomial& p, const std::string& format) {
  return format == "latex" ? p.to_latex() : p.to_text();
}

struct GlobalOptions {
  std::optional<std::uint64_t> max_diagrams;
  std::string eval_q;

  [[nodiscard]] std::uint64_t cap() const {
    if (max_diagrams) return *max_diagrams;
    if (const char* env = std::getenv("QWICK_MAX_DIAGRAMS")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw std::invalid_argument(std::string("QWICK_MAX_DIAGRAMS is not a number: ") + env);
      }
    }
    return kDefaultMaxDiagrams;
  }

  [[nodiscard]] std::optional<Rational> q_value() const {
    if (eval_q.empty()) return std::nullopt;
    return parse_rational(eval_q);
  }
};

class Timer {
 public:
  [[nodiscard]] double elapsed_ms() const {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::round(ms * 1000.0) / 1000.0;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// --- normal-order ---------------------------------------------------------

struct NormalOrderArgs {
  std::string word;
  std::string method = "rewrite";
  std::string format = "text";
};

int normal_order_one(const std::string& text, const NormalOrderArgs& args, const GlobalOptions& global,
                     std::ostream& out, std::ostream& err) {
  const Word w = parse_word(text);
  const auto q = global.q_value();
  const Timer timer;

  NormalForm nf;
  std::optional<bool> agreement;
  if (args.method == "rewrite") {
    nf = normal_order_rewrite(w);
  } else if (args.method == "diagrams") {
    nf = normal_order_diagrams(w, global.cap());
  } else {
    NormalForm by_diagrams = normal_order_diagrams(w, global.cap());
    NormalForm by_rewrite = normal_order_rewrite(w);
    if (int rc = check_agreement(by_diagrams, by_rewrite, err); rc != kOk) return rc;
    agreement = true;
    nf = std::move(by_rewrite);
  }
  const double elapsed = timer.elapsed_ms();

  if (args.format == "json") {
    json doc;
    doc["word"] = render_text(w);
    doc["method"] = args.method;
    doc["normal_form"] = normal_form_json(nf);
    if (agreement) doc["agreement"] = *agreement;
    doc["diagnostics"] = {{"diagram_count", count_diagrams(w).get_str()}, {"elapsed_ms", elapsed}};
    if (q) {
      doc["eval_q"] = q->get_str();
      for (auto& term : doc["normal_form"]) {
        const Shape s{term["creators"].get<std::size_t>(), term["annihilators"].get<std::size_t>()};
        term["value"] = nf.coefficient(s).eval(*q).get_str();
      }
    }
    out << doc.dump() << '\n';
    return kOk;
  }

  out << (args.format == "latex" ? to_latex(nf) : to_text(nf)) << '\n';
  if (q) {
    out << "values at q=" << q->get_str() << ": {";
    bool first = true;
    for (const auto& [shape, coeff] : nf) {
      out << (first ? "" : ", ") << shape_key(shape) << ": " << coeff.eval(*q).get_str();
      first = false;
    }
    out << "}\n";
  }
  return kOk;
}

int cmd_normal_order(const NormalOrderArgs& args, const GlobalOptions& global, std::istream& in,
                     std::ostream& out, std::ostream& err) {
  if (!args.word.empty()) return normal_order_one(args.word, args, global, out, err);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (int rc = normal_order_one(line, args, global, out, err); rc != kOk) return rc;
  }
  return kOk;
}

// --- diagrams -------------------------------------------------------------

struct DiagramsArgs {
  std::string word;
  std::optional<std::size_t> degree;
  bool list = false;
  bool stats = false;
  std::string format = "text";
};

std::string stats_suffix(const DiagramStats& s) {
  return "c=" + std::to_string(s.crossings) + " d=" + std::to_string(s.degenerate) +
         " tc=" + std::to_string(s.total_crossings) + " l=" + std::to_string(s.length) +
         " weight=" + QPolynomial::monomial(static_cast<QPolynomial::Exponent>(s.weight_exponent)).to_text();
}

int cmd_diagrams(const DiagramsArgs& args, const GlobalOptions& global, std::ostream& out) {
  const Word w = parse_word(args.word);
  const auto counts = count_diagrams_by_degree(w);
  std::vector<std::size_t> degrees;
  if (args.degree) {
    degrees.push_back(*args.degree);
  } else {
    for (std::size_t p = 0; p < counts.size(); ++p) degrees.push_back(p);
  }
  auto count_of = [&](std::size_t p) { return p < counts.size() ? counts[p] : BigInt(0); };

  std::vector<FeynmanDiagram> listed;
  if (args.list || args.stats) {
    if (args.degree) {
      listed = enumerate_by_degree(w, *args.degree, global.cap());
    } else {
      listed = enumerate_diagrams(w, global.cap());
    }
  }

  if (args.format == "json") {
    json doc;
    doc["word"] = render_text(w);
    doc["counts"] = json::array();
    for (auto p : degrees) doc["counts"].push_back({{"degree", p}, {"count", count_of(p).get_str()}});
    if (args.list || args.stats) {
      doc["diagrams"] = json::array();
      for (const auto& g : listed) {
        json entry = {{"edges", format_diagram(g)}, {"degree", g.degree()}};
        if (args.stats) {
          const auto s = diagram_stats(w, g);
          entry["c"] = s.crossings;
          entry["d"] = s.degenerate;
          entry["tc"] = s.total_crossings;
          entry["l"] = s.length;
          entry["weight_exponent"] = s.weight_exponent;
        }
        doc["diagrams"].push_back(std::move(entry));
      }
    }
    out << doc.dump() << '\n';
    return kOk;
  }

  bool first = true;
  for (auto p : degrees) {
    out << (first ? "" : ", ") << "degree " << p << ": " << count_of(p).get_str();
    first = false;
  }
  out << '\n';
  for (const auto& g : listed) {
    out << format_diagram(g);
    if (args.stats) out << "  " << stats_suffix(diagram_stats(w, g));
    out << '\n';
  }
  return kOk;
}

// --- stirling ---------------------------------------------------------------

struct StirlingArgs {
  std::size_t n = 0;
  std::optional<std::size_t> k;
  bool q1 = false;
  std::string format = "text";
};

int cmd_stirling(const StirlingArgs& args, std::ostream& out) {
  std::vector<std::pair<std::size_t, QPolynomial>> entries;
  if (args.k) {
    entries.emplace_back(*args.k, q_stirling(args.n, *args.k));
  } else {
    const auto row = q_stirling_row(args.n);
    for (std::size_t k = 1; k <= row.size(); ++k) entries.emplace_back(k, row[k - 1]);
  }

  if (args.format == "json") {
    json doc;
    doc["n"] = args.n;
    doc["row"] = json::array();
    for (const auto& [k, p] : entries) {
      json entry = {{"k", k}, {"coeff", poly_json(p)}};
      if (args.q1) entry["value"] = p.eval(1).get_str();
      doc["row"].push_back(std::move(entry));
    }
    out << doc.dump() << '\n';
    return kOk;
  }

  if (args.q1) {
    bool first = true;
    for (const auto& [k, p] : entries) {
      out << (first ? "" : " ") << p.eval(1).get_str();
      first = false;
    }
    out << '\n';
    return kOk;
  }
  for (const auto& [k, p] : entries) out << poly_in(p, args.format) << '\n';
  return kOk;
}

// --- rook -----------------------------------------------------------------

struct RookArgs {
  std::string word;
  std::string format = "text";
};

int cmd_rook(const RookArgs& args, const GlobalOptions& global, std::ostream& out) {
  const Word w = parse_word(args.word);
  const auto q = global.q_value();
  const auto rook = rook_coefficients(w, global.cap());
  if (args.format == "json") {
    json doc;
    doc["word"] = render_text(w);
    doc["rook"] = json::array();
    for (std::size_t k = 0; k < rook.size(); ++k) {
      json entry = {{"k", k}, {"coeff", poly_json(rook[k])}};
      if (q) entry["value"] = rook[k].eval(*q).get_str();
      doc["rook"].push_back(std::move(entry));
    }
    if (q) doc["eval_q"] = q->get_str();
    out << doc.dump() << '\n';
    return kOk;
  }
  for (std::size_t k = 0; k < rook.size(); ++k) {
    out << "R_" << k << " = " << poly_in(rook[k], args.format);
    if (q) out << "  (q=" << q->get_str() << ": " << rook[k].eval(*q).get_str() << ")";
    out << '\n';
  }
  return kOk;
}

// --- render ---------------------------------------------------------------

struct RenderArgs {
  std::string word;
  std::string diagram;
  std::string format = "ascii";
  int spacing = 40;
};

int cmd_render(const RenderArgs& args, std::ostream& out) {
  const Word w = parse_word(args.word);
  const FeynmanDiagram g = parse_diagram(args.diagram);
  out << (args.format == "svg" ? render_svg(w, g, args.spacing) : render_ascii(w, g));
  return kOk;
}

}  // namespace

json normal_form_json(const NormalForm& nf) {
  json arr = json::array();
  for (const auto& [shape, coeff] : nf)
    arr.push_back({{"creators", shape.creators}, {"annihilators", shape.annihilators}, {"coeff", poly_json(coeff)}});
  return arr;
}

int check_agreement(const NormalForm& diagrams, const NormalForm& rewrite, std::ostream& err) {
  if (diagrams == rewrite) return kOk;
  err << "error: diagram and rewrite engines disagree\n"
      << "  diagrams: " << to_text(diagrams) << '\n'
      << "  rewrite:  " << to_text(rewrite) << '\n';
  return kEngineDisagreement;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal ordering for the q-deformed boson: c c+ - q c+ c = 1", "qwick"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--max-diagrams", global.max_diagrams,
                 "Cap on enumerated diagrams (default 1000000, or $QWICK_MAX_DIAGRAMS)");
  app.add_option("--eval-q", global.eval_q, "Also evaluate coefficients at this rational q (\"p/q\" or integer)");
  std::string global_format;
  app.add_option("--format", global_format, "Output format for any subcommand; a subcommand's own --format wins")
      ->check(CLI::IsMember({"text", "json", "latex", "ascii", "svg"}));

  const std::vector<std::string> text_formats{"text", "json", "latex"};

  NormalOrderArgs no_args;
  auto* no_cmd = app.add_subcommand("normal-order", "Normal-order a word (reads one word per line from stdin if none given)");
  no_cmd->add_option("word", no_args.word, "Word, e.g. \"c^2 c+ c^2 c+\"");
  no_cmd->add_option("--method", no_args.method, "diagrams | rewrite | both")
      ->check(CLI::IsMember({"diagrams", "rewrite", "both"}));
  no_cmd->add_option("--format", no_args.format)->check(CLI::IsMember(text_formats));

  DiagramsArgs dg_args;
  auto* dg_cmd = app.add_subcommand("diagrams", "Count, list and weigh the Feynman diagrams of a word");
  dg_cmd->add_option("word", dg_args.word)->required();
  dg_cmd->add_option("--degree", dg_args.degree, "Only diagrams with this many edges");
  dg_cmd->add_flag("--list", dg_args.list, "Print every diagram");
  dg_cmd->add_flag("--stats", dg_args.stats, "Print c, d, tc, l and the weight of each diagram");
  dg_cmd->add_option("--format", dg_args.format)->check(CLI::IsMember({"text", "json"}));

  StirlingArgs st_args;
  auto* st_cmd = app.add_subcommand("stirling", "q-Stirling numbers S_q(n,k) of the second kind");
  st_cmd->add_option("n", st_args.n)->required();
  st_cmd->add_option("k", st_args.k);
  st_cmd->add_flag("--q1", st_args.q1, "Print the classical values at q = 1");
  st_cmd->add_option("--format", st_args.format)->check(CLI::IsMember(text_formats));

  RookArgs rk_args;
  auto* rk_cmd = app.add_subcommand("rook", "q-rook numbers R_k(q): weight sums of degree-k diagrams");
  rk_cmd->add_option("word", rk_args.word)->required();
  rk_cmd->add_option("--format", rk_args.format)->check(CLI::IsMember(text_formats));

  RenderArgs rd_args;
  auto* rd_cmd = app.add_subcommand("render", "Draw the linear representation of a diagram");
  rd_cmd->add_option("word", rd_args.word)->required();
  rd_cmd->add_option("diagram", rd_args.diagram, "Edges as \"1-3,2-6\"; empty for no edges")->required();
  rd_cmd->add_option("--format", rd_args.format)->check(CLI::IsMember({"ascii", "svg"}));
  rd_cmd->add_option("--spacing", rd_args.spacing, "Pixels between vertices (svg)")->check(CLI::Range(10, 400));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  // A global --format applies where the subcommand did not set its own.
  const auto inherit = [&](CLI::App* cmd, std::string& target, const std::vector<std::string>& allowed) {
    if (!*cmd || global_format.empty() || cmd->count("--format") > 0) return true;
    if (std::find(allowed.begin(), allowed.end(), global_format) == allowed.end()) {
      err << "error: --format " << global_format << " is not available for " << cmd->get_name() << '\n';
      return false;
    }
    target = global_format;
    return true;
  };
  if (!inherit(no_cmd, no_args.format, text_formats) || !inherit(dg_cmd, dg_args.format, {"text", "json"}) ||
      !inherit(st_cmd, st_args.format, text_formats) || !inherit(rk_cmd, rk_args.format, text_formats) ||
      !inherit(rd_cmd, rd_args.format, {"ascii", "svg"}))
    return kInputError;

  try {
    if (*no_cmd) return cmd_normal_order(no_args, global, in, out, err);
    if (*dg_cmd) return cmd_diagrams(dg_args, global, out);
    if (*st_cmd) return cmd_stirling(st_args, out);
    if (*rk_cmd) return cmd_rook(rk_args, global, out);
    if (*rd_cmd) return cmd_render(rd_args, out);
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << " (raise with --max-diagrams or QWICK_MAX_DIAGRAMS)\n";
    return kLimitExceeded;
  } catch (const std::exception& e) {
    // ParseError, InvalidDiagram, DomainError and malformed option values
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace qwick::cli
