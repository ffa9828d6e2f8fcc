// afftl: command-line explorer for the affine Temperley-Lieb algebra.
//
// Exit status: 0 on success, 1 on a domain error (JSON on stderr), 2 on a
// usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "afftl/algebra.hpp"
#include "afftl/cells.hpp"
#include "afftl/checks.hpp"
#include "afftl/enumerate.hpp"
#include "afftl/error.hpp"
#include "afftl/render.hpp"
#include "afftl/serialize.hpp"
#include "afftl/straighten.hpp"

namespace {

using afftl::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

afftl::Word parse_word(const std::string& text) {
  std::string spaced = text;
  for (char& c : spaced) {
    if (c == ',' || c == '[' || c == ']') c = ' ';
  }
  std::istringstream is(spaced);
  afftl::Word w;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw UsageError("bad letter in --word: " + tok);
    w.push_back(v);
  }
  return w;
}

Json read_json(const std::string& path) {
  if (path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw afftl::Error(afftl::ErrorKind::parse, "cannot open " + path);
  return Json::parse(in);
}

void print_error(const std::string& kind, const std::string& message) {
  Json err = {{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << err.dump() << '\n';
}

struct Options {
  int n = 4;
  std::string word;
  int max_len = 6;
  std::string format = "json";
  std::uint64_t seed = 1;
  int workers = 1;
  bool with_labels = false;
  std::string a_path, b_path, input;
};

std::string render_census_md(const std::vector<afftl::CensusRow>& rows) {
  std::ostringstream os;
  os << "| two-sided | left cells | right cells | elements seen |\n";
  os << "|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.two_sided.to_string() << " | " << r.left_cells << " | " << r.right_cells
       << " | " << r.elements_seen << " |\n";
  }
  return os.str();
}

void emit_diagram(const afftl::AffineDiagram& d, const std::string& format) {
  if (format == "ascii") {
    std::cout << afftl::render(d, afftl::RenderFormat::ascii);
  } else if (format == "svg") {
    std::cout << afftl::render(d, afftl::RenderFormat::svg);
  } else if (format == "json") {
    std::cout << afftl::diagram_to_json(d).dump() << '\n';
  } else {
    throw UsageError("format " + format + " is not available here");
  }
}

void require_json(const std::string& format) {
  if (format != "json") throw UsageError("format " + format + " is not available here");
}

int run_eval(const Options& o) {
  afftl::GroupConfig cfg(o.n);
  afftl::Evaluation ev = afftl::fc_evaluate(cfg, parse_word(o.word));
  if (o.format != "json") {
    std::cout << "[2]^" << ev.exponent << " E_" << afftl::word_to_json(ev.element.word).dump() << '\n';
    emit_diagram(ev.element.diagram, o.format);
    return 0;
  }
  Json out = {{"exponent", ev.exponent},
              {"word", afftl::word_to_json(ev.element.word)},
              {"diagram", afftl::diagram_to_json(ev.element.diagram)}};
  std::cout << out.dump() << '\n';
  return 0;
}

int run_mul(const Options& o) {
  require_json(o.format);
  afftl::AlgebraElement a = afftl::element_from_json(read_json(o.a_path));
  afftl::AlgebraElement b = afftl::element_from_json(read_json(o.b_path));
  std::cout << afftl::element_to_json(afftl::mul(a, b)).dump() << '\n';
  return 0;
}

int run_straighten(const Options& o) {
  require_json(o.format);
  afftl::AffineDiagram d = afftl::diagram_from_json(read_json(o.input));
  std::cout << afftl::straighten_to_json(afftl::straighten(d)).dump() << '\n';
  return 0;
}

int run_diagram(const Options& o) {
  afftl::GroupConfig cfg(o.n);
  afftl::ProductResult r = afftl::stack(cfg, parse_word(o.word));
  emit_diagram(r.diagram, o.format);
  return 0;
}

int run_afn(const Options& o) {
  afftl::GroupConfig cfg(o.n);
  std::cout << afftl::a_value(cfg, parse_word(o.word)) << '\n';
  return 0;
}

int run_label(const Options& o) {
  require_json(o.format);
  afftl::GroupConfig cfg(o.n);
  std::cout << afftl::labels_to_json(afftl::labels(cfg, parse_word(o.word))).dump() << '\n';
  return 0;
}

int run_census(const Options& o) {
  afftl::GroupConfig cfg(o.n);
  auto rows = afftl::census(cfg, o.max_len, o.workers);
  if (o.format == "md") {
    std::cout << render_census_md(rows);
    return 0;
  }
  require_json(o.format);
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(afftl::census_row_to_json(r));
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_involution(const Options& o) {
  require_json(o.format);
  afftl::GroupConfig cfg(o.n);
  std::cout << afftl::involution_to_json(afftl::involution_decompose(cfg, parse_word(o.word))).dump()
            << '\n';
  return 0;
}

int run_enumerate(const Options& o) {
  require_json(o.format);
  afftl::GroupConfig cfg(o.n);
  afftl::EnumerationOptions opts;
  opts.workers = o.workers;
  opts.with_labels = o.with_labels;
  afftl::enumerate(cfg, o.max_len, opts, [](const afftl::EnumerationRecord& r) {
    std::cout << afftl::record_to_json(r).dump() << '\n';
  });
  return 0;
}

int run_verify(const Options& o) {
  afftl::GroupConfig cfg(o.n);
  bool ok = true;
  Json report = Json::array();
  for (const auto& r : afftl::run_checks(cfg, o.max_len, o.seed)) {
    ok = ok && r.passed;
    if (o.format == "json") {
      report.push_back({{"check", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"failures", r.failures}});
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
      for (const auto& f : r.failures) std::cout << "  " << f << '\n';
    }
  }
  if (o.format == "json") std::cout << report.dump(2) << '\n';
  if (!ok) print_error("verification_failed", "one or more property checks failed");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the affine Temperley-Lieb algebra"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"json", "ascii", "svg", "md"};

  auto add_n = [&](CLI::App* c) { c->add_option("--n", o.n, "number of generators (n >= 3)")->required(); };
  auto add_word = [&](CLI::App* c) { c->add_option("--word", o.word, "letters, e.g. \"1 3 2 4\"")->required(); };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json|ascii|svg|md")->check(CLI::IsMember(formats));
  };
  auto add_max_len = [&](CLI::App* c) {
    c->add_option("--max-len", o.max_len, "length horizon")->required()->check(CLI::NonNegativeNumber);
  };

  auto* eval = app.add_subcommand("eval", "evaluate a word: exponent, canonical word, diagram");
  add_n(eval), add_word(eval), add_format(eval);
  auto* mul = app.add_subcommand("mul", "multiply two element JSON files");
  mul->add_option("a", o.a_path, "left factor (- for stdin)")->required();
  mul->add_option("b", o.b_path, "right factor")->required();
  add_format(mul);
  auto* str = app.add_subcommand("straighten", "canonical word of a diagram JSON file");
  str->add_option("input", o.input, "diagram JSON (- for stdin)")->required();
  add_format(str);
  auto* dia = app.add_subcommand("diagram", "stack a word and render the diagram");
  add_n(dia), add_word(dia), add_format(dia);
  auto* afn = app.add_subcommand("afn", "a-function of a reduced FC word");
  add_n(afn), add_word(afn);
  auto* cells = app.add_subcommand("cells", "cell labels and census");
  cells->require_subcommand(1);
  auto* label = cells->add_subcommand("label", "cell labels of a word");
  add_n(label), add_word(label), add_format(label);
  auto* cen = cells->add_subcommand("census", "left/right cell counts per two-sided label");
  add_n(cen), add_max_len(cen), add_format(cen);
  cen->add_option("--workers", o.workers, "enumeration threads")->check(CLI::PositiveNumber);
  auto* inv = app.add_subcommand("involution", "canonical decomposition x iota(T) x^-1");
  add_n(inv), add_word(inv), add_format(inv);
  auto* en = app.add_subcommand("enumerate", "stream W_c up to a length as JSON lines");
  add_n(en), add_max_len(en), add_format(en);
  en->add_option("--workers", o.workers, "enumeration threads")->check(CLI::PositiveNumber);
  en->add_flag("--labels", o.with_labels, "include cell labels");
  auto* ver = app.add_subcommand("verify", "run the property suites");
  add_n(ver), add_max_len(ver), add_format(ver);
  ver->add_option("--seed", o.seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (ver->parsed() && !ver->count("--format")) o.format = "text";

  try {
    if (eval->parsed()) return run_eval(o);
    if (mul->parsed()) return run_mul(o);
    if (str->parsed()) return run_straighten(o);
    if (dia->parsed()) return run_diagram(o);
    if (afn->parsed()) return run_afn(o);
    if (label->parsed()) return run_label(o);
    if (cen->parsed()) return run_census(o);
    if (inv->parsed()) return run_involution(o);
    if (en->parsed()) return run_enumerate(o);
    if (ver->parsed()) return run_verify(o);
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const afftl::Error& e) {
    print_error(afftl::to_string(e.kind()), e.what());
    return 1;
  } catch (const nlohmann::json::exception& e) {
    print_error("parse", e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return 1;
  }
  return 2;
}
