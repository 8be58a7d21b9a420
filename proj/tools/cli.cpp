#include "cli.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "pog/canonical.hpp"
#include "pog/classes.hpp"
#include "pog/colorings.hpp"
#include "pog/decompose.hpp"
#include "pog/generators.hpp"
#include "pog/io.hpp"
#include "pog/oracles.hpp"
#include "pog/render.hpp"

namespace pog::cli {

namespace {

using nlohmann::json;

// Reported with exit code 2.
struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reported with exit code 3.
struct Diagnostic : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in_path, out_path;
  std::uint64_t seed = 1;
  long long budget_nodes = 500'000'000;
  double budget_seconds = 600.0;
  bool trace = false;
  bool no_verify = false;
  std::string format = "svg";

  std::string family = "pn";
  int n = -1;
  double density = 0.5;
  std::string cycle;
  std::string mode = "linear-forest";
  std::string allowed;
  std::string op = "chromatic-index";
  std::string kind = "matching";
  int k = 3;
  std::string check = "all";
  int threads = 0;
};

class Io {
 public:
  Io(const Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

  std::string read() {
    std::stringstream ss;
    if (o_.in_path.empty() || o_.in_path == "-") {
      ss << in_.rdbuf();
    } else {
      std::ifstream f(o_.in_path);
      if (!f) throw InvalidInput("cannot open " + o_.in_path);
      ss << f.rdbuf();
    }
    return ss.str();
  }

  void write(const std::string& text) {
    if (o_.out_path.empty() || o_.out_path == "-") {
      out_ << text;
      if (!text.empty() && text.back() != '\n') out_ << '\n';
      return;
    }
    std::ofstream f(o_.out_path);
    if (!f) throw InvalidInput("cannot write " + o_.out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
  }

 private:
  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
};

Diagram need_diagram(const GraphDocument& doc) {
  if (doc.diagram) {
    Report r = validate(*doc.diagram);
    if (!r.valid) throw InvalidInput("invalid diagram: " + r.violations.front());
    return *doc.diagram;
  }
  auto d = recognize(doc.graph);
  if (!d) throw NotPseudoOuterplanar();
  return *d;
}

std::vector<Vertex> parse_list(const std::string& s) {
  std::vector<Vertex> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw InvalidInput("bad vertex " + tok);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad vertex list " + s);
    }
  }
  return out;
}

json with_added(const Diagram& d, const std::vector<Edge>& added) {
  json j = json::parse(to_json(d));
  json a = json::array();
  for (const Edge& e : added) a.push_back({e.u, e.v});
  j["added"] = a;
  return j;
}

SearchBudget budget(const Options& o) {
  SearchBudget b;
  b.max_nodes = o.budget_nodes;
  b.time_limit_seconds = o.budget_seconds;
  b.max_vertices = 64;
  b.max_edges = 256;
  return b;
}

int verb_generate(const Options& o, Io& io, std::ostream& err) {
  auto f = family_from_string(o.family);
  if (!f) throw InvalidInput("unknown family " + o.family);
  FamilySpec s{*f, o.n, o.seed, o.density};
  if (o.n < 0) {
    switch (*f) {
      case Family::Pn: s.n = 1; break;
      case Family::Qn: s.n = 3; break;
      case Family::Gn: s.n = 6; break;
      case Family::Mat12: s.n = 12; break;
      case Family::Fig1: s.n = 8; break;
      case Family::RandomPO: s.n = 10; break;
    }
  }
  Diagram d = generate(s);
  err << to_string(*f) << ": " << d.graph.order() << " vertices, " << d.graph.size() << " edges\n";
  io.write(to_json(d));
  return kOk;
}

int verb_validate(Io& io, std::ostream& err) {
  Diagram d = parse_diagram(io.read());
  Report r = validate(d);
  json j = {{"valid", r.valid}, {"violations", r.violations}};
  if (r.valid) {
    json cs = json::array();
    for (const auto& c : crossing_pairs(d)) cs.push_back({{c.first.u, c.first.v}, {c.second.u, c.second.v}});
    j["crossings"] = cs;
  }
  io.write(j.dump());
  err << (r.valid ? "valid diagram\n" : "invalid diagram: " + r.violations.front() + "\n");
  return r.valid ? kOk : kInfeasible;
}

int verb_recognize(Io& io, std::ostream& err) {
  Graph g = parse_graph(io.read());
  auto d = recognize(g);
  if (!d) throw NotPseudoOuterplanar();
  err << "pseudo-outerplanar, " << crossing_pairs(*d).size() << " crossings\n";
  io.write(to_json(*d));
  return kOk;
}

int verb_hamiltonize(const Options& o, Io& io, std::ostream& err) {
  Diagram d = need_diagram(parse_graph_document(io.read()));
  if (!o.cycle.empty()) {
    auto cycle = parse_list(o.cycle);
    Diagram h = to_hamiltonian_diagram(d, cycle);
    err << "redrawn with the given cycle as boundary\n";
    io.write(to_json(h));
    return kOk;
  }
  Augmented a = quasi_hamiltonize(d);
  err << a.added.size() << " edges added\n";
  io.write(with_added(a.diagram, a.added).dump());
  return kOk;
}

int verb_maximalize(Io& io, std::ostream& err) {
  Diagram d = need_diagram(parse_graph_document(io.read()));
  Completion c = maximal_completion(d);
  err << c.added.size() << " edges added" << (c.graph_level_checked ? "" : " (fixed-order pass only)") << "\n";
  json j = with_added(c.diagram, c.added);
  j["graph_level_checked"] = c.graph_level_checked;
  io.write(j.dump());
  return kOk;
}

int verb_decompose(const Options& o, Io& io, std::ostream& err) {
  Diagram d = need_diagram(parse_graph_document(io.read()));
  Decomposition dec;
  if (o.mode == "linear-forest")
    dec = cover_outerplanar_plus(d, PartKind::LinearForest);
  else if (o.mode == "star-forest")
    dec = cover_outerplanar_plus(d, PartKind::StarForest);
  else if (o.mode == "two-forests-matching")
    dec = two_forests_plus_matching(d);
  else
    throw InvalidInput("unknown mode " + o.mode);
  if (!o.no_verify) {
    Report r = verify_decomposition(d.graph, dec);
    if (!r.valid) throw Diagnostic("decomposition failed verification: " + r.violations.front());
  }
  err << dec.parts.size() << " parts" << (o.no_verify ? "\n" : ", verified\n");
  io.write(to_json(dec));
  return kOk;
}

json coloring_json(const ColoringResult& r, bool trace) {
  json j = json::parse(to_json(r.coloring));
  if (trace) j["trace"] = json::parse(to_json(r.trace));
  return j;
}

int verb_color_edges(const Options& o, Io& io, std::ostream& err) {
  GraphDocument doc = parse_graph_document(io.read());
  Diagram d = need_diagram(doc);
  if (d.graph.max_degree() >= 4) {
    ColoringResult r = po_edge_color(d);
    io.write(coloring_json(r, o.trace).dump());
    err << "chromatic index " << r.coloring.k << "\n";
    if (r.exact_fallback) {
      err << "diagnostic: no reduction applied, exact fallback used\n";
      return kDiagnostic;
    }
    return kOk;
  }
  ChromaticIndexResult c = chromatic_index(d.graph);
  ColoringResult r;
  r.coloring = c.coloring;
  if (!o.no_verify && !verify_edge_coloring(d.graph, r.coloring).valid) throw Diagnostic("coloring failed verification");
  io.write(coloring_json(r, o.trace).dump());
  err << "chromatic index " << c.value << "\n";
  return kOk;
}

int verb_linear_arboricity(const Options& o, Io& io, std::ostream& err) {
  Diagram d = need_diagram(parse_graph_document(io.read()));
  ColoringResult r = po_linear_arboricity(d);
  io.write(coloring_json(r, o.trace).dump());
  err << "linear arboricity " << r.coloring.k << "\n";
  if (r.exact_fallback) {
    err << "diagnostic: constructive branch fell back to exact search\n";
    return kDiagnostic;
  }
  return kOk;
}

int verb_find_config(const Options& o, Io& io, std::ostream& err) {
  Diagram d = need_diagram(parse_graph_document(io.read()));
  std::vector<ConfigId> allowed;
  if (o.allowed.empty() || o.allowed == "coloring") {
    allowed = coloring_patterns();
  } else if (o.allowed == "all") {
    for (const auto& p : catalog()) allowed.push_back(p.id);
  } else {
    std::stringstream ss(o.allowed);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto id = config_id_from_string(tok);
      if (!id) throw InvalidInput("unknown configuration " + tok);
      allowed.push_back(*id);
    }
  }
  auto m = find_configuration(d, allowed);
  if (!m) throw Infeasible("no configuration found");
  err << to_string(m->id) << " found\n";
  io.write(to_json(*m));
  return kOk;
}

int verb_oracle(const Options& o, Io& io, std::ostream& err) {
  Graph g = parse_graph(io.read());
  SearchBudget b = budget(o);
  json j = {{"op", o.op}};
  Outcome outcome = Outcome::OverBudget;
  if (o.op == "chromatic-index" || o.op == "linear-arboricity") {
    ValueResult r = o.op == "chromatic-index" ? brute_chromatic_index(g, b) : brute_linear_arboricity(g, b);
    outcome = r.outcome;
    if (r.outcome == Outcome::Found) j["value"] = r.value;
  } else if (o.op == "removal") {
    auto kind = removal_kind_from_string(o.kind);
    if (!kind) throw InvalidInput("unknown kind " + o.kind);
    j["kind"] = o.kind;
    EdgeSetResult r = exists_removal_decomposition(g, *kind, b);
    outcome = r.outcome;
    if (r.outcome == Outcome::Found) {
      json es = json::array();
      for (const Edge& e : r.edges) es.push_back({e.u, e.v});
      j["edges"] = es;
    }
  } else if (o.op == "forest-partition") {
    j["k"] = o.k;
    PartitionResult r = exists_k_forest_partition(g, o.k, b);
    outcome = r.outcome;
    if (r.outcome == Outcome::Found) j["decomposition"] = json::parse(to_json(r.decomposition));
  } else {
    throw InvalidInput("unknown oracle op " + o.op);
  }
  j["outcome"] = to_string(outcome);
  io.write(j.dump());
  err << o.op << ": " << to_string(outcome) << "\n";
  if (outcome == Outcome::None) return kInfeasible;
  if (outcome == Outcome::OverBudget) return kInputError;
  return kOk;
}

// Acceptance-style properties of one corpus graph.
json corpus_checks(const EnumeratedGraph& eg, const std::set<std::string>& want, bool& ok) {
  const Graph& g = eg.graph;
  const Diagram& d = eg.diagram;
  json c = json::object();
  auto on = [&](const char* name) { return want.count("all") || want.count(name); };
  auto record = [&](const char* name, bool pass) {
    c[name] = pass;
    ok = ok && pass;
  };
  const int delta = g.max_degree();
  SearchBudget b;
  b.max_vertices = 64;
  b.max_edges = 256;

  if (on("structure")) {
    record("min-degree-at-most-3", g.min_degree() <= 3);
    bool k4 = true;
    if (g.order() >= 4 && vertex_connectivity(g) >= 3) k4 = isomorphic(g, complete_graph(4));
    record("3-connected-is-k4", k4);
  }
  if (on("coloring") && delta >= 4) {
    ColoringResult r = po_edge_color(d);
    bool pass = verify_edge_coloring(g, r.coloring).valid && r.coloring.k == delta && !r.exact_fallback &&
                replay(r.trace) == r.coloring.colors;
    ValueResult br = brute_chromatic_index(g, b);
    record("edge-coloring", pass && br.outcome == Outcome::Found && br.value == delta);
  }
  if (on("linear-arboricity") && delta == 3) {
    ColoringResult r = po_linear_arboricity(d);
    record("linear-arboricity", r.coloring.k == 2 && verify_edge_coloring(g, r.coloring).valid);
  }
  if (on("covers") && g.size() > 0) {
    bool pass = true;
    for (PartKind k : {PartKind::LinearForest, PartKind::StarForest})
      pass = pass && verify_decomposition(g, cover_outerplanar_plus(d, k)).valid;
    record("outerplanar-covers", pass);
  }
  if (on("forests") && g.size() > 0) {
    record("two-forests-matching", verify_decomposition(g, two_forests_plus_matching(d)).valid);
    record("three-forests", exists_k_forest_partition(g, 3, b).outcome == Outcome::Found);
  }
  if (on("configurations") && g.size() > 0) {
    // The eight patterns only cover critical graphs with max degree four or more.
    bool dense = delta >= 4 && g.min_degree() >= 2;
    for (const Edge& e : g.edges()) dense = dense && g.degree(e.u) + g.degree(e.v) >= delta + 2;
    if (dense) record("configuration-found", find_configuration(d, coloring_patterns()).has_value());
  }
  if (on("classes")) {
    ClassFlags f = class_membership(g);
    bool pass = !(f.quasi_hamiltonian_po && f.k4_minor_free) || f.outerplanar;
    pass = pass && (!f.k23_minor_free || f.quasi_hamiltonian_po);
    if (is_biconnected(g) && f.k23_minor_free) pass = pass && (f.outerplanar || isomorphic(g, complete_graph(4)));
    record("class-relations", pass);
  }
  return c;
}

int verb_corpus(const Options& o, Io& io, std::ostream& err) {
  if (o.n < 1 || o.n > 7) throw InvalidInput("corpus needs 1 <= n <= 7");
  std::set<std::string> want;
  {
    std::stringstream ss(o.check);
    std::string tok;
    const std::set<std::string> known = {"all",    "structure",      "coloring", "linear-arboricity",
                                         "covers", "forests", "configurations", "classes"};
    while (std::getline(ss, tok, ',')) {
      if (!known.count(tok)) throw InvalidInput("unknown check " + tok);
      want.insert(tok);
    }
  }
  auto corpus = po_corpus(o.n);
  std::vector<json> rows(corpus.size());
  std::vector<char> oks(corpus.size(), 1);
  unsigned workers = o.threads > 0 ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < corpus.size(); i += workers) {
        bool ok = true;
        json checks = corpus_checks(corpus[i], want, ok);
        rows[i] = {{"graph", json::parse(to_json(corpus[i].graph))}, {"checks", checks}, {"ok", ok}};
        oks[i] = ok;
      }
    }));
  for (auto& j : jobs) j.get();
  std::string text;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    text += rows[i].dump() + "\n";
    failed += !oks[i];
  }
  io.write(text);
  err << corpus.size() << " graphs, " << failed << " failing\n";
  return failed ? kDiagnostic : kOk;
}

int verb_render(const Options& o, Io& io, std::ostream&) {
  auto f = render_format_from_string(o.format);
  if (!f) throw InvalidInput("unknown format " + o.format);
  Diagram d = need_diagram(parse_graph_document(io.read()));
  io.write(render(d, *f));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Pseudo-outerplanar graph toolkit", "pog"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--in", o.in_path, "Input file (default stdin)");
  app.add_option("--out", o.out_path, "Output file (default stdout)");
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--budget-nodes", o.budget_nodes, "Oracle node budget")->check(CLI::PositiveNumber);
  app.add_option("--budget-seconds", o.budget_seconds, "Oracle time budget")->check(CLI::PositiveNumber);
  app.add_flag("--trace", o.trace, "Include the reduction trace");
  app.add_flag("--no-verify", o.no_verify, "Skip re-verification (benchmarking only)");
  app.add_option("--format", o.format, "Render format: svg or dot");

  auto* gen = app.add_subcommand("generate", "Build a graph family");
  gen->add_option("--family", o.family, "pn, qn, gn, mat12, fig1 or random")->required();
  gen->add_option("--n", o.n, "Family parameter");
  gen->add_option("--density", o.density, "Chord density for random diagrams");
  app.add_subcommand("validate", "Check a diagram");
  app.add_subcommand("recognize", "Find a pseudo-outerplanar drawing");
  auto* ham = app.add_subcommand("hamiltonize", "Close every block, or redraw along --cycle");
  ham->add_option("--cycle", o.cycle, "Comma-separated hamiltonian cycle of a block");
  app.add_subcommand("maximalize", "Add edges until no more fit");
  auto* dec = app.add_subcommand("decompose", "Edge decompositions");
  dec->add_option("--mode", o.mode, "linear-forest, star-forest or two-forests-matching");
  app.add_subcommand("color-edges", "Optimal proper edge coloring");
  app.add_subcommand("linear-arboricity", "Optimal linear forest partition");
  auto* fc = app.add_subcommand("find-config", "Find an unavoidable configuration");
  fc->add_option("--allowed", o.allowed, "coloring (default), all, or a comma list of ids");
  auto* orc = app.add_subcommand("oracle", "Brute-force ground truth");
  orc->add_option("--op", o.op, "chromatic-index, linear-arboricity, removal or forest-partition");
  orc->add_option("--kind", o.kind, "Removal kind: matching, linear-forest or star-forest");
  orc->add_option("--k", o.k, "Number of forests");
  auto* cor = app.add_subcommand("corpus", "Check properties on all small graphs");
  cor->add_option("--n", o.n, "Largest order")->required();
  cor->add_option("--check", o.check, "all or a comma list of checks");
  cor->add_option("--threads", o.threads, "Worker threads (default: hardware)");
  app.add_subcommand("render", "Draw a diagram as SVG or DOT");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  Io io(o, in, out);
  try {
    if (verb == "generate") return verb_generate(o, io, err);
    if (verb == "validate") return verb_validate(io, err);
    if (verb == "recognize") return verb_recognize(io, err);
    if (verb == "hamiltonize") return verb_hamiltonize(o, io, err);
    if (verb == "maximalize") return verb_maximalize(io, err);
    if (verb == "decompose") return verb_decompose(o, io, err);
    if (verb == "color-edges") return verb_color_edges(o, io, err);
    if (verb == "linear-arboricity") return verb_linear_arboricity(o, io, err);
    if (verb == "find-config") return verb_find_config(o, io, err);
    if (verb == "oracle") return verb_oracle(o, io, err);
    if (verb == "corpus") return verb_corpus(o, io, err);
    if (verb == "render") return verb_render(o, io, err);
  } catch (const NotPseudoOuterplanar& e) {
    err << e.what() << "\n";
    return kInfeasible;
  } catch (const Infeasible& e) {
    err << e.what() << "\n";
    return kInfeasible;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "diagnostic: " << e.what() << "\n";
    return kDiagnostic;
  }
  return kInputError;
}

}  // namespace pog::cli
