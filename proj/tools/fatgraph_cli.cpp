#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fatgraph/canonical.hpp"
#include "fatgraph/cocycle.hpp"
#include "fatgraph/enumerate.hpp"
#include "fatgraph/examples.hpp"
#include "fatgraph/io.hpp"
#include "fatgraph/spin.hpp"
#include "fatgraph/structure.hpp"
#include "fatgraph/verify.hpp"
#include "fatgraph/xi.hpp"

using json = nlohmann::json;
using namespace fg;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string file;
  std::string guest;
  std::string out;
  std::string kind = "bordered";
  std::string suite;
  int genus = 2;
  int edge = -1;
  int dart = -1;
  std::uint64_t seed = kDefaultSeed;
  std::size_t steps = 200;
  bool json = false;
  bool exhaustive = false;
  bool mod2 = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Kind parse_kind(const std::string& s) {
  if (s == "bordered") return Kind::Bordered;
  if (s == "punctured") return Kind::Punctured;
  throw UsageError("unknown kind: " + s);
}

// Graph from --file, or the standard block spine of --genus.
Fatgraph input_graph(const Options& o) {
  if (!o.file.empty()) return read_fatgraph(o.file);
  Fatgraph g = block_spine(o.genus).graph;
  return parse_kind(o.kind) == Kind::Punctured ? remove_tail(g) : g;
}

json coords(const HomologyClass& x) { return x.coords(); }

json bits(const Mod2Vector& v) {
  json a = json::array();
  for (auto b : v) a.push_back(static_cast<int>(b));
  return a;
}

std::string bits_str(const Mod2Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(static_cast<int>(v[i]));
  return s + "]";
}

void emit(const Options& o, const json& j, const std::string& human) {
  if (o.json) std::cout << j.dump(2) << "\n";
  else std::cout << human;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

// Serialized graph to --out, or stdout when no output path is given.
void emit_graph(const Options& o, const Fatgraph& g, json& j, std::ostringstream& human) {
  j["graph"] = serialize(g);
  if (!o.out.empty()) {
    write_fatgraph(o.out, g);
    j["written"] = o.out;
    human << "wrote " << o.out << "\n";
  } else {
    human << serialize(g);
  }
}

int cmd_validate(const Options& o) {
  if (o.file.empty()) throw UsageError("validate requires --file");
  json j;
  std::ostringstream h;
  ValidationReport rep;
  try {
    rep = validate(read_rotation(o.file));
  } catch (const Error& e) {
    rep.ok = false;
    rep.error = e.kind();
    rep.message = e.what();
  }
  j["ok"] = rep.ok;
  if (rep.ok) {
    j["genus"] = rep.genus;
    h << "ok: genus " << rep.genus << "\n";
  } else {
    j["error"] = to_string(*rep.error);
    j["message"] = rep.message;
    h << "invalid: " << to_string(*rep.error) << ": " << rep.message << "\n";
  }
  emit(o, j, h.str());
  return rep.ok ? 0 : kExitFail;
}

int cmd_info(const Options& o) {
  const Fatgraph g = input_graph(o);
  json j;
  std::ostringstream h;
  j["kind"] = to_string(g.kind());
  j["genus"] = g.genus();
  j["darts"] = g.num_darts();
  j["edges"] = g.num_edges();
  j["vertices"] = g.num_vertices();
  j["boundary"] = g.order().walk;
  j["canonical_hash"] = short_hash(canonical_form(g));
  h << "kind " << to_string(g.kind()) << ", genus " << g.genus() << ", " << g.num_vertices() << " vertices, "
    << g.num_edges() << " edges\nboundary:";
  for (Dart d : g.order().walk) h << " " << d;
  h << "\nhash " << j["canonical_hash"].get<std::string>() << "\n";
  if (g.bordered()) {
    const auto c = count_types(g);
    j["type1"] = c.type1;
    j["type2"] = c.type2;
    j["chord_diagram"] = is_chord_diagram(g);
    h << "types: " << c.type1 << " Type1, " << c.type2 << " Type2\nchord diagram: "
      << (is_chord_diagram(g) ? "yes" : "no") << "\n";
  } else {
    j["balanced"] = is_balanced(g);
    h << "balanced: " << (is_balanced(g) ? "yes" : "no") << "\n";
  }
  emit(o, j, h.str());
  return 0;
}

int cmd_xi(const Options& o) {
  Fatgraph g = input_graph(o);
  json j;
  std::ostringstream h;
  HomologyClass x;
  Mod2Class x2;
  if (g.bordered()) {
    const Marking m = initial_marking(g);
    const auto r = xi(g, m);
    x = r.xi;
    x2 = r.xi_mod2;
    json contrib = json::array();
    for (const auto& c : r.contributions)
      contrib.push_back({{"vertex", c.vertex},
                         {"type", c.type == VertexType::Type1 ? 1 : 2},
                         {"plus", c.plus},
                         {"minus", c.minus},
                         {"value", coords(c.value)}});
    j["contributions"] = contrib;
  } else {
    Dart at = o.dart;
    if (at < 0) {
      g = canonical_graph(g);
      at = 0;
    }
    const auto p = xi_punctured(g, at);
    x = p.xi;
    x2 = mod2(p.xi);
    j["dart"] = at;
    j["pairing"] = p.pairing;
  }
  j["xi"] = coords(x);
  j["xi_mod2"] = bits(x2);
  j["primitive"] = is_primitive(x);
  h << "xi=" << x.str() << "\n";
  if (o.mod2) h << "xi2=" << bits_str(x2) << "\n";
  emit(o, j, h.str());
  return 0;
}

int require_edge(const Options& o) {
  if (o.edge < 0) throw UsageError("--edge is required");
  return o.edge;
}

int cmd_cocycle(const Options& o) {
  const Fatgraph g = input_graph(o);
  const Marking m = initial_marking(g);
  const auto mv = flip(g, require_edge(o));
  const auto v = cocycle_values(m, mv);
  json j{{"edge", o.edge}, {"j", v.j.str()}, {"j_prime", coords(v.j_prime)}, {"m", coords(v.m)}};
  std::ostringstream h;
  h << "j=" << v.j.str() << "\nj'=" << v.j_prime.str() << "\nm=" << v.m.str() << "\n";
  emit(o, j, h.str());
  return 0;
}

int cmd_flip(const Options& o) {
  const Fatgraph g = input_graph(o);
  const auto mv = flip(g, require_edge(o));
  json j{{"edge", o.edge}, {"frame", {mv.frame.x, mv.frame.a, mv.frame.b, mv.frame.c, mv.frame.d}}};
  std::ostringstream h;
  emit_graph(o, mv.result, j, h);
  emit(o, j, h.str());
  return 0;
}

int cmd_walk(const Options& o) {
  const Fatgraph g = input_graph(o);
  json steps = json::array();
  std::ostringstream h;
  Fatgraph last = g;
  std::size_t i = 0;
  random_walk({o.seed, o.steps, g}, [&](const FlipMove& mv) {
    const std::string hash = short_hash(canonical_form(mv.result));
    steps.push_back({{"edge", mv.edge}, {"class", hash}});
    h << ++i << " flip " << mv.edge << " -> " << hash << "\n";
    last = mv.result;
  });
  json j{{"seed", o.seed}, {"steps", steps}};
  if (!o.out.empty()) {
    write_fatgraph(o.out, last);
    j["written"] = o.out;
  }
  emit(o, j, h.str());
  return 0;
}

int cmd_enumerate(const Options& o) {
  const auto classes = enumerate({o.genus, parse_kind(o.kind), std::nullopt});
  json hashes = json::array();
  for (const auto& g : classes) {
    const std::string c = canonical_form(g);
    hashes.push_back(short_hash(c));
    if (!o.out.empty()) {
      std::filesystem::create_directories(o.out);
      write_text((std::filesystem::path(o.out) / (short_hash(c) + ".fg")).string(), c);
    }
  }
  json j{{"genus", o.genus}, {"kind", o.kind}, {"classes", classes.size()}, {"hashes", hashes}};
  std::ostringstream h;
  h << classes.size() << " classes (genus " << o.genus << ", " << o.kind << ")\n";
  emit(o, j, h.str());
  return 0;
}

int cmd_spin(const Options& o) {
  const Fatgraph g = input_graph(o);
  if (!g.bordered()) throw UsageError("spin requires a bordered graph");
  const Marking m = initial_marking(g);
  const auto x2 = xi(g, m).xi_mod2;
  const EdgeForm forms[] = {q_G(g), q_bar(g), q_wind(g)};
  json j;
  std::ostringstream h;
  std::vector<QuadForm> ext;
  bool ok = true;
  for (const auto& f : forms) {
    const bool member = q_membership(g, f);
    ok = ok && member;
    ext.push_back(extend_form(g, m, f));
    j[to_string(f.tag)] = {{"edge_values", bits(f.values)}, {"basis_values", bits(ext.back().basis_values)},
                           {"member", member}};
    h << to_string(f.tag) << ": basis " << bits_str(ext.back().basis_values) << (member ? "" : " NOT IN Q") << "\n";
  }
  const bool diff = form_difference(g, m, forms[0], forms[1]) == x2;
  const bool distinct = !(ext[0] == ext[1]) && !(ext[0] == ext[2]) && !(ext[1] == ext[2]);
  ok = ok && diff && distinct;
  j["difference_is_xi2"] = diff;
  j["distinct"] = distinct;
  j["admissible"] = admissible_count(g);
  h << "difference = xi2: " << (diff ? "yes" : "no") << "\ndistinct: " << (distinct ? "yes" : "no") << "\n";
  emit(o, j, h.str());
  return ok ? 0 : kExitFail;
}

json report_json(const SuiteReport& r) {
  json j{{"suite", r.suite},   {"genus", r.genus},       {"exhaustive", r.exhaustive}, {"seed", r.seed},
         {"graphs", r.graphs}, {"checks", r.checks},     {"failures", r.failures},     {"counters", r.counters}};
  if (r.first_failure) {
    const auto& f = *r.first_failure;
    j["first_failure"] = {{"check", f.check}, {"detail", f.detail}, {"graph", f.graph}, {"seed", f.seed},
                          {"index", f.index}};
  } else {
    j["first_failure"] = nullptr;
  }
  return j;
}

// Writes the first counterexample and prints how to replay it.
void dump_counterexample(const Options& o, const SuiteReport& r) {
  if (!r.first_failure) return;
  const auto dir = std::filesystem::path(o.out.empty() ? "." : o.out);
  std::filesystem::create_directories(dir);
  const auto path = (dir / "counterexample.fg").string();
  write_text(path, r.first_failure->graph);
  std::cerr << "counterexample: " << path << " (" << r.first_failure->check << ": " << r.first_failure->detail
            << ")\nreplay: fatgraph verify " << r.suite << " --file " << path << " --seed " << r.first_failure->seed
            << "\n";
}

int cmd_verify(const Options& o) {
  std::vector<Suite> suites;
  if (o.suite == "all") {
    suites = all_suites();
  } else if (auto s = parse_suite(o.suite)) {
    suites = {*s};
  } else {
    throw UsageError("unknown suite: " + o.suite);
  }
  SuiteConfig cfg;
  cfg.genus = o.genus;
  cfg.exhaustive = o.exhaustive;
  cfg.seed = o.seed;
  cfg.steps = o.steps;

  std::vector<SuiteReport> reports;
  if (!o.file.empty()) {
    // Replay mode: the seed is the kernel seed printed with a counterexample.
    const Fatgraph g = read_fatgraph(o.file);
    cfg.genus = g.genus();
    for (Suite s : suites) {
      const GraphOutcome out = run_kernel(s, g, o.seed, cfg);
      SuiteReport r;
      r.suite = to_string(s);
      r.genus = cfg.genus;
      r.seed = o.seed;
      r.graphs = 1;
      r.checks = out.checks;
      r.failures = out.failures;
      r.counters = out.counters;
      r.first_failure = out.first_failure;
      reports.push_back(std::move(r));
    }
  } else {
    std::optional<std::vector<Fatgraph>> bordered, punctured;
    for (Suite s : suites) {
      auto& cache = s == Suite::Balanced ? punctured : bordered;
      if (!cache) cache = suite_inputs(s, cfg);
      reports.push_back(run_suite_on(s, *cache, cfg, Exec::Parallel));
    }
  }

  std::size_t failures = 0, classes = 0;
  json arr = json::array();
  std::ostringstream h;
  for (const auto& r : reports) {
    failures += r.failures;
    if (r.suite != to_string(Suite::Balanced)) classes = std::max(classes, r.graphs);
    arr.push_back(report_json(r));
    h << r.suite << ": " << r.graphs << " graphs, " << r.checks << " checks, " << r.failures << " failures\n";
  }
  if (classes == 0 && !reports.empty()) classes = reports.front().graphs;
  const char* unit = o.exhaustive ? " classes, " : " graphs, ";
  h << classes << unit << failures << " failures\n";
  json j{{"genus", cfg.genus},       {"exhaustive", cfg.exhaustive}, {"seed", cfg.seed},
         {"suites", arr},            {"graphs", classes},            {"failures", failures}};
  emit(o, j, h.str());
  for (const auto& r : reports)
    if (!r.ok()) {
      dump_counterexample(o, r);
      break;
    }
  return failures == 0 ? 0 : kExitFail;
}

int cmd_glue(const Options& o) {
  const Fatgraph host = input_graph(o);
  const Fatgraph guest = o.guest.empty() ? block_spine(1).graph : read_fatgraph(o.guest);
  if (o.dart < 0) throw UsageError("--dart is required");
  const auto c = check_gluing(host, o.dart, guest);
  const auto r = glue(host, o.dart, guest);
  json j{{"dart", o.dart}, {"identity_holds", c.ok}, {"cycles_checked", c.cycles}};
  std::ostringstream h;
  h << "gluing identity: " << (c.ok ? "holds" : "FAILS") << " on " << c.cycles << " cycles\n";
  emit_graph(o, r.graph, j, h);
  emit(o, j, h.str());
  return c.ok ? 0 : kExitFail;
}

int cmd_tailslide(const Options& o) {
  const Fatgraph g = input_graph(o);
  const auto c = check_tail_slide(g);
  const auto s = tail_slide(g);
  json j{{"identity_holds", c.ok}, {"delta", coords(c.delta)}, {"mu_c", coords(c.mu_c)}};
  std::ostringstream h;
  h << "xi' - xi = " << c.delta.str() << ", mu(c) = " << c.mu_c.str() << (c.ok ? "" : " MISMATCH") << "\n";
  emit_graph(o, s.move.result, j, h);
  emit(o, j, h.str());
  return c.ok ? 0 : kExitFail;
}

void apply_thread_cap() {
  if (const char* t = std::getenv("FATGRAPH_THREADS")) {
    const int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();
  CLI::App app{"Trivalent fatgraph spines: flips, cocycles and the xi invariant"};
  app.require_subcommand(1);
  Options o;

  auto graph_opts = [&](CLI::App* c) {
    c->add_option("--file", o.file, "fatgraph v1 input file");
    c->add_option("--genus", o.genus, "genus of the default graph")->check(CLI::Range(1, 12));
    c->add_option("--kind", o.kind, "bordered or punctured")->check(CLI::IsMember({"bordered", "punctured"}));
    c->add_flag("--json", o.json, "machine-readable report");
  };
  std::map<std::string, std::function<int(const Options&)>> handlers;
  auto add = [&](const char* name, const char* help, auto fn) {
    auto* c = app.add_subcommand(name, help);
    handlers[name] = fn;
    return c;
  };

  auto* validate_c = add("validate", "check a rotation system file", cmd_validate);
  validate_c->add_option("--file", o.file, "fatgraph v1 input file")->required();
  validate_c->add_flag("--json", o.json, "machine-readable report");

  graph_opts(add("info", "summary of a spine", cmd_info));

  auto* xi_c = add("xi", "the xi invariant", cmd_xi);
  graph_opts(xi_c);
  xi_c->add_flag("--mod2", o.mod2, "also print the mod-2 reduction");
  xi_c->add_option("--dart", o.dart, "tail position for a punctured graph");

  auto* coc = add("cocycle", "cocycle values of one flip", cmd_cocycle);
  graph_opts(coc);
  coc->add_option("--edge", o.edge, "edge to flip")->required();

  auto* flip_c = add("flip", "flip one edge", cmd_flip);
  graph_opts(flip_c);
  flip_c->add_option("--edge", o.edge, "edge to flip")->required();
  flip_c->add_option("--out", o.out, "output file");

  auto* walk_c = add("walk", "seeded random flip walk", cmd_walk);
  graph_opts(walk_c);
  walk_c->add_option("--seed", o.seed, "walk seed");
  walk_c->add_option("--steps", o.steps, "number of flips");
  walk_c->add_option("--out", o.out, "file for the final graph");

  auto* enum_c = add("enumerate", "isomorphism classes of spines", cmd_enumerate);
  enum_c->add_option("--genus", o.genus, "genus")->check(CLI::Range(1, 3));
  enum_c->add_option("--kind", o.kind, "bordered or punctured")->check(CLI::IsMember({"bordered", "punctured"}));
  enum_c->add_option("--out", o.out, "directory for one file per class");
  enum_c->add_flag("--json", o.json, "machine-readable report");

  graph_opts(add("spin", "the three quadratic forms", cmd_spin));

  auto* ver = add("verify", "batch identity checks", cmd_verify);
  ver->add_option("suite", o.suite, "suite name or all")->required();
  ver->add_option("--file", o.file, "replay a single graph");
  ver->add_option("--genus", o.genus, "genus")->check(CLI::Range(1, 12));
  ver->add_option("--seed", o.seed, "walk seed, or kernel seed with --file");
  ver->add_option("--steps", o.steps, "walk length when not exhaustive");
  ver->add_flag("--exhaustive", o.exhaustive, "run over every class (genus <= 3)");
  ver->add_option("--out", o.out, "directory for counterexamples");
  ver->add_flag("--json", o.json, "machine-readable report");

  auto* glue_c = add("glue", "glue a guest spine onto a dart", cmd_glue);
  graph_opts(glue_c);
  glue_c->add_option("--guest", o.guest, "guest spine file (default genus 1)");
  glue_c->add_option("--dart", o.dart, "host dart")->required();
  glue_c->add_option("--out", o.out, "output file");

  auto* ts = add("tailslide", "slide the tail one step", cmd_tailslide);
  graph_opts(ts);
  ts->add_option("--out", o.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    for (auto* c : app.get_subcommands()) return handlers.at(c->get_name())(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
