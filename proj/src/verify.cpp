#include "fatgraph/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "fatgraph/canonical.hpp"
#include "fatgraph/cocycle.hpp"
#include "fatgraph/examples.hpp"
#include "fatgraph/io.hpp"
#include "fatgraph/spin.hpp"
#include "fatgraph/xi.hpp"

namespace fg {

const char* to_string(Suite s) {
  switch (s) {
    case Suite::Types: return "types";
    case Suite::Marking: return "marking";
    case Suite::NonTrivial: return "nontrivial";
    case Suite::Relations: return "relations";
    case Suite::DeltaXi: return "delta-xi";
    case Suite::Gluing: return "gluing";
    case Suite::TailSlide: return "tailslide";
    case Suite::Spin: return "spin";
    case Suite::Balanced: return "balanced";
    case Suite::Primitivity: return "primitivity";
  }
  return "?";
}

std::vector<Suite> all_suites() {
  return {Suite::Types,   Suite::Marking,   Suite::NonTrivial, Suite::Relations, Suite::DeltaXi,
          Suite::Gluing,  Suite::TailSlide, Suite::Spin,       Suite::Balanced,  Suite::Primitivity};
}

std::optional<Suite> parse_suite(const std::string& name) {
  for (Suite s : all_suites())
    if (name == to_string(s)) return s;
  return std::nullopt;
}

std::uint64_t kernel_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

bool first_preferred_then_reversed(const Fatgraph& g) {
  const int k = 4 * g.genus();
  for (int i = 0; i < k - 1; ++i)
    if (!g.preferred(g.at(i))) return false;
  return !g.preferred(g.at(k - 1));
}

int extra_tree_edge(const Fatgraph& g) {
  std::set<int> first;
  for (int i = 0; i < 4 * g.genus() - 2; ++i) first.insert(edge_of(g.at(i)));
  for (int e : greedy_tree(g))
    if (!first.count(e)) return e;
  return -1;
}

namespace {

class Recorder {
 public:
  Recorder(const Fatgraph& g, std::uint64_t seed) : g_(g), seed_(seed) {}

  void expect(bool ok, const char* check, const std::string& detail = {}) {
    ++out_.checks;
    if (ok) return;
    ++out_.failures;
    if (!out_.first_failure) out_.first_failure = CheckFailure{check, detail, serialize(g_), seed_, 0};
  }
  void count(const std::string& key, std::int64_t by = 1) { out_.counters[key] += by; }
  GraphOutcome take() { return std::move(out_); }

 private:
  const Fatgraph& g_;
  std::uint64_t seed_;
  GraphOutcome out_;
};

void types_kernel(const Fatgraph& g, Recorder& r) {
  const auto c = count_types(g);
  r.count("type1", c.type1);
  r.count("type2", c.type2);
  r.expect(c.type1 == 2 * g.genus() - 1 && c.type2 == 2 * g.genus(), "type-counts",
           std::to_string(c.type1) + "," + std::to_string(c.type2));
}

void marking_kernel(const Fatgraph& g, Recorder& r) {
  const Marking m = initial_marking(g);
  const auto c = check_marking(g, m);
  r.expect(c.antisymmetric, "mu-antisymmetric");
  r.expect(c.vertex_sums_zero, "mu-vertex-sums");
  r.expect(c.generates, "mu-generates");
  r.expect(c.gram_skew, "gram-skew");
  r.expect(c.unimodular, "gram-unimodular");
  bool pairs_ok = true;
  for (Dart x = 0; x < g.num_darts(); ++x)
    for (Dart y = 0; y < g.num_darts(); ++y)
      if (edge_of(x) != edge_of(y) && pair(m, m(x), m(y)) != intersection_sign(g, x, y)) pairs_ok = false;
  r.expect(pairs_ok, "pairing-matches-chords");
}

void nontrivial_kernel(const Fatgraph& g, Recorder& r) {
  const Marking m = initial_marking(g);
  const auto x = xi(g, m);
  const bool zero2 = std::all_of(x.xi_mod2.begin(), x.xi_mod2.end(), [](auto b) { return b == 0; });
  r.expect(!zero2, "xi-mod2-nonzero", x.xi.str());
  r.expect(xi_mod2_direct(g, m) == x.xi_mod2, "xi-mod2-direct");
  const auto cyc = find_odd_edge_cycle(g);
  r.expect(!cyc.empty() && cyc.size() % 2 == 1 && is_closed_walk(g, cyc), "odd-cycle");
  if (!cyc.empty()) r.expect((pair_with_cycle(g, m, x.xi, cyc) & 1) == 1, "odd-cycle-pairing");
}

void relations_kernel(const Fatgraph& g, std::uint64_t seed, const SuiteConfig& cfg, Recorder& r) {
  const auto rep = verify_relations(g, cfg.pentagon_budget, seed);
  r.count("involutions", static_cast<std::int64_t>(rep.involutions));
  r.count("commutations", static_cast<std::int64_t>(rep.commutations));
  r.count("pentagons", static_cast<std::int64_t>(rep.pentagons));
  const std::size_t total = rep.involutions + rep.commutations + rep.pentagons;
  for (std::size_t i = 0; i < total; ++i) {
    if (i < rep.violations.size()) {
      const auto& v = rep.violations[i];
      std::string edges;
      for (int e : v.edges) edges += (edges.empty() ? "" : ",") + std::to_string(e);
      r.expect(false, v.relation == "pentagon" ? "pentagon" : v.relation == "involution" ? "involution" : "commutation",
               "edges " + edges + ": " + v.detail);
    } else {
      r.expect(true, "relation");
    }
  }
}

void delta_kernel(const Fatgraph& g, Recorder& r) {
  const Marking m = initial_marking(g);
  for (int e : flippable_edges(g)) {
    const auto d = check_delta(flip(g, e), m);
    r.expect(d.ok, "delta-xi", "edge " + std::to_string(e) + ": " + d.lhs.str() + " vs " + d.rhs.str());
  }
  r.count("flips", static_cast<std::int64_t>(flippable_edges(g).size()));
}

void gluing_kernel(const Fatgraph& g, Recorder& r) {
  static const Fatgraph guest = block_spine(1).graph;
  for (Dart d = 0; d < g.num_darts(); ++d) {
    const auto c = check_gluing(g, d, guest);
    r.expect(c.ok, "gluing", "dart " + std::to_string(d));
    r.count("gluings");
  }
}

void tailslide_kernel(const Fatgraph& g, Recorder& r) {
  const auto c = check_tail_slide(g);
  r.expect(c.ok, "tail-slide", c.delta.str() + " vs " + c.mu_c.str());
}

void spin_kernel(const Fatgraph& g, std::uint64_t seed, Recorder& r) {
  const Marking m = initial_marking(g);
  const auto x = xi(g, m);
  const EdgeForm qg = q_G(g), qb = q_bar(g);
  EdgeForm qw;
  bool lambda_odd = true;
  for (int l : winding_lambda(g))
    if ((l & 1) == 0) lambda_odd = false;
  r.expect(lambda_odd, "lambda-odd");
  if (!lambda_odd) return;
  qw = q_wind(g);
  const EdgeForm* forms[] = {&qg, &qb, &qw};
  bool members = true;
  for (auto* f : forms) members = members && q_membership(g, *f);
  r.expect(members, "q-membership");
  if (!members) return;
  r.expect(form_difference(g, m, qg, qb) == x.xi_mod2, "difference-is-xi2");
  const QuadForm a = extend_form(g, m, qg), b = extend_form(g, m, qb), c = extend_form(g, m, qw);
  r.expect(!(a == b) && !(a == c) && !(b == c), "forms-distinct");
  r.expect(admissible_count(g) == (std::uint64_t{1} << (2 * g.genus())), "admissible-count");

  // Quadratic relation on basis pairs and random pairs.
  std::mt19937_64 rng(seed);
  const int rank = m.rank;
  auto pair2 = [&](const Mod2Class& u, const Mod2Class& v) {
    int s = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) s ^= u[i] & v[j] & static_cast<int>(m.gram[i][j] & 1);
    return s;
  };
  auto check_pair = [&](const Mod2Class& u, const Mod2Class& v) {
    Mod2Class w(rank);
    for (int i = 0; i < rank; ++i) w[i] = u[i] ^ v[i];
    for (const QuadForm* q : {&a, &b, &c})
      if ((q->evaluate(w) ^ q->evaluate(u) ^ q->evaluate(v)) != pair2(u, v)) return false;
    return true;
  };
  bool quad = true;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Mod2Class u(rank, 0), v(rank, 0);
      u[i] = 1;
      v[j] = 1;
      quad = quad && check_pair(u, v);
    }
  for (int t = 0; t < 100; ++t) {
    Mod2Class u(rank), v(rank);
    for (int i = 0; i < rank; ++i) {
      u[i] = rng() & 1;
      v[i] = rng() & 1;
    }
    quad = quad && check_pair(u, v);
  }
  r.expect(quad, "quadratic-relation");

  // Vertex chains vanish, and the extension agrees with its chain formula.
  bool chains = true;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.valence(v) != 3) continue;
    Mod2Vector ch(g.num_edges(), 0);
    for (Dart d : g.vertex(v)) ch[edge_of(d)] ^= 1;
    for (auto* f : forms) chains = chains && evaluate_chain(m, *f, ch) == 0;
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    Mod2Vector ch(g.num_edges(), 0);
    ch[e] = 1;
    chains = chains && a.evaluate(mod2(m(2 * e))) == qg.values[e];
  }
  r.expect(chains, "chain-formula");

  for (int e : flippable_edges(g)) {
    const auto mv = flip(g, e);
    const Marking m2 = transport_marking(m, mv);
    for (auto* f : forms) {
      bool ok = false;
      try {
        const EdgeForm t = transport_form(mv, *f);
        ok = q_membership(mv.result, t) && extend_form(mv.result, m2, t) == extend_form(g, m, *f);
      } catch (const Error&) {
        ok = false;
      }
      r.expect(ok, "form-transport", "edge " + std::to_string(e) + " " + to_string(f->tag));
    }
  }
}

void balanced_kernel(const Fatgraph& g, Recorder& r) {
  const auto c = check_balanced_criterion(g);
  r.expect(c.independent, "punctured-independence");
  r.expect(c.balanced == c.xi_even, "balanced-criterion",
           std::string("balanced=") + (c.balanced ? "1" : "0") + " xi_even=" + (c.xi_even ? "1" : "0"));
  r.count(c.balanced ? "balanced" : "unbalanced");
}

void primitivity_kernel(const Fatgraph& g, Recorder& r) {
  const int genus = g.genus();
  const Marking m = initial_marking(g);
  const auto x = xi(g, m).xi;
  if (genus <= 2) r.expect(is_primitive(x), "xi-primitive", x.str());
  else if (!is_primitive(x)) r.count("non_primitive");

  auto primitive_or_report = [&](const HomologyClass& y, const char* check) {
    if (genus <= 2) r.expect(is_primitive(y), check, y.str());
    else if (!is_primitive(y)) r.count("non_primitive");
  };

  if (is_chord_diagram(g)) {
    r.count("chord_diagrams");
    const Dart f0 = g.at(4 * genus - 1);
    r.expect(pair(m, x, m(f0)) == -1, "xi-dot-f0", std::to_string(pair(m, x, m(f0))));
    bool delta = true;
    for (int k : m.basis_edges) {
      if (k == edge_of(f0)) continue;
      const auto gk = cycle_class(g, m, greedy_cycle(g, k));
      for (int k2 : m.basis_edges)
        if (pair(m, gk, m(g.preferred_dart(k2))) != (k == k2 ? -1 : 0)) delta = false;
    }
    r.expect(delta, "gamma-dot-f");
    for (int e : flippable_edges(g)) {
      const auto mv = flip(g, e);
      const Marking m2 = transport_marking(m, mv);
      primitive_or_report(xi(mv.result, m2).xi, "neighbour-primitive");
      r.count("chord_neighbours");
    }
  }
  if (first_preferred_then_reversed(g)) {
    r.count("near_chord_diagrams");
    const int h = extra_tree_edge(g);
    r.expect(h >= 0 && flippable(g, h) && is_chord_diagram(flip(g, h).result), "flip-h-gives-chord-diagram");
  }
}

}  // namespace

GraphOutcome run_kernel(Suite s, const Fatgraph& g, std::uint64_t seed, const SuiteConfig& cfg) {
  Recorder r(g, seed);
  try {
    switch (s) {
      case Suite::Types: types_kernel(g, r); break;
      case Suite::Marking: marking_kernel(g, r); break;
      case Suite::NonTrivial: nontrivial_kernel(g, r); break;
      case Suite::Relations: relations_kernel(g, seed, cfg, r); break;
      case Suite::DeltaXi: delta_kernel(g, r); break;
      case Suite::Gluing: gluing_kernel(g, r); break;
      case Suite::TailSlide: tailslide_kernel(g, r); break;
      case Suite::Spin: spin_kernel(g, seed, r); break;
      case Suite::Balanced: balanced_kernel(g, r); break;
      case Suite::Primitivity: primitivity_kernel(g, r); break;
    }
  } catch (const std::exception& e) {
    r.expect(false, "exception", e.what());
  }
  return r.take();
}

std::vector<Fatgraph> suite_inputs(Suite s, const SuiteConfig& cfg) {
  const Kind kind = s == Suite::Balanced ? Kind::Punctured : Kind::Bordered;
  if (cfg.exhaustive) return enumerate({cfg.genus, kind, std::nullopt});
  auto states = walk_states({cfg.seed, cfg.steps, block_spine(cfg.genus).graph});
  if (kind == Kind::Punctured)
    for (auto& g : states) g = remove_tail(g);
  return states;
}

SuiteReport run_suite_on(Suite s, const std::vector<Fatgraph>& inputs, const SuiteConfig& cfg, Exec exec) {
  std::vector<GraphOutcome> outs(inputs.size());
  const long n = static_cast<long>(inputs.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) outs[i] = run_kernel(s, inputs[i], kernel_seed(cfg.seed, i), cfg);
  } else {
    for (long i = 0; i < n; ++i) outs[i] = run_kernel(s, inputs[i], kernel_seed(cfg.seed, i), cfg);
  }
  SuiteReport rep;
  rep.suite = to_string(s);
  rep.genus = cfg.genus;
  rep.exhaustive = cfg.exhaustive;
  rep.seed = cfg.seed;
  rep.graphs = inputs.size();
  for (std::size_t i = 0; i < outs.size(); ++i) {
    auto& o = outs[i];
    rep.checks += o.checks;
    rep.failures += o.failures;
    for (const auto& [k, v] : o.counters) rep.counters[k] += v;
    if (o.first_failure && !rep.first_failure) {
      rep.first_failure = std::move(o.first_failure);
      rep.first_failure->index = i;
    }
  }
  return rep;
}

SuiteReport run_suite(Suite s, const SuiteConfig& cfg, Exec exec) {
  return run_suite_on(s, suite_inputs(s, cfg), cfg, exec);
}

}  // namespace fg
