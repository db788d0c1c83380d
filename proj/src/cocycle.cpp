#include "fatgraph/cocycle.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "fatgraph/canonical.hpp"

namespace fg {

void Trivector::add(const std::array<int, 3>& ijk, std::int64_t v) {
  if (v == 0) return;
  auto it = t_.find(ijk);
  if (it == t_.end()) {
    t_.emplace(ijk, v);
    return;
  }
  it->second = checked_add(it->second, v);
  if (it->second == 0) t_.erase(it);
}

Trivector& Trivector::operator+=(const Trivector& o) {
  if (o.rank_ != rank_) throw Error(ErrorKind::DimensionMismatch, "trivector ranks differ");
  for (const auto& [k, v] : o.t_) add(k, v);
  return *this;
}

Trivector& Trivector::operator-=(const Trivector& o) {
  if (o.rank_ != rank_) throw Error(ErrorKind::DimensionMismatch, "trivector ranks differ");
  for (const auto& [k, v] : o.t_) add(k, checked_sub(0, v));
  return *this;
}

std::string Trivector::str() const {
  std::ostringstream o;
  o << '{';
  bool first = true;
  for (const auto& [k, v] : t_) {
    o << (first ? "" : ", ") << v << "*b" << k[0] << "^b" << k[1] << "^b" << k[2];
    first = false;
  }
  o << '}';
  return o.str();
}

Trivector wedge3(const HomologyClass& x, const HomologyClass& y, const HomologyClass& z) {
  const int r = x.rank();
  if (y.rank() != r || z.rank() != r) throw Error(ErrorKind::DimensionMismatch, "wedge ranks differ");
  Trivector t(r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int k = j + 1; k < r; ++k)
        t.add({i, j, k}, determinant({{x[i], x[j], x[k]}, {y[i], y[j], y[k]}, {z[i], z[j], z[k]}}));
  return t;
}

HomologyClass contraction(const Marking& m, const Trivector& t) {
  if (t.rank() != m.rank) throw Error(ErrorKind::DimensionMismatch, "contraction ranks differ");
  HomologyClass out(m.rank);
  for (const auto& [ijk, v] : t.terms()) {
    const auto [i, j, k] = ijk;
    out[k] = checked_add(out[k], checked_mul(v, m.gram[i][j]));
    out[i] = checked_add(out[i], checked_mul(v, m.gram[j][k]));
    out[j] = checked_add(out[j], checked_mul(v, m.gram[k][i]));
  }
  return out;
}

CocycleValues cocycle_values(const Marking& mk, const FlipMove& move) {
  const auto& f = move.frame;
  const HomologyClass &a = mk(f.a), &b = mk(f.b), &c = mk(f.c);
  CocycleValues v;
  v.j = wedge3(a, b, c);
  v.j_prime = pair(mk, a, b) * c + pair(mk, b, c) * a + pair(mk, c, a) * b;
  v.m = a + c;
  if (!(contraction(mk, v.j) == v.j_prime))
    throw Error(ErrorKind::InvalidInputs, "j' differs from the contraction of j");
  return v;
}

void CocycleSums::accumulate(const CocycleValues& v) {
  if (j.rank() == 0 && j.is_zero()) {
    j = Trivector(v.m.rank());
    j_prime = HomologyClass(v.m.rank());
    m = HomologyClass(v.m.rank());
  }
  j += v.j;
  j_prime += v.j_prime;
  m += v.m;
}

SequenceResult evaluate_sequence(const Fatgraph& g, const Marking& m, const std::vector<int>& edges) {
  SequenceResult r;
  r.sums.j = Trivector(m.rank);
  r.sums.j_prime = HomologyClass(m.rank);
  r.sums.m = HomologyClass(m.rank);
  r.final_graph = g;
  r.final_marking = m;
  for (std::size_t s = 0; s < edges.size(); ++s) {
    FlipMove mv;
    try {
      mv = flip(r.final_graph, edges[s]);
    } catch (const Error& e) {
      throw Error(ErrorKind::FlipFailed, "step " + std::to_string(s) + ": " + e.what());
    }
    r.sums.accumulate(cocycle_values(r.final_marking, mv));
    r.final_marking = transport_marking(r.final_marking, mv);
    r.final_graph = std::move(mv.result);
  }
  return r;
}

namespace {

std::vector<int> endpoints(const Fatgraph& g, int e) { return {g.head(2 * e), g.head(2 * e + 1)}; }

int shared_vertices(const Fatgraph& g, int e, int f) {
  auto a = endpoints(g, e), b = endpoints(g, f);
  int n = 0;
  for (int u : a)
    for (int v : b)
      if (u == v) ++n;
  return n;
}

// Transported marking on `end` must match the one on `start` through the
// isomorphism.
bool marking_returns(const Fatgraph& start, const Marking& m0, const Fatgraph& end, const Marking& m1,
                     std::string& why) {
  auto iso = isomorphism(start, end);
  if (!iso) {
    why = "loop does not return to the start graph";
    return false;
  }
  for (Dart d = 0; d < start.num_darts(); ++d)
    if (!(m1((*iso)[d]) == m0(d))) {
      why = "transported marking differs on dart " + std::to_string(d);
      return false;
    }
  return true;
}

void check_loop(const Fatgraph& g, const Marking& m, const std::string& name, const std::vector<int>& edges,
                RelationReport& rep) {
  try {
    auto r = evaluate_sequence(g, m, edges);
    std::string why;
    if (!marking_returns(g, m, r.final_graph, r.final_marking, why))
      rep.violations.push_back({name, edges, why});
    else if (!r.sums.is_zero())
      rep.violations.push_back({name, edges,
                                "nonzero sums j=" + r.sums.j.str() + " j'=" + r.sums.j_prime.str() +
                                    " m=" + r.sums.m.str()});
  } catch (const Error& e) {
    rep.violations.push_back({name, edges, e.what()});
  }
}

}  // namespace

std::vector<std::array<int, 2>> pentagon_pairs(const Fatgraph& g) {
  std::vector<std::array<int, 2>> out;
  auto fl = flippable_edges(g);
  for (int e : fl)
    for (int f : fl)
      if (e != f && shared_vertices(g, e, f) == 1) out.push_back({e, f});
  return out;
}

std::vector<std::array<int, 2>> commuting_pairs(const Fatgraph& g) {
  std::vector<std::array<int, 2>> out;
  auto fl = flippable_edges(g);
  for (std::size_t i = 0; i < fl.size(); ++i)
    for (std::size_t k = i + 1; k < fl.size(); ++k)
      if (shared_vertices(g, fl[i], fl[k]) == 0) out.push_back({fl[i], fl[k]});
  return out;
}

RelationReport verify_relations(const Fatgraph& g, std::size_t budget, std::uint64_t seed) {
  RelationReport rep;
  const Marking m = initial_marking(g);
  for (int e : flippable_edges(g)) {
    check_loop(g, m, "involution", {e, e}, rep);
    ++rep.involutions;
  }
  for (auto [e, f] : commuting_pairs(g)) {
    check_loop(g, m, "commutation", {e, f, e, f}, rep);
    auto one = evaluate_sequence(g, m, {e, f});
    auto two = evaluate_sequence(g, m, {f, e});
    if (!(one.final_graph == two.final_graph)) rep.violations.push_back({"commutation", {e, f}, "orders disagree"});
    ++rep.commutations;
  }
  auto pents = pentagon_pairs(g);
  if (budget && pents.size() > budget) {
    std::mt19937_64 rng(seed);
    std::shuffle(pents.begin(), pents.end(), rng);
    pents.resize(budget);
  }
  for (auto [e, f] : pents) {
    check_loop(g, m, "pentagon", {e, f, e, f, e}, rep);
    ++rep.pentagons;
  }
  return rep;
}

}  // namespace fg
