#include "fatgraph/spin.hpp"

#include "fatgraph/structure.hpp"

namespace fg {

const char* to_string(FormTag t) {
  switch (t) {
    case FormTag::QG: return "q_G";
    case FormTag::QBar: return "q_bar";
    case FormTag::Wind: return "q_wind";
    case FormTag::Custom: return "custom";
  }
  return "custom";
}

std::uint8_t QuadForm::evaluate(const Mod2Class& x) const {
  std::uint8_t s = 0;
  const int r = static_cast<int>(basis_values.size());
  for (int i = 0; i < r; ++i) {
    if (!x[i]) continue;
    s ^= basis_values[i];
    for (int j = i + 1; j < r; ++j) s ^= x[j] & gram[i][j];
  }
  return s;
}

namespace {

std::uint8_t vertex_sum(const Fatgraph& g, const Mod2Vector& values, int v) {
  std::uint8_t s = 0;
  for (Dart d : g.vertex(v)) s ^= values[edge_of(d)];
  return s;
}

std::uint8_t pair2(const Marking& m, int e, int f) {
  return static_cast<std::uint8_t>(pair(m, m.mu[2 * e], m.mu[2 * f]) & 1);
}

}  // namespace

bool q_membership(const Fatgraph& g, const EdgeForm& form) {
  if (static_cast<int>(form.values.size()) != g.num_edges()) return false;
  for (const auto& f : classify_vertices(g)) {
    const std::uint8_t want = f.type == VertexType::Type2 ? 1 : 0;
    if (vertex_sum(g, form.values, f.vertex) != want) return false;
  }
  return true;
}

std::uint8_t evaluate_chain(const Marking& m, const EdgeForm& form, const Mod2Vector& chain) {
  std::uint8_t s = 0;
  const int ne = static_cast<int>(chain.size());
  for (int e = 0; e < ne; ++e) {
    if (!chain[e]) continue;
    s ^= form.values[e];
    for (int f = e + 1; f < ne; ++f)
      if (chain[f]) s ^= pair2(m, e, f);
  }
  return s;
}

Mod2Vector chain_for(const Marking& m, const Mod2Class& x) {
  const int ne = static_cast<int>(m.mu.size()) / 2;
  Mod2Matrix a(m.rank, Mod2Vector(ne, 0));
  for (int e = 0; e < ne; ++e) {
    auto v = mod2(m.mu[2 * e]);
    for (int i = 0; i < m.rank; ++i) a[i][e] = v[i];
  }
  auto c = solve_mod2(a, x);
  if (!c) throw Error(ErrorKind::SingularGram, "mod-2 marking does not span");
  return *c;
}

QuadForm extend_form(const Fatgraph& g, const Marking& m, const EdgeForm& form) {
  if (!q_membership(g, form)) throw Error(ErrorKind::NotInQ, "edge form violates a vertex condition");
  QuadForm q;
  q.basis_values.assign(m.rank, 0);
  q.gram.assign(m.rank, Mod2Vector(m.rank, 0));
  for (int i = 0; i < m.rank; ++i) {
    Mod2Class b(m.rank, 0);
    b[i] = 1;
    q.basis_values[i] = evaluate_chain(m, form, chain_for(m, b));
    for (int j = 0; j < m.rank; ++j) q.gram[i][j] = static_cast<std::uint8_t>(m.gram[i][j] & 1);
  }
  return q;
}

EdgeForm q_G(const Fatgraph& g) {
  EdgeForm f{Mod2Vector(g.num_edges(), 0), FormTag::QG};
  for (int e = 0; e < g.num_edges(); ++e) {
    const Dart d = g.preferred_dart(e);
    int count = 0;
    for (int p = g.position(d) + 1; p < g.position(reverse(d)); ++p)
      if (g.preferred(g.at(p))) ++count;
    f.values[e] = count & 1;
  }
  return f;
}

EdgeForm q_bar(const Fatgraph& g) {
  EdgeForm f{Mod2Vector(g.num_edges(), 0), FormTag::QBar};
  for (int e = 0; e < g.num_edges(); ++e) {
    const Dart d = g.preferred_dart(e);
    int count = 0;
    for (int p = g.position(d) + 1; p < g.position(reverse(d)); ++p)
      if (!g.preferred(g.at(p))) ++count;
    f.values[e] = count & 1;
  }
  return f;
}

std::vector<int> winding_lambda(const Fatgraph& g) {
  std::vector<int> lambda(g.num_edges(), 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    const Dart d = g.preferred_dart(e);
    for (int i = g.position(d); i + 1 <= g.position(reverse(d)); ++i)
      if (g.preferred(g.at(i)) != g.preferred(g.at(i + 1))) ++lambda[e];
  }
  return lambda;
}

EdgeForm q_wind(const Fatgraph& g) {
  EdgeForm f{Mod2Vector(g.num_edges(), 0), FormTag::Wind};
  const auto lambda = winding_lambda(g);
  for (int e = 0; e < g.num_edges(); ++e) {
    if ((lambda[e] & 1) == 0) throw Error(ErrorKind::OddCornerCount, "lambda is even on edge " + std::to_string(e));
    f.values[e] = static_cast<std::uint8_t>(((1 + lambda[e]) / 2) & 1);
  }
  return f;
}

FlipCase flip_case(const FlipMove& move) {
  const auto& r = move.result;
  FlipCase c;
  c.bc_end_type2 = frame_of(r, r.head(move.frame.x)).type == VertexType::Type2;
  c.ad_end_type2 = frame_of(r, r.head(reverse(move.frame.x))).type == VertexType::Type2;
  return c;
}

int FlipCase::table_row() const {
  if (!bc_end_type2 && !ad_end_type2) return 1;
  if (!bc_end_type2 && ad_end_type2) return 2;
  if (bc_end_type2 && !ad_end_type2) return 3;
  return 6;
}

EdgeForm transport_form(const FlipMove& move, const EdgeForm& form) {
  if (!q_membership(move.source, form)) throw Error(ErrorKind::NotInQ, "form is not admissible on the source");
  const auto& f = move.frame;
  const auto c = flip_case(move);
  EdgeForm out = form;
  const auto& q = form.values;
  const std::uint8_t via_bc = q[edge_of(f.b)] ^ q[edge_of(f.c)] ^ (c.bc_end_type2 ? 1 : 0);
  const std::uint8_t via_ad = q[edge_of(f.a)] ^ q[edge_of(f.d)] ^ (c.ad_end_type2 ? 1 : 0);
  if (via_bc != via_ad) throw Error(ErrorKind::NotInQ, "the two endpoint conditions disagree");
  out.values[move.edge] = via_bc;
  return out;
}

Mod2Class form_difference(const Fatgraph& g, const Marking& m, const EdgeForm& f1, const EdgeForm& f2) {
  const QuadForm q1 = extend_form(g, m, f1), q2 = extend_form(g, m, f2);
  Mod2Vector r(m.rank);
  for (int i = 0; i < m.rank; ++i) r[i] = q1.basis_values[i] ^ q2.basis_values[i];
  // (d . b_j) = sum_i d_i J_ij; J is skew so its transpose agrees mod 2.
  Mod2Matrix jt(m.rank, Mod2Vector(m.rank));
  for (int i = 0; i < m.rank; ++i)
    for (int j = 0; j < m.rank; ++j) jt[j][i] = static_cast<std::uint8_t>(m.gram[i][j] & 1);
  if (rank_mod2(jt) != m.rank) throw Error(ErrorKind::SingularGram, "mod-2 gram is singular");
  return *solve_mod2(jt, r);
}

std::uint64_t admissible_count(const Fatgraph& g) {
  Mod2Matrix rows;
  Mod2Vector rhs;
  for (const auto& f : classify_vertices(g)) {
    Mod2Vector row(g.num_edges(), 0);
    for (Dart d : g.vertex(f.vertex)) row[edge_of(d)] ^= 1;
    rows.push_back(row);
    rhs.push_back(f.type == VertexType::Type2 ? 1 : 0);
  }
  if (!solve_mod2(rows, rhs)) return 0;
  return std::uint64_t{1} << (g.num_edges() - rank_mod2(rows));
}

}  // namespace fg
