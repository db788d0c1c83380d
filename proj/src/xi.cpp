#include "fatgraph/xi.hpp"

namespace fg {

XiResult xi(const Fatgraph& g, const Marking& m) {
  XiResult r;
  r.xi = HomologyClass(m.rank);
  for (const auto& f : classify_vertices(g)) {
    VertexContribution c;
    c.vertex = f.vertex;
    c.type = f.type;
    c.plus = f.type == VertexType::Type1 ? f.e2 : f.e1;
    c.minus = f.e3;
    c.value = m(c.plus) - m(c.minus);
    r.xi += c.value;
    r.contributions.push_back(std::move(c));
  }
  r.xi_mod2 = mod2(r.xi);
  return r;
}

Mod2Class xi_mod2_direct(const Fatgraph& g, const Marking& m) {
  Mod2Class s(m.rank, 0);
  for (const auto& v : mod2_marking(m))
    for (int i = 0; i < m.rank; ++i) s[i] ^= v[i];
  (void)g;
  return s;
}

DeltaCheck check_delta(const FlipMove& move, const Marking& m) {
  DeltaCheck c;
  const Marking m2 = transport_marking(m, move);
  c.lhs = xi(move.result, m2).xi - xi(move.source, m).xi;
  const auto v = cocycle_values(m, move);
  c.rhs = 2 * v.j_prime - v.m;
  c.ok = c.lhs == c.rhs;
  return c;
}

GluingCheck check_gluing(const Fatgraph& host, Dart at, const Fatgraph& guest) {
  GluingCheck c;
  auto glued = glue(host, at, guest);
  const Marking mh = initial_marking(host), mg = initial_marking(guest), m = initial_marking(glued.graph);
  const auto x = xi(glued.graph, m).xi;
  const auto xh = xi(host, mh).xi + mh(at);
  const auto xg = xi(guest, mg).xi;
  c.ok = true;
  for (const auto& cyc : fundamental_cycles(host)) {
    ++c.cycles;
    if (pair_with_cycle(glued.graph, m, x, glued.map_host_walk(cyc)) != pair_with_cycle(host, mh, xh, cyc))
      c.ok = false;
  }
  for (const auto& cyc : fundamental_cycles(guest)) {
    ++c.cycles;
    if (pair_with_cycle(glued.graph, m, x, glued.map_guest_walk(cyc)) != pair_with_cycle(guest, mg, xg, cyc))
      c.ok = false;
  }
  return c;
}

PuncturedXi xi_punctured(const Fatgraph& g, Dart at) {
  PuncturedXi p;
  p.at = at;
  p.lift = attach_tail(g, at);
  p.marking = initial_marking(p.lift.graph);
  p.xi = xi(p.lift.graph, p.marking).xi - p.marking(at);
  for (const auto& cyc : fundamental_cycles(g))
    p.pairing.push_back(pair_with_cycle(p.lift.graph, p.marking, p.xi, p.lift.map_walk(cyc)));
  return p;
}

TailSlideCheck check_tail_slide(const Fatgraph& g) {
  TailSlideCheck c;
  const Marking m = initial_marking(g);
  const auto s = tail_slide(g);
  const Marking m2 = transport_marking(m, s.move);
  c.delta = xi(s.move.result, m2).xi - xi(g, m).xi;
  c.mu_c = m(s.c);
  c.ok = c.delta == c.mu_c;
  return c;
}

BalancedCheck check_balanced_criterion(const Fatgraph& g) {
  BalancedCheck c;
  c.balanced = is_balanced(g);
  std::vector<std::int64_t> ref;
  c.independent = true;
  for (Dart d = 0; d < g.num_darts(); ++d) {
    auto p = xi_punctured(g, d);
    if (d == 0) {
      ref = p.pairing;
      bool even = true;
      for (auto v : p.xi.coords())
        if (v & 1) even = false;
      c.xi_even = even;
    } else if (p.pairing != ref) {
      c.independent = false;
    }
  }
  c.ok = c.independent && c.balanced == c.xi_even;
  return c;
}

}  // namespace fg
