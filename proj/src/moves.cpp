#include "fatgraph/moves.hpp"

#include <algorithm>
#include <numeric>

namespace fg {

namespace {

void replace_in(std::vector<Dart>& cyc, Dart from, Dart to) {
  auto it = std::find(cyc.begin(), cyc.end(), from);
  *it = to;
}

std::vector<Dart> split_walk(const std::vector<Dart>& walk, Dart split, Dart second, int offset = 0) {
  std::vector<Dart> out;
  for (Dart d : walk) {
    if (d == split) {
      out.push_back(split);
      out.push_back(second);
    } else if (d == reverse(split)) {
      out.push_back(reverse(second));
      out.push_back(reverse(split));
    } else {
      out.push_back(d + offset);
    }
  }
  return out;
}

}  // namespace

bool flippable(const Fatgraph& g, int edge) {
  if (edge < 0 || edge >= g.num_edges()) return false;
  return !g.is_tail_edge(edge) && !g.is_loop(edge);
}

std::vector<int> flippable_edges(const Fatgraph& g) {
  std::vector<int> out;
  for (int e = 0; e < g.num_edges(); ++e)
    if (flippable(g, e)) out.push_back(e);
  return out;
}

FlipMove flip(const Fatgraph& g, int edge) {
  if (edge < 0 || edge >= g.num_edges()) throw Error(ErrorKind::NoSuchEdge, "edge " + std::to_string(edge));
  if (g.is_tail_edge(edge)) throw Error(ErrorKind::TailEdge, "edge " + std::to_string(edge) + " is the tail");
  if (g.is_loop(edge)) throw Error(ErrorKind::LoopEdge, "edge " + std::to_string(edge) + " is a loop");
  FlipFrame f;
  f.x = 2 * edge;
  f.a = g.next_at_vertex(f.x);
  f.b = g.next_at_vertex(f.a);
  f.c = g.next_at_vertex(reverse(f.x));
  f.d = g.next_at_vertex(f.c);
  RotationSystem rs = g.rotation();
  rs.vertices[g.head(f.x)] = {f.x, f.b, f.c};
  rs.vertices[g.head(reverse(f.x))] = {reverse(f.x), f.d, f.a};
  FlipMove m;
  m.source = g;
  m.result = Fatgraph::make_unchecked(std::move(rs));
  m.edge = edge;
  m.frame = f;
  return m;
}

TailSlide tail_slide(const Fatgraph& g) {
  TailSlide s;
  s.e1 = g.at(1);
  s.b = g.next_at_vertex(s.e1);
  s.c = g.next_at_vertex(s.b);
  s.move = flip(g, edge_of(s.e1));
  return s;
}

std::vector<Dart> GlueResult::map_host_walk(const std::vector<Dart>& walk) const {
  return split_walk(walk, split, second_half);
}

std::vector<Dart> GlueResult::map_guest_walk(const std::vector<Dart>& walk) const {
  std::vector<Dart> out;
  for (Dart d : walk) out.push_back(d + guest_offset);
  return out;
}

std::vector<Dart> TailAttachment::map_walk(const std::vector<Dart>& walk) const {
  return split_walk(walk, split, second_half);
}

GlueResult glue(const Fatgraph& host, Dart at, const Fatgraph& guest) {
  if (!host.bordered() || !guest.bordered()) throw Error(ErrorKind::InvalidInputs, "glue needs bordered graphs");
  if (at < 0 || at >= host.num_darts()) throw Error(ErrorKind::InvalidInputs, "no such host dart");
  const int nh = host.num_darts();
  const Dart second = nh;
  const int offset = nh + 2;
  RotationSystem rs = host.rotation();
  const int target = host.head(at);
  replace_in(rs.vertices[target], at, second);
  const Dart stem = guest.tail() + offset;
  const int p = guest.univalent_vertex();
  for (int v = 0; v < guest.num_vertices(); ++v) {
    if (v == p) continue;
    std::vector<Dart> cyc;
    for (Dart d : guest.vertex(v)) cyc.push_back(d + offset);
    rs.vertices.push_back(std::move(cyc));
  }
  // Split vertex: first half in, guest stem out to the right, second half out.
  rs.vertices.push_back({at, reverse(stem), reverse(second)});
  if (target == host.univalent_vertex()) rs.tail = reverse(second);
  GlueResult r;
  r.graph = Fatgraph::make(std::move(rs));
  r.split = at;
  r.second_half = second;
  r.guest_offset = offset;
  r.guest_stem = stem;
  return r;
}

TailAttachment attach_tail(const Fatgraph& g, Dart at) {
  if (g.bordered()) throw Error(ErrorKind::InvalidInputs, "attach_tail needs a punctured graph");
  if (at < 0 || at >= g.num_darts()) throw Error(ErrorKind::InvalidInputs, "no such dart");
  const int n = g.num_darts();
  const Dart second = n, tail = n + 2;
  RotationSystem rs = g.rotation();
  rs.kind = Kind::Bordered;
  replace_in(rs.vertices[g.head(at)], at, second);
  rs.vertices.push_back({at, tail, reverse(second)});
  rs.vertices.push_back({reverse(tail)});
  rs.tail = tail;
  TailAttachment r;
  r.graph = Fatgraph::make(std::move(rs));
  r.split = at;
  r.second_half = second;
  r.tail = tail;
  return r;
}

Fatgraph remove_tail(const Fatgraph& g) {
  const Dart t = g.tail();
  const int v = g.head(t);
  const Dart u = g.next_at_vertex(t);  // reversed second half
  const Dart w = g.next_at_vertex(u);  // first half
  if (edge_of(u) == edge_of(w)) throw Error(ErrorKind::InvalidInputs, "tail sits on a loop");
  RotationSystem rs = g.rotation();
  rs.kind = Kind::Punctured;
  rs.tail.reset();
  replace_in(rs.vertices[g.head(reverse(u))], reverse(u), w);
  const int drop_a = edge_of(t), drop_b = edge_of(u);
  std::vector<int> new_edge(g.num_edges(), -1);
  for (int e = 0, k = 0; e < g.num_edges(); ++e)
    if (e != drop_a && e != drop_b) new_edge[e] = k++;
  const int p = g.univalent_vertex();
  std::vector<std::vector<Dart>> verts;
  for (int x = 0; x < g.num_vertices(); ++x) {
    if (x == v || x == p) continue;
    std::vector<Dart> cyc;
    for (Dart d : rs.vertices[x]) cyc.push_back(2 * new_edge[edge_of(d)] + (d & 1));
    verts.push_back(std::move(cyc));
  }
  rs.vertices = std::move(verts);
  return Fatgraph::make(std::move(rs));
}

Fatgraph relabel(const Fatgraph& g, const std::vector<int>& edge_perm, const std::vector<char>& swap,
                 const std::vector<int>& vertex_perm) {
  auto map = [&](Dart d) { return 2 * edge_perm[edge_of(d)] + ((d & 1) ^ (swap[edge_of(d)] ? 1 : 0)); };
  RotationSystem rs;
  rs.kind = g.kind();
  for (int v : vertex_perm) {
    std::vector<Dart> cyc;
    for (Dart d : g.vertex(v)) cyc.push_back(map(d));
    rs.vertices.push_back(std::move(cyc));
  }
  if (g.bordered()) rs.tail = map(g.tail());
  return Fatgraph::make(std::move(rs));
}

Fatgraph random_relabel(const Fatgraph& g, std::mt19937_64& rng) {
  std::vector<int> ep(g.num_edges()), vp(g.num_vertices());
  std::iota(ep.begin(), ep.end(), 0);
  std::iota(vp.begin(), vp.end(), 0);
  std::shuffle(ep.begin(), ep.end(), rng);
  std::shuffle(vp.begin(), vp.end(), rng);
  std::vector<char> sw(g.num_edges());
  for (auto& s : sw) s = static_cast<char>(rng() & 1);
  Fatgraph r = relabel(g, ep, sw, vp);
  // Rotate each vertex cycle so the listing itself changes too.
  RotationSystem rs = r.rotation();
  for (auto& cyc : rs.vertices) std::rotate(cyc.begin(), cyc.begin() + (rng() % cyc.size()), cyc.end());
  return Fatgraph::make(std::move(rs));
}

}  // namespace fg
