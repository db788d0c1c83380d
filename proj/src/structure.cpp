#include "fatgraph/structure.hpp"

#include <algorithm>
#include <queue>

namespace fg {

VertexFrame frame_of(const Fatgraph& g, int v) {
  if (g.valence(v) != 3) throw Error(ErrorKind::NotTrivalent, "vertex v" + std::to_string(v) + " is not trivalent");
  auto cyc = g.vertex(v);
  int s = 0;
  for (int i = 1; i < 3; ++i)
    if (g.position(cyc[i]) < g.position(cyc[s])) s = i;
  VertexFrame f;
  f.vertex = v;
  f.e1 = cyc[s];
  f.e2 = cyc[(s + 1) % 3];
  f.e3 = cyc[(s + 2) % 3];
  // Each incoming dart is immediately followed by the reversal of its ccw
  // successor, so the corners come in blocks [e1 ~e2] [e2 ~e3] [e3 ~e1].
  f.type = g.position(f.e2) < g.position(f.e3) ? VertexType::Type1 : VertexType::Type2;
  return f;
}

std::vector<VertexFrame> classify_vertices(const Fatgraph& g) {
  if (!g.bordered()) throw Error(ErrorKind::InvalidInputs, "vertex types need a bordered graph");
  std::vector<VertexFrame> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.valence(v) == 3) out.push_back(frame_of(g, v));
  return out;
}

TypeCounts count_types(const Fatgraph& g) {
  TypeCounts c;
  for (const auto& f : classify_vertices(g)) (f.type == VertexType::Type1 ? c.type1 : c.type2)++;
  return c;
}

std::vector<Corner> corners(const Fatgraph& g) {
  const int n = g.num_darts();
  const int count = g.bordered() ? n - 1 : n;
  std::vector<Corner> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Corner c;
    c.index = i;
    c.first = g.at(i);
    c.second = g.at((i + 1) % n);
    c.vertex = g.head(c.first);
    out.push_back(c);
  }
  return out;
}

bool is_balanced(const Fatgraph& g) {
  std::vector<int> parity(g.num_vertices(), -1);
  for (const auto& c : corners(g)) {
    int& p = parity[c.vertex];
    if (p == -1) p = c.index & 1;
    else if (p != (c.index & 1)) return false;
  }
  return true;
}

bool is_chord_diagram(const Fatgraph& g) {
  if (!g.bordered()) return false;
  const int k = 4 * g.genus();
  for (int i = 0; i < k && i < g.num_darts(); ++i)
    if (!g.preferred(g.at(i))) return false;
  return true;
}

std::vector<int> greedy_tree(const Fatgraph& g) {
  if (!g.bordered()) throw Error(ErrorKind::InvalidInputs, "greedy tree needs a bordered graph");
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.valence(v) == 3) out.push_back(edge_of(frame_of(g, v).e1));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<bool> tree_mask(const Fatgraph& g, const std::vector<int>& tree_edges) {
  std::vector<bool> m(g.num_edges(), false);
  for (int e : tree_edges) m[e] = true;
  return m;
}

std::vector<Dart> find_odd_edge_cycle(const Fatgraph& g) {
  const int n = g.num_darts();
  std::vector<int> first(g.num_vertices(), -1);
  for (const auto& c : corners(g)) {
    int& f = first[c.vertex];
    if (f == -1) {
      f = c.index;
      continue;
    }
    if (((c.index - f) & 1) == 0) continue;
    // Corner (d_i, d_i+1) and (d_j, d_j+1) share the vertex, so
    // d_{i+1} .. d_j leaves and returns to it.
    std::vector<Dart> walk;
    for (int p = f + 1; p <= c.index; ++p) walk.push_back(g.at(p % n));
    return walk;
  }
  return {};
}

bool is_closed_walk(const Fatgraph& g, const std::vector<Dart>& walk) {
  if (walk.empty()) return false;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    Dart d = walk[i];
    if (d < 0 || d >= g.num_darts()) return false;
    if (g.head(d) != g.source(walk[(i + 1) % walk.size()])) return false;
  }
  return true;
}

std::vector<int> walk_coefficients(const Fatgraph& g, const std::vector<Dart>& walk) {
  std::vector<int> w(g.num_darts(), 0);
  for (Dart d : walk) {
    ++w[d];
    --w[reverse(d)];
  }
  return w;
}

std::vector<std::vector<Dart>> fundamental_cycles(const Fatgraph& g) {
  const int nv = g.num_vertices();
  std::vector<Dart> parent(nv, -1);  // dart from parent into v
  std::vector<int> depth(nv, -1);
  std::vector<bool> in_tree(g.num_edges(), false);
  std::queue<int> q;
  depth[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (Dart in : g.vertex(v)) {
      Dart out = reverse(in);
      int w = g.head(out);
      if (depth[w] != -1) continue;
      depth[w] = depth[v] + 1;
      parent[w] = out;
      in_tree[edge_of(out)] = true;
      q.push(w);
    }
  }
  std::vector<std::vector<Dart>> cycles;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (in_tree[e]) continue;
    Dart x = 2 * e;
    int u = g.source(x), v = g.head(x);
    // x, then v up to the common ancestor, then down to u.
    std::vector<Dart> up, down;
    while (depth[v] > depth[u]) { up.push_back(reverse(parent[v])); v = g.source(parent[v]); }
    while (depth[u] > depth[v]) { down.push_back(parent[u]); u = g.source(parent[u]); }
    while (u != v) {
      up.push_back(reverse(parent[v])); v = g.source(parent[v]);
      down.push_back(parent[u]); u = g.source(parent[u]);
    }
    std::vector<Dart> cyc{x};
    cyc.insert(cyc.end(), up.begin(), up.end());
    cyc.insert(cyc.end(), down.rbegin(), down.rend());
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

}  // namespace fg
