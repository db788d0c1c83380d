#include "fatgraph/fatgraph.hpp"

#include <numeric>

namespace fg {

const char* to_string(Kind k) { return k == Kind::Bordered ? "bordered" : "punctured"; }

namespace {

ValidationReport fail(ErrorKind k, std::string msg) {
  ValidationReport r;
  r.error = k;
  r.message = std::move(msg);
  return r;
}

int find_root(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

ValidationReport validate(const RotationSystem& rs) {
  std::size_t total = 0;
  for (const auto& v : rs.vertices) total += v.size();
  if (total == 0 || total % 2 != 0)
    return fail(ErrorKind::MalformedPermutation, "dart count must be even and positive");
  const int n = static_cast<int>(total);
  std::vector<int> head(n, -1), slot(n, -1);
  for (int v = 0; v < static_cast<int>(rs.vertices.size()); ++v) {
    for (int s = 0; s < static_cast<int>(rs.vertices[v].size()); ++s) {
      Dart d = rs.vertices[v][s];
      if (d < 0 || d >= n)
        return fail(ErrorKind::MalformedPermutation, "dart " + std::to_string(d) + " out of range");
      if (head[d] != -1)
        return fail(ErrorKind::MalformedPermutation, "dart " + std::to_string(d) + " listed twice");
      head[d] = v;
      slot[d] = s;
    }
  }

  int univalent = -1;
  for (int v = 0; v < static_cast<int>(rs.vertices.size()); ++v) {
    const auto val = rs.vertices[v].size();
    if (val == 3) continue;
    if (val == 1 && rs.kind == Kind::Bordered && univalent == -1) {
      univalent = v;
      continue;
    }
    return fail(ErrorKind::BadValence, "vertex v" + std::to_string(v) + " has valence " + std::to_string(val));
  }
  if (rs.kind == Kind::Bordered) {
    if (univalent == -1) return fail(ErrorKind::BadValence, "bordered graph needs one univalent vertex");
    if (!rs.tail) return fail(ErrorKind::BadValence, "bordered graph needs a tail dart");
    Dart t = *rs.tail;
    if (t < 0 || t >= n || head[reverse(t)] != univalent)
      return fail(ErrorKind::BadValence, "tail dart must leave the univalent vertex");
  } else if (rs.tail) {
    return fail(ErrorKind::BadValence, "punctured graph cannot have a tail");
  }

  std::vector<int> parent(rs.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (int e = 0; e < n / 2; ++e) parent[find_root(parent, head[2 * e])] = find_root(parent, head[2 * e + 1]);
  for (int v = 0; v < static_cast<int>(rs.vertices.size()); ++v)
    if (find_root(parent, v) != find_root(parent, 0)) return fail(ErrorKind::Disconnected, "graph is disconnected");

  const Dart start = rs.kind == Kind::Bordered ? *rs.tail : 0;
  int len = 0;
  Dart d = start;
  do {
    const auto& cyc = rs.vertices[head[d]];
    d = reverse(cyc[(slot[d] + 1) % cyc.size()]);
    ++len;
  } while (d != start && len <= n);
  if (len != n)
    return fail(ErrorKind::MultipleBoundaryCycles, "boundary walk from the anchor covers " + std::to_string(len) +
                                                       " of " + std::to_string(n) + " darts");

  const int edges = n / 2;
  const int verts = static_cast<int>(rs.vertices.size());
  ValidationReport r;
  r.ok = true;
  r.genus = (edges - verts + 1) / 2;
  return r;
}

Fatgraph Fatgraph::make(RotationSystem rs) {
  auto rep = validate(rs);
  if (!rep.ok) throw Error(*rep.error, rep.message);
  return make_unchecked(std::move(rs));
}

Fatgraph Fatgraph::make_unchecked(RotationSystem rs) {
  Fatgraph g;
  g.rs_ = std::move(rs);
  g.index();
  return g;
}

void Fatgraph::index() {
  std::size_t total = 0;
  for (const auto& v : rs_.vertices) total += v.size();
  head_.assign(total, -1);
  slot_.assign(total, -1);
  for (int v = 0; v < num_vertices(); ++v)
    for (int s = 0; s < valence(v); ++s) {
      head_[rs_.vertices[v][s]] = v;
      slot_[rs_.vertices[v][s]] = s;
    }
  genus_ = (num_edges() - num_vertices() + 1) / 2;
  const int n = num_darts();
  order_.walk.assign(n, -1);
  order_.position.assign(n, -1);
  Dart d = bordered() ? *rs_.tail : 0;
  for (int i = 0; i < n; ++i) {
    order_.walk[i] = d;
    order_.position[d] = i;
    d = boundary_successor(d);
  }
}

Dart Fatgraph::next_at_vertex(Dart d) const {
  const auto& cyc = rs_.vertices[head_[d]];
  return cyc[(slot_[d] + 1) % cyc.size()];
}

Dart Fatgraph::prev_at_vertex(Dart d) const {
  const auto& cyc = rs_.vertices[head_[d]];
  return cyc[(slot_[d] + cyc.size() - 1) % cyc.size()];
}

Dart Fatgraph::tail() const {
  if (!bordered()) throw Error(ErrorKind::InvalidInputs, "punctured graph has no tail");
  return *rs_.tail;
}

int Fatgraph::univalent_vertex() const { return head_[reverse(tail())]; }

BoundaryOrder boundary_order(const Fatgraph& g) { return g.order(); }

}  // namespace fg
