#include "fatgraph/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fatgraph/structure.hpp"

namespace fg {

HomologyClass HomologyClass::unit(int rank, int i) {
  HomologyClass h(rank);
  h.c_[i] = 1;
  return h;
}

bool HomologyClass::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

std::string HomologyClass::str() const {
  std::ostringstream o;
  o << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) o << (i ? "," : "") << c_[i];
  o << ']';
  return o.str();
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& o) {
  if (o.rank() != rank()) throw Error(ErrorKind::DimensionMismatch, "class ranks differ");
  for (int i = 0; i < rank(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

HomologyClass& HomologyClass::operator-=(const HomologyClass& o) {
  if (o.rank() != rank()) throw Error(ErrorKind::DimensionMismatch, "class ranks differ");
  for (int i = 0; i < rank(); ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
  return *this;
}

HomologyClass HomologyClass::operator-() const {
  HomologyClass r(rank());
  for (int i = 0; i < rank(); ++i) r.c_[i] = checked_sub(0, c_[i]);
  return r;
}

HomologyClass operator*(std::int64_t k, const HomologyClass& a) {
  HomologyClass r(a.rank());
  for (int i = 0; i < a.rank(); ++i) r[i] = checked_mul(k, a[i]);
  return r;
}

namespace {

// Greedy tree rooted at the univalent vertex.
struct RootedTree {
  std::vector<Dart> parent;  // dart from the parent into v
  std::vector<int> depth;

  RootedTree(const Fatgraph& g, const std::vector<bool>& in_tree)
      : parent(g.num_vertices(), -1), depth(g.num_vertices(), -1) {
    std::vector<int> stack{g.univalent_vertex()};
    depth[stack[0]] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (Dart in : g.vertex(v)) {
        Dart out = reverse(in);
        if (!in_tree[edge_of(out)]) continue;
        int w = g.head(out);
        if (depth[w] != -1) continue;
        depth[w] = depth[v] + 1;
        parent[w] = out;
        stack.push_back(w);
      }
    }
  }

  // f, then the tree path from head(f) back to source(f).
  std::vector<Dart> cycle(const Fatgraph& g, Dart f) const {
    std::vector<Dart> walk{f}, down;
    int u = g.source(f), v = g.head(f);
    while (depth[v] > depth[u]) { walk.push_back(reverse(parent[v])); v = g.source(parent[v]); }
    while (depth[u] > depth[v]) { down.push_back(parent[u]); u = g.source(parent[u]); }
    while (u != v) {
      walk.push_back(reverse(parent[v])); v = g.source(parent[v]);
      down.push_back(parent[u]); u = g.source(parent[u]);
    }
    walk.insert(walk.end(), down.rbegin(), down.rend());
    return walk;
  }
};

// u strictly inside the forward arc from s to t on a cycle of length n.
bool in_arc(int s, int t, int u, int n) {
  int du = ((u - s) % n + n) % n;
  int dt = ((t - s) % n + n) % n;
  return du > 0 && du < dt;
}

}  // namespace

int intersection_sign(const Fatgraph& g, Dart x, Dart y) {
  if (edge_of(x) == edge_of(y)) throw Error(ErrorKind::SameEdge, "darts share an edge");
  const int n = g.num_darts();
  const int a = g.position(x), b = g.position(reverse(x));
  // The dual loop of x runs through the disk from x's side to ~x's side,
  // so it is homologous to the boundary arc strictly between them.  Pairing
  // y with that arc counts y minus ~y on it.
  const int y_in = in_arc(a, b, g.position(y), n) ? 1 : 0;
  const int ybar_in = in_arc(a, b, g.position(reverse(y)), n) ? 1 : 0;
  return ybar_in - y_in;
}

std::vector<Dart> greedy_cycle(const Fatgraph& g, int edge) {
  const auto in_tree = tree_mask(g, greedy_tree(g));
  if (in_tree[edge]) throw Error(ErrorKind::InvalidInputs, "edge is in the greedy tree");
  return RootedTree(g, in_tree).cycle(g, g.preferred_dart(edge));
}

Marking initial_marking(const Fatgraph& g) {
  if (!g.bordered()) throw Error(ErrorKind::InvalidInputs, "marking needs a bordered graph");
  const auto in_tree = tree_mask(g, greedy_tree(g));
  Marking m;
  for (int e = 0; e < g.num_edges(); ++e)
    if (!in_tree[e]) m.basis_edges.push_back(e);
  std::sort(m.basis_edges.begin(), m.basis_edges.end(), [&](int e, int f) {
    return g.position(g.preferred_dart(e)) < g.position(g.preferred_dart(f));
  });
  m.rank = static_cast<int>(m.basis_edges.size());
  if (m.rank != 2 * g.genus()) throw Error(ErrorKind::InvalidInputs, "tree complement has wrong size");

  m.mu.assign(g.num_darts(), HomologyClass(m.rank));
  const RootedTree tree(g, in_tree);
  for (int i = 0; i < m.rank; ++i)
    for (Dart d : tree.cycle(g, g.preferred_dart(m.basis_edges[i]))) {
      m.mu[d][i] += 1;
      m.mu[reverse(d)][i] -= 1;
    }

  m.gram = zero_matrix(m.rank, m.rank);
  for (int i = 0; i < m.rank; ++i)
    for (int j = 0; j < m.rank; ++j)
      if (i != j)
        m.gram[i][j] = intersection_sign(g, g.preferred_dart(m.basis_edges[i]), g.preferred_dart(m.basis_edges[j]));
  return m;
}

std::int64_t pair(const Marking& m, const HomologyClass& x, const HomologyClass& y) {
  if (x.rank() != m.rank || y.rank() != m.rank) throw Error(ErrorKind::DimensionMismatch, "pairing ranks differ");
  std::int64_t s = 0;
  for (int i = 0; i < m.rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m.rank; ++j)
      if (m.gram[i][j] != 0 && y[j] != 0) s = checked_add(s, checked_mul(x[i], checked_mul(m.gram[i][j], y[j])));
  }
  return s;
}

namespace {

// u = gram * class(walk), from (mu(e) . walk) = w(e) on a basis of darts.
std::vector<std::int64_t> cycle_covector(const Fatgraph& g, const Marking& m, const std::vector<Dart>& walk) {
  if (!is_closed_walk(g, walk)) throw Error(ErrorKind::NotClosed, "walk is not closed");
  const auto w = walk_coefficients(g, walk);
  IntMatrix rows;
  std::vector<std::int64_t> rhs;
  std::vector<Dart> chosen;
  for (Dart d = 0; d < g.num_darts() && static_cast<int>(rows.size()) < m.rank; d += 2) {
    IntMatrix trial = rows;
    trial.push_back(m.mu[d].coords());
    if (rank_rational(trial) > static_cast<int>(rows.size())) {
      rows = std::move(trial);
      rhs.push_back(w[d]);
      chosen.push_back(d);
    }
  }
  if (static_cast<int>(rows.size()) != m.rank) throw Error(ErrorKind::SingularGram, "marking does not span");
  auto u = solve_integral(rows, rhs);
  if (!u) throw Error(ErrorKind::NotClosed, "cycle pairing is not integral");
  for (Dart d = 0; d < g.num_darts(); ++d) {
    std::int64_t s = 0;
    for (int i = 0; i < m.rank; ++i) s = checked_add(s, checked_mul(m.mu[d][i], (*u)[i]));
    if (s != w[d]) throw Error(ErrorKind::InvalidInputs, "marking inconsistent with graph cycles");
  }
  return *u;
}

}  // namespace

HomologyClass cycle_class(const Fatgraph& g, const Marking& m, const std::vector<Dart>& walk) {
  auto u = cycle_covector(g, m, walk);
  auto sol = solve_integral(m.gram, u);
  if (!sol) throw Error(ErrorKind::SingularGram, "gram is not unimodular");
  return HomologyClass(*sol);
}

std::int64_t pair_with_cycle(const Fatgraph& g, const Marking& m, const HomologyClass& x,
                             const std::vector<Dart>& walk) {
  if (x.rank() != m.rank) throw Error(ErrorKind::DimensionMismatch, "pairing ranks differ");
  auto u = cycle_covector(g, m, walk);
  std::int64_t s = 0;
  for (int i = 0; i < m.rank; ++i) s = checked_add(s, checked_mul(x[i], u[i]));
  return s;
}

Marking transport_marking(const Marking& m, const FlipMove& move) {
  Marking out = m;
  const auto& f = move.frame;
  HomologyClass v = -(m.mu[f.b] + m.mu[f.c]);
  out.mu[f.x] = v;
  out.mu[reverse(f.x)] = -v;
  return out;
}

bool is_primitive(const HomologyClass& x) {
  std::int64_t g = 0;
  for (auto v : x.coords()) g = std::gcd(g, v);
  return g == 1;
}

Mod2Class mod2(const HomologyClass& x) {
  Mod2Class r(x.rank());
  for (int i = 0; i < x.rank(); ++i) r[i] = static_cast<std::uint8_t>(x[i] & 1);
  return r;
}

std::vector<Mod2Class> mod2_marking(const Marking& m) {
  std::vector<Mod2Class> out;
  for (std::size_t d = 0; d < m.mu.size(); d += 2) out.push_back(mod2(m.mu[d]));
  return out;
}

MarkingCheck check_marking(const Fatgraph& g, const Marking& m) {
  MarkingCheck c;
  c.antisymmetric = true;
  for (Dart d = 0; d < g.num_darts(); ++d)
    if (!(m.mu[reverse(d)] == -m.mu[d])) c.antisymmetric = false;
  c.vertex_sums_zero = true;
  for (int v = 0; v < g.num_vertices(); ++v) {
    HomologyClass s(m.rank);
    for (Dart d : g.vertex(v)) s += m.mu[d];
    if (!s.is_zero()) c.vertex_sums_zero = false;
  }
  IntMatrix rows;
  for (Dart d = 0; d < g.num_darts(); d += 2) rows.push_back(m.mu[d].coords());
  c.generates = lattice_index(rows, m.rank) == 1;
  c.gram_skew = true;
  for (int i = 0; i < m.rank; ++i)
    for (int j = 0; j < m.rank; ++j)
      if (m.gram[i][j] != -m.gram[j][i]) c.gram_skew = false;
  const auto det = determinant(m.gram);
  c.unimodular = det == 1 || det == -1;
  return c;
}

}  // namespace fg
