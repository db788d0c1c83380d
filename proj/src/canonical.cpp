#include "fatgraph/canonical.hpp"

#include <algorithm>
#include <cstdio>

#include "fatgraph/io.hpp"

namespace fg {

std::vector<Dart> anchored_relabelling(const Fatgraph& g, Dart anchor) {
  const int n = g.num_darts();
  std::vector<Dart> map(n, -1);
  int next_edge = 0;
  Dart d = anchor;
  for (int i = 0; i < n; ++i) {
    if (map[d] == -1) {
      map[d] = 2 * next_edge;
      map[reverse(d)] = 2 * next_edge + 1;
      ++next_edge;
    }
    d = g.boundary_successor(d);
  }
  return map;
}

Fatgraph apply_relabelling(const Fatgraph& g, const std::vector<Dart>& map) {
  RotationSystem rs;
  rs.kind = g.kind();
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<Dart> cyc;
    for (Dart d : g.vertex(v)) cyc.push_back(map[d]);
    std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
    rs.vertices.push_back(std::move(cyc));
  }
  std::sort(rs.vertices.begin(), rs.vertices.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  if (g.bordered()) rs.tail = map[g.tail()];
  return Fatgraph::make_unchecked(std::move(rs));
}

namespace {

// Walk labels under the relabelling anchored at `anchor`; they determine
// the graph, so comparing them compares the relabelled graphs.
std::vector<Dart> walk_labels(const Fatgraph& g, Dart anchor) {
  auto map = anchored_relabelling(g, anchor);
  std::vector<Dart> out;
  out.reserve(g.num_darts());
  Dart d = anchor;
  for (int i = 0; i < g.num_darts(); ++i) {
    out.push_back(map[d]);
    d = g.boundary_successor(d);
  }
  return out;
}

}  // namespace

Fatgraph canonical_graph(const Fatgraph& g) {
  if (g.bordered()) return apply_relabelling(g, anchored_relabelling(g, g.tail()));
  Dart best = 0;
  auto best_labels = walk_labels(g, 0);
  for (Dart a = 1; a < g.num_darts(); ++a) {
    auto l = walk_labels(g, a);
    if (l < best_labels) {
      best_labels = std::move(l);
      best = a;
    }
  }
  return apply_relabelling(g, anchored_relabelling(g, best));
}

std::string canonical_form(const Fatgraph& g) { return serialize(canonical_graph(g)); }

bool is_rotation_isomorphism(const Fatgraph& from, const Fatgraph& to, const std::vector<Dart>& map) {
  const int n = from.num_darts();
  if (to.num_darts() != n || static_cast<int>(map.size()) != n || from.kind() != to.kind()) return false;
  std::vector<bool> hit(n, false);
  for (Dart d = 0; d < n; ++d) {
    Dart m = map[d];
    if (m < 0 || m >= n || hit[m]) return false;
    hit[m] = true;
  }
  for (Dart d = 0; d < n; ++d) {
    if (map[reverse(d)] != reverse(map[d])) return false;
    if (map[from.next_at_vertex(d)] != to.next_at_vertex(map[d])) return false;
  }
  if (from.bordered() && map[from.tail()] != to.tail()) return false;
  return true;
}

std::optional<std::vector<Dart>> isomorphism(const Fatgraph& from, const Fatgraph& to) {
  if (from.kind() != to.kind() || from.num_darts() != to.num_darts() || from.num_vertices() != to.num_vertices())
    return std::nullopt;
  const int n = from.num_darts();
  auto try_anchor = [&](Dart target) -> std::optional<std::vector<Dart>> {
    std::vector<Dart> map(n, -1);
    Dart d = from.bordered() ? from.tail() : 0;
    Dart e = target;
    for (int i = 0; i < n; ++i) {
      map[d] = e;
      d = from.boundary_successor(d);
      e = to.boundary_successor(e);
    }
    if (is_rotation_isomorphism(from, to, map)) return map;
    return std::nullopt;
  };
  if (from.bordered()) return try_anchor(to.tail());
  for (Dart a = 0; a < n; ++a)
    if (auto m = try_anchor(a)) return m;
  return std::nullopt;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string short_hash(const std::string& canonical) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canonical)));
  return std::string(buf, 12);
}

}  // namespace fg
