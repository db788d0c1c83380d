#include <queue>

#include "doctest.h"
#include "fatgraph/canonical.hpp"
#include "fatgraph/examples.hpp"
#include "fatgraph/io.hpp"
#include "fatgraph/moves.hpp"
#include "fatgraph/structure.hpp"

using namespace fg;

namespace {

std::string data(const char* name) { return std::string(FATGRAPH_DATA_DIR) + "/" + name; }

// Odd closed walks exist iff the underlying graph is not bipartite.
bool has_odd_closed_walk(const Fatgraph& g) {
  std::vector<int> colour(g.num_vertices(), -1);
  colour[0] = 0;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (Dart d : g.vertex(v)) {
      const int u = g.source(d);
      if (colour[u] < 0) {
        colour[u] = colour[v] ^ 1;
        q.push(u);
      } else if (colour[u] == colour[v]) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("validate accepts the block spines and rejects broken rotation systems") {
  for (int g = 1; g <= 3; ++g) {
    const auto rep = validate(block_spine(g).graph.rotation());
    CHECK(rep.ok);
    CHECK(rep.genus == g);
  }
  RotationSystem loop{Kind::Bordered, {{1}, {0, 2, 3}}, 0};
  auto rep = validate(loop);
  CHECK_FALSE(rep.ok);
  CHECK(*rep.error == ErrorKind::MultipleBoundaryCycles);

  RotationSystem dup{Kind::Punctured, {{0, 2, 4}, {1, 2, 3}}, std::nullopt};
  CHECK(*validate(dup).error == ErrorKind::MalformedPermutation);

  RotationSystem two{Kind::Bordered, {{1}, {0, 3}, {2}}, 0};
  CHECK(*validate(two).error == ErrorKind::BadValence);

  RotationSystem split{Kind::Punctured, {{0, 1, 2}, {3, 4, 5}}, std::nullopt};
  CHECK_FALSE(validate(split).ok);

  CHECK_THROWS_AS(Fatgraph::make(loop), Error);
}

TEST_CASE("chord diagrams built from intervals validate with the expected sizes") {
  const Fatgraph g = linear_chord_diagram(2, {{1, 3}, {2, 4}, {5, 7}, {6, 8}});
  CHECK(g.genus() == 2);
  CHECK(g.num_vertices() == 4 * 2);
  CHECK(g.num_edges() == 6 * 2 - 1);
  CHECK(is_chord_diagram(g));
}

TEST_CASE("boundary walk of the genus one block spine") {
  const Fatgraph g = block_spine(1).graph;
  CHECK(g.order().walk == std::vector<Dart>{0, 2, 4, 6, 3, 8, 5, 7, 9, 1});
  CHECK(g.at(0) == g.tail());
  CHECK(g.at(g.num_darts() - 1) == reverse(g.tail()));
  CHECK(is_chord_diagram(g));
  const auto frames = classify_vertices(g);
  REQUIRE(frames.size() == 3);
  CHECK(frames[0].type == VertexType::Type1);
  CHECK(frames[1].type == VertexType::Type2);
  CHECK(frames[2].type == VertexType::Type2);
}

TEST_CASE("type counts are 2g-1 and 2g and survive relabelling") {
  std::mt19937_64 rng(7);
  for (int g = 1; g <= 3; ++g) {
    const Fatgraph s = block_spine(g).graph;
    const auto c = count_types(s);
    CHECK(c.type1 == 2 * g - 1);
    CHECK(c.type2 == 2 * g);
    for (int k = 0; k < 5; ++k) {
      const auto r = count_types(random_relabel(s, rng));
      CHECK(r.type1 == c.type1);
      CHECK(r.type2 == c.type2);
    }
  }
}

TEST_CASE("corner counts") {
  CHECK(corners(block_spine(1).graph).size() == 9);
  CHECK(corners(remove_tail(block_spine(2).graph)).size() == 18);
}

TEST_CASE("serialization round trips") {
  for (int g = 1; g <= 3; ++g) {
    const Fatgraph s = block_spine(g).graph;
    CHECK(parse_fatgraph(serialize(s)) == s);
    const Fatgraph p = remove_tail(s);
    CHECK(parse_fatgraph(serialize(p)) == p);
  }
  const Fatgraph f = read_fatgraph(data("double_ladder_straight.fg"));
  CHECK(parse_fatgraph(serialize(f)) == f);
  CHECK_THROWS_AS(parse_fatgraph("fatgraph v2 bordered\n"), Error);
  CHECK_THROWS_AS(parse_fatgraph("fatgraph v1 bordered\nv0: x\n"), Error);
  CHECK_THROWS_AS(read_fatgraph(data("corrupt.fg")), Error);
}

TEST_CASE("flips are involutive up to exchanging the two darts of the edge") {
  const Fatgraph g = block_spine(2).graph;
  for (int e : flippable_edges(g)) {
    const auto once = flip(g, e);
    CHECK(once.result.genus() == 2);
    const auto twice = flip(once.result, e);
    CHECK(isomorphism(g, twice.result).has_value());
  }
  CHECK_THROWS_AS(flip(g, edge_of(g.tail())), Error);
  CHECK_THROWS_AS(flip(g, g.num_edges()), Error);
}

TEST_CASE("tail slide stays valid and its orbit closes") {
  for (int g = 1; g <= 2; ++g) {
    const Fatgraph s = block_spine(g).graph;
    Fatgraph cur = s;
    const int period = 12 * g - 6;
    for (int i = 0; i < period; ++i) {
      cur = tail_slide(cur).move.result;
      CHECK(cur.genus() == g);
      CHECK(validate(cur.rotation()).ok);
    }
    CHECK(canonical_form(cur) == canonical_form(s));
  }
}

TEST_CASE("gluing adds genus and attach_tail inverts remove_tail") {
  const Fatgraph h = block_spine(1).graph, guest = block_spine(1).graph;
  for (Dart d = 0; d < h.num_darts(); ++d) {
    const auto r = glue(h, d, guest);
    CHECK(r.graph.genus() == 2);
    CHECK(validate(r.graph.rotation()).ok);
  }
  const Fatgraph p = remove_tail(block_spine(2).graph);
  for (Dart d = 0; d < p.num_darts(); ++d) {
    const auto a = attach_tail(p, d);
    CHECK(a.graph.genus() == 2);
    CHECK(canonical_form(remove_tail(a.graph)) == canonical_form(p));
  }
}

TEST_CASE("odd cycle agrees with a bipartiteness oracle") {
  for (int g = 1; g <= 3; ++g) {
    const Fatgraph s = block_spine(g).graph;
    const auto cyc = find_odd_edge_cycle(s);
    CHECK(has_odd_closed_walk(s) == !cyc.empty());
    CHECK(cyc.size() % 2 == 1);
    CHECK(is_closed_walk(s, cyc));
  }
  CHECK(find_odd_edge_cycle(block_spine(1).graph).size() == 3);
}

TEST_CASE("greedy tree spans the graph") {
  for (int g = 1; g <= 3; ++g) {
    const Fatgraph s = block_spine(g).graph;
    CHECK(static_cast<int>(greedy_tree(s).size()) == s.num_vertices() - 1);
    CHECK(static_cast<int>(fundamental_cycles(s).size()) == 2 * g);
  }
}
