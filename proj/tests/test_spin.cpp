#include <set>

#include "doctest.h"
#include "fatgraph/enumerate.hpp"
#include "fatgraph/examples.hpp"
#include "fatgraph/spin.hpp"
#include "fatgraph/verify.hpp"
#include "fatgraph/xi.hpp"

using namespace fg;

TEST_CASE("admissible forms at genus one by exhaustion") {
  const Fatgraph g = block_spine(1).graph;
  const int e = g.num_edges();
  std::uint64_t members = 0;
  for (int mask = 0; mask < (1 << e); ++mask) {
    EdgeForm f;
    for (int i = 0; i < e; ++i) f.values.push_back((mask >> i) & 1);
    members += q_membership(g, f);
  }
  CHECK(members == 4);
  CHECK(admissible_count(g) == 4);
  CHECK_FALSE(q_membership(g, EdgeForm{Mod2Vector(e, 0), FormTag::Custom}));
}

TEST_CASE("the three standard forms") {
  for (int g = 1; g <= 3; ++g) {
    const Fatgraph s = block_spine(g).graph;
    const Marking m = initial_marking(s);
    for (int l : winding_lambda(s)) CHECK(l % 2 != 0);
    const EdgeForm a = q_G(s), b = q_bar(s), c = q_wind(s);
    CHECK(q_membership(s, a));
    CHECK(q_membership(s, b));
    CHECK(q_membership(s, c));
    CHECK(form_difference(s, m, a, b) == xi(s, m).xi_mod2);
    const QuadForm qa = extend_form(s, m, a), qb = extend_form(s, m, b), qc = extend_form(s, m, c);
    CHECK_FALSE(qa == qb);
    CHECK_FALSE(qa == qc);
    CHECK_FALSE(qb == qc);
  }
}

TEST_CASE("forms outside Q(G) are rejected") {
  const Fatgraph s = block_spine(2).graph;
  EdgeForm bad{Mod2Vector(s.num_edges(), 0), FormTag::Custom};
  CHECK_THROWS_AS(extend_form(s, initial_marking(s), bad), Error);
}

TEST_CASE("transport commutes with recomputation on every genus two flip") {
  SuiteConfig cfg;
  cfg.genus = 2;
  cfg.exhaustive = true;
  const auto rep = run_suite(Suite::Spin, cfg, Exec::Serial);
  CHECK(rep.graphs == 105);
  CHECK(rep.failures == 0);
}

TEST_CASE("flip cases cover the table") {
  std::set<int> rows;
  for (const auto& g : enumerate({2, Kind::Bordered, std::nullopt}))
    for (int e : flippable_edges(g)) rows.insert(flip_case(flip(g, e)).table_row());
  CHECK(rows == std::set<int>{1, 2, 3, 6});
}
