#include <cmath>
#include <numeric>

#include "doctest.h"
#include "fatgraph/examples.hpp"
#include "fatgraph/homology.hpp"
#include "fatgraph/linalg.hpp"
#include "fatgraph/moves.hpp"
#include "fatgraph/structure.hpp"

using namespace fg;

namespace {

struct Pt {
  double x, y;
};

Pt on_circle(int pos, int n) {
  const double t = 2 * M_PI * pos / n;
  return {std::cos(t), std::sin(t)};
}

double orient(Pt a, Pt b, Pt c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

// Straight chords between boundary positions of an edge's two darts.
bool chords_cross(const Fatgraph& g, int e, int f) {
  const int n = g.num_darts();
  const Pt a = on_circle(g.position(2 * e), n), b = on_circle(g.position(2 * e + 1), n);
  const Pt c = on_circle(g.position(2 * f), n), d = on_circle(g.position(2 * f + 1), n);
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

std::int64_t brute_determinant(const IntMatrix& m) {
  std::vector<int> p(m.size());
  std::iota(p.begin(), p.end(), 0);
  std::int64_t total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    std::int64_t term = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < p.size(); ++i) term *= m[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST_CASE("intersection sign is skew and nonzero exactly on crossing chords") {
  for (int g = 1; g <= 3; ++g) {
    const Fatgraph s = block_spine(g).graph;
    for (int e = 0; e < s.num_edges(); ++e)
      for (int f = 0; f < s.num_edges(); ++f) {
        if (e == f) continue;
        const int v = intersection_sign(s, 2 * e, 2 * f);
        CHECK(v == -intersection_sign(s, 2 * f, 2 * e));
        CHECK(v == -intersection_sign(s, 2 * e + 1, 2 * f));
        CHECK((v != 0) == chords_cross(s, e, f));
      }
  }
}

TEST_CASE("initial marking satisfies the marking axioms") {
  std::mt19937_64 rng(5);
  for (int g = 1; g <= 3; ++g) {
    Fatgraph s = block_spine(g).graph;
    for (int k = 0; k < 20; ++k) {
      const Marking m = initial_marking(s);
      CHECK(m.rank == 2 * g);
      CHECK(check_marking(s, m).ok());
      CHECK(m(s.tail()).is_zero());
      CHECK(std::abs(determinant(m.gram)) == 1);
      const auto fl = flippable_edges(s);
      s = flip(s, fl[rng() % fl.size()]).result;
    }
  }
}

TEST_CASE("transported marking still satisfies the axioms") {
  Fatgraph s = block_spine(2).graph;
  Marking m = initial_marking(s);
  std::mt19937_64 rng(9);
  for (int k = 0; k < 50; ++k) {
    const auto fl = flippable_edges(s);
    const auto mv = flip(s, fl[rng() % fl.size()]);
    m = transport_marking(m, mv);
    s = mv.result;
    CHECK(check_marking(s, m).ok());
  }
}

TEST_CASE("pairing with a cycle agrees with the class of the cycle") {
  const Fatgraph s = block_spine(2).graph;
  const Marking m = initial_marking(s);
  for (const auto& cyc : fundamental_cycles(s)) {
    const auto c = cycle_class(s, m, cyc);
    for (int i = 0; i < m.rank; ++i) {
      const auto u = HomologyClass::unit(m.rank, i);
      CHECK(pair_with_cycle(s, m, u, cyc) == pair(m, u, c));
    }
  }
}

TEST_CASE("primitivity and mod-2 reduction") {
  CHECK(is_primitive(HomologyClass::unit(4, 2)));
  CHECK_FALSE(is_primitive(2 * HomologyClass({1, -3, 0, 5})));
  CHECK_FALSE(is_primitive(HomologyClass(4)));
  CHECK(is_primitive(HomologyClass({2, 3, 0, 0})));
  CHECK(mod2(HomologyClass({-1, 2, 3, -4})) == Mod2Vector{1, 0, 1, 0});
}

TEST_CASE("exact linear algebra against brute force") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 5);
    IntMatrix a = zero_matrix(n, n);
    for (auto& row : a)
      for (auto& x : row) x = static_cast<std::int64_t>(rng() % 7) - 3;
    CHECK(determinant(a) == brute_determinant(a));
    if (brute_determinant(a) != 0) {
      std::vector<std::int64_t> x(n);
      for (auto& v : x) v = static_cast<std::int64_t>(rng() % 5) - 2;
      std::vector<std::int64_t> b(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i] += a[i][j] * x[j];
      CHECK(solve_integral(a, b) == x);
    }
  }
  CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 62, 4), Error);
  Mod2Matrix m{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  CHECK(rank_mod2(m) == 2);
  auto s = solve_mod2({{1, 1}, {0, 1}}, {1, 1});
  REQUIRE(s.has_value());
  CHECK(*s == Mod2Vector{0, 1});
}
