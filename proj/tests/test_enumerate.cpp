#include <set>

#include "doctest.h"
#include "fatgraph/canonical.hpp"
#include "fatgraph/enumerate.hpp"
#include "fatgraph/examples.hpp"
#include "fatgraph/io.hpp"

using namespace fg;

namespace {
std::string data(const char* name) { return std::string(FATGRAPH_DATA_DIR) + "/" + name; }

std::set<std::string> forms(const std::vector<Fatgraph>& gs) {
  std::set<std::string> s;
  for (const auto& g : gs) s.insert(canonical_form(g));
  return s;
}
}  // namespace

TEST_CASE("class counts") {
  CHECK(enumerate({1, Kind::Bordered, std::nullopt}).size() == 1);
  CHECK(enumerate({2, Kind::Bordered, std::nullopt}).size() == 105);
  CHECK(enumerate({1, Kind::Punctured, std::nullopt}).size() == 1);
  CHECK(enumerate({2, Kind::Punctured, std::nullopt}).size() == 9);
  CHECK(count_rooted(3, Kind::Bordered) == 50050);
  CHECK_THROWS_AS(enumerate({4, Kind::Bordered, std::nullopt}), Error);
}

TEST_CASE("output is sorted, duplicate free, canonical and flip closed") {
  for (Kind k : {Kind::Bordered, Kind::Punctured}) {
    const auto cls = enumerate({2, k, std::nullopt});
    std::vector<std::string> strs;
    for (const auto& g : cls) {
      strs.push_back(serialize(g));
      CHECK(serialize(g) == canonical_form(g));
    }
    CHECK(std::is_sorted(strs.begin(), strs.end()));
    const auto set = forms(cls);
    CHECK(set.size() == cls.size());
    for (const auto& g : cls)
      for (int e : flippable_edges(g)) CHECK(set.count(canonical_form(flip(g, e).result)) == 1);
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  for (Kind k : {Kind::Bordered, Kind::Punctured})
    CHECK(enumerate({2, k, std::nullopt}, Exec::Serial) == enumerate({2, k, std::nullopt}, Exec::Parallel));
}

TEST_CASE("hand-encoded balanced spines are among the punctured classes") {
  const auto set = forms(enumerate({2, Kind::Punctured, std::nullopt}));
  for (const char* f : {"hexagon.fg", "double_ladder.fg", "double_ladder_straight.fg"})
    CHECK(set.count(canonical_form(read_fatgraph(data(f)))) == 1);
}

TEST_CASE("limit caps the output") {
  CHECK(enumerate({2, Kind::Bordered, std::size_t{10}}).size() == 10);
}

TEST_CASE("random walks replay and stay valid") {
  const Fatgraph s = block_spine(3).graph;
  const auto a = walk_states({42, 300, s}), b = walk_states({42, 300, s});
  CHECK(a == b);
  CHECK(a != walk_states({43, 300, s}));
  for (const auto& g : a) CHECK(validate(g.rotation()).genus == 3);
}

TEST_CASE("a long genus two walk visits every class") {
  std::set<std::string> seen;
  random_walk({1, 100000, block_spine(2).graph},
              [&](const FlipMove& mv) { seen.insert(canonical_form(mv.result)); });
  CHECK(seen.size() == 105);
}
