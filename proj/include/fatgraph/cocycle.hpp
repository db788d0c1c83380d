#pragma once

// Flip cocycles with values in wedge^3 H, H and H.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fatgraph/homology.hpp"
#include "fatgraph/moves.hpp"

namespace fg {

class Trivector {
 public:
  Trivector() = default;
  explicit Trivector(int rank) : rank_(rank) {}
  int rank() const noexcept { return rank_; }
  // Coefficient of b_i ^ b_j ^ b_k with i < j < k.
  const std::map<std::array<int, 3>, std::int64_t>& terms() const noexcept { return t_; }
  void add(const std::array<int, 3>& ijk, std::int64_t v);
  bool is_zero() const { return t_.empty(); }
  std::string str() const;

  Trivector& operator+=(const Trivector& o);
  Trivector& operator-=(const Trivector& o);
  bool operator==(const Trivector&) const = default;

 private:
  int rank_ = 0;
  std::map<std::array<int, 3>, std::int64_t> t_;
};

Trivector wedge3(const HomologyClass& x, const HomologyClass& y, const HomologyClass& z);
// x^y^z -> (x.y)z + (y.z)x + (z.x)y, extended linearly.
HomologyClass contraction(const Marking& m, const Trivector& t);

struct CocycleValues {
  Trivector j;
  HomologyClass j_prime;
  HomologyClass m;
};
// Values on one flip, in the marking of the flip's source.
CocycleValues cocycle_values(const Marking& mk, const FlipMove& move);

struct CocycleSums {
  Trivector j;
  HomologyClass j_prime;
  HomologyClass m;
  bool is_zero() const { return j.is_zero() && j_prime.is_zero() && m.is_zero(); }
  void accumulate(const CocycleValues& v);
};

struct SequenceResult {
  CocycleSums sums;
  Fatgraph final_graph;
  Marking final_marking;
};
// Throws Error(FlipFailed) naming the step when an edge cannot be flipped.
SequenceResult evaluate_sequence(const Fatgraph& g, const Marking& m, const std::vector<int>& edges);

struct RelationViolation {
  std::string relation;
  std::vector<int> edges;
  std::string detail;
};

struct RelationReport {
  std::size_t involutions = 0;
  std::size_t commutations = 0;
  std::size_t pentagons = 0;
  std::vector<RelationViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Involutivity for every flippable edge, every commutativity square, and
// pentagons up to `budget` (all of them when budget is 0), sampled with
// `seed` when there are more.
RelationReport verify_relations(const Fatgraph& g, std::size_t budget = 0, std::uint64_t seed = 0);

// Pentagon configurations: ordered pairs of flippable edges meeting in
// exactly one vertex.
std::vector<std::array<int, 2>> pentagon_pairs(const Fatgraph& g);
std::vector<std::array<int, 2>> commuting_pairs(const Fatgraph& g);

}  // namespace fg
