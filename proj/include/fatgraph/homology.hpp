#pragma once

// Homology marking: every dart gets a class in H = H_1 of the bordered
// surface, written in the basis dual to the non-tree edges of the greedy
// tree.  Classes are exact integer vectors.

#include <cstdint>
#include <string>
#include <vector>

#include "fatgraph/fatgraph.hpp"
#include "fatgraph/linalg.hpp"
#include "fatgraph/moves.hpp"

namespace fg {

class HomologyClass {
 public:
  HomologyClass() = default;
  explicit HomologyClass(int rank) : c_(rank, 0) {}
  explicit HomologyClass(std::vector<std::int64_t> coords) : c_(std::move(coords)) {}
  static HomologyClass unit(int rank, int i);

  int rank() const noexcept { return static_cast<int>(c_.size()); }
  std::int64_t operator[](int i) const { return c_[i]; }
  std::int64_t& operator[](int i) { return c_[i]; }
  const std::vector<std::int64_t>& coords() const noexcept { return c_; }
  bool is_zero() const;
  std::string str() const;

  HomologyClass& operator+=(const HomologyClass& o);
  HomologyClass& operator-=(const HomologyClass& o);
  HomologyClass operator-() const;
  friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
  friend HomologyClass operator-(HomologyClass a, const HomologyClass& b) { return a -= b; }
  friend HomologyClass operator*(std::int64_t k, const HomologyClass& a);
  bool operator==(const HomologyClass&) const = default;

 private:
  std::vector<std::int64_t> c_;
};

using Mod2Class = Mod2Vector;

struct Marking {
  int rank = 0;
  std::vector<HomologyClass> mu;  // per dart
  IntMatrix gram;                 // intersection form on the basis
  std::vector<int> basis_edges;   // non-tree edges, in boundary order

  const HomologyClass& operator()(Dart d) const { return mu[d]; }
};

Marking initial_marking(const Fatgraph& g);

// Preferred dart of a non-tree edge followed by the greedy-tree path back.
std::vector<Dart> greedy_cycle(const Fatgraph& g, int edge);

// Intersection number of the classes of darts x and y (distinct edges),
// read off the crossing of their chords in the boundary disk.
int intersection_sign(const Fatgraph& g, Dart x, Dart y);

std::int64_t pair(const Marking& m, const HomologyClass& x, const HomologyClass& y);

// Class of a closed walk in the graph, and its pairing with x.
HomologyClass cycle_class(const Fatgraph& g, const Marking& m, const std::vector<Dart>& walk);
std::int64_t pair_with_cycle(const Fatgraph& g, const Marking& m, const HomologyClass& x,
                             const std::vector<Dart>& walk);

Marking transport_marking(const Marking& m, const FlipMove& move);

bool is_primitive(const HomologyClass& x);
Mod2Class mod2(const HomologyClass& x);
std::vector<Mod2Class> mod2_marking(const Marking& m);  // per edge, preferred-independent

struct MarkingCheck {
  bool antisymmetric = false;
  bool vertex_sums_zero = false;
  bool generates = false;
  bool gram_skew = false;
  bool unimodular = false;
  bool ok() const { return antisymmetric && vertex_sums_zero && generates && gram_skew && unimodular; }
};
MarkingCheck check_marking(const Fatgraph& g, const Marking& m);

}  // namespace fg
