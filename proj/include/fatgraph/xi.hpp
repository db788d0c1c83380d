#pragma once

// The invariant xi: a sum of per-vertex contributions read off the vertex
// frames, and its consistency checks.

#include <vector>

#include "fatgraph/cocycle.hpp"
#include "fatgraph/homology.hpp"
#include "fatgraph/moves.hpp"
#include "fatgraph/structure.hpp"

namespace fg {

struct VertexContribution {
  int vertex = -1;
  VertexType type = VertexType::Type1;
  Dart plus = -1;   // e2 for Type 1, e1 for Type 2
  Dart minus = -1;  // e3 for both
  HomologyClass value;
};

struct XiResult {
  HomologyClass xi;
  Mod2Class xi_mod2;
  std::vector<VertexContribution> contributions;
};

XiResult xi(const Fatgraph& g, const Marking& m);
// Sum of the mod-2 markings over all unoriented edges.
Mod2Class xi_mod2_direct(const Fatgraph& g, const Marking& m);

struct DeltaCheck {
  bool ok = false;
  HomologyClass lhs;  // xi(result) - xi(source)
  HomologyClass rhs;  // 2 j' - m
};
DeltaCheck check_delta(const FlipMove& move, const Marking& m);

struct GluingCheck {
  bool ok = false;
  std::size_t cycles = 0;
};
// xi of the glued graph against xi(host) + mu(at) on host cycles and
// xi(guest) on guest cycles.
GluingCheck check_gluing(const Fatgraph& host, Dart at, const Fatgraph& guest);

// Punctured invariant via the lift with a tail at `at`: xi(lift) - mu(at).
struct PuncturedXi {
  Dart at = -1;
  TailAttachment lift;
  Marking marking;
  HomologyClass xi;
  std::vector<std::int64_t> pairing;  // against fundamental_cycles of the punctured graph
};
PuncturedXi xi_punctured(const Fatgraph& g, Dart at);

struct TailSlideCheck {
  bool ok = false;
  HomologyClass delta;
  HomologyClass mu_c;
};
TailSlideCheck check_tail_slide(const Fatgraph& g);

// Balanced iff the punctured invariant vanishes mod 2, plus independence of
// the tail position.
struct BalancedCheck {
  bool ok = false;
  bool balanced = false;
  bool xi_even = false;
  bool independent = false;
};
BalancedCheck check_balanced_criterion(const Fatgraph& g);

}  // namespace fg
