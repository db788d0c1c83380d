#pragma once

// Local moves: Whitehead flips, tail slides, gluing and tail attachment.
// All moves keep existing dart ids where the dart survives.

#include <random>
#include <vector>

#include "fatgraph/fatgraph.hpp"

namespace fg {

// Flip of edge k with x = 2k.  At head(x) the ccw order is (x, a, b), at
// head(~x) it is (~x, c, d).  The result has (x, b, c) and (~x, d, a).
struct FlipFrame {
  Dart x = -1;
  Dart a = -1, b = -1, c = -1, d = -1;
};

struct FlipMove {
  Fatgraph source;
  Fatgraph result;
  int edge = -1;
  FlipFrame frame;
};

bool flippable(const Fatgraph& g, int edge);
std::vector<int> flippable_edges(const Fatgraph& g);
FlipMove flip(const Fatgraph& g, int edge);

// Flip of the edge right after the tail; c is the second dart
// counterclockwise after it at its head.
struct TailSlide {
  FlipMove move;
  Dart e1 = -1, b = -1, c = -1;
};
TailSlide tail_slide(const Fatgraph& g);

// Host dart `at` is split at its midpoint into first half (keeps the id)
// and second half (new id).  The guest tail is attached on the right.
struct GlueResult {
  Fatgraph graph;
  Dart split = -1;
  Dart second_half = -1;
  int guest_offset = 0;
  Dart guest_stem = -1;  // former guest tail, now leaving the split vertex
  std::vector<Dart> map_host_walk(const std::vector<Dart>& walk) const;
  std::vector<Dart> map_guest_walk(const std::vector<Dart>& walk) const;
};
GlueResult glue(const Fatgraph& host, Dart at, const Fatgraph& guest);

struct TailAttachment {
  Fatgraph graph;
  Dart split = -1;
  Dart second_half = -1;
  Dart tail = -1;
  std::vector<Dart> map_walk(const std::vector<Dart>& walk) const;
};
TailAttachment attach_tail(const Fatgraph& punctured, Dart at);
Fatgraph remove_tail(const Fatgraph& bordered);

// Dart relabelling: edge e becomes edge_perm[e], orientation swapped when
// swap[e] is set; vertices are listed in vertex_perm order.
Fatgraph relabel(const Fatgraph& g, const std::vector<int>& edge_perm, const std::vector<char>& swap,
                 const std::vector<int>& vertex_perm);
Fatgraph random_relabel(const Fatgraph& g, std::mt19937_64& rng);

}  // namespace fg
