#pragma once

// Hand-built spines used as fixed test inputs.

#include <array>
#include <utility>
#include <vector>

#include "fatgraph/fatgraph.hpp"

namespace fg {

// The ladder-of-blocks bordered spine of genus g.  Block i (0-based) has
// vertices D, B, A and, except in the last block, C.  Edge roles:
//   0: into D (the tail for block 0, from the previous C otherwise)
//   1: D->B   2: B->A   3: A->B   4: D->C (D->A in the last block)   5: C->A
struct BlockSpine {
  Fatgraph graph;
  std::vector<std::array<int, 6>> edges;  // edge id per role, -1 if absent
};
BlockSpine block_spine(int genus);

// Backbone interval 0..4g with 2g chords above it; `chords` pairs the points
// 1..4g.  The backbone edges are 0..4g-2 and edge 0 is the tail.
Fatgraph linear_chord_diagram(int genus, const std::vector<std::pair<int, int>>& chords);

// Punctured genus-2 spines drawn as planar figures with crossings.
Fatgraph hexagon_spine();       // two rows joined by crossing arcs
Fatgraph double_ladder_spine(); // doubled side edges, middle rung below
Fatgraph double_ladder_straight_spine();  // same with a straight middle rung

}  // namespace fg
