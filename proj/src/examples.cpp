#include "fatgraph/examples.hpp"

#include <map>

namespace fg {

BlockSpine block_spine(int g) {
  if (g < 1) throw Error(ErrorKind::InvalidInputs, "genus must be at least 1");
  BlockSpine s;
  int next = 0;
  s.edges.assign(g, {-1, -1, -1, -1, -1, -1});
  for (int i = 0; i < g; ++i)
    for (int k = 0; k < 6; ++k)
      if (k != 5 || i + 1 < g) s.edges[i][k] = next++;
  auto fwd = [&](int i, int k) { return 2 * s.edges[i][k]; };
  auto bwd = [&](int i, int k) { return 2 * s.edges[i][k] + 1; };

  RotationSystem rs;
  rs.kind = Kind::Bordered;
  rs.vertices.push_back({bwd(0, 0)});
  for (int i = 0; i < g; ++i) {
    const bool last = i + 1 == g;
    rs.vertices.push_back({fwd(i, 0), bwd(i, 1), bwd(i, 4)});                   // D
    rs.vertices.push_back({fwd(i, 1), bwd(i, 2), fwd(i, 3)});                   // B
    rs.vertices.push_back({fwd(i, 2), bwd(i, 3), last ? fwd(i, 4) : fwd(i, 5)}); // A
    if (!last) rs.vertices.push_back({fwd(i, 4), bwd(i, 5), bwd(i + 1, 0)});    // C
  }
  rs.tail = fwd(0, 0);
  s.graph = Fatgraph::make(std::move(rs));
  return s;
}

Fatgraph linear_chord_diagram(int g, const std::vector<std::pair<int, int>>& chords) {
  const int top = 4 * g;
  if (static_cast<int>(chords.size()) != 2 * g) throw Error(ErrorKind::InvalidInputs, "need 2g chords");
  // Edges 0..4g-2 are the backbone, then one edge per chord.
  std::map<int, Dart> chord_in;  // point -> dart arriving there along its chord
  Dart right_of_last = -1;       // dart arriving at 4g-1 from the right
  int e = top - 1;
  for (auto [p, q] : chords) {
    if (p > q) std::swap(p, q);
    if (p < 1 || q > top || p == q) throw Error(ErrorKind::InvalidInputs, "chord endpoint out of range");
    if (q == top) {
      // Merged with the last backbone piece: runs from 4g-1 to p.
      chord_in[p] = 2 * e;
      right_of_last = 2 * e + 1;
    } else {
      chord_in[q] = 2 * e;
      chord_in[p] = 2 * e + 1;
    }
    ++e;
  }
  if (right_of_last == -1 || static_cast<int>(chord_in.size()) != top - 1)
    throw Error(ErrorKind::InvalidInputs, "chords must pair the points 1..4g");
  RotationSystem rs;
  rs.kind = Kind::Bordered;
  rs.vertices.push_back({1});
  for (int i = 1; i < top; ++i) {
    const Dart right = i + 1 < top ? 2 * i + 1 : right_of_last;
    rs.vertices.push_back({right, chord_in.at(i), 2 * (i - 1)});
  }
  rs.tail = 0;
  return Fatgraph::make(std::move(rs));
}

// Edges: 0 A-B, 1 B-C, 2 C-D, 3 D-E, 4 A-F, 5 F-E, 6 F-C, 7 A-D, 8 B-E.
Fatgraph hexagon_spine() {
  RotationSystem rs;
  rs.kind = Kind::Punctured;
  rs.vertices = {
      {1, 15, 9},    // A
      {17, 0, 3},    // B
      {5, 2, 12},    // C
      {14, 4, 7},    // D
      {10, 16, 6},   // E
      {11, 8, 13},   // F
  };
  return Fatgraph::make(std::move(rs));
}

// Top row P1-Q-P2, bottom row R1-S-R2, rung S->Q, doubled sides P1->R1
// (edges 5, 6) and P2->R2 (edges 7, 8).
// Edges: 0 P1-Q, 1 Q-P2, 2 R1-S, 3 S-R2, 4 S-Q.
Fatgraph double_ladder_spine() {
  RotationSystem rs;
  rs.kind = Kind::Punctured;
  rs.vertices = {
      {1, 11, 13},   // P1
      {3, 0, 8},     // Q
      {15, 2, 17},   // P2
      {5, 10, 12},   // R1
      {7, 4, 9},     // S
      {14, 6, 16},   // R2
  };
  return Fatgraph::make(std::move(rs));
}

Fatgraph double_ladder_straight_spine() {
  RotationSystem rs;
  rs.kind = Kind::Punctured;
  rs.vertices = {
      {1, 11, 13},   // P1
      {3, 0, 8},     // Q
      {15, 2, 17},   // P2
      {5, 10, 12},   // R1
      {7, 9, 4},     // S
      {14, 6, 16},   // R2
  };
  return Fatgraph::make(std::move(rs));
}

}  // namespace fg
