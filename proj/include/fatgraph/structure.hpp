#pragma once

// Vertex frames, corners and the combinatorial predicates read off the
// boundary order.

#include <vector>

#include "fatgraph/fatgraph.hpp"

namespace fg {

enum class VertexType { Type1 = 1, Type2 = 2 };

// e1 is the earliest incoming dart, e2 and e3 follow counterclockwise.
struct VertexFrame {
  int vertex = -1;
  Dart e1 = -1, e2 = -1, e3 = -1;
  VertexType type = VertexType::Type1;
};

VertexFrame frame_of(const Fatgraph& g, int v);
// All trivalent vertices of a bordered graph, by vertex id.
std::vector<VertexFrame> classify_vertices(const Fatgraph& g);

struct TypeCounts {
  int type1 = 0;
  int type2 = 0;
};
TypeCounts count_types(const Fatgraph& g);

// Consecutive boundary darts (d_i, d_{i+1}); `index` is i.
struct Corner {
  int index = 0;
  Dart first = -1, second = -1;
  int vertex = -1;
};
std::vector<Corner> corners(const Fatgraph& g);

bool is_balanced(const Fatgraph& g);
bool is_chord_diagram(const Fatgraph& g);

// Edges whose preferred dart is the earliest arrival at its head.
std::vector<int> greedy_tree(const Fatgraph& g);
std::vector<bool> tree_mask(const Fatgraph& g, const std::vector<int>& tree_edges);

// Odd-length closed walk between two corners of one vertex at odd distance.
// Empty when the graph is balanced.
std::vector<Dart> find_odd_edge_cycle(const Fatgraph& g);

bool is_closed_walk(const Fatgraph& g, const std::vector<Dart>& walk);

// Net signed traversal count per dart: w[d] = #d - #reverse(d).
std::vector<int> walk_coefficients(const Fatgraph& g, const std::vector<Dart>& walk);

// Fundamental cycles of a breadth-first spanning tree rooted at vertex 0.
std::vector<std::vector<Dart>> fundamental_cycles(const Fatgraph& g);

}  // namespace fg
