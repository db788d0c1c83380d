#pragma once

// Trivalent fatgraphs as rotation systems on darts.
//
// Dart ids run 0..2E-1; edge k owns darts 2k and 2k+1 and reversal is d^1.
// A vertex lists the darts pointing INTO it in counterclockwise order.
// Bordered graphs carry one univalent vertex p; the tail dart runs from p
// into the graph.  Punctured graphs are purely trivalent.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fatgraph/error.hpp"

namespace fg {

using Dart = int;

constexpr Dart reverse(Dart d) noexcept { return d ^ 1; }
constexpr int edge_of(Dart d) noexcept { return d >> 1; }
constexpr Dart dart_of(int edge, int side = 0) noexcept { return 2 * edge + side; }

enum class Kind { Bordered, Punctured };

const char* to_string(Kind k);

struct RotationSystem {
  Kind kind = Kind::Bordered;
  std::vector<std::vector<Dart>> vertices;
  std::optional<Dart> tail;

  bool operator==(const RotationSystem&) const = default;
};

struct ValidationReport {
  bool ok = false;
  int genus = 0;
  std::optional<ErrorKind> error;
  std::string message;
};

ValidationReport validate(const RotationSystem& rs);

// Linear (bordered) or anchored cyclic (punctured) order of the boundary walk.
struct BoundaryOrder {
  std::vector<Dart> walk;      // position -> dart
  std::vector<int> position;   // dart -> position
};

class Fatgraph {
 public:
  Fatgraph() = default;

  // Validates; throws Error with the validation kind on failure.
  static Fatgraph make(RotationSystem rs);
  // Skips validation. Caller guarantees a single boundary cycle.
  static Fatgraph make_unchecked(RotationSystem rs);

  Kind kind() const noexcept { return rs_.kind; }
  bool bordered() const noexcept { return rs_.kind == Kind::Bordered; }
  int num_darts() const noexcept { return static_cast<int>(head_.size()); }
  int num_edges() const noexcept { return num_darts() / 2; }
  int num_vertices() const noexcept { return static_cast<int>(rs_.vertices.size()); }
  int genus() const noexcept { return genus_; }

  const RotationSystem& rotation() const noexcept { return rs_; }
  std::span<const Dart> vertex(int v) const { return rs_.vertices[v]; }
  int valence(int v) const { return static_cast<int>(rs_.vertices[v].size()); }

  // Vertex the dart points to.
  int head(Dart d) const { return head_[d]; }
  // Vertex the dart leaves.
  int source(Dart d) const { return head_[reverse(d)]; }
  Dart next_at_vertex(Dart d) const;
  Dart prev_at_vertex(Dart d) const;

  Dart tail() const;
  int univalent_vertex() const;
  bool is_tail_edge(int edge) const { return bordered() && edge == edge_of(rs_.tail.value()); }
  bool is_loop(int edge) const { return head_[2 * edge] == head_[2 * edge + 1]; }

  // Boundary walk: successor of d is the reversal of the next incoming dart
  // counterclockwise at head(d).
  Dart boundary_successor(Dart d) const { return reverse(next_at_vertex(d)); }
  const BoundaryOrder& order() const noexcept { return order_; }
  int position(Dart d) const { return order_.position[d]; }
  Dart at(int pos) const { return order_.walk[pos]; }
  bool preferred(Dart d) const { return position(d) < position(reverse(d)); }
  Dart preferred_dart(int edge) const { return preferred(2 * edge) ? 2 * edge : 2 * edge + 1; }

  bool operator==(const Fatgraph& o) const { return rs_ == o.rs_; }

 private:
  void index();

  RotationSystem rs_;
  std::vector<int> head_;
  std::vector<int> slot_;
  BoundaryOrder order_;
  int genus_ = 0;
};

BoundaryOrder boundary_order(const Fatgraph& g);

}  // namespace fg
