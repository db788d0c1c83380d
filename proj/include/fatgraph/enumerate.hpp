#pragma once

// Exhaustive generation of one-boundary trivalent spines and random flip
// walks.  Generation fixes labels along the boundary walk: the walk is
// positions 0..n-1, an involution pairs positions into edges and the
// vertex rotation is i -> pair(i+1), which must consist of 3-cycles (plus
// the univalent fixed point n-1 when bordered).

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fatgraph/fatgraph.hpp"
#include "fatgraph/moves.hpp"

namespace fg {

struct EnumTask {
  int genus = 1;
  Kind kind = Kind::Bordered;
  std::optional<std::size_t> limit;
};

enum class Exec { Serial, Parallel };

// Canonical representatives, sorted by canonical form.
std::vector<Fatgraph> enumerate(const EnumTask& task, Exec exec = Exec::Parallel);

// Number of rooted maps visited by the search (bordered: equals the class count).
std::uint64_t count_rooted(int genus, Kind kind);

struct WalkSpec {
  std::uint64_t seed = 1;
  std::size_t steps = 0;
  Fatgraph start;
};

void random_walk(const WalkSpec& spec, const std::function<void(const FlipMove&)>& visit);
std::vector<Fatgraph> walk_states(const WalkSpec& spec);

}  // namespace fg
