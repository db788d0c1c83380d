#pragma once

// Canonical forms and isomorphism tests.  Bordered graphs are canonicalised
// from the tail; punctured graphs by the least relabelling over all anchors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fatgraph/fatgraph.hpp"

namespace fg {

// Relabel from a boundary anchor: edges are numbered by first appearance in
// the walk, the first-seen dart of each edge gets the even id.
std::vector<Dart> anchored_relabelling(const Fatgraph& g, Dart anchor);
Fatgraph apply_relabelling(const Fatgraph& g, const std::vector<Dart>& map);

Fatgraph canonical_graph(const Fatgraph& g);
std::string canonical_form(const Fatgraph& g);

// Dart map from `from` to `to` preserving rotations (and the tail when
// bordered), or nullopt.
std::optional<std::vector<Dart>> isomorphism(const Fatgraph& from, const Fatgraph& to);
bool is_rotation_isomorphism(const Fatgraph& from, const Fatgraph& to, const std::vector<Dart>& map);

std::uint64_t fnv1a64(const std::string& s);
std::string short_hash(const std::string& canonical);

}  // namespace fg
