#pragma once

// Text format:
//
//   fatgraph v1 bordered        (or punctured)
//   tail: 0                     (bordered only; dart leaving the univalent vertex)
//   v0: 1
//   v1: 0 3 5                   (incoming darts, counterclockwise)
//
// Lines starting with '#' and blank lines are ignored.

#include <string>
#include <string_view>

#include "fatgraph/fatgraph.hpp"

namespace fg {

RotationSystem parse_rotation(std::string_view text);
Fatgraph parse_fatgraph(std::string_view text);
std::string serialize(const RotationSystem& rs);
std::string serialize(const Fatgraph& g);

Fatgraph read_fatgraph(const std::string& path);
RotationSystem read_rotation(const std::string& path);
void write_fatgraph(const std::string& path, const Fatgraph& g);

}  // namespace fg
