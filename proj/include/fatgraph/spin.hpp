#pragma once

// Quadratic forms on mod-2 homology from edge labellings of a bordered
// spine.  An edge labelling is admissible when the three edges at every
// trivalent vertex sum to 0 (Type 1) or 1 (Type 2); a loop counts twice.

#include <cstdint>
#include <vector>

#include "fatgraph/homology.hpp"
#include "fatgraph/moves.hpp"

namespace fg {

enum class FormTag { QG, QBar, Wind, Custom };
const char* to_string(FormTag t);

struct EdgeForm {
  Mod2Vector values;  // per edge id
  FormTag tag = FormTag::Custom;
};

// Values on the marking basis plus the mod-2 Gram matrix.
struct QuadForm {
  Mod2Vector basis_values;
  Mod2Matrix gram;
  std::uint8_t evaluate(const Mod2Class& x) const;
  bool operator==(const QuadForm&) const = default;
};

bool q_membership(const Fatgraph& g, const EdgeForm& form);

// Value of the chain sum_e c_e e under the extension
// q(sum) = sum c_e q(e) + sum_{e<e'} c_e c_e' (mu2(e).mu2(e')).
std::uint8_t evaluate_chain(const Marking& m, const EdgeForm& form, const Mod2Vector& chain);
// A chain whose mod-2 class is x.
Mod2Vector chain_for(const Marking& m, const Mod2Class& x);
QuadForm extend_form(const Fatgraph& g, const Marking& m, const EdgeForm& form);

EdgeForm q_G(const Fatgraph& g);
EdgeForm q_bar(const Fatgraph& g);
// lambda per edge (for the preferred dart) and the winding form from it.
std::vector<int> winding_lambda(const Fatgraph& g);
EdgeForm q_wind(const Fatgraph& g);

// Value on the flipped edge from the vertex condition at its endpoint
// carrying b and c, cross-checked at the other endpoint.
EdgeForm transport_form(const FlipMove& move, const EdgeForm& form);

// Row of the six-case table: which endpoints of the new edge are Type 2.
struct FlipCase {
  bool bc_end_type2 = false;  // endpoint carrying b, c
  bool ad_end_type2 = false;  // endpoint carrying a, d
  int table_row() const;      // 1 (I), 2 (II/V), 3 (III/IV) or 6 (VI)
};
FlipCase flip_case(const FlipMove& move);

Mod2Class form_difference(const Fatgraph& g, const Marking& m, const EdgeForm& f1, const EdgeForm& f2);

// Number of admissible labellings, from the rank of the vertex system.
std::uint64_t admissible_count(const Fatgraph& g);

}  // namespace fg
