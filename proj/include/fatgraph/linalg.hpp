#pragma once

// Small exact integer and mod-2 linear algebra.  Matrices here are at most
// a few dozen rows; everything is checked against 64-bit overflow.

#include <cstdint>
#include <optional>
#include <vector>

namespace fg {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using Mod2Vector = std::vector<std::uint8_t>;
using Mod2Matrix = std::vector<Mod2Vector>;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

IntMatrix zero_matrix(int rows, int cols);
std::int64_t determinant(IntMatrix m);
// Solution of A x = b for square nonsingular A when it is integral.
std::optional<std::vector<std::int64_t>> solve_integral(const IntMatrix& a, const std::vector<std::int64_t>& b);
IntMatrix inverse_unimodular(const IntMatrix& a);
// Index of the lattice spanned by `rows` in Z^dim; 0 when rank < dim.
std::int64_t lattice_index(IntMatrix rows, int dim);
int rank_rational(IntMatrix rows);

int rank_mod2(Mod2Matrix rows);
// Some x with A x = b over GF(2), A given by rows.
std::optional<Mod2Vector> solve_mod2(Mod2Matrix a, Mod2Vector b);

}  // namespace fg
