#pragma once

// The extremal diagram of an a x b lattice: the largest diagram whose path
// stays weakly below the diagonal (rows floor(l*b/a), l = a-1 .. 1). Widening
// the lattice by one column grows some rows by one cell each; summing the
// paths forced through those new cells gives the count difference between
// consecutive widths.

#include <cstdint>
#include <vector>

#include "ferrers/diagram.hpp"
#include "ferrers/numbers.hpp"

namespace ferrers {

Diagram christoffel_diagram(const Lattice& lat);
DyckWord christoffel_word(const Lattice& lat);

// ((a-1)(b-1) + gcd(a,b) - 1) / 2, the cell count of christoffel_diagram.
Natural christoffel_cell_count(const Lattice& lat);

// How much row l (1 = shortest, counted from the short end) grows when the
// lattice widens from (a, b-1) to (a, b): floor(bl/a) - floor((b-1)l/a),
// always 0 or 1. Requires a < b and 1 <= l <= a-1.
int row_increment(const Lattice& lat, std::int64_t l);

// The cells gained by christoffel_diagram when the width grows by one,
// shortest row first. Requires from.a == to.a and to.b == from.b + 1.
std::vector<CellRef> excess_cells(const Lattice& from, const Lattice& to);

// count(christoffel(to)) - count(christoffel(from)) for consecutive widths,
// computed as a sum of pinned-row products over the excess cells, never by
// subtraction.
Natural comparison_difference(const Lattice& from, const Lattice& to);

}  // namespace ferrers
