#pragma once

// Brute-force reference counts, kept deliberately independent of the
// decomposition machinery: a row-by-row prefix-sum DP plus plain
// enumerations. Everything else in the library is tested against these.

#include <cstdint>
#include <functional>
#include <vector>

#include "ferrers/diagram.hpp"
#include "ferrers/numbers.hpp"

namespace ferrers {

struct EnumerationBudget {
    std::int64_t max_cells = 64;
};

// Number of diagrams contained in d, the empty diagram included.
Natural count_contained(const Diagram& d);

// Calls visit once per contained diagram, in lexicographic row order.
// No budget: callers bound the work themselves.
void for_each_contained(const Diagram& d, const std::function<void(const Diagram&)>& visit);

// All diagrams contained in d, lexicographically sorted.
// Requires cells(d) <= budget.max_cells.
std::vector<Diagram> enumerate_contained(const Diagram& d, const EnumerationBudget& budget = {});

// All words with a south letters and b east letters whose diagram is_dyck,
// lexicographically sorted. Requires a*b <= 2 * budget.max_cells.
std::vector<DyckWord> enumerate_dyck_words(const Lattice& lat,
                                           const EnumerationBudget& budget = {});

}  // namespace ferrers
