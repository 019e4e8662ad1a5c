#include "ferrers/christoffel.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ferrers/decompose.hpp"
#include "ferrers/errors.hpp"

namespace ferrers {

Diagram christoffel_diagram(const Lattice& lat) {
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(lat.a > 0 ? lat.a - 1 : 0));
    for (std::int64_t l = lat.a - 1; l >= 1; --l) rows.push_back(l * lat.b / lat.a);
    return Diagram(std::move(rows));
}

DyckWord christoffel_word(const Lattice& lat) {
    return diagram_to_word(christoffel_diagram(lat), lat);
}

Natural christoffel_cell_count(const Lattice& lat) {
    Natural twice = Natural(lat.a - 1) * (lat.b - 1) + std::gcd(lat.a, lat.b) - 1;
    return divide_exact(twice, 2);
}

int row_increment(const Lattice& lat, std::int64_t l) {
    if (lat.a >= lat.b)
        raise(errc::domain_violation, "row_increment needs a < b");
    if (l < 1 || l > lat.a - 1)
        raise(errc::domain_violation, "row index l = " + std::to_string(l));
    return static_cast<int>(lat.b * l / lat.a - (lat.b - 1) * l / lat.a);
}

std::vector<CellRef> excess_cells(const Lattice& from, const Lattice& to) {
    if (from.a != to.a || to.b != from.b + 1)
        raise(errc::unsupported_gap, std::to_string(from.a) + "x" + std::to_string(from.b) +
                                         " -> " + std::to_string(to.a) + "x" +
                                         std::to_string(to.b));
    std::vector<CellRef> cells;
    for (std::int64_t l = 1; l <= to.a - 1; ++l) {  // l ascending = shortest row first
        Row grown = to.b * l / to.a;
        Row old = from.b * l / from.a;
        if (grown > old) cells.push_back({to.a - l, grown});
    }
    return cells;
}

Natural comparison_difference(const Lattice& from, const Lattice& to) {
    std::vector<CellRef> cells = excess_cells(from, to);  // validates the gap

    std::vector<Row> grown;
    for (std::int64_t l = to.a - 1; l >= 1; --l) grown.push_back(to.b * l / to.a);

    // Paths gained by the extra column, partitioned by the last excess cell
    // they pass through: the j-th group lives in the grown diagram with every
    // later (longer-row) excess cell deleted.
    Natural total = 0;
    for (std::size_t j = 0; j < cells.size(); ++j) {
        std::vector<Row> shape = grown;
        for (std::size_t later = j + 1; later < cells.size(); ++later)
            shape[static_cast<std::size_t>(cells[later].row - 1)] -= 1;
        // Deletions can break monotonicity when a > b; the diagrams bounded
        // by the shape are exactly those bounded by its running minimum.
        for (std::size_t i = 1; i < shape.size(); ++i)
            shape[i] = std::min(shape[i], shape[i - 1]);

        std::int64_t row = cells[j].row;
        if (shape[static_cast<std::size_t>(row - 1)] < cells[j].col) continue;  // cell gone
        total += count_with_pinned_row(Diagram(std::move(shape)), row);
    }
    return total;
}

}  // namespace ferrers
