#include "ferrers/oracle.hpp"

#include <algorithm>
#include <string>

#include "ferrers/errors.hpp"

namespace ferrers {

Natural count_contained(const Diagram& d) {
    if (d.empty()) return 1;
    // ways[v] = contained diagrams whose current (last processed) row is v.
    std::vector<Natural> ways(static_cast<std::size_t>(d.row(1)) + 1, Natural(1));
    for (std::int64_t i = 2; i <= d.row_count(); ++i) {
        // suffix[v] = sum of ways[u] for u >= v; next row v extends any of those.
        Natural suffix = 0;
        std::vector<Natural> next(static_cast<std::size_t>(d.row(i)) + 1);
        for (std::int64_t v = d.row(i - 1); v >= 0; --v) {
            suffix += ways[static_cast<std::size_t>(v)];
            if (v <= d.row(i)) next[static_cast<std::size_t>(v)] = suffix;
        }
        ways = std::move(next);
    }
    Natural total = 0;
    for (const Natural& w : ways) total += w;
    return total;
}

namespace {

void contained_rec(const Diagram& d, std::vector<Row>& prefix,
                   const std::function<void(const Diagram&)>& visit) {
    visit(Diagram(prefix));
    std::int64_t i = static_cast<std::int64_t>(prefix.size()) + 1;
    if (i > d.row_count()) return;
    Row cap = std::min(prefix.empty() ? d.row(1) : prefix.back(), d.row(i));
    for (Row v = 1; v <= cap; ++v) {
        prefix.push_back(v);
        contained_rec(d, prefix, visit);
        prefix.pop_back();
    }
}

void words_rec(std::string& prefix, std::int64_t zeros_left, std::int64_t ones_left,
               const Lattice& lat, std::vector<DyckWord>& out) {
    if (zeros_left == 0 && ones_left == 0) {
        DyckWord word(prefix);
        if (is_dyck(word_to_diagram(word, lat), lat)) out.push_back(std::move(word));
        return;
    }
    if (zeros_left > 0) {
        prefix.push_back('0');
        words_rec(prefix, zeros_left - 1, ones_left, lat, out);
        prefix.pop_back();
    }
    if (ones_left > 0) {
        prefix.push_back('1');
        words_rec(prefix, zeros_left, ones_left - 1, lat, out);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_contained(const Diagram& d, const std::function<void(const Diagram&)>& visit) {
    std::vector<Row> prefix;
    contained_rec(d, prefix, visit);
}

std::vector<Diagram> enumerate_contained(const Diagram& d, const EnumerationBudget& budget) {
    if (d.cells() > budget.max_cells)
        raise(errc::budget_exceeded, d.bracket() + " has " + std::to_string(d.cells()) +
                                         " cells, budget " + std::to_string(budget.max_cells));
    std::vector<Diagram> out;
    for_each_contained(d, [&](const Diagram& found) { out.push_back(found); });
    return out;  // recursion order is already lexicographic
}

std::vector<DyckWord> enumerate_dyck_words(const Lattice& lat, const EnumerationBudget& budget) {
    if (lat.a * lat.b > 2 * budget.max_cells)
        raise(errc::budget_exceeded, std::to_string(lat.a) + "x" + std::to_string(lat.b) +
                                         " lattice, budget " + std::to_string(budget.max_cells));
    std::vector<DyckWord> out;
    std::string prefix;
    prefix.reserve(static_cast<std::size_t>(lat.a + lat.b));
    words_rec(prefix, lat.a, lat.b, lat, out);
    return out;  // '0' explored before '1' keeps the output lexicographic
}

}  // namespace ferrers
