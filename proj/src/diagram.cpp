#include "ferrers/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace ferrers {

namespace {

std::vector<Row> trimmed(std::vector<Row> rows) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return rows;
}

}  // namespace

Diagram::Diagram(std::vector<Row> rows) : rows_(trimmed(std::move(rows))) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 0) raise(errc::negative_entry, "row length " + std::to_string(rows_[i]));
        if (i > 0 && rows_[i] > rows_[i - 1])
            raise(errc::non_monotone_input, "rows must be weakly decreasing");
        if (rows_[i] == 0)
            raise(errc::non_monotone_input, "zero row before a positive row");
    }
}

Diagram::Diagram(std::initializer_list<Row> rows) : Diagram(std::vector<Row>(rows)) {}

std::int64_t Diagram::cells() const noexcept {
    return std::accumulate(rows_.begin(), rows_.end(), std::int64_t{0});
}

bool Diagram::contains(const Diagram& inner) const noexcept {
    if (inner.rows_.size() > rows_.size()) return false;
    for (std::size_t i = 0; i < inner.rows_.size(); ++i)
        if (inner.rows_[i] > rows_[i]) return false;
    return true;
}

std::string Diagram::bracket() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rows_[i]);
    }
    out += ']';
    return out;
}

DyckWord::DyckWord(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_)
        if (c != '0' && c != '1')
            raise(errc::bad_number, std::string("word letter '") + c + "'");
}

std::int64_t DyckWord::zeros() const noexcept {
    return std::count(letters_.begin(), letters_.end(), '0');
}

std::int64_t DyckWord::ones() const noexcept {
    return std::count(letters_.begin(), letters_.end(), '1');
}

Diagram parse_diagram(std::string_view text) {
    std::vector<Row> values;
    std::size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_spaces();
    if (pos == text.size()) return Diagram{};  // "" and blank mean the empty diagram
    while (true) {
        skip_spaces();
        if (pos < text.size() && text[pos] == '-')
            raise(errc::negative_entry, std::string(text));
        Row value = 0;
        auto [next, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || next == text.data() + pos)
            raise(errc::bad_number, "expected a nonnegative integer in \"" + std::string(text) + "\"");
        pos = static_cast<std::size_t>(next - text.data());
        values.push_back(value);
        skip_spaces();
        if (pos == text.size()) break;
        if (text[pos] != ',')
            raise(errc::bad_number, "unexpected character '" + std::string(1, text[pos]) + "'");
        ++pos;
    }
    bool decreasing = std::is_sorted(values.rbegin(), values.rend());
    bool increasing = std::is_sorted(values.begin(), values.end());
    if (!decreasing && !increasing)
        raise(errc::non_monotone_input, std::string(text));
    if (!decreasing) std::reverse(values.begin(), values.end());
    return Diagram(std::move(values));
}

std::optional<std::int64_t> is_staircase(const Diagram& d) {
    std::int64_t k = d.row_count();
    for (std::int64_t i = 1; i <= k; ++i)
        if (d.row(i) != k + 1 - i) return std::nullopt;
    return k + 1;
}

Diagram staircase_of(std::int64_t n) {
    if (n < 1) raise(errc::invalid_size, "staircase size " + std::to_string(n));
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(n - 1));
    for (std::int64_t r = n - 1; r >= 1; --r) rows.push_back(r);
    return Diagram(std::move(rows));
}

std::int64_t min_enclosing_staircase(const Diagram& d) {
    std::int64_t n = 1;
    for (std::int64_t i = 1; i <= d.row_count(); ++i) n = std::max(n, d.row(i) + i);
    return n;
}

Diagram word_to_diagram(const DyckWord& w, const Lattice& lat) {
    if (w.zeros() != lat.a || w.ones() != lat.b)
        raise(errc::letter_count_mismatch,
              "word has " + std::to_string(w.zeros()) + " zeros / " +
                  std::to_string(w.ones()) + " ones for lattice " + std::to_string(lat.a) +
                  "x" + std::to_string(lat.b));
    // East steps seen before each south step, read from the last south step
    // back to the first, give the weakly decreasing row lengths.
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(lat.a));
    Row ones_seen = 0;
    for (char c : w.letters()) {
        if (c == '1')
            ++ones_seen;
        else
            rows.push_back(ones_seen);
    }
    std::reverse(rows.begin(), rows.end());
    return Diagram(std::move(rows));
}

DyckWord diagram_to_word(const Diagram& d, const Lattice& lat) {
    if (d.row_count() > lat.a || d.row(1) > lat.b)
        raise(errc::diagram_exceeds_lattice,
              d.bracket() + " in " + std::to_string(lat.a) + "x" + std::to_string(lat.b));
    std::string letters;
    letters.reserve(static_cast<std::size_t>(lat.a + lat.b));
    Row previous = 0;
    for (std::int64_t i = lat.a; i >= 1; --i) {  // row a is the first south step
        Row ones_before = d.row(i);
        letters.append(static_cast<std::size_t>(ones_before - previous), '1');
        letters.push_back('0');
        previous = ones_before;
    }
    letters.append(static_cast<std::size_t>(lat.b - previous), '1');
    return DyckWord(std::move(letters));
}

bool is_dyck(const Diagram& d, const Lattice& lat) {
    if (d.row_count() > lat.a - 1) return false;
    for (std::int64_t i = 1; i <= d.row_count(); ++i)
        if (d.row(i) > (lat.a - i) * lat.b / lat.a) return false;
    return true;
}

}  // namespace ferrers
