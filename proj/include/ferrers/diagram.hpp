#pragma once

// Ferrers diagrams of Dyck paths in an a x b lattice, and the coding between
// paths (words over {0,1}, 0 = south, 1 = east) and diagrams (weakly
// decreasing row lengths, longest row first, trailing zeros trimmed).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ferrers/errors.hpp"

namespace ferrers {

using Row = std::int64_t;

// An a x b lattice: paths take a south steps and b east steps.
struct Lattice {
    std::int64_t a;
    std::int64_t b;

    Lattice(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {
        if (a < 1 || b < 1) raise(errc::invalid_lattice, "lattice sides must be >= 1");
    }

    friend bool operator==(const Lattice&, const Lattice&) = default;
};

// 1-based reference to the cell at the end of a row: row counts from the
// longest row, col is the row length at which the cell sits.
struct CellRef {
    std::int64_t row = 0;
    std::int64_t col = 0;

    friend bool operator==(const CellRef&, const CellRef&) = default;
    friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

class Diagram {
  public:
    Diagram() = default;  // the empty diagram
    explicit Diagram(std::vector<Row> rows);
    Diagram(std::initializer_list<Row> rows);

    const std::vector<Row>& rows() const noexcept { return rows_; }
    bool empty() const noexcept { return rows_.empty(); }
    std::int64_t row_count() const noexcept { return static_cast<std::int64_t>(rows_.size()); }

    // 1-based; rows past the end read as 0.
    Row row(std::int64_t i) const noexcept {
        return (i >= 1 && i <= row_count()) ? rows_[static_cast<std::size_t>(i - 1)] : 0;
    }

    std::int64_t cells() const noexcept;
    bool contains(const Diagram& inner) const noexcept;  // componentwise row bound
    std::string bracket() const;                         // "[4,3,1]"; "[]" when empty

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram&, const Diagram&) = default;

  private:
    std::vector<Row> rows_;  // weakly decreasing, all > 0
};

class DyckWord {
  public:
    DyckWord() = default;
    explicit DyckWord(std::string letters);  // validates the {0,1} alphabet

    const std::string& letters() const noexcept { return letters_; }
    std::int64_t zeros() const noexcept;
    std::int64_t ones() const noexcept;

    friend bool operator==(const DyckWord&, const DyckWord&) = default;
    friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

  private:
    std::string letters_;
};

// Comma-separated nonnegative integers, weakly monotone in either direction
// (normalized to decreasing); "" is the empty diagram.
Diagram parse_diagram(std::string_view text);

// (n-1, n-2, ..., 1) <-> n; the empty diagram is the staircase of size 1.
std::optional<std::int64_t> is_staircase(const Diagram& d);
Diagram staircase_of(std::int64_t n);

// Least n with d contained in staircase_of(n).
std::int64_t min_enclosing_staircase(const Diagram& d);

// Row i of the diagram counts the east steps taken before the (a-i+1)-th
// south step; the two maps below are mutually inverse on words of the lattice.
Diagram word_to_diagram(const DyckWord& w, const Lattice& lat);
DyckWord diagram_to_word(const Diagram& d, const Lattice& lat);

// True when the path of d stays weakly below the lattice diagonal, i.e.
// row i <= floor((a-i)*b/a) for every row.
bool is_dyck(const Diagram& d, const Lattice& lat);

}  // namespace ferrers
