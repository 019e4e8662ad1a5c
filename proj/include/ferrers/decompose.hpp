#pragma once

// Exact counting of the paths below a Ferrers diagram by corner splitting.
//
// Removing the cell at a corner (i, v) of d splits the contained diagrams in
// two: those avoiding the cell are the diagrams of d-with-the-cell-removed,
// and those through it factor into a pair (diagram above the corner row,
// shifted left by v; diagram below it). Iterating until only staircases
// remain yields a polynomial in the Catalan numbers C_n, one variable per
// staircase size, whose evaluation is the path count of d. The corner choice
// never changes the value, only the printed polynomial; canonical_corner
// pins one choice so output is reproducible.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ferrers/diagram.hpp"
#include "ferrers/numbers.hpp"

namespace ferrers {

class CatalanPolynomial {
  public:
    // A monomial is a multiset of staircase sizes n >= 2 (C_1 = 1 is folded
    // into the coefficient), kept sorted descending.
    using Monomial = std::vector<std::int64_t>;

    // Canonical term order: total degree first (degree of C_n is n - 1),
    // then lexicographically larger factor sequence first.
    struct TermOrder {
        bool operator()(const Monomial& x, const Monomial& y) const;
    };
    using TermMap = std::map<Monomial, Integer, TermOrder>;

    CatalanPolynomial() = default;  // zero
    static CatalanPolynomial constant(Integer value);
    static CatalanPolynomial catalan_term(std::int64_t n);  // C_n; n = 1 gives the constant 1

    bool is_zero() const noexcept { return terms_.empty(); }
    const TermMap& terms() const noexcept { return terms_; }
    Integer coefficient(const Monomial& m) const;

    CatalanPolynomial& operator+=(const CatalanPolynomial& other);
    friend CatalanPolynomial operator+(CatalanPolynomial lhs, const CatalanPolynomial& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend CatalanPolynomial operator*(const CatalanPolynomial& lhs, const CatalanPolynomial& rhs);

    Integer evaluate_signed() const;  // substitute catalan(n) for C_n

    // "C5 + C4 + C3*C2 + 2*C3 + 2*C2 + 1"; the zero polynomial prints "0".
    std::string text() const;
    // [{"coeff": 1, "monomial": [5]}, ...] in canonical term order.
    nlohmann::json to_json() const;

    friend bool operator==(const CatalanPolynomial&, const CatalanPolynomial&);

  private:
    TermMap terms_;  // no zero coefficients stored
};

struct SplitResult {
    Diagram removed;       // d with the corner cell deleted
    Diagram upper_factor;  // rows above the corner row, shifted left by its length
    Diagram lower_factor;  // rows below the corner row
    CellRef corner;
};

struct DecomposeStats {
    std::int64_t splits = 0;
};

struct DecomposeOptions {
    bool memoize = true;
    DecomposeStats* stats = nullptr;
};

// Corner cells (i, rows[i]) with rows[i] > rows[i+1], ascending row index.
std::vector<CellRef> corners(const Diagram& d);

// The corner the decomposition splits at: among corners sticking out of the
// k-row staircase (rows[i] > k + 1 - i, k = row count) the one with the
// largest row index; when none sticks out, the largest-index corner.
CellRef canonical_corner(const Diagram& d);

SplitResult split_at(const Diagram& d, const CellRef& corner);

CatalanPolynomial decompose(const Diagram& d);
CatalanPolynomial decompose(const Diagram& d, const DecomposeOptions& options);

// Substitutes Catalan numbers; the value must come out nonnegative.
Natural evaluate(const CatalanPolynomial& p);

// evaluate(decompose(d)).
Natural count(const Diagram& d);

// Paths through a corner cell: count(upper) * count(lower) of split_at.
Natural count_through_cell(const Diagram& d, const CellRef& corner);

// Paths whose given row is filled to its full length in d. Same product as
// count_through_cell but defined at every row, corner or not.
Natural count_with_pinned_row(const Diagram& d, std::int64_t row);

// count(d) written as catalan(staircase) minus a correction: walk down from
// the smallest enclosing staircase, always splitting at a corner cell that
// lies outside d (canonically the one with the largest row index); the
// through-branch products accumulate into `subtracted`.
struct AlternativeDecomposition {
    std::int64_t staircase = 1;
    CatalanPolynomial subtracted;
};

AlternativeDecomposition decompose_alternative(const Diagram& d);

}  // namespace ferrers
