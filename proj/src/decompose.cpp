#include "ferrers/decompose.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "ferrers/formulas.hpp"

namespace ferrers {

namespace {

std::int64_t degree(const CatalanPolynomial::Monomial& m) {
    std::int64_t total = 0;
    for (std::int64_t n : m) total += n - 1;
    return total;
}

}  // namespace

bool CatalanPolynomial::TermOrder::operator()(const Monomial& x, const Monomial& y) const {
    std::int64_t dx = degree(x), dy = degree(y);
    if (dx != dy) return dx > dy;
    return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
}

CatalanPolynomial CatalanPolynomial::constant(Integer value) {
    CatalanPolynomial p;
    if (value != 0) p.terms_.emplace(Monomial{}, std::move(value));
    return p;
}

CatalanPolynomial CatalanPolynomial::catalan_term(std::int64_t n) {
    if (n < 1) raise(errc::invalid_size, "catalan variable C" + std::to_string(n));
    if (n == 1) return constant(1);
    CatalanPolynomial p;
    p.terms_.emplace(Monomial{n}, Integer(1));
    return p;
}

Integer CatalanPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

CatalanPolynomial& CatalanPolynomial::operator+=(const CatalanPolynomial& other) {
    for (const auto& [monomial, coeff] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(monomial, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

CatalanPolynomial operator*(const CatalanPolynomial& lhs, const CatalanPolynomial& rhs) {
    CatalanPolynomial product;
    for (const auto& [ml, cl] : lhs.terms_) {
        for (const auto& [mr, cr] : rhs.terms_) {
            CatalanPolynomial::Monomial merged;
            merged.reserve(ml.size() + mr.size());
            std::merge(ml.begin(), ml.end(), mr.begin(), mr.end(), std::back_inserter(merged),
                       std::greater<>());
            auto [it, inserted] = product.terms_.try_emplace(std::move(merged), cl * cr);
            if (!inserted) {
                it->second += cl * cr;
                if (it->second == 0) product.terms_.erase(it);
            }
        }
    }
    return product;
}

Integer CatalanPolynomial::evaluate_signed() const {
    std::map<std::int64_t, Natural> cache;
    auto catalan_of = [&cache](std::int64_t n) -> const Natural& {
        auto [it, inserted] = cache.try_emplace(n);
        if (inserted) it->second = catalan(n);
        return it->second;
    };
    Integer total = 0;
    for (const auto& [monomial, coeff] : terms_) {
        Integer term = coeff;
        for (std::int64_t n : monomial) term *= catalan_of(n);
        total += term;
    }
    return total;
}

std::string CatalanPolynomial::text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [monomial, coeff] : terms_) {
        Integer magnitude = coeff < 0 ? Integer(-coeff) : coeff;
        std::string piece;
        if (monomial.empty()) {
            piece = magnitude.str();
        } else {
            if (magnitude != 1) piece = magnitude.str() + "*";
            for (std::size_t i = 0; i < monomial.size(); ++i) {
                if (i) piece += '*';
                piece += 'C' + std::to_string(monomial[i]);
            }
        }
        if (first) {
            if (coeff < 0) out += '-';
            first = false;
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        out += piece;
    }
    return out;
}

nlohmann::json CatalanPolynomial::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [monomial, coeff] : terms_) {
        if (coeff < std::numeric_limits<std::int64_t>::min() ||
            coeff > std::numeric_limits<std::int64_t>::max())
            raise(errc::domain_violation, "coefficient too large for JSON output");
        arr.push_back({{"coeff", static_cast<std::int64_t>(coeff)},
                       {"monomial", monomial}});
    }
    return arr;
}

bool operator==(const CatalanPolynomial& lhs, const CatalanPolynomial& rhs) {
    return lhs.terms_ == rhs.terms_;
}

std::vector<CellRef> corners(const Diagram& d) {
    if (d.empty()) raise(errc::empty_diagram, "corners of the empty diagram");
    std::vector<CellRef> out;
    for (std::int64_t i = 1; i <= d.row_count(); ++i)
        if (d.row(i) > d.row(i + 1)) out.push_back({i, d.row(i)});
    return out;
}

CellRef canonical_corner(const Diagram& d) {
    if (d.empty()) raise(errc::empty_diagram, "canonical_corner of the empty diagram");
    if (is_staircase(d)) raise(errc::already_staircase, d.bracket());
    std::vector<CellRef> all = corners(d);
    std::int64_t k = d.row_count();
    for (auto it = all.rbegin(); it != all.rend(); ++it)
        if (it->col > k + 1 - it->row) return *it;  // sticks out of the k-row staircase
    return all.back();
}

SplitResult split_at(const Diagram& d, const CellRef& corner) {
    if (corner.row < 1 || corner.row > d.row_count() || d.row(corner.row) != corner.col ||
        d.row(corner.row) <= d.row(corner.row + 1))
        raise(errc::not_a_corner, "(" + std::to_string(corner.row) + "," +
                                      std::to_string(corner.col) + ") in " + d.bracket());

    std::vector<Row> removed(d.rows());
    removed[static_cast<std::size_t>(corner.row - 1)] -= 1;

    std::vector<Row> upper;
    upper.reserve(static_cast<std::size_t>(corner.row - 1));
    for (std::int64_t i = 1; i < corner.row; ++i) upper.push_back(d.row(i) - corner.col);

    std::vector<Row> lower(d.rows().begin() + corner.row, d.rows().end());

    return SplitResult{Diagram(std::move(removed)), Diagram(std::move(upper)),
                       Diagram(std::move(lower)), corner};
}

namespace {

CatalanPolynomial decompose_rec(const Diagram& d,
                                std::map<Diagram, CatalanPolynomial>* memo,
                                DecomposeStats* stats) {
    if (auto n = is_staircase(d)) return CatalanPolynomial::catalan_term(*n);
    if (memo) {
        auto it = memo->find(d);
        if (it != memo->end()) return it->second;
    }
    if (stats) ++stats->splits;
    SplitResult split = split_at(d, canonical_corner(d));
    CatalanPolynomial result = decompose_rec(split.removed, memo, stats);
    result += decompose_rec(split.upper_factor, memo, stats) *
              decompose_rec(split.lower_factor, memo, stats);
    if (memo) memo->emplace(d, result);
    return result;
}

}  // namespace

CatalanPolynomial decompose(const Diagram& d) {
    return decompose(d, DecomposeOptions{});
}

CatalanPolynomial decompose(const Diagram& d, const DecomposeOptions& options) {
    std::map<Diagram, CatalanPolynomial> memo;  // per call: pure and thread-safe
    return decompose_rec(d, options.memoize ? &memo : nullptr, options.stats);
}

Natural evaluate(const CatalanPolynomial& p) {
    Integer value = p.evaluate_signed();
    if (value < 0) raise(errc::negative_count, value.str());
    return value;
}

Natural count(const Diagram& d) {
    return evaluate(decompose(d));
}

Natural count_through_cell(const Diagram& d, const CellRef& corner) {
    SplitResult split = split_at(d, corner);
    return count(split.upper_factor) * count(split.lower_factor);
}

Natural count_with_pinned_row(const Diagram& d, std::int64_t row) {
    if (row < 1 || row > d.row_count())
        raise(errc::domain_violation, "row " + std::to_string(row) + " of " + d.bracket());
    Row v = d.row(row);
    std::vector<Row> upper;
    upper.reserve(static_cast<std::size_t>(row - 1));
    for (std::int64_t i = 1; i < row; ++i) upper.push_back(d.row(i) - v);
    std::vector<Row> lower(d.rows().begin() + row, d.rows().end());
    return count(Diagram(std::move(upper))) * count(Diagram(std::move(lower)));
}

AlternativeDecomposition decompose_alternative(const Diagram& d) {
    AlternativeDecomposition result;
    result.staircase = min_enclosing_staircase(d);

    Diagram g = staircase_of(result.staircase);
    while (g != d) {
        // Largest row where g still exceeds d; always a corner of g.
        std::int64_t i = g.row_count();
        while (g.row(i) <= d.row(i)) --i;
        SplitResult split = split_at(g, CellRef{i, g.row(i)});
        result.subtracted +=
            decompose(split.upper_factor) * decompose(split.lower_factor);
        g = std::move(split.removed);
    }
    return result;
}

}  // namespace ferrers
