#include "ferrers/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "ferrers/christoffel.hpp"
#include "ferrers/decompose.hpp"
#include "ferrers/formulas.hpp"
#include "ferrers/kreweras.hpp"
#include "ferrers/oracle.hpp"

namespace ferrers {

namespace {

std::string lattice_tag(std::int64_t a, std::int64_t b) {
    return std::to_string(a) + "x" + std::to_string(b);
}

void fail(SuiteResult& r, const std::string& counterexample) {
    if (r.passed) {
        r.passed = false;
        r.counterexample = counterexample;
    }
}

// Uniformly random corner at every recursion step, evaluated directly.
Natural random_corner_count(const Diagram& d, std::mt19937_64& rng) {
    if (auto n = is_staircase(d)) return catalan(*n);
    std::vector<CellRef> cs = corners(d);
    std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
    SplitResult split = split_at(d, cs[pick(rng)]);
    return random_corner_count(split.removed, rng) +
           random_corner_count(split.upper_factor, rng) *
               random_corner_count(split.lower_factor, rng);
}

// All diagrams within a box x box bound (at most box rows of length <= box).
void for_each_in_box(std::int64_t box, const std::function<void(const Diagram&)>& visit) {
    std::vector<Row> full(static_cast<std::size_t>(box), box);
    for_each_contained(Diagram(std::move(full)), visit);
}

}  // namespace

std::int64_t staircase_fitting(std::int64_t max_cells) {
    std::int64_t n = 1;
    while (n * (n + 1) / 2 <= max_cells) ++n;  // staircase_of(n+1) has n(n+1)/2 cells
    return n;
}

std::vector<Diagram> sample_diagrams(std::int64_t box, std::int64_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> length(0, box);
    std::uniform_int_distribution<Row> row_value(1, box);
    std::vector<Diagram> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (std::int64_t s = 0; s < samples; ++s) {
        std::vector<Row> rows(static_cast<std::size_t>(length(rng)));
        for (Row& r : rows) r = row_value(rng);
        std::sort(rows.begin(), rows.end(), std::greater<>());
        out.emplace_back(std::move(rows));
    }
    return out;
}

SuiteResult check_word_roundtrip(std::int64_t max_lattice) {
    SuiteResult r{"word-roundtrip"};
    EnumerationBudget budget;
    for (std::int64_t a = 1; a <= max_lattice; ++a) {
        for (std::int64_t b = 1; b <= max_lattice; ++b) {
            if (a * b > 2 * budget.max_cells) continue;  // keep the oracle budget contract
            Lattice lat(a, b);
            for (const DyckWord& w : enumerate_dyck_words(lat, budget)) {
                ++r.checks;
                if (diagram_to_word(word_to_diagram(w, lat), lat) != w)
                    fail(r, lattice_tag(a, b) + " word " + w.letters());
            }
        }
    }
    return r;
}

SuiteResult check_dyck_containment(std::int64_t max_lattice) {
    SuiteResult r{"dyck-vs-containment"};
    EnumerationBudget budget;
    for (std::int64_t a = 1; a <= max_lattice; ++a) {
        for (std::int64_t b = 1; b <= max_lattice; ++b) {
            Lattice lat(a, b);
            Diagram extremal = christoffel_diagram(lat);

            // is_dyck must agree with containment in the extremal diagram for
            // every diagram that fits the lattice at all.
            std::vector<Row> full(static_cast<std::size_t>(a), b);
            for_each_contained(Diagram(std::move(full)), [&](const Diagram& d) {
                ++r.checks;
                if (is_dyck(d, lat) != extremal.contains(d))
                    fail(r, lattice_tag(a, b) + " diagram " + d.bracket());
            });

            // The word enumeration must biject onto the contained diagrams.
            if (a * b > 2 * budget.max_cells || extremal.cells() > budget.max_cells) continue;
            std::vector<Diagram> from_words;
            for (const DyckWord& w : enumerate_dyck_words(lat, budget))
                from_words.push_back(word_to_diagram(w, lat));
            std::sort(from_words.begin(), from_words.end());
            std::vector<Diagram> contained = enumerate_contained(extremal, budget);
            std::sort(contained.begin(), contained.end());
            ++r.checks;
            if (from_words != contained)
                fail(r, lattice_tag(a, b) + " word/diagram sets differ");
        }
    }
    return r;
}

SuiteResult check_staircase_identities(std::int64_t max_n) {
    SuiteResult r{"staircase-identities"};
    for (std::int64_t n = 1; n <= max_n; ++n) {
        Diagram s = staircase_of(n);
        ++r.checks;
        if (is_staircase(s) != n) fail(r, "is_staircase(staircase_of(" + std::to_string(n) + "))");
        ++r.checks;
        if (min_enclosing_staircase(s) != n)
            fail(r, "min_enclosing_staircase(staircase_of(" + std::to_string(n) + "))");
        // Minimality: the staircase below does not contain s (n >= 2).
        ++r.checks;
        if (n >= 2 && staircase_of(n - 1).contains(s))
            fail(r, "staircase_of(" + std::to_string(n) + ") fits its predecessor");
    }
    return r;
}

SuiteResult check_cell_count_formula(std::int64_t max_lattice) {
    SuiteResult r{"christoffel-cells"};
    for (std::int64_t a = 1; a <= max_lattice; ++a) {
        for (std::int64_t b = 1; b <= max_lattice; ++b) {
            ++r.checks;
            Lattice lat(a, b);
            if (christoffel_cell_count(lat) != christoffel_diagram(lat).cells())
                fail(r, lattice_tag(a, b));
        }
    }
    return r;
}

SuiteResult check_row_increment(std::int64_t max_b) {
    SuiteResult r{"row-increment"};
    for (std::int64_t a = 2; a < max_b; ++a) {
        for (std::int64_t b = a + 1; b <= max_b; ++b) {
            Lattice to(a, b);
            Diagram wide = christoffel_diagram(to);
            Diagram narrow = christoffel_diagram(Lattice(a, b - 1));
            for (std::int64_t l = 1; l <= a - 1; ++l) {
                ++r.checks;
                int increment = row_increment(to, l);
                Row difference = wide.row(a - l) - narrow.row(a - l);
                if (increment != difference || (increment != 0 && increment != 1))
                    fail(r, lattice_tag(a, b) + " l=" + std::to_string(l));
            }
        }
    }
    return r;
}

SuiteResult check_formula_identities(std::int64_t max_lattice) {
    SuiteResult r{"formula-identities"};
    // Closed forms against the oracle count under the extremal diagram.
    for (std::int64_t m = 1; m <= max_lattice; ++m) {
        for (std::int64_t n = 1; n <= max_lattice; ++n) {
            ++r.checks;
            if (bizley_count(m, n) != count_contained(christoffel_diagram(Lattice(m, n))))
                fail(r, "bizley vs oracle at " + lattice_tag(m, n));
        }
    }
    for (std::int64_t n = 1; n <= 8; ++n) {
        ++r.checks;
        if (catalan(n) != bizley_count(n, n)) fail(r, "catalan(" + std::to_string(n) + ")");
    }
    for (std::int64_t a = 1; a + 1 <= 14; ++a) {
        for (std::int64_t b = 1; a + b <= 14; ++b) {
            if (std::gcd(a, b) != 1) continue;
            ++r.checks;
            if (general_catalan(a, b) != bizley_count(a, b))
                fail(r, "general vs bizley at " + lattice_tag(a, b));
        }
    }
    for (std::int64_t p : {2, 3, 5, 7}) {
        for (std::int64_t b = 1; b <= 10; ++b) {
            ++r.checks;
            if (dyck_count_prime(p, b) != bizley_count(p, b))
                fail(r, "prime vs bizley at " + lattice_tag(p, b));
        }
    }
    for (std::int64_t a = 1; a <= 4; ++a) {
        for (std::int64_t k = 1; k <= 4; ++k) {
            ++r.checks;
            if (fuss_catalan(a, k) != bizley_count(a, a * k))
                fail(r, "fuss vs bizley at a=" + std::to_string(a) + " k=" + std::to_string(k));
        }
    }
    // sum over partitions of 1/z_lambda telescopes to 1.
    for (std::int64_t d = 1; d <= 8; ++d) {
        Ratio sum = 0;
        for (const IntPartition& p : partitions_of(d)) sum += Ratio(1) / Ratio(z_of(p));
        ++r.checks;
        if (sum != 1) fail(r, "z identity at d=" + std::to_string(d));
    }
    return r;
}

SuiteResult check_decompose_vs_oracle(std::int64_t max_cells, bool inject_fault) {
    SuiteResult r{"decompose-vs-oracle"};
    Diagram bound = staircase_of(staircase_fitting(max_cells));
    for_each_contained(bound, [&](const Diagram& d) {
        ++r.checks;
        Natural via_decompose = count(d);
        if (inject_fault && d == Diagram{2, 1}) via_decompose += 1;  // test hook
        Natural via_oracle = count_contained(d);
        if (via_decompose != via_oracle)
            fail(r, d.bracket() + ": decompose=" + via_decompose.str() +
                        " oracle=" + via_oracle.str());
    });
    return r;
}

SuiteResult check_split_identity(std::int64_t box, bool explicit_enumeration) {
    SuiteResult r{"split-identity"};
    for_each_in_box(box, [&](const Diagram& d) {
        if (d.empty()) return;
        for (const CellRef& c : corners(d)) {
            ++r.checks;
            SplitResult split = split_at(d, c);
            Natural whole, avoiding, through;
            if (explicit_enumeration) {
                EnumerationBudget budget{box * box};
                whole = enumerate_contained(d, budget).size();
                avoiding = enumerate_contained(split.removed, budget).size();
                through = Natural(enumerate_contained(split.upper_factor, budget).size()) *
                          enumerate_contained(split.lower_factor, budget).size();
            } else {
                whole = count_contained(d);
                avoiding = count_contained(split.removed);
                through = count_contained(split.upper_factor) *
                          count_contained(split.lower_factor);
            }
            if (whole != avoiding + through)
                fail(r, d.bracket() + " corner (" + std::to_string(c.row) + "," +
                            std::to_string(c.col) + ")");
        }
    });
    return r;
}

SuiteResult check_corner_invariance(std::int64_t box, std::int64_t samples, std::uint64_t seed) {
    SuiteResult r{"corner-invariance"};
    std::mt19937_64 rng(seed);
    for (const Diagram& d : sample_diagrams(box, samples, seed ^ 0x9e3779b97f4a7c15ULL)) {
        ++r.checks;
        Natural canonical = count(d);
        if (canonical != count_contained(d) || canonical != random_corner_count(d, rng))
            fail(r, d.bracket());
    }
    return r;
}

SuiteResult check_alternative_identity(std::int64_t max_cells) {
    SuiteResult r{"alternative-identity"};
    Diagram bound = staircase_of(std::min<std::int64_t>(7, staircase_fitting(max_cells)));
    for_each_contained(bound, [&](const Diagram& d) {
        ++r.checks;
        AlternativeDecomposition alt = decompose_alternative(d);
        if (catalan(alt.staircase) != count(d) + evaluate(alt.subtracted))
            fail(r, d.bracket());
    });
    return r;
}

SuiteResult check_comparison_method(std::int64_t max_a, std::int64_t max_b) {
    SuiteResult r{"comparison-method"};
    for (std::int64_t a = 2; a <= max_a; ++a) {
        for (std::int64_t b = a + 1; b <= max_b; ++b) {
            ++r.checks;
            Lattice from(a, b - 1), to(a, b);
            Natural gain = comparison_difference(from, to);
            Natural wide = count_contained(christoffel_diagram(to));
            Natural narrow = count_contained(christoffel_diagram(from));
            if (narrow + gain != wide)
                fail(r, lattice_tag(a, b - 1) + " -> " + lattice_tag(a, b) + ": gain " +
                            gain.str() + ", oracle " + (wide - narrow).str());
        }
    }
    return r;
}

SuiteResult check_poset_structure(std::int64_t max_lattice) {
    SuiteResult r{"kreweras-poset"};
    std::int64_t bound = std::min<std::int64_t>(max_lattice, 6);
    for (std::int64_t a = 1; a <= bound; ++a) {
        for (std::int64_t b = 1; b <= bound; ++b) {
            Lattice lat(a, b);
            PosetGraph g = build_poset(lat);
            Diagram root = christoffel_diagram(lat);

            ++r.checks;
            if (Natural(g.nodes.size()) != count_contained(root))
                fail(r, lattice_tag(a, b) + " node count");
            ++r.checks;
            if (g.nodes.empty() || !g.nodes.front().empty() || g.nodes.back() != root)
                fail(r, lattice_tag(a, b) + " extremes");

            // Every nonempty node must cover something; every edge removes
            // exactly one cell of the parent.
            std::set<std::int64_t> with_children;
            for (const auto& [parent, child] : g.edges) {
                with_children.insert(parent);
                ++r.checks;
                const Diagram& p = g.nodes[static_cast<std::size_t>(parent)];
                const Diagram& c = g.nodes[static_cast<std::size_t>(child)];
                if (!p.contains(c) || p.cells() != c.cells() + 1)
                    fail(r, lattice_tag(a, b) + " bad edge");
            }
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(g.nodes.size()); ++i) {
                if (g.nodes[static_cast<std::size_t>(i)].empty()) continue;
                ++r.checks;
                if (!with_children.count(i))
                    fail(r, lattice_tag(a, b) + " childless node " +
                                g.nodes[static_cast<std::size_t>(i)].bracket());
            }

            // Branch size equals the path count of the branch root.
            for (const Diagram& node : g.nodes) {
                ++r.checks;
                if (Natural(branch(g, node).nodes.size()) != count(node))
                    fail(r, lattice_tag(a, b) + " branch " + node.bracket());
            }
        }
    }
    return r;
}

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
    std::int64_t lat = options.max_lattice;
    return {
        check_word_roundtrip(lat),
        check_dyck_containment(std::min<std::int64_t>(lat, 6)),
        check_staircase_identities(12),
        check_cell_count_formula(lat),
        check_row_increment(std::max<std::int64_t>(2 * lat, lat + 1)),
        check_formula_identities(std::min<std::int64_t>(lat, 8)),
        check_decompose_vs_oracle(options.max_cells, options.inject_fault),
        check_split_identity(std::min<std::int64_t>(lat, 8), false),
        check_corner_invariance(std::min<std::int64_t>(lat, 10), 500, options.seed),
        check_alternative_identity(options.max_cells),
        check_comparison_method(lat, 2 * lat),
        check_poset_structure(lat),
    };
}

}  // namespace ferrers
