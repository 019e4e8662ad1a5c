#pragma once

// Cross-module consistency sweeps. Each suite recomputes one identity by two
// independent routes over a bounded sweep and reports the first mismatch.

#include <cstdint>
#include <string>
#include <vector>

#include "ferrers/diagram.hpp"

namespace ferrers {

struct VerifyOptions {
    std::int64_t max_cells = 28;    // diagram sweeps: largest staircase within this many cells
    std::int64_t max_lattice = 6;   // lattice sweeps: sides up to this bound
    std::uint64_t seed = 0x5eed0d1cULL;  // random-corner sweep
    bool inject_fault = false;      // test hook: corrupt one comparison on purpose
};

struct SuiteResult {
    std::string name;
    std::int64_t checks = 0;
    bool passed = true;
    std::string counterexample;  // empty when passed
};

// The individual suites; bounds as documented per suite.
SuiteResult check_word_roundtrip(std::int64_t max_lattice);
SuiteResult check_dyck_containment(std::int64_t max_lattice);
SuiteResult check_staircase_identities(std::int64_t max_n);
SuiteResult check_cell_count_formula(std::int64_t max_lattice);
SuiteResult check_row_increment(std::int64_t max_b);
SuiteResult check_formula_identities(std::int64_t max_lattice);
SuiteResult check_decompose_vs_oracle(std::int64_t max_cells, bool inject_fault = false);
SuiteResult check_split_identity(std::int64_t box, bool explicit_enumeration);
SuiteResult check_corner_invariance(std::int64_t box, std::int64_t samples, std::uint64_t seed);
SuiteResult check_alternative_identity(std::int64_t max_cells);
SuiteResult check_comparison_method(std::int64_t max_a, std::int64_t max_b);
SuiteResult check_poset_structure(std::int64_t max_lattice);

std::vector<SuiteResult> run_verification(const VerifyOptions& options);

// Largest n with staircase_of(n) holding at most max_cells cells.
std::int64_t staircase_fitting(std::int64_t max_cells);

// 500 seeded diagrams inside a box x box bound (shared by verify/acceptance).
std::vector<Diagram> sample_diagrams(std::int64_t box, std::int64_t samples, std::uint64_t seed);

}  // namespace ferrers
