#include "ferrers/errors.hpp"

namespace ferrers {

const char* to_string(errc code) noexcept {
    switch (code) {
        case errc::bad_number: return "BadNumber";
        case errc::negative_entry: return "NegativeEntry";
        case errc::non_monotone_input: return "NonMonotoneInput";
        case errc::invalid_size: return "InvalidSize";
        case errc::letter_count_mismatch: return "LetterCountMismatch";
        case errc::diagram_exceeds_lattice: return "DiagramExceedsLattice";
        case errc::invalid_lattice: return "InvalidLattice";
        case errc::not_coprime: return "NotCoprime";
        case errc::not_prime: return "NotPrime";
        case errc::domain_violation: return "DomainViolation";
        case errc::inexact_division: return "InexactDivision";
        case errc::inexact_final_result: return "InexactFinalResult";
        case errc::empty_diagram: return "EmptyDiagram";
        case errc::already_staircase: return "AlreadyStaircase";
        case errc::not_a_corner: return "NotACorner";
        case errc::negative_count: return "NegativeCount";
        case errc::unsupported_gap: return "UnsupportedGap";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::not_a_node: return "NotANode";
    }
    return "UnknownError";
}

}  // namespace ferrers
