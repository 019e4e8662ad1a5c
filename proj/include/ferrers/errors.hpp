#pragma once

#include <stdexcept>
#include <string>

namespace ferrers {

// Every domain failure carries one of these codes; the CLI maps any
// ferrers::error to exit code 1.
enum class errc {
    bad_number,
    negative_entry,
    non_monotone_input,
    invalid_size,
    letter_count_mismatch,
    diagram_exceeds_lattice,
    invalid_lattice,
    not_coprime,
    not_prime,
    domain_violation,
    inexact_division,
    inexact_final_result,
    empty_diagram,
    already_staircase,
    not_a_corner,
    negative_count,
    unsupported_gap,
    budget_exceeded,
    cap_exceeded,
    not_a_node,
};

const char* to_string(errc code) noexcept;

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& detail)
        : std::runtime_error(detail.empty() ? std::string(to_string(code))
                                            : std::string(to_string(code)) + ": " + detail),
          code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& detail = "") {
    throw error(code, detail);
}

}  // namespace ferrers
