#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace ferrers {

// Exact arithmetic only; no floating point anywhere in the library.
// Natural is an Integer kept nonnegative by the operations that produce it.
// Expression templates are off so every operator returns a plain value.
using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Natural = Integer;
using Ratio =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;  // reduced, denominator > 0

// C(n, k); 0 when k < 0 or k > n.
Natural binomial(std::int64_t n, std::int64_t k);

// numerator / denominator, raising inexact_division unless it divides evenly.
Natural divide_exact(const Natural& numerator, const Natural& denominator);

// True exactly when q has denominator 1.
bool is_integral(const Ratio& q);

}  // namespace ferrers
