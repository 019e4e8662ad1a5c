#include "ferrers/numbers.hpp"

#include <algorithm>

#include "ferrers/errors.hpp"

namespace ferrers {

Natural binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Natural result = 1;
    // result stays exact at each step: i consecutive integers contain a
    // multiple of i!, so the division below never truncates.
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Natural divide_exact(const Natural& numerator, const Natural& denominator) {
    if (denominator == 0) raise(errc::inexact_division, "division by zero");
    Natural q = numerator / denominator;
    if (q * denominator != numerator)
        raise(errc::inexact_division,
              numerator.str() + " is not a multiple of " + denominator.str());
    return q;
}

bool is_integral(const Ratio& q) {
    return denominator(q) == 1;
}

}  // namespace ferrers
