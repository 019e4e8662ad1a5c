#include "ferrers/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ferrers {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

void partitions_rec(std::int64_t remaining, std::int64_t cap,
                    std::vector<std::int64_t>& prefix, std::vector<IntPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (std::int64_t part = std::min(cap, remaining); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

IntPartition::IntPartition(std::vector<std::int64_t> parts_) : parts(std::move(parts_)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) raise(errc::domain_violation, "partition part < 1");
        if (i > 0 && parts[i] > parts[i - 1])
            raise(errc::non_monotone_input, "partition parts must be weakly decreasing");
    }
}

std::int64_t IntPartition::sum() const noexcept {
    return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
}

std::vector<IntPartition> partitions_of(std::int64_t d) {
    if (d < 0) raise(errc::domain_violation, "partitions of a negative integer");
    std::vector<IntPartition> out;
    std::vector<std::int64_t> prefix;
    partitions_rec(d, d, prefix, out);
    return out;
}

Natural catalan(std::int64_t n) {
    if (n < 0) raise(errc::domain_violation, "catalan of negative index");
    return divide_exact(binomial(2 * n, n), n + 1);
}

Natural fuss_catalan(std::int64_t a, std::int64_t k) {
    if (a < 1 || k < 1) raise(errc::domain_violation, "fuss_catalan needs a, k >= 1");
    return divide_exact(binomial(a * k + a, a), a * k + 1);
}

Natural general_catalan(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) raise(errc::domain_violation, "general_catalan needs a, b >= 1");
    if (std::gcd(a, b) != 1)
        raise(errc::not_coprime, std::to_string(a) + " and " + std::to_string(b));
    return divide_exact(binomial(a + b, a), a + b);
}

Natural dyck_count_prime(std::int64_t p, std::int64_t b) {
    if (!is_prime(p)) raise(errc::not_prime, std::to_string(p));
    if (b < 1) raise(errc::domain_violation, "dyck_count_prime needs b >= 1");
    if (b % p == 0) return divide_exact(binomial(p + b + 1, p), p + b + 1);
    return divide_exact(binomial(p + b, p), p + b);
}

Ratio ballot_general(std::int64_t a, std::int64_t b, std::int64_t k) {
    if (a < 1 || k < 1) raise(errc::domain_violation, "ballot_general needs a, k >= 1");
    if (b <= k * a)
        raise(errc::domain_violation,
              "ballot_general needs b > k*a, got b = " + std::to_string(b));
    return Ratio(b - k * a + 1, b) * Ratio(binomial(a + b, a));
}

Integer avoid_line_count(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 0) raise(errc::domain_violation, "avoid_line_count needs n >= 1, k >= 0");
    std::int64_t total = 2 * (k + 1) * n;
    Integer below = 0;
    for (std::int64_t i = 0; i < 2 * n; ++i) below += binomial(total, i);
    return Integer(binomial(total, 2 * n)) - (k - 1) * below;
}

Natural z_of(const IntPartition& p) {
    Natural z = 1;
    std::size_t i = 0;
    while (i < p.parts.size()) {
        std::size_t run = i;
        while (run < p.parts.size() && p.parts[run] == p.parts[i]) ++run;
        std::int64_t multiplicity = static_cast<std::int64_t>(run - i);
        for (std::int64_t m = 1; m <= multiplicity; ++m) z *= Natural(p.parts[i]) * m;
        i = run;
    }
    return z;
}

Natural bizley_count(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) raise(errc::domain_violation, "bizley_count needs m, n >= 1");
    std::int64_t d = std::gcd(m, n);
    std::int64_t a = m / d;
    std::int64_t b = n / d;

    std::vector<Ratio> phi(static_cast<std::size_t>(d) + 1);
    for (std::int64_t j = 1; j <= d; ++j)
        phi[static_cast<std::size_t>(j)] =
            Ratio(binomial(j * (a + b), j * a)) / Ratio(j * (a + b));

    std::vector<Ratio> h(static_cast<std::size_t>(d) + 1);
    h[0] = 1;
    for (std::int64_t k = 1; k <= d; ++k) {
        Ratio sum = 0;
        for (std::int64_t j = 1; j <= k; ++j)
            sum += Ratio(j) * phi[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(k - j)];
        h[static_cast<std::size_t>(k)] = sum / k;
    }

    const Ratio& result = h[static_cast<std::size_t>(d)];
    if (!is_integral(result))
        raise(errc::inexact_final_result,
              "expected an integer, got " + result.str() + " for " + std::to_string(m) + "x" +
                  std::to_string(n));
    return numerator(result);
}

}  // namespace ferrers
