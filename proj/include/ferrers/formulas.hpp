#pragma once

// Closed-form path counts. Every function returns an exact value; inexact
// intermediate arithmetic is a bug, not a rounding concern.

#include <cstdint>
#include <vector>

#include "ferrers/errors.hpp"
#include "ferrers/numbers.hpp"

namespace ferrers {

// A partition of a positive integer: weakly decreasing parts, all >= 1.
struct IntPartition {
    std::vector<std::int64_t> parts;

    IntPartition() = default;
    explicit IntPartition(std::vector<std::int64_t> parts_);

    std::int64_t sum() const noexcept;
};

// All partitions of d, parts weakly decreasing, in lexicographically
// decreasing order starting from (d).
std::vector<IntPartition> partitions_of(std::int64_t d);

// C(2n, n) / (n + 1); paths weakly below the diagonal of an n x n square,
// equivalently diagrams inside staircase_of(n).
Natural catalan(std::int64_t n);

// C(ak + a, a) / (ak + 1): the a x ak lattice.
Natural fuss_catalan(std::int64_t a, std::int64_t k);

// C(a + b, a) / (a + b) for coprime a, b.
Natural general_catalan(std::int64_t a, std::int64_t b);

// p prime: C(p+b, p)/(p+b) when gcd(p, b) = 1, C(p+b+1, p)/(p+b+1) when p | b.
Natural dyck_count_prime(std::int64_t p, std::int64_t b);

// ((b - ka + 1) / b) * C(a + b, a), exact rational; requires k >= 1, b > ak.
Ratio ballot_general(std::int64_t a, std::int64_t b, std::int64_t k);

// C(2(k+1)n, 2n) - (k-1) * sum_{i=0}^{2n-1} C(2(k+1)n, i); signed on purpose.
Integer avoid_line_count(std::int64_t n, std::int64_t k);

// prod_j j^{m_j} * m_j! over the multiplicities m_j of the parts.
Natural z_of(const IntPartition& p);

// Paths in the m x n lattice weakly below the diagonal, any gcd(m, n).
// With d = gcd, a = m/d, b = n/d and phi_j = C(j(a+b), ja) / (j(a+b)),
// the count is h_d from h_0 = 1, h_k = (1/k) sum_{j=1..k} j phi_j h_{k-j},
// carried in exact rationals; the final value must land on an integer.
Natural bizley_count(std::int64_t m, std::int64_t n);

}  // namespace ferrers
