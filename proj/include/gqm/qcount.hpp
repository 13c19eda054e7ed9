#pragma once

#include "gqm/rational.hpp"

#include <cstdint>

namespace gqm {

/// q-analog combinatorics. Everything is computed from the sum and product
/// forms, so q = 1 needs no special case and reduces to ordinary counting.
using QInt = BigInt;

/// [N]_q = 1 + q + ... + q^(N-1).
QInt q_int(unsigned N, std::uint64_t q);

/// [N]_q! = [N]_q [N-1]_q ... [1]_q, with [0]_q! = 1.
QInt q_factorial(unsigned N, std::uint64_t q);

/// Gaussian binomial [N choose M]_q. Throws InvalidArgs when M > N or q = 0.
QInt gaussian_binomial(unsigned N, unsigned M, std::uint64_t q);

/// Number of k-dimensional projective subspaces of PG(N-1, q), -1 <= k <= N-1.
QInt subspace_count(unsigned N, int k, std::uint64_t q);

/// Points on one k-dimensional projective subspace: [k+1]_q.
QInt points_per_subspace(int k, std::uint64_t q);

/// Test oracle: counts the (k+1)-dimensional linear subspaces of GF(q)^N by
/// explicit span closure. q must be a prime power (InvalidField otherwise) and
/// q^N is capped at 2^20 (TooLarge).
QInt brute_force_subspace_count(unsigned N, int k, std::uint64_t q);

}  // namespace gqm
