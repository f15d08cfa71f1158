#pragma once

#include <cstddef>
#include <vector>

#include "erdos/matrix.hpp"

namespace erdos {

// Exact Gaussian elimination; pivot on the first nonzero entry (no magnitude
// pivoting needed over the rationals). Throws SingularMatrix when rank < n.
RatVector solve_linear(const RatMatrix& a, const RatVector& b);

struct RankResult {
    int rank = 0;
    std::vector<size_t> indices;  // first-wins maximal independent subset, in input order
};

RankResult rank_and_independent_subset(const std::vector<RatVector>& vectors);

}  // namespace erdos
