#pragma once

#include <string>

#include "erdos/matrix.hpp"
#include "erdos/skeleton.hpp"

namespace erdos {

// Representation E[i,j] = (u_i + v_j) on support, 0 off support. Defined up
// to a per-component additive gauge on the bipartite support graph; the
// decomposer fixes u of the smallest row index in each component to 0.
struct UVDecomposition {
    RatVector u;
    RatVector v;
    Skeleton skeleton;

    std::string to_json() const;
};

// All inner traces equal (Restricted Common Diagonal Sum). Requires a
// bistochastic input.
bool is_rcds(const RatMatrix& m);

UVDecomposition uv_decompose(const RatMatrix& m);

// Erdos criterion for an RCDS matrix: for every outer permutation, the sum
// of u_i + v_sigma(i) over the zero positions it crosses is >= 0.
bool erdos_criterion(const UVDecomposition& d);

// min(u) + min(v) >= 0; implies the full criterion, never the converse.
bool sufficient_condition(const UVDecomposition& d);

}  // namespace erdos
