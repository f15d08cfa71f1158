#pragma once

#include <array>
#include <string>
#include <vector>

#include "erdos/matrix.hpp"
#include "erdos/rcds.hpp"

namespace erdos {

// Staircase block pattern: k row blocks of heights r_i, k+1 column blocks of
// widths s_j (only s_{k+1} may be 0), subject to the strict interlacing
// conditions sum(s_1..s_t) < sum(r_1..r_t) < sum(s_1..s_{t+1}) for t < k.
struct ZigzagSpec {
    std::vector<long> r;
    std::vector<long> s;  // length r.size() + 1

    long n() const;
    void validate() const;  // throws InvalidSpec
};

// 2p x 2p block construction from four alpha-regular binary p x p blocks
// with alpha1 + alpha4 = alpha2 + alpha3.
struct AlphaSpec {
    int p = 0;
    std::array<long, 4> alpha{};
    std::array<RatMatrix, 4> blocks;

    void validate() const;
};

// Block values alpha[i][j] of the staircase, indexed (i,i) and (i,i+1).
struct ZigzagAlphas {
    std::vector<Rational> diag;   // alpha_{i,i}, i = 1..k
    std::vector<Rational> super;  // alpha_{i,i+1}, i = 1..k (absent tail when s_{k+1} = 0)
};

RatMatrix make_x_rsn(long r, long s, long n);

ZigzagAlphas zigzag_alphas(const ZigzagSpec& spec);
RatMatrix make_zigzag(const ZigzagSpec& spec);

RatMatrix make_x_alpha(const AlphaSpec& spec);

// Circulant member of A_{k,p}: first row has ones in columns 0..k-1.
RatMatrix circulant_regular(int p, int k);

// Closed-form (u, v) vectors for the constructed matrix, expanded to full
// length n; agrees with uv_decompose up to per-component gauge.
UVDecomposition family_uv_vectors(const ZigzagSpec& spec);
UVDecomposition family_uv_vectors(const AlphaSpec& spec);

// CLI-facing spec strings: "xrsn:3,1,5", "zigzag:r=4,2,4;s=3,2,5",
// "alpha:p=2;a=1,1,1,1;blocks=circulant".
RatMatrix parse_family_spec(const std::string& spec);

}  // namespace erdos
