#pragma once

#include <string>
#include <vector>

#include "erdos/matrix.hpp"
#include "erdos/skeleton.hpp"

namespace erdos {

// Element of S_n; image[i] = sigma(i), 0-indexed one-line notation.
struct Permutation {
    std::vector<int> image;

    int n() const { return static_cast<int>(image.size()); }
    int operator()(int i) const { return image[i]; }
    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return image < o.image; }

    static Permutation identity(int n);
    RatMatrix matrix() const;
    Skeleton pattern() const;

    // "[1,0,2]"
    std::string to_string() const;
    static Permutation parse(const std::string& text);
};

// All sigma with pattern <= S, in lexicographic order of image.
std::vector<Permutation> inner_permutations(const Skeleton& s);

// tr_sigma(M) = sum_i M[i, sigma(i)]
Rational sigma_trace(const RatMatrix& m, const Permutation& sigma);

struct BirkhoffExpansion {
    std::vector<std::pair<Rational, Permutation>> terms;  // coefficients > 0, sum to 1
    RatMatrix reconstruct(int n) const;
};

// Greedy Birkhoff: repeatedly peel off the lexicographically first inner
// permutation of the remainder with its minimum entry as coefficient.
BirkhoffExpansion birkhoff_decompose(const RatMatrix& m);

// Expansion guaranteed to contain sigma0 with positive coefficient, built by
// decomposing (1+eps)M - eps*sigma0 with eps = min_j M[j, sigma0(j)].
BirkhoffExpansion birkhoff_decompose_through(const RatMatrix& m, const Permutation& sigma0);

}  // namespace erdos
