#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "erdos/matrix.hpp"

namespace erdos {

// The canonicalization machinery and enumeration cap out where n^2 bits fill
// one 64-bit word; plain skeleton queries (support tests, inner permutations,
// the uv machinery) extend to the 128-bit mask limit for the larger
// constructed families.
inline constexpr int kMaxDim = 8;
inline constexpr int kMaxSkelDim = 11;

using SkelBits = unsigned __int128;

// Binary zero/nonzero pattern of an n x n matrix; the face coordinate of the
// Birkhoff polytope. Bit i*n+j holds entry (i,j).
struct Skeleton {
    int n = 0;
    SkelBits bits = 0;

    bool test(int i, int j) const { return ((bits >> (i * n + j)) & 1) != 0; }
    void set(int i, int j) { bits |= SkelBits(1) << (i * n + j); }

    uint64_t row_mask(int i) const {
        return static_cast<uint64_t>(bits >> (i * n)) & ((uint64_t(1) << n) - 1);
    }

    bool operator==(const Skeleton&) const = default;

    static Skeleton all_ones(int n);
    static Skeleton identity(int n);

    // n lines of n characters from {0,1}
    std::string to_text() const;
    static Skeleton from_text(const std::string& text);

    // hex of the n^2-bit row-major mask, for JSON records
    std::string to_hex() const;
    static Skeleton from_hex(int n, const std::string& hex);
};

// Orbit invariant under {transpose} x S_n x S_n: the skeleton whose row-major
// bit string is lexicographically minimal over all 2*(n!)^2 transforms.
struct CanonicalKey {
    int n = 0;
    uint64_t bits = 0;
    auto operator<=>(const CanonicalKey&) const = default;
};

Skeleton skel(const RatMatrix& m);

// S1 <= S2 in the skeleton poset: the support of S1 is contained in S2's.
bool poset_leq(const Skeleton& s1, const Skeleton& s2);

CanonicalKey canonical_key(const Skeleton& s);

// Fast path for enumeration: true iff s equals its own canonical form.
bool is_self_canonical(const Skeleton& s);

// Total support: s is nonzero and every set bit lies on some inner
// permutation (perfect-matching queries on the bipartite support graph).
bool is_admissible(const Skeleton& s);

Skeleton apply_perms(const Skeleton& s, const int* row_perm, const int* col_perm, bool transpose);
Skeleton transpose(const Skeleton& s);

}  // namespace erdos
