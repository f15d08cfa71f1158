#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "erdos/errors.hpp"
#include "erdos/skeleton.hpp"

using namespace erdos;

namespace {

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) image[i] = i;
    std::vector<std::vector<int>> out;
    do out.push_back(image);
    while (std::next_permutation(image.begin(), image.end()));
    return out;
}

// Oracle: the smallest bitmask in the full orbit under transposition and
// row/column permutations, compared as row-major strings the same way
// canonical_key orders them.
uint64_t orbit_min_bruteforce(const Skeleton& s) {
    const auto perms = all_perms(s.n);
    auto string_value = [&](const Skeleton& t) {
        uint64_t v = 0;
        for (int i = 0; i < t.n; ++i)
            for (int j = 0; j < t.n; ++j) v = (v << 1) | (t.test(i, j) ? 1 : 0);
        return v;
    };
    uint64_t best = ~uint64_t(0);
    uint64_t best_bits = 0;
    for (bool tr : {false, true})
        for (const auto& rp : perms)
            for (const auto& cp : perms) {
                const Skeleton moved = apply_perms(s, rp.data(), cp.data(), tr);
                if (string_value(moved) < best) {
                    best = string_value(moved);
                    best_bits = moved.bits;
                }
            }
    return best_bits;
}

}  // namespace

TEST_CASE("skel of a matrix") {
    const RatMatrix m = parse_matrix("2/5 3/5 0\n3/5 0 2/5\n0 2/5 3/5\n");
    CHECK(skel(m) == Skeleton::from_text("110\n101\n011\n"));
    CHECK(skel(RatMatrix(3, 3)).bits == 0);
    CHECK(skel(RatMatrix::constant(3, 3, rat(1, 3))) == Skeleton::all_ones(3));
}

TEST_CASE("poset_leq") {
    CHECK(poset_leq(Skeleton::identity(3), Skeleton::all_ones(3)));
    const Skeleton a = Skeleton::from_text("10\n01\n");
    const Skeleton b = Skeleton::from_text("01\n10\n");
    CHECK_FALSE(poset_leq(a, b));
    CHECK_FALSE(poset_leq(b, a));
    CHECK(poset_leq(a, a));
    CHECK_THROWS_AS(poset_leq(a, Skeleton::all_ones(3)), DimensionMismatch);
}

TEST_CASE("poset_leq is a partial order on random triples") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const uint64_t mask = (n * n == 64) ? ~uint64_t(0) : ((uint64_t(1) << (n * n)) - 1);
        const Skeleton x{n, rng() & mask}, y{n, rng() & mask}, z{n, rng() & mask};
        CHECK(poset_leq(x, x));
        if (poset_leq(x, y) && poset_leq(y, x)) CHECK(x == y);
        if (poset_leq(x, y) && poset_leq(y, z)) CHECK(poset_leq(x, z));
    }
}

TEST_CASE("canonical_key is constant on orbits") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const uint64_t mask = (uint64_t(1) << (n * n)) - 1;
        const Skeleton s{n, rng() & mask};
        const auto perms = all_perms(n);
        const auto& rp = perms[rng() % perms.size()];
        const auto& cp = perms[rng() % perms.size()];
        const bool tr = rng() & 1;
        const Skeleton moved = apply_perms(s, rp.data(), cp.data(), tr);
        CHECK(canonical_key(s) == canonical_key(moved));
    }
}

TEST_CASE("canonical_key equals transpose's key") {
    const Skeleton s = Skeleton::from_text("1101\n0110\n1010\n0011\n");
    CHECK(canonical_key(s) == canonical_key(transpose(s)));
}

TEST_CASE("2x2 example: both triangular patterns share a key") {
    const Skeleton upper = Skeleton::from_text("11\n01\n");
    const Skeleton lower = Skeleton::from_text("10\n11\n");
    CHECK(canonical_key(upper) == canonical_key(lower));
}

TEST_CASE("canonical_key separates orbits exactly for n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        const uint64_t total = uint64_t(1) << (n * n);
        std::map<uint64_t, uint64_t> brute_rep;   // mask -> brute-force orbit min
        std::map<uint64_t, uint64_t> key_of;      // mask -> canonical key bits
        for (uint64_t bits = 0; bits < total; ++bits) {
            const Skeleton s{n, bits};
            brute_rep[bits] = orbit_min_bruteforce(s);
            key_of[bits] = canonical_key(s).bits;
        }
        for (uint64_t bits = 0; bits < total; ++bits) {
            // keys agree exactly when brute-force orbit representatives agree
            CHECK(key_of[bits] == key_of[brute_rep[bits]]);
            CHECK(brute_rep[key_of[bits]] == brute_rep[bits]);
        }
        // the canonical representative is the brute-force orbit minimum itself
        for (uint64_t bits = 0; bits < total; ++bits) CHECK(key_of[bits] == brute_rep[bits]);
    }
}

TEST_CASE("is_self_canonical agrees with canonical_key") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const uint64_t mask = (uint64_t(1) << (n * n)) - 1;
        const Skeleton s{n, rng() & mask};
        CHECK(is_self_canonical(s) == (canonical_key(s).bits == s.bits));
    }
}

TEST_CASE("is_admissible") {
    CHECK_FALSE(is_admissible(Skeleton::from_text("11\n01\n")));
    CHECK(is_admissible(Skeleton::all_ones(4)));
    CHECK(is_admissible(Skeleton::identity(5)));
    CHECK_FALSE(is_admissible(Skeleton{3, 0}));
    // empty row
    CHECK_FALSE(is_admissible(Skeleton::from_text("11\n00\n")));
    // the 3x3 two-permutation pattern
    CHECK(is_admissible(Skeleton::from_text("110\n101\n011\n")));
}

TEST_CASE("admissibility is monotone under adding a disjoint permutation pattern") {
    // diag block union: permutation bits disjoint from an admissible pattern
    Skeleton s{4, 0};
    s.set(0, 1);
    s.set(1, 0);
    CHECK_FALSE(is_admissible(s));  // rows 2,3 empty
    s.set(2, 3);
    s.set(3, 2);
    CHECK(is_admissible(s));
}

TEST_CASE("skeleton text and hex round trips") {
    const Skeleton s = Skeleton::from_text("110\n101\n011\n");
    CHECK(Skeleton::from_text(s.to_text()) == s);
    CHECK(Skeleton::from_hex(3, s.to_hex()) == s);
    CHECK_THROWS_AS(Skeleton::from_text("11\n1\n"), ParseError);
    CHECK_THROWS_AS(Skeleton::from_hex(2, "fff"), ParseError);
}
