#include "erdos/skeleton.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "erdos/errors.hpp"

namespace erdos {

namespace {

constexpr uint16_t kInfRow = 0xFFFF;

// Row value used for lexicographic comparison of row-major bit strings:
// column 0 is the most significant bit.
uint16_t row_value(const Skeleton& s, int i) {
    uint16_t v = 0;
    for (int j = 0; j < s.n; ++j) v = static_cast<uint16_t>((v << 1) | (s.test(i, j) ? 1 : 0));
    return v;
}

struct RowView {
    int n;
    std::array<uint16_t, kMaxDim> rv{};  // one value per row
};

RowView rows_of(const Skeleton& s) {
    RowView r{s.n, {}};
    for (int i = 0; i < s.n; ++i) r.rv[i] = row_value(s, i);
    return r;
}

RowView transpose_of(const RowView& r) {
    RowView t{r.n, {}};
    for (int j = 0; j < r.n; ++j) {
        uint16_t v = 0;
        for (int i = 0; i < r.n; ++i) v = static_cast<uint16_t>((v << 1) | ((r.rv[i] >> (r.n - 1 - j)) & 1));
        t.rv[j] = v;
    }
    return t;
}

// Depth-first minimization over row orders. For a fixed prefix of chosen
// rows, sorting the column prefixes ascending determines the first d rows of
// the column-sorted result, so candidates can be compared and pruned row by
// row. `best` holds the minimum found so far (kInfRow = still open).
// Returns true if some transform of `view` beats `best` strictly while in
// detect-only mode; otherwise updates `best` in place.
struct CanonDfs {
    int n;
    const RowView* view;
    std::array<uint16_t, kMaxDim>* best;
    bool detect_only;
    bool found_better = false;

    std::array<uint16_t, kMaxDim> colprefix{};
    uint32_t used = 0;

    void run() { descend(0); }

    void descend(int depth) {
        if (depth == n || found_better) return;
        for (int r = 0; r < n && !found_better; ++r) {
            if (used & (uint32_t(1) << r)) continue;
            std::array<uint16_t, kMaxDim> next = colprefix;
            const uint16_t row = view->rv[r];
            for (int j = 0; j < n; ++j)
                next[j] = static_cast<uint16_t>((next[j] << 1) | ((row >> (n - 1 - j)) & 1));
            std::array<uint16_t, kMaxDim> sorted = next;
            std::sort(sorted.begin(), sorted.begin() + n);
            uint16_t out_row = 0;
            for (int pos = 0; pos < n; ++pos)
                out_row = static_cast<uint16_t>((out_row << 1) | (sorted[pos] & 1));

            uint16_t& b = (*best)[depth];
            if (out_row > b) continue;
            if (out_row < b) {
                if (detect_only) {
                    found_better = true;
                    return;
                }
                b = out_row;
                for (int k = depth + 1; k < n; ++k) (*best)[k] = kInfRow;
            }
            std::array<uint16_t, kMaxDim> saved = colprefix;
            colprefix = next;
            used |= uint32_t(1) << r;
            descend(depth + 1);
            used &= ~(uint32_t(1) << r);
            colprefix = saved;
        }
    }
};

Skeleton from_rows(int n, const std::array<uint16_t, kMaxDim>& rv) {
    Skeleton s{n, 0};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((rv[i] >> (n - 1 - j)) & 1) s.set(i, j);
    return s;
}

}  // namespace

Skeleton Skeleton::all_ones(int n) {
    Skeleton s{n, 0};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.set(i, j);
    return s;
}

Skeleton Skeleton::identity(int n) {
    Skeleton s{n, 0};
    for (int i = 0; i < n; ++i) s.set(i, i);
    return s;
}

std::string Skeleton::to_text() const {
    std::string out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out += test(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

Skeleton Skeleton::from_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed;
        for (char c : line)
            if (c == '0' || c == '1') trimmed += c;
        if (!trimmed.empty()) lines.push_back(trimmed);
    }
    const int n = static_cast<int>(lines.size());
    if (n == 0 || n > kMaxSkelDim) throw ParseError("skeleton text must have 1..11 rows");
    Skeleton s{n, 0};
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(lines[i].size()) != n) throw ParseError("skeleton text is not square");
        for (int j = 0; j < n; ++j)
            if (lines[i][j] == '1') s.set(i, j);
    }
    return s;
}

std::string Skeleton::to_hex() const {
    const auto hi = static_cast<unsigned long long>(bits >> 64);
    const auto lo = static_cast<unsigned long long>(bits);
    char buf[48];
    if (hi)
        snprintf(buf, sizeof buf, "%llx%016llx", hi, lo);
    else
        snprintf(buf, sizeof buf, "%llx", lo);
    return buf;
}

Skeleton Skeleton::from_hex(int n, const std::string& hex) {
    if (n < 1 || n > kMaxSkelDim) throw ParseError("skeleton dimension out of range");
    SkelBits bits = 0;
    if (hex.empty() || hex.size() > 32) throw ParseError("bad skeleton hex length");
    for (char c : hex) {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            d = c - 'A' + 10;
        else
            throw ParseError("bad skeleton hex");
        bits = (bits << 4) | static_cast<unsigned>(d);
    }
    if (n * n < 128 && (bits >> (n * n)) != 0) throw ParseError("skeleton hex exceeds n^2 bits");
    return Skeleton{n, bits};
}

Skeleton skel(const RatMatrix& m) {
    if (!m.square()) throw DimensionMismatch("skel: matrix not square");
    if (m.rows > kMaxSkelDim) throw DimensionTooLarge("skel: n > 11");
    Skeleton s{m.rows, 0};
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) s.set(i, j);
    return s;
}

bool poset_leq(const Skeleton& s1, const Skeleton& s2) {
    if (s1.n != s2.n) throw DimensionMismatch("poset_leq: dimension mismatch");
    return (s1.bits & s2.bits) == s1.bits;
}

Skeleton transpose(const Skeleton& s) {
    Skeleton t{s.n, 0};
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
            if (s.test(i, j)) t.set(j, i);
    return t;
}

Skeleton apply_perms(const Skeleton& s, const int* row_perm, const int* col_perm, bool do_transpose) {
    const Skeleton base = do_transpose ? transpose(s) : s;
    Skeleton out{s.n, 0};
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
            if (base.test(row_perm[i], col_perm[j])) out.set(i, j);
    return out;
}

CanonicalKey canonical_key(const Skeleton& s) {
    if (s.n < 1 || s.n > kMaxDim) throw DimensionTooLarge("canonical_key: n out of range");
    std::array<uint16_t, kMaxDim> best;
    best.fill(kInfRow);
    const RowView direct = rows_of(s);
    const RowView transposed = transpose_of(direct);
    for (const RowView* v : {&direct, &transposed}) {
        CanonDfs dfs{s.n, v, &best, /*detect_only=*/false};
        dfs.run();
    }
    const Skeleton canon = from_rows(s.n, best);
    return CanonicalKey{s.n, static_cast<uint64_t>(canon.bits)};
}

bool is_self_canonical(const Skeleton& s) {
    if (s.n < 1 || s.n > kMaxDim) throw DimensionTooLarge("is_self_canonical: n out of range");
    const RowView direct = rows_of(s);
    std::array<uint16_t, kMaxDim> self{};
    for (int i = 0; i < s.n; ++i) self[i] = direct.rv[i];
    for (int i = 0; i + 1 < s.n; ++i)
        if (self[i] > self[i + 1]) return false;  // canonical forms have sorted rows

    // The first row of a canonical form is 0...01...1 with as many ones as the
    // minimum row/column popcount; reject cheap mismatches before the search.
    const RowView transposed = transpose_of(direct);
    int minpop = kMaxDim + 1;
    for (int i = 0; i < s.n; ++i) {
        minpop = std::min(minpop, std::popcount(static_cast<unsigned>(direct.rv[i])));
        minpop = std::min(minpop, std::popcount(static_cast<unsigned>(transposed.rv[i])));
    }
    if (self[0] != (uint16_t(1) << minpop) - 1) return false;

    std::array<uint16_t, kMaxDim> best = self;
    for (const RowView* v : {&direct, &transposed}) {
        CanonDfs dfs{s.n, v, &best, /*detect_only=*/true};
        dfs.run();
        if (dfs.found_better) return false;
    }
    return true;
}

namespace {

// Kuhn's augmenting-path matching on bitmask adjacency. adj[i] is the set of
// columns row i may use.
struct Matcher {
    int n;
    const uint64_t* adj;
    std::array<int, kMaxSkelDim> match_row_of_col{};  // -1 = free

    bool augment(int row, uint32_t& visited_cols) {
        for (int c = 0; c < n; ++c) {
            if (!((adj[row] >> c) & 1)) continue;
            if (visited_cols & (uint32_t(1) << c)) continue;
            visited_cols |= uint32_t(1) << c;
            if (match_row_of_col[c] < 0 || augment(match_row_of_col[c], visited_cols)) {
                match_row_of_col[c] = row;
                return true;
            }
        }
        return false;
    }
};

bool perfect_matching(int n, const uint64_t* adj, uint32_t skip_rows) {
    Matcher m{n, adj, {}};
    m.match_row_of_col.fill(-1);
    for (int r = 0; r < n; ++r) {
        if (skip_rows & (uint32_t(1) << r)) continue;
        uint32_t visited = 0;
        if (!m.augment(r, visited)) return false;
    }
    return true;
}

}  // namespace

bool is_admissible(const Skeleton& s) {
    if (s.bits == 0 || s.n == 0) return false;
    const int n = s.n;
    std::array<uint64_t, kMaxSkelDim> adj{};
    for (int i = 0; i < n; ++i) adj[i] = s.row_mask(i);
    if (!perfect_matching(n, adj.data(), 0)) return false;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!s.test(i, j)) continue;
            // force edge (i,j): match the remaining rows avoiding column j
            std::array<uint64_t, kMaxSkelDim> restricted = adj;
            for (int r = 0; r < n; ++r) restricted[r] &= ~(uint64_t(1) << j);
            if (!perfect_matching(n, restricted.data(), uint32_t(1) << i)) return false;
        }
    }
    return true;
}

}  // namespace erdos
