#include "erdos/linalg.hpp"

#include "erdos/errors.hpp"

namespace erdos {

RatVector solve_linear(const RatMatrix& a, const RatVector& b) {
    if (!a.square()) throw DimensionMismatch("solve_linear: matrix not square");
    const int n = a.rows;
    if (static_cast<int>(b.size()) != n) throw DimensionMismatch("solve_linear: rhs length");

    // augmented [A | b]
    std::vector<RatVector> aug(n, RatVector(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = a.at(i, j);
        aug[i][n] = b[i];
    }

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (aug[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw SingularMatrix("solve_linear: singular matrix");
        std::swap(aug[col], aug[pivot]);
        const Rational inv = 1 / aug[col][col];
        for (int j = col; j <= n; ++j) aug[col][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            const Rational f = aug[r][col];
            for (int j = col; j <= n; ++j) aug[r][j] -= f * aug[col][j];
        }
    }

    RatVector x(n);
    for (int i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

RankResult rank_and_independent_subset(const std::vector<RatVector>& vectors) {
    RankResult res;
    if (vectors.empty()) return res;
    const size_t dim = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != dim) throw DimensionMismatch("rank: vector lengths differ");

    // Reduced pivot rows kept in echelon form; pivot_col[k] is the leading
    // column of reduced[k].
    std::vector<RatVector> reduced;
    std::vector<size_t> pivot_col;

    for (size_t idx = 0; idx < vectors.size(); ++idx) {
        RatVector v = vectors[idx];
        for (size_t k = 0; k < reduced.size(); ++k) {
            const Rational& c = v[pivot_col[k]];
            if (c == 0) continue;
            const Rational f = c;
            for (size_t j = 0; j < dim; ++j) v[j] -= f * reduced[k][j];
        }
        size_t lead = dim;
        for (size_t j = 0; j < dim; ++j)
            if (v[j] != 0) {
                lead = j;
                break;
            }
        if (lead == dim) continue;  // dependent on earlier picks
        const Rational inv = 1 / v[lead];
        for (size_t j = 0; j < dim; ++j) v[j] *= inv;
        reduced.push_back(std::move(v));
        pivot_col.push_back(lead);
        res.indices.push_back(idx);
    }
    res.rank = static_cast<int>(res.indices.size());
    return res;
}

}  // namespace erdos
