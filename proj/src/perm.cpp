#include "erdos/perm.hpp"

#include <algorithm>
#include <bit>

#include "erdos/errors.hpp"

namespace erdos {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image.resize(n);
    for (int i = 0; i < n; ++i) p.image[i] = i;
    return p;
}

RatMatrix Permutation::matrix() const {
    RatMatrix m(n(), n());
    for (int i = 0; i < n(); ++i) m.at(i, image[i]) = 1;
    return m;
}

Skeleton Permutation::pattern() const {
    Skeleton s{n(), 0};
    for (int i = 0; i < n(); ++i) s.set(i, image[i]);
    return s;
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (int i = 0; i < n(); ++i) {
        if (i) out += ',';
        out += std::to_string(image[i]);
    }
    return out + "]";
}

Permutation Permutation::parse(const std::string& text) {
    Permutation p;
    std::string digits;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
        } else {
            if (!digits.empty()) p.image.push_back(std::stoi(digits));
            digits.clear();
            if (c != '[' && c != ']' && c != ',' && c != ' ')
                throw ParseError("bad permutation text: " + text);
        }
    }
    if (!digits.empty()) p.image.push_back(std::stoi(digits));
    std::vector<bool> seen(p.image.size(), false);
    for (int v : p.image) {
        if (v < 0 || v >= p.n() || seen[v]) throw ParseError("not a bijection: " + text);
        seen[v] = true;
    }
    if (p.image.empty()) throw ParseError("empty permutation text");
    return p;
}

namespace {

void dfs_inner(const Skeleton& s, int row, uint64_t free_cols, Permutation& cur,
               std::vector<Permutation>& out) {
    const int n = s.n;
    if (row == n) {
        out.push_back(cur);
        return;
    }
    uint64_t avail = s.row_mask(row) & free_cols;
    while (avail) {
        const int c = std::countr_zero(avail);
        avail &= avail - 1;
        cur.image[row] = c;
        dfs_inner(s, row + 1, free_cols & ~(uint64_t(1) << c), cur, out);
    }
}

}  // namespace

std::vector<Permutation> inner_permutations(const Skeleton& s) {
    std::vector<Permutation> out;
    Permutation cur;
    cur.image.resize(s.n);
    dfs_inner(s, 0, (uint64_t(1) << s.n) - 1, cur, out);
    return out;
}

Rational sigma_trace(const RatMatrix& m, const Permutation& sigma) {
    if (!m.square() || m.rows != sigma.n()) throw DimensionMismatch("sigma_trace: dimension mismatch");
    Rational t = 0;
    for (int i = 0; i < m.rows; ++i) t += m.at(i, sigma(i));
    return t;
}

RatMatrix BirkhoffExpansion::reconstruct(int n) const {
    RatMatrix m(n, n);
    for (const auto& [coeff, perm] : terms)
        for (int i = 0; i < n; ++i) m.at(i, perm(i)) += coeff;
    return m;
}

namespace {

// Lexicographically first inner permutation of the remainder's skeleton, or
// empty if there is none.
bool first_inner(const Skeleton& s, Permutation& out) {
    struct Dfs {
        const Skeleton& s;
        Permutation& p;
        bool step(int row, uint64_t free_cols) {
            if (row == s.n) return true;
            uint64_t avail = s.row_mask(row) & free_cols;
            while (avail) {
                const int c = std::countr_zero(avail);
                avail &= avail - 1;
                p.image[row] = c;
                if (step(row + 1, free_cols & ~(uint64_t(1) << c))) return true;
            }
            return false;
        }
    };
    out.image.assign(s.n, 0);
    return Dfs{s, out}.step(0, (uint64_t(1) << s.n) - 1);
}

BirkhoffExpansion greedy_decompose(RatMatrix rem) {
    BirkhoffExpansion exp;
    const int n = rem.rows;
    while (true) {
        bool all_zero = std::all_of(rem.entries.begin(), rem.entries.end(),
                                    [](const Rational& e) { return e == 0; });
        if (all_zero) break;
        Permutation sigma;
        if (!first_inner(skel(rem), sigma))
            throw NotBistochastic("birkhoff_decompose: remainder has no inner permutation");
        Rational coeff = rem.at(0, sigma(0));
        for (int i = 1; i < n; ++i) coeff = std::min(coeff, rem.at(i, sigma(i)));
        for (int i = 0; i < n; ++i) rem.at(i, sigma(i)) -= coeff;
        exp.terms.emplace_back(coeff, std::move(sigma));
    }
    return exp;
}

}  // namespace

BirkhoffExpansion birkhoff_decompose(const RatMatrix& m) {
    if (!is_bistochastic(m)) throw NotBistochastic("birkhoff_decompose: input not bistochastic");
    return greedy_decompose(m);
}

BirkhoffExpansion birkhoff_decompose_through(const RatMatrix& m, const Permutation& sigma0) {
    if (!is_bistochastic(m)) throw NotBistochastic("birkhoff_decompose_through: input not bistochastic");
    if (sigma0.n() != m.rows) throw DimensionMismatch("birkhoff_decompose_through: dimension mismatch");
    Rational eps = m.at(0, sigma0(0));
    for (int i = 0; i < m.rows; ++i) eps = std::min(eps, m.at(i, sigma0(i)));
    if (eps == 0) throw NotInnerPermutation("birkhoff_decompose_through: sigma0 not inner");

    // G = (1+eps) M - eps sigma0 stays bistochastic; expand it and rescale.
    RatMatrix g = add(scale(1 + eps, m), scale(-eps, sigma0.matrix()));
    BirkhoffExpansion inner = greedy_decompose(g);

    BirkhoffExpansion out;
    const Rational scale_back = 1 / (1 + eps);
    Rational sigma0_coeff = eps * scale_back;
    for (auto& [coeff, perm] : inner.terms) {
        if (perm == sigma0) {
            sigma0_coeff += coeff * scale_back;
        } else {
            out.terms.emplace_back(coeff * scale_back, std::move(perm));
        }
    }
    out.terms.emplace_back(sigma0_coeff, sigma0);
    std::sort(out.terms.begin(), out.terms.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

}  // namespace erdos
