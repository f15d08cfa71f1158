#include "erdos/erdos_check.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "erdos/errors.hpp"
#include "erdos/linalg.hpp"

namespace erdos {

namespace {

struct MaxtraceDfs {
    const RatMatrix& m;
    int n;
    std::vector<Rational> suffix_max;  // suffix_max[i] = sum of row maxima for rows >= i
    Rational best = 0;
    std::vector<int> best_image;
    std::vector<int> cur;
    bool have_best = false;

    explicit MaxtraceDfs(const RatMatrix& mat) : m(mat), n(mat.rows), cur(mat.rows, 0) {
        suffix_max.assign(n + 1, Rational(0));
        for (int i = n - 1; i >= 0; --i) {
            Rational rowmax = m.at(i, 0);
            for (int j = 1; j < n; ++j) rowmax = std::max(rowmax, m.at(i, j));
            suffix_max[i] = suffix_max[i + 1] + rowmax;
        }
    }

    void descend(int row, uint64_t used_cols, const Rational& acc) {
        if (row == n) {
            if (!have_best || acc > best) {
                best = acc;
                best_image = cur;
                have_best = true;
            }
            return;
        }
        if (have_best && acc + suffix_max[row] <= best) return;
        // ascending column order visits permutations lexicographically, so the
        // first maximizer reached is the lexicographically least one
        for (int c = 0; c < n; ++c) {
            if ((used_cols >> c) & 1) continue;
            cur[row] = c;
            descend(row + 1, used_cols | (uint64_t(1) << c), acc + m.at(row, c));
        }
    }
};

}  // namespace

MaxtraceResult maxtrace(const RatMatrix& m) {
    if (!m.square()) throw DimensionMismatch("maxtrace: matrix not square");
    if (m.rows > kMaxSkelDim) throw DimensionTooLarge("maxtrace: n > 11");
    MaxtraceDfs dfs(m);
    dfs.descend(0, 0, Rational(0));
    return MaxtraceResult{dfs.best, Permutation{dfs.best_image}};
}

bool is_erdos(const RatMatrix& m) {
    if (!is_bistochastic(m)) return false;
    return maxtrace(m).value == frobenius_norm_sq(m);
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Erdos: return "erdos";
        case Verdict::NegativeEntry: return "negative_entry";
        case Verdict::OuterTraceExcess: return "outer_trace_excess";
        case Verdict::NegativeAndExcess: return "negative_and_excess";
        case Verdict::SkeletonShrink: return "skeleton_shrink";
    }
    return "?";
}

namespace {

RatVector flatten(const RatMatrix& m) {
    return m.entries;
}

int count_agreements(const Permutation& a, const Permutation& b) {
    int c = 0;
    for (int i = 0; i < a.n(); ++i)
        if (a(i) == b(i)) ++c;
    return c;
}

}  // namespace

ErdosRecord make_record(const Skeleton& s, const RatMatrix& matrix, const Rational& mt,
                        std::vector<Permutation> basis, RatVector coefficients, bool simplicial) {
    ErdosRecord rec;
    rec.skeleton = s;
    rec.matrix = matrix;
    rec.maxtrace = mt;
    rec.basis = std::move(basis);
    rec.coefficients = std::move(coefficients);
    rec.denominator = common_denominator(matrix.entries);
    rec.simplicial = simplicial;
    std::set<Rational> distinct;
    for (const auto& e : matrix.entries) {
        if (e == 0)
            ++rec.zeros;
        else
            distinct.insert(e);
    }
    rec.distinct_nonzero = static_cast<int>(distinct.size());
    return rec;
}

CandidateOutcome candidate_for_skeleton(const Skeleton& s) {
    if (!is_admissible(s)) throw NotAdmissible("candidate_for_skeleton: skeleton not admissible");
    const int n = s.n;

    const std::vector<Permutation> inner = inner_permutations(s);
    std::vector<RatVector> flat;
    flat.reserve(inner.size());
    for (const auto& p : inner) flat.push_back(flatten(p.matrix()));
    const RankResult rank = rank_and_independent_subset(flat);

    std::vector<Permutation> basis;
    basis.reserve(rank.indices.size());
    for (size_t idx : rank.indices) basis.push_back(inner[idx]);
    const int l = static_cast<int>(basis.size());
    const bool simplicial = (l == static_cast<int>(inner.size()));

    // Gram system G y = 1, then normalize x = y / sum(y). The Gram matrix of
    // an independent permutation set is positive definite, so both steps are
    // well defined.
    RatMatrix gram(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) gram.at(i, j) = count_agreements(basis[i], basis[j]);
    const RatVector y = solve_linear(gram, RatVector(l, Rational(1)));
    Rational ysum = 0;
    for (const auto& v : y) ysum += v;
    RatVector x(l);
    for (int i = 0; i < l; ++i) x[i] = y[i] / ysum;

    RatMatrix cand(n, n);
    for (int i = 0; i < l; ++i)
        for (int r = 0; r < n; ++r) cand.at(r, basis[i](r)) += x[i];

    // Row and column sums are 1 by construction; the common inner trace
    // equals x^T G x = 1/sum(y), the squared Frobenius norm of the candidate.
    const Rational inner_trace = frobenius_norm_sq(cand);

    CandidateOutcome out;
    out.skeleton = s;
    out.simplicial = simplicial;
    out.candidate = cand;

    const bool negative = std::any_of(cand.entries.begin(), cand.entries.end(),
                                      [](const Rational& e) { return e < 0; });
    const Rational mt = maxtrace(cand).value;
    const bool excess = mt > inner_trace;

    if (negative && excess) {
        out.verdict = Verdict::NegativeAndExcess;
    } else if (negative) {
        out.verdict = Verdict::NegativeEntry;
    } else if (excess) {
        out.verdict = Verdict::OuterTraceExcess;
    } else if (skel(cand) != s) {
        out.verdict = Verdict::SkeletonShrink;
    } else {
        out.verdict = Verdict::Erdos;
        out.record = make_record(s, cand, mt, std::move(basis), std::move(x), simplicial);
    }
    return out;
}

bool verify_record(const ErdosRecord& r) {
    const int n = r.skeleton.n;
    if (r.matrix.rows != n || r.matrix.cols != n) return false;
    if (r.basis.size() != r.coefficients.size() || r.basis.empty()) return false;

    if (skel(r.matrix) != r.skeleton) return false;
    if (!is_bistochastic(r.matrix)) return false;

    RatMatrix rebuilt(n, n);
    Rational coeff_sum = 0;
    for (size_t i = 0; i < r.basis.size(); ++i) {
        if (r.basis[i].n() != n) return false;
        for (int k = 0; k < n; ++k) rebuilt.at(k, r.basis[i](k)) += r.coefficients[i];
        coeff_sum += r.coefficients[i];
    }
    if (coeff_sum != 1 || rebuilt != r.matrix) return false;

    const MaxtraceResult mt = maxtrace(r.matrix);
    if (mt.value != r.maxtrace) return false;
    if (mt.value != frobenius_norm_sq(r.matrix)) return false;

    if (common_denominator(r.matrix.entries) != r.denominator) return false;

    std::set<Rational> distinct;
    int zeros = 0;
    for (const auto& e : r.matrix.entries)
        e == 0 ? void(++zeros) : void(distinct.insert(e));
    if (zeros != r.zeros || static_cast<int>(distinct.size()) != r.distinct_nonzero) return false;

    std::vector<RatVector> flat;
    for (const auto& p : r.basis) flat.push_back(p.matrix().entries);
    const RankResult rank = rank_and_independent_subset(flat);
    if (rank.rank != static_cast<int>(r.basis.size())) return false;

    const auto inner = inner_permutations(r.skeleton);
    if (r.simplicial != (inner.size() == r.basis.size())) return false;
    for (const auto& sigma : inner)
        if (sigma_trace(r.matrix, sigma) != r.maxtrace) return false;
    return true;
}

bool permutation_equivalent(const RatMatrix& a, const RatMatrix& b) {
    if (!a.square() || !b.square() || a.rows != b.rows) return false;
    const int n = a.rows;

    auto column = [n](const RatMatrix& m, int j) {
        RatVector col(n);
        for (int i = 0; i < n; ++i) col[i] = m.at(i, j);
        return col;
    };

    std::vector<RatVector> target_cols(n);
    for (int j = 0; j < n; ++j) target_cols[j] = column(b, j);

    std::vector<int> row_perm(n);
    for (int i = 0; i < n; ++i) row_perm[i] = i;

    for (bool tr : {false, true}) {
        RatMatrix base = a;
        if (tr) {
            base = RatMatrix(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) base.at(i, j) = a.at(j, i);
        }
        std::vector<int> perm = row_perm;
        do {
            // rows permuted by `perm`; columns must then biject exactly
            std::vector<RatVector> cols(n);
            for (int j = 0; j < n; ++j) {
                cols[j].resize(n);
                for (int i = 0; i < n; ++i) cols[j][i] = base.at(perm[i], j);
            }
            std::vector<bool> used(n, false);
            bool ok = true;
            for (int j = 0; j < n && ok; ++j) {
                bool found = false;
                for (int t = 0; t < n; ++t) {
                    if (used[t] || cols[j] != target_cols[t]) continue;
                    used[t] = true;
                    found = true;
                    break;
                }
                ok = found;
            }
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return false;
}

std::string ErdosRecord::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = skeleton.n;
    j["skeleton_hex"] = skeleton.to_hex();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < matrix.rows; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int jj = 0; jj < matrix.cols; ++jj) row.push_back(to_string(matrix.at(i, jj)));
        rows.push_back(row);
    }
    j["matrix"] = rows;
    j["maxtrace"] = to_string(maxtrace);
    nlohmann::ordered_json basis_json = nlohmann::ordered_json::array();
    for (const auto& p : basis) basis_json.push_back(p.image);
    j["basis"] = basis_json;
    nlohmann::ordered_json coeff_json = nlohmann::ordered_json::array();
    for (const auto& c : coefficients) coeff_json.push_back(to_string(c));
    j["coefficients"] = coeff_json;
    j["denominator"] = denominator.get_str();
    j["distinct_nonzero"] = distinct_nonzero;
    j["zeros"] = zeros;
    j["simplicial"] = simplicial;
    return j.dump();
}

ErdosRecord ErdosRecord::from_json(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad record json: ") + e.what());
    }
    ErdosRecord rec;
    try {
        const int n = j.at("n").get<int>();
        rec.skeleton = Skeleton::from_hex(n, j.at("skeleton_hex").get<std::string>());
        rec.matrix = RatMatrix(n, n);
        const auto& rows = j.at("matrix");
        for (int i = 0; i < n; ++i)
            for (int jj = 0; jj < n; ++jj)
                rec.matrix.at(i, jj) = parse_rational(rows.at(i).at(jj).get<std::string>());
        rec.maxtrace = parse_rational(j.at("maxtrace").get<std::string>());
        for (const auto& b : j.at("basis")) {
            Permutation p;
            p.image = b.get<std::vector<int>>();
            rec.basis.push_back(std::move(p));
        }
        for (const auto& c : j.at("coefficients"))
            rec.coefficients.push_back(parse_rational(c.get<std::string>()));
        rec.denominator = BigInt(j.at("denominator").get<std::string>());
        rec.distinct_nonzero = j.at("distinct_nonzero").get<int>();
        rec.zeros = j.at("zeros").get<int>();
        rec.simplicial = j.at("simplicial").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad record fields: ") + e.what());
    }
    return rec;
}

}  // namespace erdos
