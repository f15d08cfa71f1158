// Acceptance suite: one PASS/FAIL line per criterion. The n = 6 extended run
// (criterion 2) is hours-scale and only executes when --n6 is passed;
// otherwise it reports SKIP and does not affect the exit code.

#include <algorithm>
#include <cstring>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "erdos/enumerate.hpp"
#include "erdos/errors.hpp"
#include "erdos/families.hpp"

using namespace erdos;

namespace {

int g_workers = 1;

std::map<int, EnumerationReport> g_reports;  // n -> full default-mode report

const EnumerationReport& report_for(int n) {
    auto it = g_reports.find(n);
    if (it != g_reports.end()) return it->second;
    EnumerateOptions opt;
    opt.workers = g_workers;
    auto res = enumerate_erdos(n, opt);
    return g_reports.emplace(n, std::move(res.report)).first->second;
}

bool check(bool ok, const std::string& what, std::string& detail) {
    if (!ok && detail.empty()) detail = what;
    return ok;
}

// --- criterion 1: Table 1 class counts for n = 1..5 ------------------------

bool criterion_table1(std::string& detail) {
    const long expected[][2] = {{1, 1}, {2, 2}, {6, 6}, {32, 33}, {469, 534}};
    bool ok = true;
    for (int n = 1; n <= 5; ++n) {
        const auto& rep = report_for(n);
        std::ostringstream what;
        what << "n=" << n << " got " << rep.erdos_count << "/" << rep.admissible_classes;
        ok &= check(rep.erdos_count == expected[n - 1][0] &&
                        rep.admissible_classes == expected[n - 1][1],
                    what.str(), detail);
    }
    return ok;
}

// --- criterion 2: flag-gated n = 6 extended run ----------------------------

bool criterion_n6(std::string& detail) {
    EnumerateOptions opt;
    opt.workers = g_workers;
    opt.allow_n6 = true;
    opt.checkpoint_path = "acceptance_n6_checkpoint.json";
    const auto res = enumerate_erdos(6, opt);
    std::ostringstream what;
    what << "got " << res.report.erdos_count << "/" << res.report.admissible_classes;
    return check(res.report.erdos_count == 23851 && res.report.admissible_classes == 32174,
                 what.str(), detail);
}

// --- criterion 3: n = 5 failure-classification statistics ------------------

bool criterion_stats5(std::string& detail) {
    const auto& rep = report_for(5);
    bool ok = true;
    ok &= check(rep.shrink_count == 7, "shrink", detail);
    ok &= check(rep.negative_total() == 33, "negative total", detail);
    ok &= check(rep.excess_total() == 31, "outer excess total", detail);
    ok &= check(rep.both_count == 6, "negative and excess", detail);
    ok &= check(rep.simplicial_admissible == 83 && rep.admissible_classes == 534,
                "simplicial admissible", detail);
    ok &= check(rep.simplicial_failures == 33 && rep.failure_classes() == 65,
                "simplicial failures", detail);
    return ok;
}

// --- criterion 4: extremal denominator records -----------------------------

RatMatrix scaled_int_matrix(long den, const std::vector<std::vector<long>>& rows) {
    const int n = static_cast<int>(rows.size());
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rat(rows[i][j], den);
    return m;
}

bool criterion_denominators(std::string& detail) {
    const RatMatrix e2 = RatMatrix::constant(2, 2, rat(1, 2));
    const RatMatrix e3 = scaled_int_matrix(5, {{3, 2, 0}, {2, 1, 2}, {0, 2, 3}});
    const RatMatrix e4 =
        scaled_int_matrix(43, {{2, 7, 15, 19}, {7, 12, 0, 24}, {15, 0, 28, 0}, {19, 24, 0, 0}});
    const RatMatrix e5 = scaled_int_matrix(10226, {{1028, 1947, 3087, 2832, 1332},
                                                   {0, 2204, 3344, 3089, 1589},
                                                   {1736, 2655, 3795, 0, 2040},
                                                   {2501, 3420, 0, 4305, 0},
                                                   {4961, 0, 0, 0, 5265}});
    const long dens[] = {2, 5, 43, 10226};
    const RatMatrix* fixtures[] = {&e2, &e3, &e4, &e5};

    bool ok = true;
    for (int n = 2; n <= 5; ++n) {
        const auto& rec = max_denominator(report_for(n));
        std::ostringstream what;
        what << "n=" << n << " denominator " << rec.denominator.get_str();
        ok &= check(rec.denominator == dens[n - 2], what.str(), detail);
        ok &= check(permutation_equivalent(rec.matrix, *fixtures[n - 2]),
                    "n=" + std::to_string(n) + " equivalence", detail);
    }
    for (int n = 2; n <= 4; ++n)
        ok &= check(query_distinct_entries(report_for(n)).empty(),
                    "distinct query not empty at n=" + std::to_string(n), detail);
    const auto distinct5 = query_distinct_entries(report_for(5));
    ok &= check(!distinct5.empty(), "distinct query empty at n=5", detail);
    if (!distinct5.empty()) {
        ok &= check(distinct5.front().distinct_nonzero == 18, "n=5 top distinct count", detail);
        ok &= check(permutation_equivalent(distinct5.front().matrix, e5),
                    "n=5 top distinct record equivalence", detail);
    }
    return ok;
}

// --- criterion 5: the three constructed families are Erdos -----------------

bool criterion_families(std::string& detail) {
    bool ok = true;
    auto probe = [&](const RatMatrix& m, const std::string& what) {
        ok &= check(is_rcds(m), what + " rcds", detail);
        ok &= check(is_erdos(m), what + " erdos", detail);
    };

    for (long n = 3; n <= 7; ++n)
        for (long r = 2; r < n; ++r)
            for (long s = 1; s < r; ++s) probe(make_x_rsn(r, s, n), "xrsn");

    auto try_zigzag = [&](ZigzagSpec z) {
        try {
            z.validate();
        } catch (const InvalidSpec&) {
            return;
        }
        probe(make_zigzag(z), "zigzag");
    };
    for (long r1 = 1; r1 <= 7; ++r1)
        for (long s1 = 1; s1 <= r1; ++s1) try_zigzag({{r1}, {s1, r1 - s1}});
    for (long r1 = 1; r1 < 7; ++r1)
        for (long r2 = 1; r1 + r2 <= 7; ++r2)
            for (long s1 = 1; s1 < r1 + r2; ++s1)
                for (long s2 = 1; s1 + s2 <= r1 + r2; ++s2)
                    try_zigzag({{r1, r2}, {s1, s2, r1 + r2 - s1 - s2}});

    for (int p = 1; p <= 3; ++p)
        for (long a1 = 1; a1 <= p; ++a1)
            for (long a2 = 1; a2 <= p; ++a2)
                for (long a3 = 1; a3 <= p; ++a3) {
                    const long a4 = a2 + a3 - a1;
                    if (a4 < 1 || a4 > p) continue;
                    AlphaSpec spec;
                    spec.p = p;
                    spec.alpha = {a1, a2, a3, a4};
                    for (int i = 0; i < 4; ++i)
                        spec.blocks[i] = circulant_regular(p, static_cast<int>(spec.alpha[i]));
                    probe(make_x_alpha(spec), "alpha");
                }
    return ok;
}

// --- criterion 6: the three-block staircase non-example --------------------

bool criterion_counterexample(std::string& detail) {
    const RatMatrix m = make_zigzag({{4, 2, 4}, {3, 2, 5, 0}});
    bool ok = true;
    ok &= check(is_rcds(m), "rcds", detail);
    ok &= check(frobenius_norm_sq(m) == rat(81, 40), "inner trace", detail);
    ok &= check(maxtrace(m).value == rat(82, 40), "maxtrace", detail);
    ok &= check(!is_erdos(m), "erdos verdict", detail);
    return ok;
}

// --- criterion 7: invariant-based property suite ---------------------------

RatMatrix random_bistochastic(std::mt19937& rng, int n) {
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) image[i] = i;
    RatMatrix m(n, n);
    Rational total = 0;
    const int terms = 2 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        std::shuffle(image.begin(), image.end(), rng);
        const Rational w = rat(1 + (rng() % 9), 1 + (rng() % 9));
        for (int i = 0; i < n; ++i) m.at(i, image[i]) += w;
        total += w;
    }
    return scale(1 / total, m);
}

long permanent_bruteforce(const Skeleton& s) {
    std::vector<int> image(s.n);
    for (int i = 0; i < s.n; ++i) image[i] = i;
    long count = 0;
    do {
        bool hit = true;
        for (int i = 0; i < s.n && hit; ++i) hit = s.test(i, image[i]);
        if (hit) ++count;
    } while (std::next_permutation(image.begin(), image.end()));
    return count;
}

uint64_t orbit_min_bruteforce(const Skeleton& s) {
    std::vector<int> id(s.n);
    for (int i = 0; i < s.n; ++i) id[i] = i;
    std::vector<std::vector<int>> perms;
    std::vector<int> image = id;
    do perms.push_back(image);
    while (std::next_permutation(image.begin(), image.end()));
    auto string_value = [&](const Skeleton& t) {
        uint64_t v = 0;
        for (int i = 0; i < t.n; ++i)
            for (int j = 0; j < t.n; ++j) v = (v << 1) | (t.test(i, j) ? 1 : 0);
        return v;
    };
    uint64_t best = ~uint64_t(0), best_bits = 0;
    for (bool tr : {false, true})
        for (const auto& rp : perms)
            for (const auto& cp : perms) {
                const Skeleton moved = apply_perms(s, rp.data(), cp.data(), tr);
                if (string_value(moved) < best) {
                    best = string_value(moved);
                    best_bits = static_cast<uint64_t>(moved.bits);
                }
            }
    return best_bits;
}

bool criterion_properties(std::string& detail) {
    bool ok = true;
    std::mt19937 rng(2024);

    // (a) Marcus-Ree: maxtrace >= squared Frobenius norm for bistochastic M
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const RatMatrix m = random_bistochastic(rng, n);
        ok &= check(maxtrace(m).value >= frobenius_norm_sq(m), "(a) Marcus-Ree", detail);
    }

    // (b) every inner trace of every enumerated record equals its maxtrace
    for (int n = 1; n <= 5 && ok; ++n)
        for (const auto& rec : report_for(n).records) {
            for (const auto& sigma : inner_permutations(rec.skeleton))
                ok &= check(sigma_trace(rec.matrix, sigma) == rec.maxtrace,
                            "(b) inner trace vs maxtrace", detail);
            if (!ok) break;
        }

    // (c) a strictly smaller skeleton forces a strictly larger maxtrace
    for (int n = 1; n <= 5 && ok; ++n) {
        const auto& recs = report_for(n).records;
        for (size_t i = 0; i < recs.size() && ok; ++i)
            for (size_t j = 0; j < recs.size(); ++j) {
                if (i == j || !poset_leq(recs[i].skeleton, recs[j].skeleton)) continue;
                ok &= check(recs[i].maxtrace > recs[j].maxtrace, "(c) monotonicity", detail);
                if (!ok) break;
            }
    }

    // (d) one Erdos matrix per skeleton class: canonical keys never repeat
    for (int n = 1; n <= 5; ++n) {
        const auto& recs = report_for(n).records;
        std::set<uint64_t> keys;
        for (const auto& rec : recs) keys.insert(canonical_key(rec.skeleton).bits);
        ok &= check(keys.size() == recs.size(), "(d) duplicate skeleton class", detail);
    }

    // (e) criterion <=> Erdos on every bistochastic RCDS candidate, n <= 4
    for (int n = 2; n <= 4 && ok; ++n) {
        const uint64_t total = uint64_t(1) << (n * n);
        for (uint64_t bits = 0; bits < total; ++bits) {
            const Skeleton s{n, bits};
            if (!is_self_canonical(s) || !is_admissible(s)) continue;
            const auto out = candidate_for_skeleton(s);
            if (std::any_of(out.candidate.entries.begin(), out.candidate.entries.end(),
                            [](const Rational& e) { return e < 0; }))
                continue;
            const bool agrees =
                erdos_criterion(uv_decompose(out.candidate)) == is_erdos(out.candidate);
            ok &= check(agrees, "(e) criterion equivalence", detail);
            if (!ok) break;
        }
    }

    // (f) exact Birkhoff reconstruction; forced permutation keeps weight > 0
    for (int trial = 0; trial < 200 && ok; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const RatMatrix m = random_bistochastic(rng, n);
        ok &= check(birkhoff_decompose(m).reconstruct(n) == m, "(f) reconstruction", detail);
        const auto inner = inner_permutations(skel(m));
        const auto& sigma0 = inner[rng() % inner.size()];
        const auto through = birkhoff_decompose_through(m, sigma0);
        Rational coeff = 0;
        for (const auto& [c, p] : through.terms)
            if (p == sigma0) coeff = c;
        ok &= check(coeff > 0 && through.reconstruct(n) == m, "(f) forced permutation", detail);
    }

    // (g) inner permutation count equals the permanent, n <= 4
    for (int n = 1; n <= 4 && ok; ++n) {
        const uint64_t total = uint64_t(1) << (n * n);
        for (uint64_t bits = 0; bits < total; ++bits) {
            const Skeleton s{n, bits};
            if (inner_permutations(s).size() != static_cast<size_t>(permanent_bruteforce(s))) {
                ok = check(false, "(g) permanent mismatch", detail);
                break;
            }
        }
    }

    // (h) canonical keys equal the brute-force orbit minimum, n <= 3
    for (int n = 1; n <= 3 && ok; ++n) {
        const uint64_t total = uint64_t(1) << (n * n);
        for (uint64_t bits = 0; bits < total; ++bits) {
            const Skeleton s{n, bits};
            if (canonical_key(s).bits != orbit_min_bruteforce(s)) {
                ok = check(false, "(h) canonical key mismatch", detail);
                break;
            }
        }
    }

    // (i) worker count and scan mode do not change the report
    for (int n = 1; n <= 4 && ok; ++n) {
        EnumerateOptions multi;
        multi.workers = 3;
        EnumerateOptions fixed;
        fixed.fix_identity = true;
        const std::string base = report_for(n).summary_json();
        ok &= check(enumerate_erdos(n, multi).report.summary_json() == base &&
                        enumerate_erdos(n, fixed).report.summary_json() == base,
                    "(i) enumeration invariance", detail);
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    bool run_n6 = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--n6") == 0) run_n6 = true;
    const unsigned hw = std::thread::hardware_concurrency();
    g_workers = hw ? static_cast<int>(hw) : 1;

    struct Criterion {
        const char* name;
        bool (*fn)(std::string&);
        bool gated;
    };
    const Criterion criteria[] = {
        {"1 Table 1 class counts, n=1..5", criterion_table1, false},
        {"2 n=6 extended run", criterion_n6, true},
        {"3 n=5 failure statistics", criterion_stats5, false},
        {"4 extremal denominator records", criterion_denominators, false},
        {"5 family construction sweep", criterion_families, false},
        {"6 staircase non-example", criterion_counterexample, false},
        {"7 property suite (a)-(i)", criterion_properties, false},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (c.gated && !run_n6) {
            std::cout << "SKIP criterion " << c.name << " (pass --n6 to run)\n" << std::flush;
            continue;
        }
        std::string detail;
        bool ok;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.name;
        if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
        std::cout << "\n" << std::flush;
    }
    return failures == 0 ? 0 : 1;
}
