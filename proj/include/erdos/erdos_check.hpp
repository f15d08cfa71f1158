#pragma once

#include <optional>
#include <string>
#include <vector>

#include "erdos/perm.hpp"
#include "erdos/skeleton.hpp"

namespace erdos {

struct MaxtraceResult {
    Rational value;
    Permutation argmax;  // lexicographically least maximizer
};

// Exact maximum diagonal sum over all n! permutations, by branch-and-bound
// depth-first search with a remaining-row-maxima upper bound.
MaxtraceResult maxtrace(const RatMatrix& m);

// Bistochastic and maxtrace equals the squared Frobenius norm.
bool is_erdos(const RatMatrix& m);

// A verified Erdos matrix with its supporting data.
struct ErdosRecord {
    Skeleton skeleton;
    RatMatrix matrix;
    Rational maxtrace;
    std::vector<Permutation> basis;
    RatVector coefficients;
    BigInt denominator;  // lcm of entry denominators in lowest terms
    int distinct_nonzero = 0;
    int zeros = 0;
    bool simplicial = false;  // all inner permutations linearly independent

    std::string to_json() const;
    static ErdosRecord from_json(const std::string& line);
};

enum class Verdict {
    Erdos,
    NegativeEntry,
    OuterTraceExcess,
    NegativeAndExcess,
    SkeletonShrink,
};

const char* verdict_name(Verdict v);

struct CandidateOutcome {
    Skeleton skeleton;
    Verdict verdict;
    std::optional<ErdosRecord> record;  // present iff verdict == Erdos
    bool simplicial = false;
    RatMatrix candidate;  // the matrix E_S of Step 4, whatever the verdict
};

// Steps 3-5 of the skeleton pipeline: pick an independent basis of the inner
// permutations, solve the Gram system for the unique common-inner-trace
// candidate, and classify the result.
CandidateOutcome candidate_for_skeleton(const Skeleton& s);

// Independent re-check of every ErdosRecord invariant; used on loaded files.
bool verify_record(const ErdosRecord& r);

// Equivalence of matrices under row/column permutations and transposition.
bool permutation_equivalent(const RatMatrix& a, const RatMatrix& b);

ErdosRecord make_record(const Skeleton& s, const RatMatrix& matrix, const Rational& mt,
                        std::vector<Permutation> basis, RatVector coefficients, bool simplicial);

}  // namespace erdos
