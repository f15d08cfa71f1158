#pragma once

#include <string>
#include <vector>

#include "erdos/rational.hpp"

namespace erdos {

// Dense row-major matrix of exact rationals.
struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> entries;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c, Rational(0)) {}

    Rational& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }

    bool square() const { return rows == cols; }
    bool operator==(const RatMatrix&) const = default;

    static RatMatrix identity(int n);
    static RatMatrix constant(int r, int c, const Rational& v);
};

Rational frobenius_norm_sq(const RatMatrix& m);

// Entries in [0,1], every row and column sums to exactly 1.
bool is_bistochastic(const RatMatrix& m);

RatMatrix add(const RatMatrix& a, const RatMatrix& b);
RatMatrix scale(const Rational& c, const RatMatrix& m);

// Text grid: one row per line, whitespace-separated "p/q" tokens.
RatMatrix parse_matrix(const std::string& text);
std::string format_matrix(const RatMatrix& m);

}  // namespace erdos
