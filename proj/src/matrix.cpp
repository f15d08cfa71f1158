#include "erdos/matrix.hpp"

#include <sstream>

#include "erdos/errors.hpp"

namespace erdos {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::constant(int r, int c, const Rational& v) {
    RatMatrix m(r, c);
    for (auto& e : m.entries) e = v;
    return m;
}

Rational frobenius_norm_sq(const RatMatrix& m) {
    Rational sum = 0;
    for (const auto& e : m.entries) sum += e * e;
    return sum;
}

bool is_bistochastic(const RatMatrix& m) {
    if (!m.square() || m.rows == 0) return false;
    const int n = m.rows;
    for (const auto& e : m.entries)
        if (e < 0 || e > 1) return false;
    for (int i = 0; i < n; ++i) {
        Rational row = 0, col = 0;
        for (int j = 0; j < n; ++j) {
            row += m.at(i, j);
            col += m.at(j, i);
        }
        if (row != 1 || col != 1) return false;
    }
    return true;
}

RatMatrix add(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw DimensionMismatch("add: shape mismatch");
    RatMatrix out(a.rows, a.cols);
    for (size_t k = 0; k < a.entries.size(); ++k) out.entries[k] = a.entries[k] + b.entries[k];
    return out;
}

RatMatrix scale(const Rational& c, const RatMatrix& m) {
    RatMatrix out(m.rows, m.cols);
    for (size_t k = 0; k < m.entries.size(); ++k) out.entries[k] = c * m.entries[k];
    return out;
}

RatMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<Rational>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Rational> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_rational(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix text");
    const size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw ParseError("ragged matrix rows");
    RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

std::string format_matrix(const RatMatrix& m) {
    std::string out;
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            if (j) out += ' ';
            out += to_string(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace erdos
