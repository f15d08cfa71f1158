#include "erdos/families.hpp"

#include <numeric>
#include <sstream>

#include "erdos/errors.hpp"
#include "erdos/skeleton.hpp"

namespace erdos {

long ZigzagSpec::n() const {
    return std::accumulate(r.begin(), r.end(), 0L);
}

void ZigzagSpec::validate() const {
    const size_t k = r.size();
    if (k == 0) throw InvalidSpec("zigzag: empty row sizes");
    if (s.size() != k + 1) throw InvalidSpec("zigzag: need k+1 column sizes");
    for (long ri : r)
        if (ri < 1) throw InvalidSpec("zigzag: row sizes must be positive");
    for (size_t i = 0; i < k; ++i)
        if (s[i] < 1) throw InvalidSpec("zigzag: column sizes must be positive");
    if (s[k] < 0) throw InvalidSpec("zigzag: negative column size");
    const long rsum = std::accumulate(r.begin(), r.end(), 0L);
    const long ssum = std::accumulate(s.begin(), s.end(), 0L);
    if (rsum != ssum) throw InvalidSpec("zigzag: row and column totals differ");
    long rpref = 0, spref = s[0];
    for (size_t t = 1; t < k; ++t) {
        rpref += r[t - 1];
        // interlacing at t: s_1+..+s_t < r_1+..+r_t < s_1+..+s_{t+1}
        if (!(spref < rpref && rpref < spref + s[t]))
            throw InvalidSpec("zigzag: interlacing conditions violated");
        spref += s[t];
    }
}

RatMatrix make_x_rsn(long r, long s, long n) {
    if (!(0 < s && s < r && r < n)) throw InvalidSpec("xrsn: need 0 < s < r < n");
    RatMatrix m(static_cast<int>(n), static_cast<int>(n));
    const Rational top_left = rat(1, r);
    const Rational top_right = Rational(r - s) / Rational(r * (n - s));
    const Rational bottom_right = rat(1, n - s);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const bool top = i < r, left = j < s;
            if (top)
                m.at(i, j) = left ? top_left : top_right;
            else if (!left)
                m.at(i, j) = bottom_right;
        }
    return m;
}

ZigzagAlphas zigzag_alphas(const ZigzagSpec& spec) {
    spec.validate();
    const size_t k = spec.r.size();
    ZigzagAlphas a;
    long rpref = 0, spref = 0;
    for (size_t i = 0; i < k; ++i) {
        spref += spec.s[i];
        a.diag.push_back(Rational(spref - rpref) / Rational(spec.r[i] * spec.s[i]));
        rpref += spec.r[i];
        if (spec.s[i + 1] > 0)
            a.super.push_back(Rational(rpref - spref) / Rational(spec.r[i] * spec.s[i + 1]));
    }
    return a;
}

RatMatrix make_zigzag(const ZigzagSpec& spec) {
    spec.validate();
    const size_t k = spec.r.size();
    const long n = spec.n();
    const ZigzagAlphas a = zigzag_alphas(spec);

    std::vector<long> row_start(k + 1, 0), col_start(k + 2, 0);
    for (size_t i = 0; i < k; ++i) row_start[i + 1] = row_start[i] + spec.r[i];
    for (size_t j = 0; j <= k; ++j) col_start[j + 1] = col_start[j] + spec.s[j];

    RatMatrix m(static_cast<int>(n), static_cast<int>(n));
    for (size_t i = 0; i < k; ++i) {
        for (long row = row_start[i]; row < row_start[i + 1]; ++row) {
            for (long col = col_start[i]; col < col_start[i + 1]; ++col)
                m.at(row, col) = a.diag[i];
            if (spec.s[i + 1] > 0)
                for (long col = col_start[i + 1]; col < col_start[i + 2]; ++col)
                    m.at(row, col) = a.super[i];
        }
    }
    return m;
}

void AlphaSpec::validate() const {
    if (p < 1) throw InvalidSpec("alpha: p must be positive");
    if (alpha[0] + alpha[3] != alpha[1] + alpha[2])
        throw InvalidSpec("alpha: alpha1 + alpha4 must equal alpha2 + alpha3");
    for (int i = 0; i < 4; ++i) {
        if (alpha[i] < 1 || alpha[i] > p) throw InvalidSpec("alpha: entries must lie in 1..p");
        const RatMatrix& b = blocks[i];
        if (b.rows != p || b.cols != p) throw InvalidSpec("alpha: block shape mismatch");
        for (int r = 0; r < p; ++r) {
            Rational rowsum = 0, colsum = 0;
            for (int c = 0; c < p; ++c) {
                if (b.at(r, c) != 0 && b.at(r, c) != 1)
                    throw InvalidSpec("alpha: blocks must be binary");
                rowsum += b.at(r, c);
                colsum += b.at(c, r);
            }
            if (rowsum != alpha[i] || colsum != alpha[i])
                throw InvalidSpec("alpha: block is not alpha-regular");
        }
    }
}

RatMatrix make_x_alpha(const AlphaSpec& spec) {
    spec.validate();
    const int p = spec.p;
    const Rational denom = Rational(spec.alpha[0] * spec.alpha[3] + spec.alpha[1] * spec.alpha[2]);
    const std::array<Rational, 4> scale = {Rational(spec.alpha[3]) / denom, Rational(spec.alpha[2]) / denom,
                                           Rational(spec.alpha[1]) / denom, Rational(spec.alpha[0]) / denom};
    RatMatrix m(2 * p, 2 * p);
    for (int b = 0; b < 4; ++b) {
        const int row0 = (b / 2) * p, col0 = (b % 2) * p;
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                if (spec.blocks[b].at(i, j) == 1) m.at(row0 + i, col0 + j) = scale[b];
    }
    return m;
}

RatMatrix circulant_regular(int p, int k) {
    if (k < 1 || k > p) throw InvalidSpec("circulant: need 1 <= k <= p");
    RatMatrix m(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if ((j - i + p) % p < k) m.at(i, j) = 1;
    return m;
}

UVDecomposition family_uv_vectors(const ZigzagSpec& spec) {
    spec.validate();
    const size_t k = spec.r.size();
    const ZigzagAlphas a = zigzag_alphas(spec);

    // alpha accessor over block indices (1-based in the formulas, 0-based here)
    auto alpha = [&](size_t i, size_t j) -> Rational {
        return i == j ? a.diag[i] : a.super[i];
    };

    // Block-level vectors, gauge u_1 = 0; entries off the two staircase
    // diagonals follow the telescoped extension formulas.
    const size_t vcount = spec.s[k] > 0 ? k + 1 : k;
    std::vector<Rational> bu(k), bv(vcount);
    bu[0] = 0;
    for (size_t j = 0; j < vcount; ++j) {
        // u_1 + v_j
        if (j == 0)
            bv[j] = alpha(0, 0);
        else if (j == 1)
            bv[j] = alpha(0, 1);
        else {
            Rational acc = 0;
            for (size_t t = 0; t + 1 <= j - 1; ++t) acc += alpha(t, t + 1) - alpha(t + 1, t + 1);
            bv[j] = acc + alpha(j - 1, j);
        }
    }
    for (size_t i = 1; i < k; ++i) bu[i] = alpha(i, i) - bv[i];

    UVDecomposition d;
    const long n = spec.n();
    d.skeleton = skel(make_zigzag(spec));
    for (size_t i = 0; i < k; ++i)
        for (long t = 0; t < spec.r[i]; ++t) d.u.push_back(bu[i]);
    for (size_t j = 0; j < vcount; ++j)
        for (long t = 0; t < spec.s[j]; ++t) d.v.push_back(bv[j]);
    d.u.resize(n);
    d.v.resize(n);
    return d;
}

UVDecomposition family_uv_vectors(const AlphaSpec& spec) {
    spec.validate();
    const long a1 = spec.alpha[0], a2 = spec.alpha[1], a3 = spec.alpha[2], a4 = spec.alpha[3];
    const Rational denom = Rational(8 * (a1 * a4 + a2 * a3));
    const Rational u_top = Rational(-a1 - a2 + 3 * a3 + 3 * a4) / denom;
    const Rational u_bottom = Rational(3 * a1 + 3 * a2 - a3 - a4) / denom;
    const Rational v_left = Rational(-a1 + 3 * a2 - a3 + 3 * a4) / denom;
    const Rational v_right = Rational(3 * a1 - a2 + 3 * a3 - a4) / denom;

    UVDecomposition d;
    d.skeleton = skel(make_x_alpha(spec));
    for (int i = 0; i < 2 * spec.p; ++i) {
        d.u.push_back(i < spec.p ? u_top : u_bottom);
        d.v.push_back(i < spec.p ? v_left : v_right);
    }
    return d;
}

namespace {

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (cur.empty()) throw InvalidSpec("empty number in list: " + text);
            out.push_back(std::stol(cur));
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            cur += c;
        } else {
            throw InvalidSpec("bad number list: " + text);
        }
    }
    if (cur.empty()) throw InvalidSpec("bad number list: " + text);
    out.push_back(std::stol(cur));
    return out;
}

std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ';')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw InvalidSpec("expected key=value in: " + part);
        out.emplace_back(part.substr(0, eq), part.substr(eq + 1));
    }
    return out;
}

}  // namespace

RatMatrix parse_family_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw InvalidSpec("family spec needs a 'kind:' prefix");
    const std::string kind = spec.substr(0, colon);
    const std::string body = spec.substr(colon + 1);

    if (kind == "xrsn") {
        const auto nums = parse_long_list(body);
        if (nums.size() != 3) throw InvalidSpec("xrsn spec needs r,s,n");
        return make_x_rsn(nums[0], nums[1], nums[2]);
    }
    if (kind == "zigzag") {
        ZigzagSpec z;
        for (const auto& [key, value] : parse_kv(body)) {
            if (key == "r")
                z.r = parse_long_list(value);
            else if (key == "s")
                z.s = parse_long_list(value);
            else
                throw InvalidSpec("unknown zigzag key: " + key);
        }
        if (z.s.size() == z.r.size()) z.s.push_back(0);  // shorthand: trailing s_{k+1} = 0
        return make_zigzag(z);
    }
    if (kind == "alpha") {
        AlphaSpec a;
        std::string blocks_kind = "circulant";
        for (const auto& [key, value] : parse_kv(body)) {
            if (key == "p")
                a.p = static_cast<int>(std::stol(value));
            else if (key == "a") {
                const auto nums = parse_long_list(value);
                if (nums.size() != 4) throw InvalidSpec("alpha spec needs four values");
                for (int i = 0; i < 4; ++i) a.alpha[i] = nums[i];
            } else if (key == "blocks")
                blocks_kind = value;
            else
                throw InvalidSpec("unknown alpha key: " + key);
        }
        if (blocks_kind != "circulant") throw InvalidSpec("only circulant blocks are supported here");
        for (int i = 0; i < 4; ++i)
            a.blocks[i] = circulant_regular(a.p, static_cast<int>(a.alpha[i]));
        return make_x_alpha(a);
    }
    throw InvalidSpec("unknown family kind: " + kind);
}

}  // namespace erdos
