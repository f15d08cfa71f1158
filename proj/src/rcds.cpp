#include "erdos/rcds.hpp"

#include <algorithm>
#include <queue>

#include <json.hpp>

#include "erdos/errors.hpp"
#include "erdos/perm.hpp"

namespace erdos {

bool is_rcds(const RatMatrix& m) {
    if (!is_bistochastic(m)) throw NotBistochastic("is_rcds: input not bistochastic");
    const auto inner = inner_permutations(skel(m));
    // bistochastic => total support => at least one inner permutation
    const Rational first = sigma_trace(m, inner.front());
    for (size_t k = 1; k < inner.size(); ++k)
        if (sigma_trace(m, inner[k]) != first) return false;
    return true;
}

UVDecomposition uv_decompose(const RatMatrix& m) {
    if (!is_rcds(m)) throw NotRCDS("uv_decompose: input not RCDS");
    const Skeleton s = skel(m);
    const int n = s.n;

    UVDecomposition d;
    d.skeleton = s;
    d.u.assign(n, Rational(0));
    d.v.assign(n, Rational(0));

    // BFS over the bipartite support graph; vertices 0..n-1 are rows,
    // n..2n-1 are columns. Gauge: the smallest-index row of each component
    // gets u = 0.
    std::vector<int> state(2 * n, 0);  // 0 unvisited, 1 visited
    for (int start = 0; start < n; ++start) {
        if (state[start]) continue;
        state[start] = 1;
        d.u[start] = 0;
        std::queue<int> bfs;
        bfs.push(start);
        while (!bfs.empty()) {
            const int vtx = bfs.front();
            bfs.pop();
            if (vtx < n) {
                for (int j = 0; j < n; ++j) {
                    if (!s.test(vtx, j) || state[n + j]) continue;
                    state[n + j] = 1;
                    d.v[j] = m.at(vtx, j) - d.u[vtx];
                    bfs.push(n + j);
                }
            } else {
                const int j = vtx - n;
                for (int i = 0; i < n; ++i) {
                    if (!s.test(i, j) || state[i]) continue;
                    state[i] = 1;
                    d.u[i] = m.at(i, j) - d.v[j];
                    bfs.push(i);
                }
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (s.test(i, j) && d.u[i] + d.v[j] != m.at(i, j))
                throw Inconsistent("uv_decompose: propagated values violate an edge");
    return d;
}

bool erdos_criterion(const UVDecomposition& d) {
    const int n = d.skeleton.n;
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) image[i] = i;
    do {
        bool outer = false;
        for (int i = 0; i < n; ++i)
            if (!d.skeleton.test(i, image[i])) {
                outer = true;
                break;
            }
        if (!outer) continue;
        Rational sum = 0;
        for (int i = 0; i < n; ++i)
            if (!d.skeleton.test(i, image[i])) sum += d.u[i] + d.v[image[i]];
        if (sum < 0) return false;
    } while (std::next_permutation(image.begin(), image.end()));
    return true;
}

bool sufficient_condition(const UVDecomposition& d) {
    const Rational min_u = *std::min_element(d.u.begin(), d.u.end());
    const Rational min_v = *std::min_element(d.v.begin(), d.v.end());
    return min_u + min_v >= 0;
}

std::string UVDecomposition::to_json() const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json uj = nlohmann::ordered_json::array();
    for (const auto& x : u) uj.push_back(to_string(x));
    nlohmann::ordered_json vj = nlohmann::ordered_json::array();
    for (const auto& x : v) vj.push_back(to_string(x));
    j["u"] = uj;
    j["v"] = vj;
    j["skeleton_hex"] = skeleton.to_hex();
    return j.dump();
}

}  // namespace erdos
