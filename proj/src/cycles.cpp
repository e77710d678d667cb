#include "qcpg/cycles.hpp"

#include <algorithm>
#include <vector>

#include "qcpg/errors.hpp"

namespace qcpg {

namespace {

// Combined-vertex adjacency: VNs are 0..n-1, CNs are n..n+m-1.
struct FlatGraph {
    long vertices = 0;
    std::vector<std::vector<long>> adj;

    explicit FlatGraph(const TannerGraph& g) {
        const long n = g.vn_count();
        vertices = n + g.cn_count();
        adj.resize(vertices);
        for (long c = 0; c < g.cn_count(); ++c) {
            for (long v : g.cn_neighbors(c)) {
                adj[v].push_back(n + c);
                adj[n + c].push_back(v);
            }
        }
    }
};

int girth_flat(const FlatGraph& g) {
    int best = kInfiniteGirth;
    std::vector<int> dist(g.vertices);
    std::vector<long> parent(g.vertices);
    std::vector<long> order;
    order.reserve(g.vertices);
    for (long root = 0; root < g.vertices && best > 4; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        order.clear();
        dist[root] = 0;
        parent[root] = -1;
        order.push_back(root);
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            const long x = order[pos];
            if (2 * dist[x] + 1 >= best) break;  // deeper closures cannot improve
            for (long y : g.adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    order.push_back(y);
                } else if (y != parent[x]) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    return best;
}

// Trace of the length-th power of the non-backtracking edge operator,
// accumulated one source edge at a time. Values stay well under 64 bits for
// the degrees this is used with; the work guard keeps the quadratic sweep
// honest on oversized inputs.
unsigned long long nb_closed_walks(const FlatGraph& g, int length) {
    std::vector<long> tail, head;
    for (long x = 0; x < g.vertices; ++x)
        for (long y : g.adj[x]) {
            tail.push_back(x);
            head.push_back(y);
        }
    const long E = static_cast<long>(tail.size());

    // Match each directed edge with its reverse: sort by the unordered pair,
    // the two orientations land adjacently.
    std::vector<long> rev(E), idx(E);
    for (long e = 0; e < E; ++e) idx[e] = e;
    std::sort(idx.begin(), idx.end(), [&](long a, long b) {
        const auto ka = std::minmax(tail[a], head[a]);
        const auto kb = std::minmax(tail[b], head[b]);
        if (ka != kb) return ka < kb;
        return tail[a] < tail[b];
    });
    for (long p = 0; p + 1 < E; p += 2) {
        rev[idx[p]] = idx[p + 1];
        rev[idx[p + 1]] = idx[p];
    }

    const long long work = static_cast<long long>(E) * E * length;
    if (work > 60'000'000'000LL)
        throw Error(ErrorCode::BudgetExceeded,
                    "walk-trace counting needs ~" + std::to_string(work) +
                        " steps; use the closed-form counts for certified geometries");

    unsigned long long trace = 0;
    std::vector<unsigned long long> w(E), nw(E), vertex_sum(g.vertices);
    for (long e0 = 0; e0 < E; ++e0) {
        std::fill(w.begin(), w.end(), 0ULL);
        w[e0] = 1;
        for (int step = 0; step < length; ++step) {
            std::fill(vertex_sum.begin(), vertex_sum.end(), 0ULL);
            for (long e = 0; e < E; ++e) vertex_sum[head[e]] += w[e];
            for (long f = 0; f < E; ++f) nw[f] = vertex_sum[tail[f]] - w[rev[f]];
            std::swap(w, nw);
        }
        trace += w[e0];
    }
    return trace;
}

// Exhaustive simple-path search rooted at the smallest cycle vertex; each
// cycle is reached once per direction.
std::uint64_t dfs_cycle_count(const FlatGraph& g, int length) {
    std::uint64_t found = 0;
    unsigned long long steps = 0;
    constexpr unsigned long long kBudget = 4'000'000'000ULL;
    std::vector<char> on_path(g.vertices, 0);

    auto dfs = [&](auto&& self, long root, long v, int depth) -> void {
        if (depth == length - 1) {
            for (long y : g.adj[v]) found += y == root;
            return;
        }
        for (long y : g.adj[v]) {
            if (++steps > kBudget)
                throw Error(ErrorCode::BudgetExceeded, "cycle enumeration too large");
            if (y <= root || on_path[y]) continue;
            on_path[y] = 1;
            self(self, root, y, depth + 1);
            on_path[y] = 0;
        }
    };

    for (long root = 0; root < g.vertices; ++root) {
        on_path[root] = 1;
        dfs(dfs, root, root, 0);
        on_path[root] = 0;
    }
    return found / 2;
}

}  // namespace

int girth(const TannerGraph& g) { return girth_flat(FlatGraph(g)); }

int girth(const BinaryMatrix& H) { return girth(TannerGraph(H)); }

std::uint64_t count_cycles(const TannerGraph& g, int length) {
    if (length != 4 && length != 6 && length != 8 && length != 10)
        throw Error(ErrorCode::UnsupportedLength, "length " + std::to_string(length));
    const FlatGraph flat(g);
    const int gi = girth_flat(flat);
    if (gi == kInfiniteGirth || length < gi) return 0;
    if (length < 2 * gi) {
        // A cyclically non-backtracking closed walk shorter than twice the
        // girth traces a simple cycle exactly once; each length-L cycle shows
        // up 2L times in the trace (L starting edges, 2 directions).
        const unsigned long long trace = nb_closed_walks(flat, length);
        return trace / (2ULL * static_cast<unsigned long long>(length));
    }
    return dfs_cycle_count(flat, length);
}

std::uint64_t count_cycles(const BinaryMatrix& H, int length) {
    return count_cycles(TannerGraph(H), length);
}

std::uint64_t cycle6_count_formula(const GeometryDescriptor& G) {
    if (G.delta <= 1)
        throw Error(ErrorCode::DeltaIsOne, "generalized quadrangles have no 6-cycles");
    unsigned __int128 v = static_cast<unsigned __int128>(G.m_lines) * G.gamma;
    v *= static_cast<unsigned long long>(G.gamma - 1);
    v *= static_cast<unsigned long long>(G.delta - 1);
    v *= static_cast<unsigned long long>(G.rho - 1);
    v /= 6;
    if (v > std::numeric_limits<std::uint64_t>::max())
        throw Error(ErrorCode::TooLarge, "6-cycle count overflows 64 bits");
    return static_cast<std::uint64_t>(v);
}

std::uint64_t cycle8_count_formula_gq(const GeometryDescriptor& G) {
    if (G.delta != 1)
        throw Error(ErrorCode::NotGQ, "delta = " + std::to_string(G.delta));
    unsigned __int128 v = static_cast<unsigned __int128>(G.m_lines) * (G.rho - 1);
    v *= static_cast<unsigned long long>(G.gamma - 1) * static_cast<unsigned long long>(G.gamma - 1);
    v *= static_cast<unsigned long long>(G.rho) * static_cast<unsigned long long>(G.rho - 1) / 2;
    v /= 4;
    if (v > std::numeric_limits<std::uint64_t>::max())
        throw Error(ErrorCode::TooLarge, "8-cycle count overflows 64 bits");
    return static_cast<std::uint64_t>(v);
}

}  // namespace qcpg
