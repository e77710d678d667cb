#include "oracles.hpp"

#include <algorithm>

namespace oracles {

namespace {

std::vector<std::vector<long>> build_adjacency(const qcpg::BinaryMatrix& H) {
    const long n = H.cols(), m = H.rows();
    std::vector<std::vector<long>> adj(n + m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < n; ++j)
            if (H.get(i, j)) {
                adj[j].push_back(n + i);
                adj[n + i].push_back(j);
            }
    return adj;
}

// Counts directed closed simple walks of `length` edges whose smallest vertex
// is the root; every cycle is found twice.
void search(const std::vector<std::vector<long>>& adj, std::vector<char>& used, long root, long v,
            int remaining, std::uint64_t& hits) {
    if (remaining == 1) {
        for (long y : adj[v]) hits += y == root;
        return;
    }
    for (long y : adj[v]) {
        if (y <= root || used[y]) continue;
        used[y] = 1;
        search(adj, used, root, y, remaining - 1, hits);
        used[y] = 0;
    }
}

}  // namespace

std::uint64_t count_cycles_brute(const qcpg::BinaryMatrix& H, int length) {
    const auto adj = build_adjacency(H);
    std::vector<char> used(adj.size(), 0);
    std::uint64_t hits = 0;
    for (long root = 0; root < static_cast<long>(adj.size()); ++root) {
        used[root] = 1;
        search(adj, used, root, root, length, hits);
        used[root] = 0;
    }
    return hits / 2;
}

int girth_brute(const qcpg::BinaryMatrix& H) {
    const long total = H.rows() + H.cols();
    for (int len = 4; len <= total; len += 2)
        if (count_cycles_brute(H, len) > 0) return len;
    return 0;  // acyclic
}

qcpg::BinaryMatrix random_binary_matrix(long rows, long cols, double density,
                                        std::uint64_t seed) {
    qcpg::SplitMix64 rng(seed);
    qcpg::BinaryMatrix H(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            if (rng.next_unit() < density) H.set(i, j, true);
    return H;
}

long gf2_rank_dense(const qcpg::BinaryMatrix& H) {
    const long m = H.rows(), n = H.cols();
    std::vector<std::vector<std::uint8_t>> A(m, std::vector<std::uint8_t>(n, 0));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < n; ++j) A[i][j] = H.get(i, j);

    long rank = 0;
    for (long row = 0; row < m; ++row) {
        long pivot = -1;
        for (long j = 0; j < n && pivot < 0; ++j)
            if (A[row][j]) pivot = j;
        if (pivot < 0) continue;
        ++rank;
        for (long i = 0; i < m; ++i) {
            if (i == row || !A[i][pivot]) continue;
            for (long j = 0; j < n; ++j) A[i][j] ^= A[row][j];
        }
    }
    return rank;
}

}  // namespace oracles
