#include "qcpg/tanner_graph.hpp"

#include <fstream>
#include <queue>

#include "qcpg/errors.hpp"

namespace qcpg {

TannerGraph::TannerGraph(const BinaryMatrix& H)
    : vn_adj_(H.cols()), cn_adj_(H.rows()) {
    for (long i = 0; i < H.rows(); ++i) {
        for (long j : H.row_support(i)) {
            cn_adj_[i].push_back(j);
            vn_adj_[j].push_back(i);
            ++edges_;
        }
    }
}

TannerGraph::TannerGraph(const QcBinaryMatrix& H)
    : vn_adj_(H.cols()), cn_adj_(H.rows()) {
    const long t = H.block_order();
    for (long a = 0; a < H.block_rows(); ++a)
        for (long b = 0; b < H.block_cols(); ++b) {
            if (H.is_zero_block(a, b)) continue;
            const long s = H.shift(a, b);
            for (long u = 0; u < t; ++u) {
                const long cn = a * t + u;
                const long vn = b * t + (u + s) % t;
                cn_adj_[cn].push_back(vn);
                vn_adj_[vn].push_back(cn);
                ++edges_;
            }
        }
    for (auto& l : cn_adj_) std::sort(l.begin(), l.end());
    for (auto& l : vn_adj_) std::sort(l.begin(), l.end());
}

std::pair<long, long> TannerGraph::biregular_degrees() const {
    if (vn_adj_.empty() || cn_adj_.empty()) return {-1, -1};
    const long gamma = static_cast<long>(vn_adj_[0].size());
    const long rho = static_cast<long>(cn_adj_[0].size());
    for (const auto& l : vn_adj_)
        if (static_cast<long>(l.size()) != gamma) return {-1, -1};
    for (const auto& l : cn_adj_)
        if (static_cast<long>(l.size()) != rho) return {-1, -1};
    return {gamma, rho};
}

bool TannerGraph::is_connected() const {
    const long n = vn_count(), m = cn_count();
    if (n + m == 0) return true;
    std::vector<char> seen(n + m, 0);  // VNs first, then CNs offset by n
    std::queue<long> q;
    q.push(0);
    seen[0] = 1;
    long visited = 1;
    while (!q.empty()) {
        const long x = q.front();
        q.pop();
        const auto& nbrs = x < n ? vn_adj_[x] : cn_adj_[x - n];
        for (long y : nbrs) {
            const long id = x < n ? n + y : y;
            if (!seen[id]) {
                seen[id] = 1;
                ++visited;
                q.push(id);
            }
        }
    }
    return visited == n + m;
}

void write_tanner_dot(const TannerGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");
    out << "graph tanner {\n";
    for (long v = 0; v < g.vn_count(); ++v)
        out << "  v" << v << " [shape=circle];\n";
    for (long c = 0; c < g.cn_count(); ++c)
        out << "  c" << c << " [shape=box];\n";
    for (long c = 0; c < g.cn_count(); ++c)
        for (long v : g.cn_neighbors(c)) out << "  v" << v << " -- c" << c << ";\n";
    out << "}\n";
}

}  // namespace qcpg
