#pragma once

#include <string>
#include <vector>

#include "qcpg/binary_matrix.hpp"
#include "qcpg/qc_matrix.hpp"

namespace qcpg {

/// Bipartite adjacency view of a parity-check / line-point matrix:
/// VN j ~ CN i iff H[i][j] = 1. Kept as plain adjacency lists.
class TannerGraph {
  public:
    explicit TannerGraph(const BinaryMatrix& H);
    explicit TannerGraph(const QcBinaryMatrix& H);

    long vn_count() const { return static_cast<long>(vn_adj_.size()); }
    long cn_count() const { return static_cast<long>(cn_adj_.size()); }
    long long edge_count() const { return edges_; }

    const std::vector<long>& vn_neighbors(long v) const { return vn_adj_[v]; }
    const std::vector<long>& cn_neighbors(long c) const { return cn_adj_[c]; }

    /// (gamma, rho) if the graph is biregular, (-1, -1) otherwise.
    std::pair<long, long> biregular_degrees() const;

    bool is_connected() const;

  private:
    std::vector<std::vector<long>> vn_adj_;  // VN -> CNs
    std::vector<std::vector<long>> cn_adj_;  // CN -> VNs
    long long edges_ = 0;
};

void write_tanner_dot(const TannerGraph& g, const std::string& path);

}  // namespace qcpg
