#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcpg/binary_matrix.hpp"
#include "qcpg/tanner_graph.hpp"

namespace qcpg {

long gf2_rank(const BinaryMatrix& H);

/// Linear code defined as the null space of H. Encoding is systematic on the
/// free columns: the generator rows are unit messages completed through the
/// reduced row-echelon form of H.
struct LinearCode {
    BinaryMatrix H;
    long rank = 0;
    long dimension = 0;             // k = n - rank
    std::vector<long> pivot_cols;   // one per eliminated row
    std::vector<long> free_cols;    // message positions, ascending
    BinaryMatrix generator;         // k x n, G * H^T = 0

    long n() const { return H.cols(); }
    double rate() const { return static_cast<double>(dimension) / static_cast<double>(n()); }
};

LinearCode systematic_form(const BinaryMatrix& H);

std::vector<std::uint8_t> encode(const LinearCode& code, std::span<const std::uint8_t> message);

std::vector<std::uint8_t> syndrome(const BinaryMatrix& H, std::span<const std::uint8_t> word);
bool is_codeword(const BinaryMatrix& H, std::span<const std::uint8_t> word);

struct DecodeOutcome {
    std::vector<std::uint8_t> word;
    bool converged = false;
    int iterations = 0;
};

struct DecoderOptions {
    int max_iterations = 50;
    double attenuation = 1.0;  // min-sum scaling; 1.0 is the plain update
    double llr_clamp = 30.0;
};

/// Flooding-schedule iterative decoder over a fixed parity-check matrix.
/// Instances hold per-edge message buffers, so share one per thread, not
/// across threads. Ties in the hard decision (total LLR exactly 0) resolve
/// to bit 0.
class IterativeDecoder {
  public:
    enum class Kind { MinSum, SumProduct };

    IterativeDecoder(const TannerGraph& graph, Kind kind, const DecoderOptions& options);

    DecodeOutcome decode(std::span<const double> llr);

    Kind kind() const { return kind_; }

  private:
    void check_node_update_minsum();
    void check_node_update_spa();

    Kind kind_;
    DecoderOptions options_;
    long n_ = 0, m_ = 0;
    // Compiled edge structure: edges grouped by CN, plus per-VN edge lists.
    std::vector<long> edge_vn_;                // edge -> VN
    std::vector<std::vector<long>> vn_edges_;  // VN -> edges
    std::vector<long> cn_begin_;               // CN -> first edge index
    std::vector<double> v2c_, c2v_, total_;
    std::vector<std::uint8_t> hard_;
};

DecodeOutcome decode_msa(const BinaryMatrix& H, std::span<const double> llr, int max_iter,
                         double attenuation = 1.0);
DecodeOutcome decode_spa(const BinaryMatrix& H, std::span<const double> llr, int max_iter);

}  // namespace qcpg
