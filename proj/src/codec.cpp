#include "qcpg/codec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qcpg/errors.hpp"

namespace qcpg {

long gf2_rank(const BinaryMatrix& H) {
    BinaryMatrix work = H;
    const long m = work.rows(), n = work.cols();
    long rank = 0;
    for (long col = 0; col < n && rank < m; ++col) {
        long pivot = -1;
        for (long i = rank; i < m; ++i) {
            if (work.get(i, col)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (long w = 0; w < work.words_per_row(); ++w)
                std::swap(work.row_ptr(rank)[w], work.row_ptr(pivot)[w]);
        }
        for (long i = rank + 1; i < m; ++i)
            if (work.get(i, col)) work.xor_row(i, rank);
        ++rank;
    }
    return rank;
}

LinearCode systematic_form(const BinaryMatrix& H) {
    LinearCode code;
    code.H = H;
    BinaryMatrix R = H;  // reduced to RREF in place
    const long m = R.rows(), n = R.cols();

    long rank = 0;
    for (long col = 0; col < n && rank < m; ++col) {
        long pivot = -1;
        for (long i = rank; i < m; ++i) {
            if (R.get(i, col)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (long w = 0; w < R.words_per_row(); ++w)
                std::swap(R.row_ptr(rank)[w], R.row_ptr(pivot)[w]);
        }
        for (long i = 0; i < m; ++i)
            if (i != rank && R.get(i, col)) R.xor_row(i, rank);
        code.pivot_cols.push_back(col);
        ++rank;
    }
    code.rank = rank;
    code.dimension = n - rank;

    std::vector<char> is_pivot(n, 0);
    for (long c : code.pivot_cols) is_pivot[c] = 1;
    for (long c = 0; c < n; ++c)
        if (!is_pivot[c]) code.free_cols.push_back(c);

    // Unit message on free column f, pivot columns completed from RREF:
    // row r reads x_pivot[r] = sum over free f of R[r][f] * x_f.
    code.generator = BinaryMatrix(code.dimension, n);
    for (long idx = 0; idx < code.dimension; ++idx) {
        const long f = code.free_cols[idx];
        code.generator.set(idx, f, true);
        for (long r = 0; r < rank; ++r)
            if (R.get(r, f)) code.generator.set(idx, code.pivot_cols[r], true);
    }
    return code;
}

std::vector<std::uint8_t> encode(const LinearCode& code, std::span<const std::uint8_t> message) {
    if (static_cast<long>(message.size()) != code.dimension)
        throw Error(ErrorCode::LengthMismatch,
                    "message length " + std::to_string(message.size()) + ", dimension " +
                        std::to_string(code.dimension));
    const long n = code.n();
    std::vector<std::uint64_t> acc(code.generator.words_per_row(), 0);
    for (long i = 0; i < code.dimension; ++i) {
        if (!message[i]) continue;
        const std::uint64_t* row = code.generator.row_ptr(i);
        for (long w = 0; w < code.generator.words_per_row(); ++w) acc[w] ^= row[w];
    }
    std::vector<std::uint8_t> word(n);
    for (long j = 0; j < n; ++j) word[j] = (acc[j >> 6] >> (j & 63)) & 1u;
    return word;
}

std::vector<std::uint8_t> syndrome(const BinaryMatrix& H, std::span<const std::uint8_t> word) {
    if (static_cast<long>(word.size()) != H.cols())
        throw Error(ErrorCode::LengthMismatch, "word length " + std::to_string(word.size()) +
                                                   ", n = " + std::to_string(H.cols()));
    std::vector<std::uint8_t> s(H.rows(), 0);
    for (long i = 0; i < H.rows(); ++i) {
        std::uint8_t bit = 0;
        for (long j : H.row_support(i)) bit ^= word[j];
        s[i] = bit;
    }
    return s;
}

bool is_codeword(const BinaryMatrix& H, std::span<const std::uint8_t> word) {
    const auto s = syndrome(H, word);
    return std::all_of(s.begin(), s.end(), [](std::uint8_t b) { return b == 0; });
}

IterativeDecoder::IterativeDecoder(const TannerGraph& graph, Kind kind,
                                   const DecoderOptions& options)
    : kind_(kind), options_(options), n_(graph.vn_count()), m_(graph.cn_count()),
      vn_edges_(graph.vn_count()) {
    if (options.max_iterations < 1)
        throw Error(ErrorCode::ConfigInvalid, "max_iterations must be at least 1");
    if (!(options.attenuation > 0.0 && options.attenuation <= 1.0))
        throw Error(ErrorCode::ConfigInvalid, "attenuation must lie in (0,1]");
    cn_begin_.resize(m_ + 1, 0);
    for (long c = 0; c < m_; ++c) {
        cn_begin_[c + 1] = cn_begin_[c] + static_cast<long>(graph.cn_neighbors(c).size());
        for (long v : graph.cn_neighbors(c)) {
            vn_edges_[v].push_back(static_cast<long>(edge_vn_.size()));
            edge_vn_.push_back(v);
        }
    }
    v2c_.resize(edge_vn_.size());
    c2v_.resize(edge_vn_.size());
    total_.resize(n_);
    hard_.resize(n_);
}

void IterativeDecoder::check_node_update_minsum() {
    const double att = options_.attenuation;
    for (long c = 0; c < m_; ++c) {
        const long begin = cn_begin_[c], end = cn_begin_[c + 1];
        double min1 = std::numeric_limits<double>::infinity();
        double min2 = min1;
        long min_edge = -1;
        int sign = 1;
        for (long e = begin; e < end; ++e) {
            const double x = v2c_[e];
            if (x < 0) sign = -sign;
            const double a = std::abs(x);
            if (a < min1) {
                min2 = min1;
                min1 = a;
                min_edge = e;
            } else if (a < min2) {
                min2 = a;
            }
        }
        for (long e = begin; e < end; ++e) {
            // min2 is infinite for degree-1 checks; the clamp keeps that finite
            const double mag = std::min((e == min_edge) ? min2 : min1, options_.llr_clamp);
            const int s = (v2c_[e] < 0) ? -sign : sign;
            c2v_[e] = att * s * mag;
        }
    }
}

void IterativeDecoder::check_node_update_spa() {
    // Forward/backward partial products of tanh(v2c/2); no division, so a
    // zero message stays well-defined.
    static thread_local std::vector<double> fwd, bwd;
    for (long c = 0; c < m_; ++c) {
        const long begin = cn_begin_[c], end = cn_begin_[c + 1];
        const long deg = end - begin;
        fwd.assign(deg + 1, 1.0);
        bwd.assign(deg + 1, 1.0);
        for (long k = 0; k < deg; ++k) fwd[k + 1] = fwd[k] * std::tanh(0.5 * v2c_[begin + k]);
        for (long k = deg - 1; k >= 0; --k) bwd[k] = bwd[k + 1] * std::tanh(0.5 * v2c_[begin + k]);
        for (long k = 0; k < deg; ++k) {
            double x = fwd[k] * bwd[k + 1];
            x = std::clamp(x, -1.0 + 1e-15, 1.0 - 1e-15);
            c2v_[begin + k] =
                std::clamp(2.0 * std::atanh(x), -options_.llr_clamp, options_.llr_clamp);
        }
    }
}

DecodeOutcome IterativeDecoder::decode(std::span<const double> llr) {
    if (static_cast<long>(llr.size()) != n_)
        throw Error(ErrorCode::LengthMismatch, "llr length " + std::to_string(llr.size()) +
                                                   ", n = " + std::to_string(n_));
    const double clamp = options_.llr_clamp;
    std::fill(c2v_.begin(), c2v_.end(), 0.0);

    DecodeOutcome outcome;
    for (int iter = 1; iter <= options_.max_iterations; ++iter) {
        for (long v = 0; v < n_; ++v) {
            double total = std::clamp(llr[v], -clamp, clamp);
            for (long e : vn_edges_[v]) total += c2v_[e];
            total_[v] = total;
        }
        for (long v = 0; v < n_; ++v)
            for (long e : vn_edges_[v])
                v2c_[e] = std::clamp(total_[v] - c2v_[e], -clamp, clamp);

        if (kind_ == Kind::MinSum)
            check_node_update_minsum();
        else
            check_node_update_spa();

        for (long v = 0; v < n_; ++v) {
            double total = std::clamp(llr[v], -clamp, clamp);
            for (long e : vn_edges_[v]) total += c2v_[e];
            total_[v] = total;
            hard_[v] = total < 0.0;
        }
        bool satisfied = true;
        for (long c = 0; c < m_ && satisfied; ++c) {
            std::uint8_t parity = 0;
            for (long e = cn_begin_[c]; e < cn_begin_[c + 1]; ++e) parity ^= hard_[edge_vn_[e]];
            satisfied = parity == 0;
        }
        outcome.iterations = iter;
        if (satisfied) {
            outcome.converged = true;
            break;
        }
    }
    outcome.word.assign(hard_.begin(), hard_.end());
    return outcome;
}

DecodeOutcome decode_msa(const BinaryMatrix& H, std::span<const double> llr, int max_iter,
                         double attenuation) {
    DecoderOptions options;
    options.max_iterations = max_iter;
    options.attenuation = attenuation;
    IterativeDecoder dec(TannerGraph(H), IterativeDecoder::Kind::MinSum, options);
    return dec.decode(llr);
}

DecodeOutcome decode_spa(const BinaryMatrix& H, std::span<const double> llr, int max_iter) {
    DecoderOptions options;
    options.max_iterations = max_iter;
    IterativeDecoder dec(TannerGraph(H), IterativeDecoder::Kind::SumProduct, options);
    return dec.decode(llr);
}

}  // namespace qcpg
