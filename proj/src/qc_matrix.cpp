#include "qcpg/qc_matrix.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qcpg/errors.hpp"

namespace qcpg {

QcBinaryMatrix::QcBinaryMatrix(long block_rows, long block_cols, long block_order)
    : block_rows_(block_rows), block_cols_(block_cols), order_(block_order),
      blocks_(static_cast<std::size_t>(block_rows) * block_cols, kZeroBlock) {
    if (block_rows <= 0 || block_cols <= 0 || block_order <= 0)
        throw Error(ErrorCode::DimensionMismatch, "QC array dimensions must be positive");
}

void QcBinaryMatrix::set_shift(long a, long b, std::int32_t s) {
    if (s < 0 || s >= order_)
        throw Error(ErrorCode::ShiftOutOfRange,
                    "shift " + std::to_string(s) + " outside [0, " + std::to_string(order_) + ")");
    blocks_[a * block_cols_ + b] = s;
}

void QcBinaryMatrix::set_zero_block(long a, long b) { blocks_[a * block_cols_ + b] = kZeroBlock; }

long QcBinaryMatrix::zero_block_count() const {
    return static_cast<long>(std::count(blocks_.begin(), blocks_.end(), kZeroBlock));
}

long QcBinaryMatrix::block_col_weight(long b) const {
    long w = 0;
    for (long a = 0; a < block_rows_; ++a) w += !is_zero_block(a, b);
    return w;
}

long QcBinaryMatrix::block_row_weight(long a) const {
    long w = 0;
    for (long b = 0; b < block_cols_; ++b) w += !is_zero_block(a, b);
    return w;
}

BinaryMatrix QcBinaryMatrix::expand() const {
    BinaryMatrix M(rows(), cols());
    for (long a = 0; a < block_rows_; ++a)
        for (long b = 0; b < block_cols_; ++b) {
            const std::int32_t s = at(a, b);
            if (s == kZeroBlock) continue;
            for (long u = 0; u < order_; ++u)
                M.set(a * order_ + u, b * order_ + (u + s) % order_, true);
        }
    return M;
}

bool QcBinaryMatrix::operator==(const QcBinaryMatrix& other) const {
    return block_rows_ == other.block_rows_ && block_cols_ == other.block_cols_ &&
           order_ == other.order_ && blocks_ == other.blocks_;
}

QcBinaryMatrix disperse(const BaseMatrix& B) {
    QcBinaryMatrix H(B.rows(), B.cols(), B.modulus());
    for (long i = 0; i < B.rows(); ++i)
        for (long j = 0; j < B.cols(); ++j) {
            if (B.is_masked(i, j))
                H.set_zero_block(i, j);
            else
                H.set_shift(i, j, B.residue(i, j));
        }
    return H;
}

BinaryMatrix expand_block(std::int32_t s, long t) {
    if (s < 0 || s >= t)
        throw Error(ErrorCode::ShiftOutOfRange,
                    "shift " + std::to_string(s) + " outside [0, " + std::to_string(t) + ")");
    BinaryMatrix M(t, t);
    for (long u = 0; u < t; ++u) M.set(u, (u + s) % t, true);
    return M;
}

GeneratorRows generator_rows(const QcBinaryMatrix& H) {
    GeneratorRows G;
    G.block_order = H.block_order();
    G.rows = BinaryMatrix(H.block_rows(), H.cols());
    const long t = H.block_order();
    for (long a = 0; a < H.block_rows(); ++a)
        for (long b = 0; b < H.block_cols(); ++b) {
            if (H.is_zero_block(a, b)) continue;
            G.rows.set(a, b * t + H.shift(a, b), true);
        }
    return G;
}

QcBinaryMatrix expand_generators(const GeneratorRows& G) {
    const long t = G.block_order;
    if (t <= 0 || G.rows.cols() % t != 0)
        throw Error(ErrorCode::DimensionMismatch, "generator row length not divisible by order");
    const long k = G.rows.rows();
    const long r = G.rows.cols() / t;
    QcBinaryMatrix H(k, r, t);
    for (long a = 0; a < k; ++a)
        for (long b = 0; b < r; ++b) {
            std::int32_t s = QcBinaryMatrix::kZeroBlock;
            int weight = 0;
            for (long u = 0; u < t; ++u) {
                if (G.rows.get(a, b * t + u)) {
                    ++weight;
                    s = static_cast<std::int32_t>(u);
                }
            }
            if (weight > 1)
                throw Error(ErrorCode::SectionWeightExceeded,
                            "section (" + std::to_string(a) + "," + std::to_string(b) + ") has " +
                                std::to_string(weight) + " ones");
            if (weight == 1)
                H.set_shift(a, b, s);
        }
    return H;
}

QcBinaryMatrix qc_structure_check(const BinaryMatrix& M, long t) {
    if (t <= 0 || M.rows() % t != 0 || M.cols() % t != 0)
        throw Error(ErrorCode::DimensionMismatch, "matrix dimensions not divisible by block order");
    const long k = M.rows() / t;
    const long r = M.cols() / t;
    QcBinaryMatrix H(k, r, t);
    for (long a = 0; a < k; ++a)
        for (long b = 0; b < r; ++b) {
            // A block is admissible iff it is all-zero or row u has its single
            // 1 at column (u+s) mod t for a fixed s.
            std::int32_t s = -2;
            bool ok = true;
            for (long u = 0; u < t && ok; ++u) {
                long found = -1;
                for (long c = 0; c < t; ++c) {
                    if (!M.get(a * t + u, b * t + c)) continue;
                    if (found >= 0) {
                        ok = false;
                        break;
                    }
                    found = c;
                }
                if (!ok) break;
                if (u == 0) {
                    s = found < 0 ? QcBinaryMatrix::kZeroBlock : static_cast<std::int32_t>(found);
                } else if (s == QcBinaryMatrix::kZeroBlock) {
                    ok = found < 0;
                } else {
                    ok = found == (u + s) % t;
                }
            }
            if (!ok)
                throw Error(ErrorCode::NotBlockStructured,
                            "block (" + std::to_string(a) + "," + std::to_string(b) +
                                ") is neither a CPM nor zero");
            if (s != QcBinaryMatrix::kZeroBlock) H.set_shift(a, b, s);
        }
    return H;
}

std::string qc_to_text(const QcBinaryMatrix& H) {
    std::ostringstream out;
    out << H.block_order() << " " << H.block_rows() << " " << H.block_cols() << " qc\n";
    for (long a = 0; a < H.block_rows(); ++a) {
        for (long b = 0; b < H.block_cols(); ++b) {
            if (b) out << " ";
            if (H.is_zero_block(a, b))
                out << "*";
            else
                out << H.shift(a, b);
        }
        out << "\n";
    }
    return out.str();
}

QcBinaryMatrix qc_from_text(const std::string& text) {
    std::istringstream in(text);
    long t, k, r;
    std::string tag;
    if (!(in >> t >> k >> r >> tag) || tag != "qc")
        throw Error(ErrorCode::IoFailure, "bad QC matrix header");
    QcBinaryMatrix H(k, r, t);
    for (long a = 0; a < k; ++a)
        for (long b = 0; b < r; ++b) {
            std::string tok;
            if (!(in >> tok)) throw Error(ErrorCode::IoFailure, "truncated QC matrix body");
            if (tok != "*") H.set_shift(a, b, static_cast<std::int32_t>(std::stol(tok)));
        }
    return H;
}

void write_qc(const QcBinaryMatrix& H, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");
    out << qc_to_text(H);
    if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path);
}

QcBinaryMatrix read_qc(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return qc_from_text(buf.str());
}

}  // namespace qcpg
