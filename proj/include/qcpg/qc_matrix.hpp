#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcpg/base_matrix.hpp"
#include "qcpg/binary_matrix.hpp"

namespace qcpg {

/// Sparse binary matrix structured as a k x r array of order-t blocks, each
/// either a circulant permutation (stored as its shift) or a zero block.
/// Shift s means row u of the expanded block has its 1 at column (u+s) mod t.
/// Full arrays stay in shift form; bit expansion happens on demand.
class QcBinaryMatrix {
  public:
    static constexpr std::int32_t kZeroBlock = -1;

    QcBinaryMatrix(long block_rows, long block_cols, long block_order);

    long block_rows() const { return block_rows_; }
    long block_cols() const { return block_cols_; }
    long block_order() const { return order_; }
    long rows() const { return block_rows_ * order_; }
    long cols() const { return block_cols_ * order_; }

    bool is_zero_block(long a, long b) const { return at(a, b) == kZeroBlock; }
    std::int32_t shift(long a, long b) const { return at(a, b); }

    void set_shift(long a, long b, std::int32_t s);
    void set_zero_block(long a, long b);

    long zero_block_count() const;
    /// Number of non-zero blocks in block-column b (= column weight of the
    /// expanded matrix) and in block-row a (= row weight).
    long block_col_weight(long b) const;
    long block_row_weight(long a) const;

    BinaryMatrix expand() const;

    bool operator==(const QcBinaryMatrix& other) const;
    bool operator!=(const QcBinaryMatrix& other) const { return !(*this == other); }

  private:
    std::int32_t at(long a, long b) const { return blocks_[a * block_cols_ + b]; }

    long block_rows_, block_cols_, order_;
    std::vector<std::int32_t> blocks_;
};

/// The k generator rows of a QC array: row i is row i*t of the parent matrix,
/// i.e., the top row of block-row i. Section-wise cyclic shifts of these rows
/// regenerate the whole matrix.
struct GeneratorRows {
    long block_order = 0;
    BinaryMatrix rows;  // k x n
};

/// Residue(v) -> shift v, masked -> zero block; block order = B.modulus().
QcBinaryMatrix disperse(const BaseMatrix& B);

/// t x t circulant permutation with top-row 1 at position s.
BinaryMatrix expand_block(std::int32_t s, long t);

GeneratorRows generator_rows(const QcBinaryMatrix& H);

/// Rebuilds the full array from generator rows; every length-t section must
/// have weight 0 or 1.
QcBinaryMatrix expand_generators(const GeneratorRows& G);

/// Inverse of dispersion: recovers the shift/zero grid iff every t x t block
/// of M is a CPM or a zero block; throws NotBlockStructured at the first
/// offending block otherwise.
QcBinaryMatrix qc_structure_check(const BinaryMatrix& M, long t);

/// Base-matrix text format with origin tag "qc"; zero blocks serialize as '*'.
std::string qc_to_text(const QcBinaryMatrix& H);
QcBinaryMatrix qc_from_text(const std::string& text);
void write_qc(const QcBinaryMatrix& H, const std::string& path);
QcBinaryMatrix read_qc(const std::string& path);

}  // namespace qcpg
