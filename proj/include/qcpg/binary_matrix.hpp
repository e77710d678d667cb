#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcpg {

/// Dense binary matrix with bit-packed rows.
///
/// Packing is fixed so that serialized dumps are bit-exact across platforms:
/// column j lives in word j/64 of its row, at bit position j%64 (LSB first),
/// words ascending by column.
class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    BinaryMatrix(long rows, long cols);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    long words_per_row() const { return words_; }

    bool get(long i, long j) const {
        return (row_ptr(i)[static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1u;
    }
    void set(long i, long j, bool v) {
        std::uint64_t& w = row_ptr(i)[static_cast<std::size_t>(j >> 6)];
        const std::uint64_t bit = std::uint64_t(1) << (j & 63);
        if (v)
            w |= bit;
        else
            w &= ~bit;
    }

    const std::uint64_t* row_ptr(long i) const { return data_.data() + i * words_; }
    std::uint64_t* row_ptr(long i) { return data_.data() + i * words_; }

    void xor_row(long dst, long src);  // row dst ^= row src

    long row_weight(long i) const;
    long col_weight(long j) const;
    long long ones() const;

    /// Column indices of the ones in row i, ascending.
    std::vector<long> row_support(long i) const;

    BinaryMatrix transposed() const;

    bool operator==(const BinaryMatrix& other) const;
    bool operator!=(const BinaryMatrix& other) const { return !(*this == other); }

  private:
    long rows_ = 0;
    long cols_ = 0;
    long words_ = 0;
    std::vector<std::uint64_t> data_;
};

/// alist interchange (n m / max degrees / per-column then per-row 1-based
/// index lists). Writes the padded classic layout; reading accepts both the
/// padded and the compact variant.
void write_alist(const BinaryMatrix& H, const std::string& path);
BinaryMatrix read_alist(const std::string& path);

}  // namespace qcpg
