#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcpg {

enum class BaseOrigin { PrimeField, CyclicSubgroup, Submatrix, Masked };

const char* to_string(BaseOrigin origin);

/// k x r matrix of residues modulo t, with a distinguished masked state per
/// entry. A masked entry disperses to a zero block; residue 0 disperses to
/// the identity CPM, so the two are never conflated.
class BaseMatrix {
  public:
    static constexpr std::int32_t kMasked = -1;

    BaseMatrix(long rows, long cols, long modulus, BaseOrigin origin);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    long modulus() const { return modulus_; }
    BaseOrigin origin() const { return origin_; }

    bool is_masked(long i, long j) const { return at(i, j) == kMasked; }
    std::int32_t residue(long i, long j) const { return at(i, j); }

    void set_residue(long i, long j, std::int32_t v);
    void set_masked(long i, long j);

    long masked_count() const;
    bool is_symmetric() const;

    bool operator==(const BaseMatrix& other) const;
    bool operator!=(const BaseMatrix& other) const { return !(*this == other); }

  private:
    std::int32_t at(long i, long j) const { return entries_[i * cols_ + j]; }

    long rows_, cols_, modulus_;
    BaseOrigin origin_;
    std::vector<std::int32_t> entries_;
};

/// Binary masking pattern. All-zero rows or columns are rejected up front
/// since they would disconnect the Tanner graph.
class MaskingMatrix {
  public:
    MaskingMatrix(long rows, long cols);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    bool keep(long i, long j) const { return bits_[i * cols_ + j]; }
    void set(long i, long j, bool v) { bits_[i * cols_ + j] = v; }

    static MaskingMatrix all_ones(long rows, long cols);

  private:
    long rows_, cols_;
    std::vector<std::uint8_t> bits_;
};

bool is_prime(long n);

/// p x p multiplication table i*j mod p over the prime field.
BaseMatrix build_prime_base(long p);

/// t x t exponent table i*j mod t for the order-t cyclic subgroup of GF(q);
/// requires t prime with t | q-1.
BaseMatrix build_cyclic_base(long q, long t);

BaseMatrix select_submatrix(const BaseMatrix& B, const std::vector<long>& row_ids,
                            const std::vector<long>& col_ids);

/// Seeded uniform choice of k distinct rows and r distinct cols.
BaseMatrix select_random_submatrix(const BaseMatrix& B, long k, long r, std::uint64_t seed);

BaseMatrix mask(const BaseMatrix& B, const MaskingMatrix& Z);

/// Drops row 0 and column 0; rows/columns of the result each permute 1..t-1.
std::vector<std::vector<std::int32_t>> latin_square_view(const BaseMatrix& B);

// Plain-text form: header "t k r origin", then k lines of r tokens, each a
// decimal residue or '*' for masked.
std::string base_to_text(const BaseMatrix& B);
BaseMatrix base_from_text(const std::string& text);
void write_base(const BaseMatrix& B, const std::string& path);
BaseMatrix read_base(const std::string& path);

MaskingMatrix read_masking(const std::string& path);
void write_masking(const MaskingMatrix& Z, const std::string& path);

}  // namespace qcpg
