#include "qcpg/base_matrix.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "qcpg/errors.hpp"
#include "qcpg/rng.hpp"

namespace qcpg {

const char* to_string(BaseOrigin origin) {
    switch (origin) {
        case BaseOrigin::PrimeField: return "prime";
        case BaseOrigin::CyclicSubgroup: return "cyclic";
        case BaseOrigin::Submatrix: return "submatrix";
        case BaseOrigin::Masked: return "masked";
    }
    return "?";
}

BaseMatrix::BaseMatrix(long rows, long cols, long modulus, BaseOrigin origin)
    : rows_(rows), cols_(cols), modulus_(modulus), origin_(origin),
      entries_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows <= 0 || cols <= 0 || modulus <= 0)
        throw Error(ErrorCode::DimensionMismatch, "base matrix dimensions must be positive");
}

void BaseMatrix::set_residue(long i, long j, std::int32_t v) {
    if (v < 0 || v >= modulus_)
        throw Error(ErrorCode::IndexOutOfRange, "residue " + std::to_string(v) +
                                                    " outside [0, " + std::to_string(modulus_) + ")");
    entries_[i * cols_ + j] = v;
}

void BaseMatrix::set_masked(long i, long j) { entries_[i * cols_ + j] = kMasked; }

long BaseMatrix::masked_count() const {
    return static_cast<long>(std::count(entries_.begin(), entries_.end(), kMasked));
}

bool BaseMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (long i = 0; i < rows_; ++i)
        for (long j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool BaseMatrix::operator==(const BaseMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && modulus_ == other.modulus_ &&
           entries_ == other.entries_;
}

MaskingMatrix::MaskingMatrix(long rows, long cols)
    : rows_(rows), cols_(cols), bits_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows <= 0 || cols <= 0)
        throw Error(ErrorCode::DimensionMismatch, "masking matrix dimensions must be positive");
}

MaskingMatrix MaskingMatrix::all_ones(long rows, long cols) {
    MaskingMatrix Z(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) Z.set(i, j, true);
    return Z;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

static bool is_prime_power(long q) {
    if (q < 2) return false;
    long base = q;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            base = d;
            break;
        }
    }
    long x = q;
    while (x % base == 0) x /= base;
    return x == 1;
}

BaseMatrix build_prime_base(long p) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "p = " + std::to_string(p));
    BaseMatrix B(p, p, p, BaseOrigin::PrimeField);
    for (long i = 0; i < p; ++i)
        for (long j = 0; j < p; ++j)
            B.set_residue(i, j, static_cast<std::int32_t>((i * j) % p));
    return B;
}

BaseMatrix build_cyclic_base(long q, long t) {
    if (!is_prime(t)) throw Error(ErrorCode::NotPrime, "t = " + std::to_string(t));
    if (!is_prime_power(q)) throw Error(ErrorCode::NotPrimePower, "q = " + std::to_string(q));
    if ((q - 1) % t != 0)
        throw Error(ErrorCode::DoesNotDivide,
                    "t = " + std::to_string(t) + " does not divide q-1 = " + std::to_string(q - 1));
    // Entries are the exponents of the order-t generator; products of group
    // elements reduce to exponent sums mod t, so only i*j mod t is stored.
    BaseMatrix B(t, t, t, BaseOrigin::CyclicSubgroup);
    for (long i = 0; i < t; ++i)
        for (long j = 0; j < t; ++j)
            B.set_residue(i, j, static_cast<std::int32_t>((i * j) % t));
    return B;
}

static void check_ids(const std::vector<long>& ids, long limit, const char* what) {
    std::vector<long> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] < 0 || sorted[k] >= limit)
            throw Error(ErrorCode::IndexOutOfRange,
                        std::string(what) + " index " + std::to_string(sorted[k]));
        if (k > 0 && sorted[k] == sorted[k - 1])
            throw Error(ErrorCode::DuplicateIndex,
                        std::string(what) + " index " + std::to_string(sorted[k]));
    }
}

BaseMatrix select_submatrix(const BaseMatrix& B, const std::vector<long>& row_ids,
                            const std::vector<long>& col_ids) {
    if (row_ids.empty() || col_ids.empty())
        throw Error(ErrorCode::IndexOutOfRange, "empty selection");
    check_ids(row_ids, B.rows(), "row");
    check_ids(col_ids, B.cols(), "column");

    BaseMatrix S(static_cast<long>(row_ids.size()), static_cast<long>(col_ids.size()),
                 B.modulus(), BaseOrigin::Submatrix);
    for (std::size_t i = 0; i < row_ids.size(); ++i)
        for (std::size_t j = 0; j < col_ids.size(); ++j) {
            if (B.is_masked(row_ids[i], col_ids[j]))
                S.set_masked(static_cast<long>(i), static_cast<long>(j));
            else
                S.set_residue(static_cast<long>(i), static_cast<long>(j),
                              B.residue(row_ids[i], col_ids[j]));
        }
    return S;
}

static std::vector<long> sample_distinct(long count, long limit, SplitMix64& rng) {
    std::vector<long> pool(limit);
    std::iota(pool.begin(), pool.end(), 0);
    for (long i = 0; i < count; ++i) {
        const long j = i + static_cast<long>(rng.next() % static_cast<std::uint64_t>(limit - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

BaseMatrix select_random_submatrix(const BaseMatrix& B, long k, long r, std::uint64_t seed) {
    if (k < 1 || k > B.rows() || r < 1 || r > B.cols())
        throw Error(ErrorCode::IndexOutOfRange, "selection size out of range");
    SplitMix64 rng(seed);
    const auto rows = sample_distinct(k, B.rows(), rng);
    const auto cols = sample_distinct(r, B.cols(), rng);
    return select_submatrix(B, rows, cols);
}

BaseMatrix mask(const BaseMatrix& B, const MaskingMatrix& Z) {
    if (B.rows() != Z.rows() || B.cols() != Z.cols())
        throw Error(ErrorCode::DimensionMismatch,
                    "mask is " + std::to_string(Z.rows()) + "x" + std::to_string(Z.cols()) +
                        ", base is " + std::to_string(B.rows()) + "x" + std::to_string(B.cols()));
    for (long i = 0; i < Z.rows(); ++i) {
        bool any = false;
        for (long j = 0; j < Z.cols(); ++j) any = any || Z.keep(i, j);
        if (!any) throw Error(ErrorCode::DisconnectedMask, "mask row " + std::to_string(i) + " is all zero");
    }
    for (long j = 0; j < Z.cols(); ++j) {
        bool any = false;
        for (long i = 0; i < Z.rows(); ++i) any = any || Z.keep(i, j);
        if (!any)
            throw Error(ErrorCode::DisconnectedMask, "mask column " + std::to_string(j) + " is all zero");
    }

    BaseMatrix M(B.rows(), B.cols(), B.modulus(), BaseOrigin::Masked);
    for (long i = 0; i < B.rows(); ++i)
        for (long j = 0; j < B.cols(); ++j) {
            if (!Z.keep(i, j) || B.is_masked(i, j))
                M.set_masked(i, j);
            else
                M.set_residue(i, j, B.residue(i, j));
        }
    return M;
}

std::vector<std::vector<std::int32_t>> latin_square_view(const BaseMatrix& B) {
    if (B.origin() != BaseOrigin::PrimeField && B.origin() != BaseOrigin::CyclicSubgroup)
        throw Error(ErrorCode::WrongOrigin, "latin square view needs a full prime or cyclic base");
    const long t = B.modulus();
    std::vector<std::vector<std::int32_t>> L(t - 1, std::vector<std::int32_t>(t - 1));
    for (long i = 1; i < t; ++i)
        for (long j = 1; j < t; ++j) L[i - 1][j - 1] = B.residue(i, j);
    return L;
}

std::string base_to_text(const BaseMatrix& B) {
    std::ostringstream out;
    out << B.modulus() << " " << B.rows() << " " << B.cols() << " " << to_string(B.origin()) << "\n";
    for (long i = 0; i < B.rows(); ++i) {
        for (long j = 0; j < B.cols(); ++j) {
            if (j) out << " ";
            if (B.is_masked(i, j))
                out << "*";
            else
                out << B.residue(i, j);
        }
        out << "\n";
    }
    return out.str();
}

BaseMatrix base_from_text(const std::string& text) {
    std::istringstream in(text);
    long t, k, r;
    std::string origin_word;
    if (!(in >> t >> k >> r >> origin_word))
        throw Error(ErrorCode::IoFailure, "bad base matrix header");
    BaseOrigin origin;
    if (origin_word == "prime")
        origin = BaseOrigin::PrimeField;
    else if (origin_word == "cyclic")
        origin = BaseOrigin::CyclicSubgroup;
    else if (origin_word == "submatrix")
        origin = BaseOrigin::Submatrix;
    else if (origin_word == "masked")
        origin = BaseOrigin::Masked;
    else
        throw Error(ErrorCode::IoFailure, "unknown origin tag '" + origin_word + "'");

    BaseMatrix B(k, r, t, origin);
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < r; ++j) {
            std::string tok;
            if (!(in >> tok)) throw Error(ErrorCode::IoFailure, "truncated base matrix body");
            if (tok == "*") {
                if (origin != BaseOrigin::Masked)
                    throw Error(ErrorCode::IoFailure, "masked entry under non-masked origin");
                B.set_masked(i, j);
            } else {
                B.set_residue(i, j, static_cast<std::int32_t>(std::stol(tok)));
            }
        }
    return B;
}

void write_base(const BaseMatrix& B, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");
    out << base_to_text(B);
    if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path);
}

BaseMatrix read_base(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return base_from_text(buf.str());
}

MaskingMatrix read_masking(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);
    long k, r;
    if (!(in >> k >> r)) throw Error(ErrorCode::IoFailure, "bad masking header in " + path);
    MaskingMatrix Z(k, r);
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < r; ++j) {
            int b;
            if (!(in >> b) || (b != 0 && b != 1))
                throw Error(ErrorCode::IoFailure, "masking entries must be 0/1");
            Z.set(i, j, b == 1);
        }
    return Z;
}

void write_masking(const MaskingMatrix& Z, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");
    out << Z.rows() << " " << Z.cols() << "\n";
    for (long i = 0; i < Z.rows(); ++i) {
        for (long j = 0; j < Z.cols(); ++j) out << (j ? " " : "") << (Z.keep(i, j) ? 1 : 0);
        out << "\n";
    }
}

}  // namespace qcpg
