#include "qcpg/binary_matrix.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include "qcpg/errors.hpp"

namespace qcpg {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NotPrimePower: return "NotPrimePower";
        case ErrorCode::DoesNotDivide: return "DoesNotDivide";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::DuplicateIndex: return "DuplicateIndex";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DisconnectedMask: return "DisconnectedMask";
        case ErrorCode::WrongOrigin: return "WrongOrigin";
        case ErrorCode::ShiftOutOfRange: return "ShiftOutOfRange";
        case ErrorCode::SectionWeightExceeded: return "SectionWeightExceeded";
        case ErrorCode::NotBlockStructured: return "NotBlockStructured";
        case ErrorCode::NonIntegral: return "NonIntegral";
        case ErrorCode::WrongShape: return "WrongShape";
        case ErrorCode::ContainsZeroBlock: return "ContainsZeroBlock";
        case ErrorCode::RcViolation: return "RcViolation";
        case ErrorCode::DiagonalMismatch: return "DiagonalMismatch";
        case ErrorCode::TwosCountMismatch: return "TwosCountMismatch";
        case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
        case ErrorCode::AxiomViolation: return "AxiomViolation";
        case ErrorCode::NotBlockCertified: return "NotBlockCertified";
        case ErrorCode::TooManyDropped: return "TooManyDropped";
        case ErrorCode::UnsupportedLength: return "UnsupportedLength";
        case ErrorCode::DeltaIsOne: return "DeltaIsOne";
        case ErrorCode::NotGQ: return "NotGQ";
        case ErrorCode::NotBiregular: return "NotBiregular";
        case ErrorCode::NotRcConstrained: return "NotRcConstrained";
        case ErrorCode::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
        case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::SpectrumMismatch: return "SpectrumMismatch";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::InconsistentProfile: return "InconsistentProfile";
        case ErrorCode::NotANet: return "NotANet";
        case ErrorCode::NotAParallelBundle: return "NotAParallelBundle";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::BoundViolation: return "BoundViolation";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::InvalidRate: return "InvalidRate";
        case ErrorCode::ConfigInvalid: return "ConfigInvalid";
        case ErrorCode::IoFailure: return "IoFailure";
    }
    return "UnknownError";
}

BinaryMatrix::BinaryMatrix(long rows, long cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>((cols + 63) / 64), 0) {
    if (rows < 0 || cols < 0)
        throw Error(ErrorCode::DimensionMismatch, "negative matrix dimension");
}

void BinaryMatrix::xor_row(long dst, long src) {
    std::uint64_t* d = row_ptr(dst);
    const std::uint64_t* s = row_ptr(src);
    for (long w = 0; w < words_; ++w) d[w] ^= s[w];
}

long BinaryMatrix::row_weight(long i) const {
    const std::uint64_t* r = row_ptr(i);
    long w = 0;
    for (long k = 0; k < words_; ++k) w += std::popcount(r[k]);
    return w;
}

long BinaryMatrix::col_weight(long j) const {
    long w = 0;
    for (long i = 0; i < rows_; ++i) w += get(i, j);
    return w;
}

long long BinaryMatrix::ones() const {
    long long total = 0;
    for (long i = 0; i < rows_; ++i) total += row_weight(i);
    return total;
}

std::vector<long> BinaryMatrix::row_support(long i) const {
    std::vector<long> out;
    const std::uint64_t* r = row_ptr(i);
    for (long k = 0; k < words_; ++k) {
        std::uint64_t w = r[k];
        while (w) {
            const int b = std::countr_zero(w);
            out.push_back(k * 64 + b);
            w &= w - 1;
        }
    }
    return out;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix T(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j : row_support(i)) T.set(j, i, true);
    return T;
}

bool BinaryMatrix::operator==(const BinaryMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

void write_alist(const BinaryMatrix& H, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");

    const long m = H.rows(), n = H.cols();
    std::vector<std::vector<long>> col_lists(n), row_lists(m);
    for (long i = 0; i < m; ++i) {
        for (long j : H.row_support(i)) {
            row_lists[i].push_back(j + 1);
            col_lists[j].push_back(i + 1);
        }
    }
    long max_col = 0, max_row = 0;
    for (const auto& c : col_lists) max_col = std::max<long>(max_col, c.size());
    for (const auto& r : row_lists) max_row = std::max<long>(max_row, r.size());

    out << n << " " << m << "\n" << max_col << " " << max_row << "\n";
    for (long j = 0; j < n; ++j) out << col_lists[j].size() << (j + 1 < n ? " " : "\n");
    for (long i = 0; i < m; ++i) out << row_lists[i].size() << (i + 1 < m ? " " : "\n");
    auto dump = [&](const std::vector<long>& lst, long width) {
        for (long k = 0; k < width; ++k)
            out << (k < static_cast<long>(lst.size()) ? lst[k] : 0) << (k + 1 < width ? " " : "\n");
    };
    for (long j = 0; j < n; ++j) dump(col_lists[j], max_col);
    for (long i = 0; i < m; ++i) dump(row_lists[i], max_row);
    if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path);
}

BinaryMatrix read_alist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);

    std::vector<long long> tok;
    long long v;
    while (in >> v) tok.push_back(v);
    std::size_t pos = 0;
    auto next = [&]() -> long long {
        if (pos >= tok.size()) throw Error(ErrorCode::IoFailure, "truncated alist: " + path);
        return tok[pos++];
    };

    const long n = static_cast<long>(next());
    const long m = static_cast<long>(next());
    if (n <= 0 || m <= 0) throw Error(ErrorCode::IoFailure, "bad alist dimensions in " + path);
    const long max_col = static_cast<long>(next());
    const long max_row = static_cast<long>(next());

    std::vector<long> col_deg(n), row_deg(m);
    long long total_col = 0, total_row = 0;
    for (long j = 0; j < n; ++j) total_col += (col_deg[j] = static_cast<long>(next()));
    for (long i = 0; i < m; ++i) total_row += (row_deg[i] = static_cast<long>(next()));
    if (total_col != total_row)
        throw Error(ErrorCode::IoFailure, "inconsistent degree sums in " + path);

    // Remaining token count decides padded vs compact lists.
    const long long remaining = static_cast<long long>(tok.size()) - static_cast<long long>(pos);
    const bool padded =
        remaining == static_cast<long long>(n) * max_col + static_cast<long long>(m) * max_row &&
        remaining != total_col + total_row;

    BinaryMatrix H(m, n);
    for (long j = 0; j < n; ++j) {
        const long width = padded ? max_col : col_deg[j];
        for (long k = 0; k < width; ++k) {
            const long long i = next();
            if (i == 0 && padded) continue;
            if (i < 1 || i > m) throw Error(ErrorCode::IoFailure, "alist row index out of range");
            H.set(i - 1, j, true);
        }
    }
    for (long i = 0; i < m; ++i) {
        const long width = padded ? max_row : row_deg[i];
        for (long k = 0; k < width; ++k) {
            const long long j = next();
            if (j == 0 && padded) continue;
            if (j < 1 || j > n) throw Error(ErrorCode::IoFailure, "alist column index out of range");
            if (!H.get(i, j - 1))
                throw Error(ErrorCode::IoFailure, "alist row/column lists disagree");
        }
    }
    return H;
}

}  // namespace qcpg
