#pragma once

#include <array>
#include <string>
#include <vector>

#include "qcpg/base_matrix.hpp"
#include "qcpg/binary_matrix.hpp"
#include "qcpg/qc_matrix.hpp"

namespace fixtures {

/// 9x9 line-point adjacency matrix of the order-3 net PaG(3,3,2): the
/// dispersal of the 3x3 multiplication table over GF(3).
inline qcpg::BinaryMatrix pag332_incidence() {
    static const std::array<const char*, 9> rows = {
        "100100100", "010010010", "001001001",
        "100010001", "010001100", "001100010",
        "100001010", "010100001", "001010100",
    };
    qcpg::BinaryMatrix H(9, 9);
    for (long i = 0; i < 9; ++i)
        for (long j = 0; j < 9; ++j)
            if (rows[static_cast<std::size_t>(i)][j] == '1') H.set(i, j, true);
    return H;
}

/// The 9 lines of PaG(3,3,2) as point index triples, in row order.
inline std::vector<std::vector<long>> pag332_lines() {
    return {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {1, 5, 6},
            {2, 3, 7}, {0, 5, 7}, {1, 3, 8}, {2, 4, 6}};
}

/// 4x8 submatrix of the GF(127) multiplication table used by the bundled
/// rate-1/2 code: rows {1,118,56,79}, columns {2,83,33,46,36,94,42,86}.
inline std::vector<long> gf127_rows() { return {1, 118, 56, 79}; }
inline std::vector<long> gf127_cols() { return {2, 83, 33, 46, 36, 94, 42, 86}; }

/// The same submatrix with its values pinned directly.
inline qcpg::BaseMatrix gf127_4x8_base() {
    static const long grid[4][8] = {
        {2, 83, 33, 46, 36, 94, 42, 86},
        {109, 15, 84, 94, 57, 43, 3, 115},
        {112, 76, 70, 36, 111, 57, 66, 117},
        {31, 80, 67, 78, 50, 60, 16, 63},
    };
    qcpg::BaseMatrix B(4, 8, 127, qcpg::BaseOrigin::Submatrix);
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 8; ++j) B.set_residue(i, j, static_cast<std::int32_t>(grid[i][j]));
    return B;
}

/// Masking pattern for the rate-1/2 code: 8 zeros, column weight 3, row
/// weight 6 after masking.
inline qcpg::MaskingMatrix gf127_4x8_mask() {
    static const int grid[4][8] = {
        {1, 0, 1, 0, 1, 1, 1, 1},
        {0, 1, 0, 1, 1, 1, 1, 1},
        {1, 1, 1, 1, 1, 0, 1, 0},
        {1, 1, 1, 1, 0, 1, 0, 1},
    };
    qcpg::MaskingMatrix Z(4, 8);
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 8; ++j) Z.set(i, j, grid[i][j] == 1);
    return Z;
}

/// The masked 508x1016 parity-check matrix (column weight 3, row weight 6).
inline qcpg::BinaryMatrix rate_half_1016() {
    return qcpg::disperse(qcpg::mask(gf127_4x8_base(), gf127_4x8_mask())).expand();
}

/// Rows 1..6 of the 127x127 exponent table: the base of the (16129, 15372)
/// high-rate code.
inline qcpg::BaseMatrix high_rate_base() {
    const qcpg::BaseMatrix full = qcpg::build_cyclic_base(128, 127);
    return qcpg::select_submatrix(full, {1, 2, 3, 4, 5, 6},
                                  [] {
                                      std::vector<long> all(127);
                                      for (long j = 0; j < 127; ++j) all[j] = j;
                                      return all;
                                  }());
}

}  // namespace fixtures
