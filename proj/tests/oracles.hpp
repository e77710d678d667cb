#pragma once

#include <cstdint>
#include <vector>

#include "qcpg/binary_matrix.hpp"
#include "qcpg/rng.hpp"

namespace oracles {

/// Brute-force count of simple cycles of the given even length in the Tanner
/// graph of H, by exhaustive path search from each canonical root. Written
/// independently of the library's counting paths.
std::uint64_t count_cycles_brute(const qcpg::BinaryMatrix& H, int length);

/// Brute-force girth by the same path search (smallest length with a cycle),
/// scanning lengths 4, 6, ..., up to the vertex count.
int girth_brute(const qcpg::BinaryMatrix& H);

/// Random bipartite 0/1 matrix with the given density, for property tests.
qcpg::BinaryMatrix random_binary_matrix(long rows, long cols, double density,
                                        std::uint64_t seed);

/// GF(2) rank by column elimination over a dense byte matrix; the
/// independent cross-check for the bit-packed row elimination.
long gf2_rank_dense(const qcpg::BinaryMatrix& H);

}  // namespace oracles
