#pragma once

#include <cstdint>
#include <limits>

#include "qcpg/binary_matrix.hpp"
#include "qcpg/geometry.hpp"
#include "qcpg/tanner_graph.hpp"

namespace qcpg {

/// Sentinel returned by girth() for acyclic graphs.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

/// Length of the shortest cycle in the Tanner graph (always even).
int girth(const TannerGraph& g);
int girth(const BinaryMatrix& H);

/// Exact number of simple cycles of the given length (4, 6, 8 or 10).
///
/// For lengths below twice the girth the count comes from the trace of powers
/// of the non-backtracking edge operator: a cyclically non-backtracking
/// closed walk shorter than 2g must trace a simple cycle exactly once, so
/// the trace equals 2 * length * (cycle count). Longer requests fall back to
/// DFS enumeration with canonical representatives.
std::uint64_t count_cycles(const TannerGraph& g, int length);
std::uint64_t count_cycles(const BinaryMatrix& H, int length);

/// Closed form m*gamma*(gamma-1)*(delta-1)*(rho-1)/6 for the 6-cycles of a
/// certified geometry with delta > 1.
std::uint64_t cycle6_count_formula(const GeometryDescriptor& G);

/// Closed form m*(rho-1)*(gamma-1)^2*C(rho,2)/4 for the 8-cycles of a
/// generalized quadrangle (delta = 1).
std::uint64_t cycle8_count_formula_gq(const GeometryDescriptor& G);

}  // namespace qcpg
