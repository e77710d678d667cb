#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qcpg/base_matrix.hpp"
#include "qcpg/binary_matrix.hpp"
#include "qcpg/qc_matrix.hpp"
#include "qcpg/tanner_graph.hpp"

namespace qcpg {

enum class Certification { Theorem1, Theorem2, DefinitionCheck };

const char* to_string(Certification cert);

/// Validated partial-geometry parameters plus access to the certified
/// incidence structure. gamma lines per point, rho points per line, delta
/// joining lines for each non-incident (point, line) pair.
struct GeometryDescriptor {
    long gamma = 0;
    long rho = 0;
    long delta = 0;
    long n_points = 0;
    long m_lines = 0;
    Certification certification = Certification::DefinitionCheck;

    // Block form is present when certification came from the array structure.
    std::shared_ptr<const QcBinaryMatrix> qc;
    std::shared_ptr<const TannerGraph> graph;

    bool block_certified() const { return qc != nullptr; }
    const std::vector<long>& line_points(long i) const { return graph->cn_neighbors(i); }
    const std::vector<long>& point_lines(long j) const { return graph->vn_neighbors(j); }
    bool is_net() const { return delta == gamma - 1; }
};

struct Bundle {
    enum class Kind { Parallel, Intersecting };
    Kind kind = Kind::Parallel;
    std::vector<long> lines;
    long anchor = -1;  // for Kind::Intersecting
};

/// Small labeled bipartite graph whose order-t lift is the full Tanner graph;
/// edge labels are the CPM shifts.
struct Protograph {
    struct Edge {
        long vn, cn;
        std::int32_t label;
    };
    long vn_count = 0;
    long cn_count = 0;
    long block_order = 0;
    std::vector<Edge> edges;
};

/// Point and line counts implied by (gamma, rho, delta); throws NonIntegral
/// when the triple admits no geometry.
std::pair<long, long> geometry_params(long gamma, long rho, long delta);

struct RcCheckResult {
    bool ok = true;
    long row_a = -1, row_b = -1;
    long pos1 = -1, pos2 = -1;  // two shared 1-positions of the violating pair
};

/// Pass iff every pair of rows shares at most one common 1-position.
RcCheckResult rc_constraint_check(const BinaryMatrix& H);
/// Shift-domain equivalent for QC arrays: rows of block-rows a and b collide
/// twice iff two block-columns have equal shift differences.
RcCheckResult rc_constraint_check(const QcBinaryMatrix& H);

/// A t x r array of order-t CPMs (no zero blocks) satisfying the RC
/// constraint is the line-point adjacency matrix of PaG(t, r, r-1).
GeometryDescriptor verify_theorem1(const QcBinaryMatrix& H);

struct Theorem2Options {
    bool exhaustive = false;
    long sample_pairs = 64;  // (i, j) pairs checked in fast mode
    std::uint64_t seed = 1;
};

/// Connection-count certification: for block-column i and shift j, perturbing
/// that column by I + P^j must yield a product H D H^T with diagonal rho,
/// exactly delta 2-entries per row and all other entries 0/1. Works entirely
/// in the shift domain; j = 0 is skipped (I + P^0 doubles the block and the
/// conditions degenerate).
GeometryDescriptor verify_theorem2(const QcBinaryMatrix& H, long delta,
                                   const Theorem2Options& options = {});

/// Ground-truth oracle: brute-force check of the four partial-geometry
/// axioms, inferring delta by direct counting. O(n * m * gamma) and capped by
/// max_points.
GeometryDescriptor verify_definition(const BinaryMatrix& H, long max_points = 10000);

/// One parallel bundle per block-row; the lines of each bundle partition the
/// point set.
std::vector<Bundle> parallel_bundles(const GeometryDescriptor& G);

/// All gamma lines through the given point.
Bundle intersecting_bundle(const GeometryDescriptor& G, long point);

/// Removes block-columns and re-certifies the remaining array as
/// PaG(gamma, rho - tau, rho - tau - 1).
GeometryDescriptor extract_subgeometry(const GeometryDescriptor& G,
                                       const std::vector<long>& drop_block_cols);

/// One VN per base-matrix column, one CN per row, edge labels the residues;
/// masked entries produce no edge.
Protograph make_protograph(const BaseMatrix& B);

void write_protograph_dot(const Protograph& P, const std::string& path);
std::string descriptor_to_json(const GeometryDescriptor& G, const std::string& source = "");

}  // namespace qcpg
