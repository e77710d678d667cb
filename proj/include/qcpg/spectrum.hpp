#pragma once

#include <string>
#include <vector>

#include "qcpg/binary_matrix.hpp"

namespace qcpg {

/// Closed-form eigenvalue multiset of a geometry-derived matrix.
struct SpectrumReport {
    struct Line {
        double value;
        long multiplicity;
    };
    std::vector<Line> eigenvalues;  // descending by value
    double mu_max = 0.0;
    double mu1 = 0.0;  // second-largest magnitude

    long dimension() const;
    double trace() const;
};

/// Spectrum of the point-point adjacency matrix A1 = H^T H - gamma I of a
/// PaG(gamma, rho, delta): the strongly regular graph eigenvalues
/// (rho-1)*gamma, rho-1-delta and -gamma with their closed-form
/// multiplicities. Throws NonIntegralMultiplicity when the formulas do not
/// produce integers.
SpectrumReport srg_spectrum(long gamma, long rho, long delta);

/// Spectrum of the full bipartite adjacency [[0, H^T], [H, 0]]:
/// +-sqrt(gamma*rho), +-sqrt(gamma+rho-1-delta) and 0.
SpectrumReport tanner_spectrum(long gamma, long rho, long delta);

/// H^T H - gamma I as a dense integer matrix; requires constant column
/// weight gamma and off-diagonal entries <= 1.
std::vector<std::vector<int>> point_adjacency(const BinaryMatrix& H, long gamma);

struct SpectrumCheckResult {
    double a1_residual = 0.0;      // max |numeric - closed-form| over A1
    double tanner_residual = 0.0;  // same over the bipartite adjacency
    bool multiplicities_match = true;
};

/// Dense symmetric eigensolve of A1 and of the bipartite adjacency, compared
/// against the closed forms with multiplicity clustering at the tolerance.
/// Capped at n + m <= 2000.
SpectrumCheckResult numeric_spectrum_check(const BinaryMatrix& H, long gamma, long rho, long delta,
                                           double tolerance = 1e-9);

/// Lower bound c^2 / (alpha*c*d + mu1^2*(1-alpha)) on the vertex expansion of
/// a (c,d)-biregular bipartite graph for sets of at most alpha*n vertices.
double expansion_lower_bound(double c, double d, double mu1, double alpha);

/// mu1 <= sqrt(c-1) + sqrt(d-1), within 1e-12.
bool is_ramanujan_biregular(double c, double d, double mu1);

/// mu1^2 / mu_max^2 = (gamma + rho - delta - 1) / (gamma * rho).
double eigen_ratio(long gamma, long rho, long delta);

std::string spectrum_to_json(const SpectrumReport& srg, const SpectrumReport& tanner);

}  // namespace qcpg
