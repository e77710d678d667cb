#include "qcpg/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "qcpg/errors.hpp"
#include "qcpg/geometry.hpp"
#include "qcpg/version.hpp"

namespace qcpg {

long SpectrumReport::dimension() const {
    long d = 0;
    for (const auto& l : eigenvalues) d += l.multiplicity;
    return d;
}

double SpectrumReport::trace() const {
    double t = 0;
    for (const auto& l : eigenvalues) t += l.value * static_cast<double>(l.multiplicity);
    return t;
}

SpectrumReport srg_spectrum(long gamma, long rho, long delta) {
    geometry_params(gamma, rho, delta);  // validates the triple
    const long long denom = delta * (gamma + rho - 1 - delta);
    const long long num2 = static_cast<long long>(gamma) * rho * (gamma - 1) * (rho - 1);
    const long long num3 =
        static_cast<long long>(rho - 1) * (rho - delta) *
        ((gamma - 1) * (rho - 1) + delta);
    if (denom <= 0 || num2 % denom != 0 || num3 % denom != 0)
        throw Error(ErrorCode::NonIntegralMultiplicity,
                    "multiplicity formulas are not integral for (" + std::to_string(gamma) + "," +
                        std::to_string(rho) + "," + std::to_string(delta) + ")");
    SpectrumReport rep;
    rep.eigenvalues = {{static_cast<double>((rho - 1) * gamma), 1},
                       {static_cast<double>(rho - 1 - delta), num2 / denom},
                       {static_cast<double>(-gamma), num3 / denom}};
    rep.mu_max = rep.eigenvalues[0].value;
    rep.mu1 = std::max(std::abs(rep.eigenvalues[1].value), std::abs(rep.eigenvalues[2].value));
    return rep;
}

SpectrumReport tanner_spectrum(long gamma, long rho, long delta) {
    const auto [n, m] = geometry_params(gamma, rho, delta);
    const SpectrumReport srg = srg_spectrum(gamma, rho, delta);
    const long mult1 = srg.eigenvalues[1].multiplicity;  // of gamma+rho-1-delta in H^T H
    const double mu_max = std::sqrt(static_cast<double>(gamma) * rho);
    const double mu1 = std::sqrt(static_cast<double>(gamma + rho - 1 - delta));
    SpectrumReport rep;
    rep.eigenvalues = {{mu_max, 1},
                       {mu1, mult1},
                       {0.0, n + m - 2 - 2 * mult1},
                       {-mu1, mult1},
                       {-mu_max, 1}};
    rep.mu_max = mu_max;
    rep.mu1 = mu1;
    return rep;
}

std::vector<std::vector<int>> point_adjacency(const BinaryMatrix& H, long gamma) {
    const long n = H.cols();
    for (long j = 0; j < n; ++j)
        if (H.col_weight(j) != gamma)
            throw Error(ErrorCode::NotBiregular, "column " + std::to_string(j) + " has weight " +
                                                     std::to_string(H.col_weight(j)));
    std::vector<std::vector<int>> A(n, std::vector<int>(n, 0));
    for (long i = 0; i < H.rows(); ++i) {
        const auto support = H.row_support(i);
        for (std::size_t a = 0; a < support.size(); ++a)
            for (std::size_t b = a + 1; b < support.size(); ++b) {
                if (++A[support[a]][support[b]] > 1)
                    throw Error(ErrorCode::NotRcConstrained,
                                "points " + std::to_string(support[a]) + " and " +
                                    std::to_string(support[b]) + " share two lines");
                ++A[support[b]][support[a]];
            }
    }
    return A;
}

namespace {

// Sorted numeric spectrum vs closed-form multiset: greatest residual and a
// multiplicity clustering check.
double compare_spectra(const Eigen::VectorXd& numeric, const SpectrumReport& closed, double tol,
                       bool& mult_ok) {
    std::vector<std::pair<double, long>> lines;
    for (const auto& l : closed.eigenvalues)
        if (l.multiplicity > 0) lines.emplace_back(l.value, l.multiplicity);
    std::sort(lines.begin(), lines.end());

    std::vector<double> expected;
    for (const auto& [v, mult] : lines) expected.insert(expected.end(), mult, v);
    if (static_cast<long>(expected.size()) != numeric.size())
        throw Error(ErrorCode::SpectrumMismatch, "dimension mismatch against closed form");

    double residual = 0.0;
    for (long i = 0; i < numeric.size(); ++i)
        residual = std::max(residual, std::abs(numeric[i] - expected[static_cast<std::size_t>(i)]));

    // Clustering: count numeric eigenvalues within tol of each closed value.
    mult_ok = true;
    for (const auto& [v, mult] : lines) {
        long count = 0;
        for (long i = 0; i < numeric.size(); ++i) count += std::abs(numeric[i] - v) <= tol;
        if (count != mult) mult_ok = false;
    }
    return residual;
}

}  // namespace

SpectrumCheckResult numeric_spectrum_check(const BinaryMatrix& H, long gamma, long rho, long delta,
                                           double tolerance) {
    const long n = H.cols(), m = H.rows();
    if (n + m > 2000)
        throw Error(ErrorCode::TooLarge,
                    "dense eigensolve capped at 2000 nodes, got " + std::to_string(n + m));

    Eigen::MatrixXd Hd(m, n);
    Hd.setZero();
    for (long i = 0; i < m; ++i)
        for (long j : H.row_support(i)) Hd(i, j) = 1.0;

    SpectrumCheckResult result;
    bool mult_a1 = true, mult_a = true;

    {
        Eigen::MatrixXd A1 = Hd.transpose() * Hd;
        A1 -= static_cast<double>(gamma) * Eigen::MatrixXd::Identity(n, n);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A1, Eigen::EigenvaluesOnly);
        result.a1_residual =
            compare_spectra(solver.eigenvalues(), srg_spectrum(gamma, rho, delta), tolerance,
                            mult_a1);
    }
    {
        Eigen::MatrixXd A(n + m, n + m);
        A.setZero();
        A.topRightCorner(n, m) = Hd.transpose();
        A.bottomLeftCorner(m, n) = Hd;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A, Eigen::EigenvaluesOnly);
        result.tanner_residual =
            compare_spectra(solver.eigenvalues(), tanner_spectrum(gamma, rho, delta), tolerance,
                            mult_a);
    }
    result.multiplicities_match = mult_a1 && mult_a;
    if (result.a1_residual > tolerance || result.tanner_residual > tolerance ||
        !result.multiplicities_match)
        throw Error(ErrorCode::SpectrumMismatch,
                    "residuals " + std::to_string(result.a1_residual) + " / " +
                        std::to_string(result.tanner_residual) +
                        (result.multiplicities_match ? "" : ", multiplicity clustering failed"));
    return result;
}

double expansion_lower_bound(double c, double d, double mu1, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw Error(ErrorCode::AlphaOutOfRange, "alpha must lie in (0,1)");
    if (c < 1.0 || d < 1.0 || mu1 < 0.0)
        throw Error(ErrorCode::AlphaOutOfRange, "need c,d >= 1 and mu1 >= 0");
    return c * c / (alpha * c * d + mu1 * mu1 * (1.0 - alpha));
}

bool is_ramanujan_biregular(double c, double d, double mu1) {
    return mu1 <= std::sqrt(c - 1.0) + std::sqrt(d - 1.0) + 1e-12;
}

double eigen_ratio(long gamma, long rho, long delta) {
    return static_cast<double>(gamma + rho - delta - 1) / (static_cast<double>(gamma) * rho);
}

std::string spectrum_to_json(const SpectrumReport& srg, const SpectrumReport& tanner) {
    nlohmann::json j;
    j["toolkit_version"] = kVersion;
    auto dump = [](const SpectrumReport& rep) {
        nlohmann::json out;
        for (const auto& l : rep.eigenvalues)
            out["eigenvalues"].push_back({{"value", l.value}, {"multiplicity", l.multiplicity}});
        out["mu_max"] = rep.mu_max;
        out["mu1"] = rep.mu1;
        return out;
    };
    j["point_graph"] = dump(srg);
    j["tanner_graph"] = dump(tanner);
    return j.dump(2);
}

}  // namespace qcpg
