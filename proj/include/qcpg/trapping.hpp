#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcpg/geometry.hpp"

namespace qcpg {

enum class ConfigurationTag { Colinear, Clique, PartialOvoid, Other };

const char* to_string(ConfigurationTag tag);

/// Induced-subgraph profile of a VN subset: kappa points, tau odd-degree CNs,
/// and the line-degree histogram m_i (number of induced CNs of degree i),
/// together with the lower bounds the subset is measured against.
struct TrappingReport {
    std::vector<long> delta_set;
    long kappa = 0;
    long tau = 0;
    std::map<long, long> profile;  // degree i -> m_i, i >= 1
    bool elementary = false;       // all induced degrees in {1, 2}
    bool small = false;            // kappa <= sqrt(n) and tau/kappa <= 4

    long general_bound = 0;  // (gamma + 1 - kappa) * kappa
    bool general_applicable = false;  // stated for kappa < gamma
    bool general_satisfied = true;

    long theorem3_bound = 0;
    long theorem3_equality_form = 0;  // truncated sums, exact when delta = rho
    bool theorem3_applicable = false;  // stated for kappa <= gamma
    bool theorem3_satisfied = true;

    std::optional<long> theorem4_bound;  // max over parallel bundles, nets only
    bool theorem4_satisfied = true;
};

/// Exact profile of the subgraph induced by delta_set, with all bounds
/// evaluated (theorem 4 over every parallel bundle when the geometry is a
/// block-certified net).
TrappingReport induced_profile(const GeometryDescriptor& G, const std::vector<long>& delta_set);

/// (gamma + 1 - kappa) * kappa; the trapping-set size bound for kappa < gamma.
long general_bound(long gamma, long kappa);

struct Theorem3Bound {
    long bound;
    long equality_form;
};

/// (gamma+1-kappa)kappa + sum_{odd i} (i-1)^2 m_i + sum_{even i} i(i-2) m_i.
/// The equality form truncates the sums at 2*floor((kappa+1)/2)-1 and
/// 2*floor(kappa/2); it matches tau exactly when delta = rho.
Theorem3Bound theorem3_bound(long gamma, long kappa, const std::map<long, long>& profile);

/// Net-specific bound (gamma-1)kappa - kappa^2 + sum kappa_i^2 + #{odd
/// kappa_i}, where kappa_i counts delta_set points on the i-th bundle line.
long theorem4_bound(const GeometryDescriptor& G, const std::vector<long>& delta_set,
                    const Bundle& bundle);

/// Classification of a point set with the configuration-specific expected
/// profiles reported next to the directly computed ones.
struct ConfigurationReport {
    ConfigurationTag tag = ConfigurationTag::Other;
    TrappingReport computed;
    std::optional<long> claimed_tau;                // configuration formula, when one exists
    std::optional<std::map<long, long>> claimed_profile;
    bool claim_matches = true;
};

ConfigurationReport classify_configuration(const GeometryDescriptor& G,
                                           const std::vector<long>& delta_set);

struct SearchOptions {
    long max_points_exhaustive = 64;
    long max_kappa_exhaustive = 4;
    long samples = 20000;  // used when the exhaustive budget is exceeded
    std::uint64_t seed = 1;
    bool allow_sampling = true;
};

/// Enumerates (or samples) subsets of size <= kappa_max, keeps those with
/// tau <= tau_max, and verifies every evaluated subset against the general
/// and theorem-3 bounds. A bound violation throws BoundViolation.
std::vector<TrappingReport> search_trapping_sets(const GeometryDescriptor& G, long kappa_max,
                                                 long tau_max,
                                                 const SearchOptions& options = {});

void write_trapping_csv(const std::vector<TrappingReport>& reports, const std::string& path);
std::string trapping_to_json(const std::vector<TrappingReport>& reports);

}  // namespace qcpg
