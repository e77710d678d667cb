#include "qcpg/trapping.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "qcpg/errors.hpp"
#include "qcpg/rng.hpp"
#include "qcpg/version.hpp"

namespace qcpg {

const char* to_string(ConfigurationTag tag) {
    switch (tag) {
        case ConfigurationTag::Colinear: return "colinear";
        case ConfigurationTag::Clique: return "clique";
        case ConfigurationTag::PartialOvoid: return "partial-ovoid";
        case ConfigurationTag::Other: return "other";
    }
    return "?";
}

long general_bound(long gamma, long kappa) { return (gamma + 1 - kappa) * kappa; }

Theorem3Bound theorem3_bound(long gamma, long kappa, const std::map<long, long>& profile) {
    long long edge_sum = 0;
    for (const auto& [i, mi] : profile) {
        if (i < 1 || mi < 0)
            throw Error(ErrorCode::InconsistentProfile, "bad profile entry m_" + std::to_string(i));
        edge_sum += static_cast<long long>(i) * mi;
    }
    if (edge_sum != static_cast<long long>(kappa) * gamma)
        throw Error(ErrorCode::InconsistentProfile,
                    "sum i*m_i = " + std::to_string(edge_sum) + ", expected kappa*gamma = " +
                        std::to_string(kappa * gamma));

    const long odd_cap = 2 * ((kappa + 1) / 2) - 1;
    const long even_cap = 2 * (kappa / 2);
    Theorem3Bound out{general_bound(gamma, kappa), general_bound(gamma, kappa)};
    for (const auto& [i, mi] : profile) {
        const long term = (i % 2 == 1) ? (i - 1) * (i - 1) * mi : i * (i - 2) * mi;
        out.bound += term;
        if ((i % 2 == 1 && i <= odd_cap) || (i % 2 == 0 && i <= even_cap))
            out.equality_form += term;
    }
    return out;
}

namespace {

std::vector<long> checked_set(const GeometryDescriptor& G, const std::vector<long>& delta_set) {
    if (delta_set.empty()) throw Error(ErrorCode::EmptySet, "empty VN subset");
    std::vector<long> sorted = delta_set;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= G.n_points)
            throw Error(ErrorCode::IndexOutOfRange, "point " + std::to_string(sorted[i]));
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw Error(ErrorCode::DuplicateIndex, "point " + std::to_string(sorted[i]));
    }
    return sorted;
}

std::map<long, long> induced_line_degrees(const GeometryDescriptor& G,
                                          const std::vector<long>& points) {
    std::unordered_map<long, long> degree;
    for (long v : points)
        for (long line : G.point_lines(v)) ++degree[line];
    std::map<long, long> m_i;
    for (const auto& [line, d] : degree) ++m_i[d];
    return m_i;
}

}  // namespace

TrappingReport induced_profile(const GeometryDescriptor& G, const std::vector<long>& delta_set) {
    TrappingReport rep;
    rep.delta_set = checked_set(G, delta_set);
    rep.kappa = static_cast<long>(rep.delta_set.size());
    rep.profile = induced_line_degrees(G, rep.delta_set);

    rep.elementary = true;
    for (const auto& [i, mi] : rep.profile) {
        if (i % 2 == 1) rep.tau += mi;
        if (i > 2) rep.elementary = false;
    }
    rep.small = static_cast<double>(rep.kappa) <= std::sqrt(static_cast<double>(G.n_points)) &&
                rep.tau <= 4 * rep.kappa;

    rep.general_bound = general_bound(G.gamma, rep.kappa);
    rep.general_applicable = rep.kappa < G.gamma;
    rep.general_satisfied = !rep.general_applicable || rep.tau >= rep.general_bound;

    const Theorem3Bound t3 = theorem3_bound(G.gamma, rep.kappa, rep.profile);
    rep.theorem3_bound = t3.bound;
    rep.theorem3_equality_form = t3.equality_form;
    rep.theorem3_applicable = rep.kappa <= G.gamma;
    rep.theorem3_satisfied = !rep.theorem3_applicable || rep.tau >= rep.theorem3_bound;

    if (G.is_net() && G.block_certified()) {
        long best = 0;
        for (const Bundle& bundle : parallel_bundles(G))
            best = std::max(best, theorem4_bound(G, rep.delta_set, bundle));
        rep.theorem4_bound = best;
        rep.theorem4_satisfied = rep.tau >= best;
    }
    return rep;
}

long theorem4_bound(const GeometryDescriptor& G, const std::vector<long>& delta_set,
                    const Bundle& bundle) {
    if (!G.is_net())
        throw Error(ErrorCode::NotANet, "delta = " + std::to_string(G.delta) + ", gamma-1 = " +
                                            std::to_string(G.gamma - 1));
    const std::vector<long> points = checked_set(G, delta_set);

    std::vector<char> covered(G.n_points, 0);
    long covered_count = 0;
    for (long line : bundle.lines) {
        if (line < 0 || line >= G.m_lines)
            throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(line));
        for (long v : G.line_points(line)) {
            if (covered[v])
                throw Error(ErrorCode::NotAParallelBundle, "lines intersect at point " + std::to_string(v));
            covered[v] = 1;
            ++covered_count;
        }
    }
    if (covered_count != G.n_points)
        throw Error(ErrorCode::NotAParallelBundle, "bundle does not cover all points");

    const long kappa = static_cast<long>(points.size());
    long long sum_sq = 0;
    long odd = 0;
    for (long line : bundle.lines) {
        long ki = 0;
        for (long v : G.line_points(line)) ki += std::binary_search(points.begin(), points.end(), v);
        sum_sq += static_cast<long long>(ki) * ki;
        odd += ki % 2;
    }
    return static_cast<long>((G.gamma - 1) * kappa - kappa * kappa + sum_sq + odd);
}

ConfigurationReport classify_configuration(const GeometryDescriptor& G,
                                           const std::vector<long>& delta_set) {
    ConfigurationReport out;
    out.computed = induced_profile(G, delta_set);
    const auto& points = out.computed.delta_set;
    const long kappa = out.computed.kappa;
    const long gamma = G.gamma, rho = G.rho;

    long max_degree = 0;
    for (const auto& [i, mi] : out.computed.profile) max_degree = std::max(max_degree, i);

    const bool colinear = kappa >= 2 && max_degree == kappa;
    bool clique = kappa >= 2 && !colinear;
    if (clique) {
        for (std::size_t a = 0; a < points.size() && clique; ++a)
            for (std::size_t b = a + 1; b < points.size() && clique; ++b) {
                bool adjacent = false;
                for (long la : G.point_lines(points[a])) {
                    const auto& pl = G.line_points(la);
                    if (std::find(pl.begin(), pl.end(), points[b]) != pl.end()) {
                        adjacent = true;
                        break;
                    }
                }
                clique = adjacent;
            }
    }

    if (kappa == 1 || max_degree <= 1) {
        // Every line meets the set at most once.
        out.tag = ConfigurationTag::PartialOvoid;
        out.claimed_tau = kappa * gamma;
        out.claimed_profile = std::map<long, long>{{1, kappa * gamma}};
    } else if (colinear) {
        out.tag = ConfigurationTag::Colinear;
        out.claimed_tau = (gamma - 1) * kappa + 1;
        out.claimed_profile = std::map<long, long>{{kappa, 1}, {1, kappa * (gamma - 1)}};
    } else if (clique) {
        out.tag = ConfigurationTag::Clique;
        // Stated clique profile; direct counting gives m_1 = kappa*(gamma-kappa+1)
        // instead, so the mismatch flag is expected to fire here.
        out.claimed_tau = kappa * (rho - kappa);
        out.claimed_profile =
            std::map<long, long>{{1, (gamma - kappa) * kappa}, {2, kappa * (kappa - 1) / 2}};
    } else {
        out.tag = ConfigurationTag::Other;
    }

    if (out.claimed_tau) {
        std::map<long, long> claimed = out.claimed_profile.value();
        std::erase_if(claimed, [](const auto& kv) { return kv.second == 0; });
        out.claim_matches =
            *out.claimed_tau == out.computed.tau && claimed == out.computed.profile;
    }
    return out;
}

namespace {

void verify_bounds_or_throw(const TrappingReport& rep) {
    if (rep.general_applicable && !rep.general_satisfied)
        throw Error(ErrorCode::BoundViolation,
                    "general bound violated: kappa=" + std::to_string(rep.kappa) +
                        " tau=" + std::to_string(rep.tau) + " bound=" +
                        std::to_string(rep.general_bound));
    if (rep.theorem3_applicable && !rep.theorem3_satisfied)
        throw Error(ErrorCode::BoundViolation,
                    "theorem-3 bound violated: kappa=" + std::to_string(rep.kappa) +
                        " tau=" + std::to_string(rep.tau) + " bound=" +
                        std::to_string(rep.theorem3_bound));
    if (rep.theorem4_bound && !rep.theorem4_satisfied)
        throw Error(ErrorCode::BoundViolation,
                    "theorem-4 bound violated: kappa=" + std::to_string(rep.kappa) +
                        " tau=" + std::to_string(rep.tau) + " bound=" +
                        std::to_string(*rep.theorem4_bound));
}

}  // namespace

std::vector<TrappingReport> search_trapping_sets(const GeometryDescriptor& G, long kappa_max,
                                                 long tau_max, const SearchOptions& options) {
    if (kappa_max < 1) throw Error(ErrorCode::EmptySet, "kappa_max must be at least 1");
    std::vector<TrappingReport> hits;

    const bool exhaustive =
        G.n_points <= options.max_points_exhaustive && kappa_max <= options.max_kappa_exhaustive;

    auto evaluate = [&](const std::vector<long>& subset) {
        TrappingReport rep = induced_profile(G, subset);
        verify_bounds_or_throw(rep);
        if (rep.tau <= tau_max) hits.push_back(std::move(rep));
    };

    if (exhaustive) {
        std::vector<long> subset;
        auto recurse = [&](auto&& self, long next) -> void {
            if (!subset.empty()) evaluate(subset);
            if (static_cast<long>(subset.size()) == kappa_max) return;
            for (long v = next; v < G.n_points; ++v) {
                subset.push_back(v);
                self(self, v + 1);
                subset.pop_back();
            }
        };
        recurse(recurse, 0);
    } else {
        if (!options.allow_sampling)
            throw Error(ErrorCode::BudgetExceeded,
                        std::to_string(G.n_points) + " points with kappa_max " +
                            std::to_string(kappa_max) + " exceeds the enumeration budget");
        SplitMix64 rng(options.seed);
        for (long s = 0; s < options.samples; ++s) {
            const long size = 1 + static_cast<long>(rng.next() % static_cast<std::uint64_t>(kappa_max));
            std::vector<long> subset;
            while (static_cast<long>(subset.size()) < size) {
                const long v = static_cast<long>(rng.next() % static_cast<std::uint64_t>(G.n_points));
                if (std::find(subset.begin(), subset.end(), v) == subset.end()) subset.push_back(v);
            }
            evaluate(subset);
        }
    }
    return hits;
}

namespace {

std::string profile_string(const std::map<long, long>& profile) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, mi] : profile) {
        if (!first) out << ";";
        out << i << ":" << mi;
        first = false;
    }
    return out.str();
}

std::string set_string(const std::vector<long>& set) {
    std::ostringstream out;
    for (std::size_t i = 0; i < set.size(); ++i) out << (i ? ";" : "") << set[i];
    return out.str();
}

}  // namespace

void write_trapping_csv(const std::vector<TrappingReport>& reports, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");
    out << "kappa,tau,elementary,small,profile,general_bound,general_ok,theorem3_bound,"
           "theorem3_ok,theorem4_bound,theorem4_ok,set\n";
    for (const auto& r : reports) {
        out << r.kappa << "," << r.tau << "," << r.elementary << "," << r.small << ","
            << profile_string(r.profile) << "," << r.general_bound << "," << r.general_satisfied
            << "," << r.theorem3_bound << "," << r.theorem3_satisfied << ","
            << (r.theorem4_bound ? std::to_string(*r.theorem4_bound) : "") << ","
            << r.theorem4_satisfied << "," << set_string(r.delta_set) << "\n";
    }
    if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path);
}

std::string trapping_to_json(const std::vector<TrappingReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json j;
        j["set"] = r.delta_set;
        j["kappa"] = r.kappa;
        j["tau"] = r.tau;
        nlohmann::json prof = nlohmann::json::object();
        for (const auto& [i, mi] : r.profile) prof[std::to_string(i)] = mi;
        j["profile"] = prof;
        j["elementary"] = r.elementary;
        j["small"] = r.small;
        j["general_bound"] = r.general_bound;
        j["general_satisfied"] = r.general_satisfied;
        j["theorem3_bound"] = r.theorem3_bound;
        j["theorem3_satisfied"] = r.theorem3_satisfied;
        if (r.theorem4_bound) j["theorem4_bound"] = *r.theorem4_bound;
        j["theorem4_satisfied"] = r.theorem4_satisfied;
        arr.push_back(std::move(j));
    }
    nlohmann::json root;
    root["toolkit_version"] = kVersion;
    root["reports"] = std::move(arr);
    return root.dump(2);
}

}  // namespace qcpg
