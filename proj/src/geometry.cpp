#include "qcpg/geometry.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qcpg/errors.hpp"
#include "qcpg/rng.hpp"
#include "qcpg/version.hpp"

namespace qcpg {

const char* to_string(Certification cert) {
    switch (cert) {
        case Certification::Theorem1: return "theorem1";
        case Certification::Theorem2: return "theorem2";
        case Certification::DefinitionCheck: return "definition";
    }
    return "?";
}

std::pair<long, long> geometry_params(long gamma, long rho, long delta) {
    if (gamma < 2 || rho < 2 || delta < 1)
        throw Error(ErrorCode::NonIntegral, "need gamma,rho >= 2 and delta >= 1");
    const long long core = static_cast<long long>(rho - 1) * (gamma - 1) + delta;
    if ((static_cast<long long>(rho) * core) % delta != 0 ||
        (static_cast<long long>(gamma) * core) % delta != 0)
        throw Error(ErrorCode::NonIntegral, "parameter triple admits no geometry");
    return {static_cast<long>(rho * core / delta), static_cast<long>(gamma * core / delta)};
}

RcCheckResult rc_constraint_check(const BinaryMatrix& H) {
    const long m = H.rows();
    const long words = H.words_per_row();
    for (long a = 0; a < m; ++a) {
        const std::uint64_t* ra = H.row_ptr(a);
        for (long b = a + 1; b < m; ++b) {
            const std::uint64_t* rb = H.row_ptr(b);
            long shared = 0;
            for (long w = 0; w < words; ++w) shared += std::popcount(ra[w] & rb[w]);
            if (shared > 1) {
                RcCheckResult res;
                res.ok = false;
                res.row_a = a;
                res.row_b = b;
                for (long w = 0; w < words && res.pos2 < 0; ++w) {
                    std::uint64_t x = ra[w] & rb[w];
                    while (x) {
                        const long p = w * 64 + std::countr_zero(x);
                        x &= x - 1;
                        if (res.pos1 < 0)
                            res.pos1 = p;
                        else {
                            res.pos2 = p;
                            break;
                        }
                    }
                }
                return res;
            }
        }
    }
    return {};
}

RcCheckResult rc_constraint_check(const QcBinaryMatrix& H) {
    const long k = H.block_rows(), r = H.block_cols(), t = H.block_order();
    std::vector<std::int32_t> first_col(t);  // first block-column producing each difference
    for (long a = 0; a < k; ++a) {
        for (long b = a + 1; b < k; ++b) {
            std::fill(first_col.begin(), first_col.end(), -1);
            for (long c = 0; c < r; ++c) {
                if (H.is_zero_block(a, c) || H.is_zero_block(b, c)) continue;
                const long d = ((H.shift(a, c) - H.shift(b, c)) % t + t) % t;
                if (first_col[d] < 0) {
                    first_col[d] = static_cast<std::int32_t>(c);
                    continue;
                }
                // Columns first_col[d] and c collide: rows (a,0) and (b,d)
                // share a 1 in both block-columns.
                RcCheckResult res;
                res.ok = false;
                res.row_a = a * t;
                res.row_b = b * t + d;
                const long c0 = first_col[d];
                res.pos1 = c0 * t + H.shift(a, c0) % t;
                res.pos2 = c * t + H.shift(a, c) % t;
                return res;
            }
        }
    }
    return {};
}

namespace {

GeometryDescriptor make_descriptor(long gamma, long rho, long delta, Certification cert,
                                   std::shared_ptr<const QcBinaryMatrix> qc,
                                   std::shared_ptr<const TannerGraph> graph) {
    const auto [n, m] = geometry_params(gamma, rho, delta);
    GeometryDescriptor G;
    G.gamma = gamma;
    G.rho = rho;
    G.delta = delta;
    G.n_points = n;
    G.m_lines = m;
    G.certification = cert;
    G.qc = std::move(qc);
    G.graph = std::move(graph);
    if (G.graph->vn_count() != n || G.graph->cn_count() != m)
        throw Error(ErrorCode::AxiomViolation,
                    "certified parameters disagree with matrix dimensions");
    return G;
}

}  // namespace

GeometryDescriptor verify_theorem1(const QcBinaryMatrix& H) {
    if (H.block_order() != H.block_rows())
        throw Error(ErrorCode::WrongShape,
                    "need a t x r array of order-t CPMs, got " + std::to_string(H.block_rows()) +
                        " block rows of order " + std::to_string(H.block_order()));
    if (H.block_rows() < 2 || H.block_cols() < 2)
        throw Error(ErrorCode::WrongShape, "need at least 2 block rows and columns");
    if (H.zero_block_count() > 0)
        throw Error(ErrorCode::ContainsZeroBlock,
                    std::to_string(H.zero_block_count()) + " zero block(s) present");
    const RcCheckResult rc = rc_constraint_check(H);
    if (!rc.ok)
        throw Error(ErrorCode::RcViolation,
                    "rows " + std::to_string(rc.row_a) + " and " + std::to_string(rc.row_b) +
                        " share positions " + std::to_string(rc.pos1) + "," +
                        std::to_string(rc.pos2));

    auto qc = std::make_shared<const QcBinaryMatrix>(H);
    auto graph = std::make_shared<const TannerGraph>(H);
    return make_descriptor(H.block_rows(), H.block_cols(), H.block_cols() - 1,
                           Certification::Theorem1, std::move(qc), std::move(graph));
}

GeometryDescriptor verify_theorem2(const QcBinaryMatrix& H, long delta,
                                   const Theorem2Options& options) {
    const long k = H.block_rows(), r = H.block_cols(), t = H.block_order();
    if (k < 2 || r < 2 || delta < 1)
        throw Error(ErrorCode::WrongShape, "need k,r >= 2 and delta >= 1");
    if (H.zero_block_count() > 0)
        throw Error(ErrorCode::ContainsZeroBlock,
                    "zero blocks are outside the scope of this certification");

    // Unperturbed product H H^T in the shift domain: block (a,b) is the sum of
    // r CPMs with exponents d_c = shift(a,c) - shift(b,c) mod t. Histograms of
    // those exponents are all that the row conditions need; the (i,j)
    // perturbation just adds one more exponent d_i + j.
    std::vector<std::vector<std::uint8_t>> hist(static_cast<std::size_t>(k) * k);
    std::vector<long> permanent_twos(k, 0);  // per block-row, from multiplicity-2 bins
    for (long a = 0; a < k; ++a) {
        for (long b = 0; b < k; ++b) {
            if (a == b) continue;  // diagonal blocks carry exponent 0 with multiplicity r
            auto& h = hist[a * k + b];
            h.assign(t, 0);
            for (long c = 0; c < r; ++c) {
                const long d = ((H.shift(a, c) - H.shift(b, c)) % t + t) % t;
                if (h[d] == 2)
                    throw Error(ErrorCode::EntryOutOfRange,
                                "blocks (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") hold an entry >= 3");
                if (++h[d] == 2) ++permanent_twos[a];
            }
        }
    }
    // Diagonal entries equal the row weight r; the certified geometry needs
    // them to equal rho = r, which holds by construction.
    const long rho = r;
    const long gamma = k;

    std::vector<std::pair<long, long>> pairs;  // (block-column i, shift j), j >= 1
    if (options.exhaustive || static_cast<long long>(r) * (t - 1) <= options.sample_pairs) {
        for (long i = 0; i < r; ++i)
            for (long j = 1; j < t; ++j) pairs.emplace_back(i, j);
    } else {
        SplitMix64 rng(options.seed);
        std::vector<char> chosen(static_cast<std::size_t>(r) * t, 0);
        while (static_cast<long>(pairs.size()) < options.sample_pairs) {
            const long i = static_cast<long>(rng.next() % static_cast<std::uint64_t>(r));
            const long j = 1 + static_cast<long>(rng.next() % static_cast<std::uint64_t>(t - 1));
            if (chosen[i * t + j]) continue;
            chosen[i * t + j] = 1;
            pairs.emplace_back(i, j);
        }
        std::sort(pairs.begin(), pairs.end());  // first failure is (i,j)-lexicographic
    }

    for (const auto& [i, j] : pairs) {
        for (long a = 0; a < k; ++a) {
            long twos = permanent_twos[a];
            for (long b = 0; b < k; ++b) {
                if (a == b) continue;
                const long d = ((H.shift(a, i) - H.shift(b, i)) % t + t) % t;
                const long e = (d + j) % t;
                const std::uint8_t mult = hist[a * k + b][e];
                if (mult == 2)
                    throw Error(ErrorCode::EntryOutOfRange,
                                "perturbation (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") raises an entry of blocks (" + std::to_string(a) + "," +
                                    std::to_string(b) + ") to 3");
                twos += mult;  // a bin of multiplicity 1 becomes a 2
            }
            if (twos != delta)
                throw Error(ErrorCode::TwosCountMismatch,
                            "block-row " + std::to_string(a) + " at perturbation (" +
                                std::to_string(i) + "," + std::to_string(j) + "): found " +
                                std::to_string(twos) + " twos, expected " + std::to_string(delta));
        }
    }

    auto qc = std::make_shared<const QcBinaryMatrix>(H);
    auto graph = std::make_shared<const TannerGraph>(H);
    return make_descriptor(gamma, rho, delta, Certification::Theorem2, std::move(qc),
                           std::move(graph));
}

GeometryDescriptor verify_definition(const BinaryMatrix& H, long max_points) {
    const long m = H.rows(), n = H.cols();
    if (n > max_points)
        throw Error(ErrorCode::TooLarge, std::to_string(n) + " points exceeds the cap of " +
                                             std::to_string(max_points));

    // Axioms 2 and 3: biregularity.
    const long gamma = H.col_weight(0);
    for (long j = 1; j < n; ++j)
        if (H.col_weight(j) != gamma)
            throw Error(ErrorCode::AxiomViolation,
                        "axiom 2: point " + std::to_string(j) + " lies on " +
                            std::to_string(H.col_weight(j)) + " lines, point 0 on " +
                            std::to_string(gamma));
    const long rho = H.row_weight(0);
    for (long i = 1; i < m; ++i)
        if (H.row_weight(i) != rho)
            throw Error(ErrorCode::AxiomViolation,
                        "axiom 3: line " + std::to_string(i) + " has " +
                            std::to_string(H.row_weight(i)) + " points, line 0 has " +
                            std::to_string(rho));
    if (gamma < 2 || rho < 2)
        throw Error(ErrorCode::AxiomViolation, "degenerate degrees (need gamma,rho >= 2)");

    // Axiom 1: any two points on at most one common line (equivalently no
    // 2x2 all-ones submatrix, checked over row pairs).
    const RcCheckResult rc = rc_constraint_check(H);
    if (!rc.ok)
        throw Error(ErrorCode::AxiomViolation,
                    "axiom 1: lines " + std::to_string(rc.row_a) + " and " +
                        std::to_string(rc.row_b) + " share two points");

    auto graph = std::make_shared<const TannerGraph>(H);

    // Axiom 4: constant connection count over all non-incident (point, line)
    // pairs. Two lines meet in at most one point here, so the count is the
    // number of lines through v that intersect L.
    long delta = -1;
    for (long i = 0; i < m; ++i) {
        const std::uint64_t* line = H.row_ptr(i);
        for (long v = 0; v < n; ++v) {
            if (H.get(i, v)) continue;
            long count = 0;
            for (long l : graph->vn_neighbors(v)) {
                const std::uint64_t* other = H.row_ptr(l);
                bool meets = false;
                for (long w = 0; w < H.words_per_row() && !meets; ++w)
                    meets = (line[w] & other[w]) != 0;
                count += meets;
            }
            if (delta < 0) {
                delta = count;
            } else if (count != delta) {
                throw Error(ErrorCode::AxiomViolation,
                            "axiom 4: point " + std::to_string(v) + " off line " +
                                std::to_string(i) + " joined by " + std::to_string(count) +
                                " lines, expected " + std::to_string(delta));
            }
        }
    }
    if (delta < 1)
        throw Error(ErrorCode::AxiomViolation, "axiom 4: connection number is zero");

    return make_descriptor(gamma, rho, delta, Certification::DefinitionCheck, nullptr,
                           std::move(graph));
}

std::vector<Bundle> parallel_bundles(const GeometryDescriptor& G) {
    if (!G.block_certified())
        throw Error(ErrorCode::NotBlockCertified, "parallel bundles need the block structure");
    const long t = G.qc->block_order();
    std::vector<Bundle> bundles;
    for (long a = 0; a < G.qc->block_rows(); ++a) {
        Bundle bundle;
        bundle.kind = Bundle::Kind::Parallel;
        std::vector<char> covered(G.n_points, 0);
        long covered_count = 0;
        for (long u = 0; u < t; ++u) {
            const long line = a * t + u;
            bundle.lines.push_back(line);
            for (long v : G.line_points(line)) {
                if (covered[v])
                    throw Error(ErrorCode::AxiomViolation,
                                "block-row " + std::to_string(a) + " lines are not parallel");
                covered[v] = 1;
                ++covered_count;
            }
        }
        if (covered_count != G.n_points)
            throw Error(ErrorCode::AxiomViolation,
                        "block-row " + std::to_string(a) + " lines do not cover the points");
        bundles.push_back(std::move(bundle));
    }
    return bundles;
}

Bundle intersecting_bundle(const GeometryDescriptor& G, long point) {
    if (point < 0 || point >= G.n_points)
        throw Error(ErrorCode::IndexOutOfRange, "point " + std::to_string(point));
    Bundle bundle;
    bundle.kind = Bundle::Kind::Intersecting;
    bundle.anchor = point;
    bundle.lines = G.point_lines(point);
    return bundle;
}

GeometryDescriptor extract_subgeometry(const GeometryDescriptor& G,
                                       const std::vector<long>& drop_block_cols) {
    if (!G.block_certified())
        throw Error(ErrorCode::NotBlockCertified, "subgeometry extraction needs the block form");
    if (drop_block_cols.empty()) return G;

    const long r = G.qc->block_cols();
    std::vector<char> drop(r, 0);
    for (long b : drop_block_cols) {
        if (b < 0 || b >= r) throw Error(ErrorCode::IndexOutOfRange, "block-column " + std::to_string(b));
        if (drop[b]) throw Error(ErrorCode::DuplicateIndex, "block-column " + std::to_string(b));
        drop[b] = 1;
    }
    const long tau = static_cast<long>(drop_block_cols.size());
    if (r - tau < 2)
        throw Error(ErrorCode::TooManyDropped, "dropping " + std::to_string(tau) + " of " +
                                                   std::to_string(r) + " block-columns");

    QcBinaryMatrix sub(G.qc->block_rows(), r - tau, G.qc->block_order());
    long out = 0;
    for (long b = 0; b < r; ++b) {
        if (drop[b]) continue;
        for (long a = 0; a < G.qc->block_rows(); ++a) {
            if (G.qc->is_zero_block(a, b))
                sub.set_zero_block(a, out);
            else
                sub.set_shift(a, out, G.qc->shift(a, b));
        }
        ++out;
    }
    return verify_theorem1(sub);
}

Protograph make_protograph(const BaseMatrix& B) {
    Protograph P;
    P.vn_count = B.cols();
    P.cn_count = B.rows();
    P.block_order = B.modulus();
    for (long i = 0; i < B.rows(); ++i)
        for (long j = 0; j < B.cols(); ++j)
            if (!B.is_masked(i, j)) P.edges.push_back({j, i, B.residue(i, j)});
    return P;
}

void write_protograph_dot(const Protograph& P, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");
    out << "graph protograph {\n";
    for (long j = 0; j < P.vn_count; ++j) out << "  phi" << j << " [shape=circle];\n";
    for (long i = 0; i < P.cn_count; ++i) out << "  omega" << i << " [shape=box];\n";
    for (const auto& e : P.edges)
        out << "  phi" << e.vn << " -- omega" << e.cn << " [label=\"(" << e.label << ")\"];\n";
    out << "}\n";
}

std::string descriptor_to_json(const GeometryDescriptor& G, const std::string& source) {
    nlohmann::json j;
    j["toolkit_version"] = kVersion;
    j["gamma"] = G.gamma;
    j["rho"] = G.rho;
    j["delta"] = G.delta;
    j["points"] = G.n_points;
    j["lines"] = G.m_lines;
    j["certification"] = to_string(G.certification);
    j["net"] = G.is_net();
    if (G.block_certified()) {
        j["block_rows"] = G.qc->block_rows();
        j["block_cols"] = G.qc->block_cols();
        j["block_order"] = G.qc->block_order();
    }
    if (!source.empty()) j["source"] = source;
    return j.dump(2);
}

}  // namespace qcpg
