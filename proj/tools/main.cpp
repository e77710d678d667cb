#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qcpg/base_matrix.hpp"
#include "qcpg/codec.hpp"
#include "qcpg/cycles.hpp"
#include "qcpg/errors.hpp"
#include "qcpg/geometry.hpp"
#include "qcpg/qc_matrix.hpp"
#include "qcpg/sim.hpp"
#include "qcpg/spectrum.hpp"
#include "qcpg/trapping.hpp"
#include "qcpg/version.hpp"

using json = nlohmann::json;

namespace {

// Index lists accept comma-separated entries and inclusive ranges: "1..6",
// "0,2,4", "1..3,7".
std::vector<long> parse_index_list(const std::string& spec) {
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        const std::string item = spec.substr(pos, comma - pos);
        const std::size_t dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stol(item));
        } else {
            const long lo = std::stol(item.substr(0, dots));
            const long hi = std::stol(item.substr(dots + 2));
            for (long v = lo; v <= hi; ++v) out.push_back(v);
        }
        pos = comma + 1;
    }
    return out;
}

int exit_code_for(const qcpg::Error& e) {
    using qcpg::ErrorCode;
    switch (e.code()) {
        case ErrorCode::RcViolation:
        case ErrorCode::AxiomViolation:
        case ErrorCode::DiagonalMismatch:
        case ErrorCode::TwosCountMismatch:
        case ErrorCode::EntryOutOfRange:
        case ErrorCode::WrongShape:
        case ErrorCode::ContainsZeroBlock:
        case ErrorCode::NotBlockStructured:
        case ErrorCode::NotBlockCertified:
        case ErrorCode::SpectrumMismatch:
        case ErrorCode::BoundViolation:
        case ErrorCode::NotRcConstrained:
        case ErrorCode::NotBiregular:
        case ErrorCode::NonIntegralMultiplicity:
            return 1;  // verification failure
        case ErrorCode::BudgetExceeded:
        case ErrorCode::TooLarge:
            return 3;
        default:
            return 2;  // unusable input or parameters
    }
}

struct MatrixInput {
    std::string path;
    std::string format = "auto";  // auto|alist|base|qc
    long block_order = 0;         // for alist inputs that should be folded into blocks

    std::string resolved_format() const {
        if (format != "auto") return format;
        if (path.size() >= 6 && path.substr(path.size() - 6) == ".alist") return "alist";
        if (path.size() >= 3 && path.substr(path.size() - 3) == ".qc") return "qc";
        return "base";
    }

    // Expanded binary matrix, whatever the source format.
    qcpg::BinaryMatrix load_binary() const {
        const std::string f = resolved_format();
        if (f == "alist") return qcpg::read_alist(path);
        if (f == "qc") return qcpg::read_qc(path).expand();
        return qcpg::disperse(qcpg::read_base(path)).expand();
    }

    // Block form. alist inputs need --t to recover the block structure.
    qcpg::QcBinaryMatrix load_qc() const {
        const std::string f = resolved_format();
        if (f == "qc") return qcpg::read_qc(path);
        if (f == "base") return qcpg::disperse(qcpg::read_base(path));
        if (block_order <= 0)
            throw qcpg::Error(qcpg::ErrorCode::ConfigInvalid,
                              "alist input needs --t to recover the block structure");
        return qcpg::qc_structure_check(qcpg::read_alist(path), block_order);
    }
};

void add_matrix_input(CLI::App* cmd, MatrixInput& input) {
    cmd->add_option("input", input.path, "matrix file (alist, base-matrix text, or qc text)")
        ->required();
    cmd->add_option("--format", input.format, "input format: auto|alist|base|qc")
        ->check(CLI::IsMember({"auto", "alist", "base", "qc"}));
    cmd->add_option("--t", input.block_order, "block order for alist inputs");
}

json run_config_json(const std::string& subcommand) {
    json j;
    j["toolkit_version"] = qcpg::kVersion;
    j["subcommand"] = subcommand;
    return j;
}

void print_human_or_json(bool as_json, const json& j, const std::string& human) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

// ---- construct ------------------------------------------------------------

struct ConstructArgs {
    std::string kind;
    std::vector<long> params;
    std::string rows_spec, cols_spec, mask_path;
    long random_rows = 0, random_cols = 0;
    std::uint64_t select_seed = 1;
    std::string out_base, out_alist, out_qc, out_dot;
    bool as_json = false;
};

int cmd_construct(const ConstructArgs& args) {
    qcpg::BaseMatrix base = [&] {
        if (args.kind == "prime") {
            if (args.params.size() != 1)
                throw qcpg::Error(qcpg::ErrorCode::ConfigInvalid, "construct prime needs <p>");
            return qcpg::build_prime_base(args.params[0]);
        }
        if (args.params.size() != 2)
            throw qcpg::Error(qcpg::ErrorCode::ConfigInvalid, "construct cyclic needs <q> <t>");
        return qcpg::build_cyclic_base(args.params[0], args.params[1]);
    }();

    if (!args.rows_spec.empty() || !args.cols_spec.empty()) {
        std::vector<long> rows, cols;
        if (args.rows_spec.empty())
            for (long i = 0; i < base.rows(); ++i) rows.push_back(i);
        else
            rows = parse_index_list(args.rows_spec);
        if (args.cols_spec.empty())
            for (long j = 0; j < base.cols(); ++j) cols.push_back(j);
        else
            cols = parse_index_list(args.cols_spec);
        base = qcpg::select_submatrix(base, rows, cols);
    } else if (args.random_rows > 0 || args.random_cols > 0) {
        const long k = args.random_rows > 0 ? args.random_rows : base.rows();
        const long r = args.random_cols > 0 ? args.random_cols : base.cols();
        base = qcpg::select_random_submatrix(base, k, r, args.select_seed);
    }
    if (!args.mask_path.empty()) base = qcpg::mask(base, qcpg::read_masking(args.mask_path));

    const qcpg::QcBinaryMatrix qc = qcpg::disperse(base);
    const qcpg::TannerGraph graph(qc);

    if (!args.out_base.empty()) qcpg::write_base(base, args.out_base);
    if (!args.out_qc.empty()) qcpg::write_qc(qc, args.out_qc);
    if (!args.out_alist.empty()) qcpg::write_alist(qc.expand(), args.out_alist);
    if (!args.out_dot.empty()) qcpg::write_protograph_dot(qcpg::make_protograph(base), args.out_dot);

    const auto [gamma, rho] = graph.biregular_degrees();
    json j = run_config_json("construct");
    j["kind"] = args.kind;
    j["params"] = args.params;
    j["block_rows"] = qc.block_rows();
    j["block_cols"] = qc.block_cols();
    j["block_order"] = qc.block_order();
    j["rows"] = qc.rows();
    j["cols"] = qc.cols();
    j["masked_blocks"] = qc.zero_block_count();
    j["column_weight"] = gamma;
    j["row_weight"] = rho;
    j["connected"] = graph.is_connected();
    // full square arrays of CPMs carry the geometry parameters directly
    if (qc.zero_block_count() == 0 && qc.block_order() == qc.block_rows()) {
        j["gamma"] = qc.block_rows();
        j["rho"] = qc.block_cols();
        j["delta"] = qc.block_cols() - 1;
        j["points"] = qc.cols();
        j["lines"] = qc.rows();
    }

    std::ostringstream human;
    human << "constructed " << qc.rows() << "x" << qc.cols() << " array (" << qc.block_rows()
          << "x" << qc.block_cols() << " blocks of order " << qc.block_order() << ")\n"
          << "column weight " << gamma << ", row weight " << rho << ", masked blocks "
          << qc.zero_block_count() << ", connected " << (graph.is_connected() ? "yes" : "no")
          << "\n";
    if (j.contains("gamma"))
        human << "geometry parameters: gamma " << j["gamma"] << ", rho " << j["rho"] << ", delta "
              << j["delta"] << ", points " << j["points"] << ", lines " << j["lines"] << "\n";
    print_human_or_json(args.as_json, j, human.str());
    return 0;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const MatrixInput& input, const std::string& mode, long delta, bool exhaustive,
               long sample_pairs, std::uint64_t seed, long max_points, bool as_json) {
    qcpg::GeometryDescriptor descriptor = [&] {
        if (mode == "definition") return qcpg::verify_definition(input.load_binary(), max_points);
        if (mode == "thm1") return qcpg::verify_theorem1(input.load_qc());
        qcpg::Theorem2Options options;
        options.exhaustive = exhaustive;
        options.sample_pairs = sample_pairs;
        options.seed = seed;
        if (delta <= 0)
            throw qcpg::Error(qcpg::ErrorCode::ConfigInvalid, "--delta is required for thm2");
        return qcpg::verify_theorem2(input.load_qc(), delta, options);
    }();

    json j = run_config_json("verify");
    j["mode"] = mode;
    j["descriptor"] = json::parse(qcpg::descriptor_to_json(descriptor, input.path));
    std::ostringstream human;
    human << "certified PaG(" << descriptor.gamma << ", " << descriptor.rho << ", "
          << descriptor.delta << ") with " << descriptor.n_points << " points and "
          << descriptor.m_lines << " lines via " << to_string(descriptor.certification) << "\n";
    print_human_or_json(as_json, j, human.str());
    return 0;
}

// ---- analyze ----------------------------------------------------------------

int cmd_analyze(const MatrixInput& input, const std::string& mode, long delta, double alpha,
                const std::string& out_dot, bool as_json) {
    qcpg::GeometryDescriptor descriptor = [&] {
        if (mode == "definition") return qcpg::verify_definition(input.load_binary());
        if (mode == "thm2") {
            if (delta <= 0)
                throw qcpg::Error(qcpg::ErrorCode::ConfigInvalid, "--delta is required for thm2");
            return qcpg::verify_theorem2(input.load_qc(), delta);
        }
        return qcpg::verify_theorem1(input.load_qc());
    }();

    const auto srg = qcpg::srg_spectrum(descriptor.gamma, descriptor.rho, descriptor.delta);
    const auto tanner = qcpg::tanner_spectrum(descriptor.gamma, descriptor.rho, descriptor.delta);
    const double ratio = qcpg::eigen_ratio(descriptor.gamma, descriptor.rho, descriptor.delta);
    const bool ramanujan = qcpg::is_ramanujan_biregular(
        static_cast<double>(descriptor.gamma), static_cast<double>(descriptor.rho), tanner.mu1);
    const double expansion =
        qcpg::expansion_lower_bound(static_cast<double>(descriptor.gamma),
                                    static_cast<double>(descriptor.rho), tanner.mu1, alpha);

    if (!out_dot.empty() && descriptor.block_certified()) {
        // protograph labeling straight from the block form
        qcpg::Protograph proto;
        proto.vn_count = descriptor.qc->block_cols();
        proto.cn_count = descriptor.qc->block_rows();
        proto.block_order = descriptor.qc->block_order();
        for (long a = 0; a < proto.cn_count; ++a)
            for (long b = 0; b < proto.vn_count; ++b)
                if (!descriptor.qc->is_zero_block(a, b))
                    proto.edges.push_back({b, a, descriptor.qc->shift(a, b)});
        qcpg::write_protograph_dot(proto, out_dot);
    }

    json j = run_config_json("analyze");
    j["descriptor"] = json::parse(qcpg::descriptor_to_json(descriptor, input.path));
    j["spectrum"] = json::parse(qcpg::spectrum_to_json(srg, tanner));
    j["eigen_ratio"] = ratio;
    j["ramanujan"] = ramanujan;
    j["expansion_alpha"] = alpha;
    j["expansion_lower_bound"] = expansion;
    if (descriptor.block_certified())
        j["parallel_bundles"] = qcpg::parallel_bundles(descriptor).size();

    std::ostringstream human;
    human << "PaG(" << descriptor.gamma << ", " << descriptor.rho << ", " << descriptor.delta
          << "): mu_max " << tanner.mu_max << ", mu1 " << tanner.mu1 << ", ratio " << ratio
          << ", ramanujan " << (ramanujan ? "yes" : "no") << "\n"
          << "expansion bound at alpha " << alpha << ": " << expansion << "\n";
    print_human_or_json(as_json, j, human.str());
    return 0;
}

// ---- cycles -----------------------------------------------------------------

int cmd_cycles(const MatrixInput& input, long length, bool as_json) {
    const qcpg::BinaryMatrix H = input.load_binary();
    const qcpg::TannerGraph graph(H);
    const int g = qcpg::girth(graph);

    json j = run_config_json("cycles");
    j["rows"] = H.rows();
    j["cols"] = H.cols();
    j["girth"] = g == qcpg::kInfiniteGirth ? json() : json(g);

    std::ostringstream human;
    if (g == qcpg::kInfiniteGirth)
        human << "girth: infinite (acyclic)\n";
    else
        human << "girth: " << g << "\n";
    if (length > 0) {
        const std::uint64_t count = qcpg::count_cycles(graph, static_cast<int>(length));
        j["length"] = length;
        j["count"] = count;
        human << "cycles of length " << length << ": " << count << "\n";
    }
    print_human_or_json(as_json, j, human.str());
    return 0;
}

// ---- spectrum ----------------------------------------------------------------

int cmd_spectrum(long gamma, long rho, long delta, const std::string& numeric_path,
                 const std::string& numeric_format, double tolerance, bool as_json) {
    const auto srg = qcpg::srg_spectrum(gamma, rho, delta);
    const auto tanner = qcpg::tanner_spectrum(gamma, rho, delta);

    json j = run_config_json("spectrum");
    j["gamma"] = gamma;
    j["rho"] = rho;
    j["delta"] = delta;
    j["spectrum"] = json::parse(qcpg::spectrum_to_json(srg, tanner));
    j["eigen_ratio"] = qcpg::eigen_ratio(gamma, rho, delta);
    j["ramanujan"] = qcpg::is_ramanujan_biregular(static_cast<double>(gamma),
                                                  static_cast<double>(rho), tanner.mu1);

    std::ostringstream human;
    human << "point-graph eigenvalues:";
    for (const auto& l : srg.eigenvalues)
        human << " " << l.value << " (x" << l.multiplicity << ")";
    human << "\nbipartite eigenvalues: +-" << tanner.mu_max << ", +-" << tanner.mu1 << ", 0\n";

    if (!numeric_path.empty()) {
        MatrixInput input;
        input.path = numeric_path;
        input.format = numeric_format;
        const auto check = qcpg::numeric_spectrum_check(input.load_binary(), gamma, rho, delta,
                                                        tolerance);
        j["numeric_check"] = {{"a1_residual", check.a1_residual},
                              {"tanner_residual", check.tanner_residual},
                              {"multiplicities_match", check.multiplicities_match}};
        human << "numeric residuals: A1 " << check.a1_residual << ", bipartite "
              << check.tanner_residual << "\n";
    }
    print_human_or_json(as_json, j, human.str());
    return 0;
}

// ---- trap ---------------------------------------------------------------------

int cmd_trap(const MatrixInput& input, const std::string& mode, long delta, long kappa_max,
             long tau_max, const std::string& classify_spec, long samples, std::uint64_t seed,
             const std::string& out_csv, bool as_json) {
    qcpg::GeometryDescriptor descriptor = [&] {
        if (mode == "definition") return qcpg::verify_definition(input.load_binary());
        if (mode == "thm2") {
            if (delta <= 0)
                throw qcpg::Error(qcpg::ErrorCode::ConfigInvalid, "--delta is required for thm2");
            return qcpg::verify_theorem2(input.load_qc(), delta);
        }
        return qcpg::verify_theorem1(input.load_qc());
    }();

    json j = run_config_json("trap");
    std::ostringstream human;

    if (!classify_spec.empty()) {
        const auto set = parse_index_list(classify_spec);
        const qcpg::ConfigurationReport rep = qcpg::classify_configuration(descriptor, set);
        j["classification"] = to_string(rep.tag);
        j["kappa"] = rep.computed.kappa;
        j["tau"] = rep.computed.tau;
        if (rep.claimed_tau) j["claimed_tau"] = *rep.claimed_tau;
        j["claim_matches"] = rep.claim_matches;
        human << "configuration: " << to_string(rep.tag) << ", kappa " << rep.computed.kappa
              << ", tau " << rep.computed.tau << "\n";
    } else {
        qcpg::SearchOptions options;
        options.samples = samples;
        options.seed = seed;
        const auto reports = qcpg::search_trapping_sets(descriptor, kappa_max, tau_max, options);
        if (!out_csv.empty()) qcpg::write_trapping_csv(reports, out_csv);
        j["reports"] = json::parse(qcpg::trapping_to_json(reports))["reports"];
        j["count"] = reports.size();
        human << reports.size() << " subsets with tau <= " << tau_max
              << "; no bound violations\n";
    }
    print_human_or_json(as_json, j, human.str());
    return 0;
}

// ---- rank ----------------------------------------------------------------------

int cmd_rank(const MatrixInput& input, bool as_json) {
    const qcpg::BinaryMatrix H = input.load_binary();
    const long rank = qcpg::gf2_rank(H);
    const long k = H.cols() - rank;

    json j = run_config_json("rank");
    j["rows"] = H.rows();
    j["cols"] = H.cols();
    j["rank"] = rank;
    j["dimension"] = k;
    j["rate"] = static_cast<double>(k) / static_cast<double>(H.cols());

    std::ostringstream human;
    human << H.rows() << "x" << H.cols() << " matrix: rank " << rank << ", code (" << H.cols()
          << ", " << k << "), rate " << static_cast<double>(k) / static_cast<double>(H.cols())
          << "\n";
    print_human_or_json(as_json, j, human.str());
    return 0;
}

// ---- simulate -------------------------------------------------------------------

struct SimulateArgs {
    MatrixInput input;
    std::string config_path;
    std::string out_csv = "sim.csv";
    std::string out_json;
    bool as_json = false;
    // flag overrides; negative/empty means "not set"
    std::vector<double> ebno;
    int max_iter = -1;
    std::string decoder;
    double attenuation = -1.0;
    long min_block_errors = -1;
    long long max_trials = -1;
    long long seed = -1;
    int workers = -1;
    int random_codewords = -1;
};

int cmd_simulate(const SimulateArgs& args) {
    qcpg::SimConfig config;
    if (!args.config_path.empty()) config = qcpg::parse_sim_config(args.config_path);
    if (!args.ebno.empty()) config.ebno_db = args.ebno;
    if (args.max_iter > 0) config.max_iterations = args.max_iter;
    if (!args.decoder.empty())
        config.decoder = args.decoder == "spa" ? qcpg::IterativeDecoder::Kind::SumProduct
                                               : qcpg::IterativeDecoder::Kind::MinSum;
    if (args.attenuation > 0) config.attenuation = args.attenuation;
    if (args.min_block_errors > 0) config.min_block_errors = args.min_block_errors;
    if (args.max_trials > 0) config.max_trials = args.max_trials;
    if (args.seed >= 0) config.seed = static_cast<std::uint64_t>(args.seed);
    if (args.workers > 0) config.workers = args.workers;
    if (args.random_codewords >= 0) config.random_codewords = args.random_codewords != 0;

    const qcpg::LinearCode code = qcpg::systematic_form(args.input.load_binary());
    const qcpg::SimResult result = qcpg::run_monte_carlo(code, config);
    qcpg::emit_csv(result, args.out_csv);
    if (!args.out_json.empty()) {
        std::ofstream out(args.out_json);
        out << qcpg::sim_to_json(result) << "\n";
    }

    // resolved configuration and version always land on stdout
    json j = json::parse(qcpg::sim_to_json(result));
    j["subcommand"] = "simulate";
    j["csv"] = args.out_csv;
    if (args.as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "wrote " << args.out_csv << " (" << result.points.size() << " SNR points, n "
                  << code.n() << ", rate " << code.rate() << ", seed " << config.seed
                  << ", workers " << config.workers << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-cyclic partial geometry toolkit"};
    app.set_version_flag("--version", qcpg::kVersion);
    app.require_subcommand(1);

    // construct
    ConstructArgs cons;
    auto* construct = app.add_subcommand("construct", "build base matrices and their dispersions");
    construct->add_option("kind", cons.kind, "prime|cyclic")
        ->required()
        ->check(CLI::IsMember({"prime", "cyclic"}));
    construct->add_option("params", cons.params, "prime: <p>; cyclic: <q> <t>")->required();
    construct->add_option("--rows", cons.rows_spec, "row selection, e.g. 1..6 or 1,118,56,79");
    construct->add_option("--cols", cons.cols_spec, "column selection");
    construct->add_option("--random-rows", cons.random_rows, "pick this many rows at random");
    construct->add_option("--random-cols", cons.random_cols, "pick this many columns at random");
    construct->add_option("--select-seed", cons.select_seed, "seed for random selection");
    construct->add_option("--mask", cons.mask_path, "masking matrix file (k r header, 0/1 grid)");
    construct->add_option("--out-base", cons.out_base, "write the base matrix text file");
    construct->add_option("--out-alist", cons.out_alist, "write the expanded alist");
    construct->add_option("--out-qc", cons.out_qc, "write the block text form");
    construct->add_option("--dot", cons.out_dot, "write the protograph in DOT format");
    construct->add_flag("--json", cons.as_json, "machine-readable output");

    // verify
    MatrixInput verify_input;
    std::string verify_mode = "definition";
    long verify_delta = 0, verify_sample = 64, verify_max_points = 10000;
    std::uint64_t verify_seed = 1;
    bool verify_exhaustive = false, verify_json = false;
    auto* verify = app.add_subcommand("verify", "certify a matrix as a partial geometry");
    add_matrix_input(verify, verify_input);
    verify->add_option("--mode", verify_mode, "thm1|thm2|definition")
        ->check(CLI::IsMember({"thm1", "thm2", "definition"}));
    verify->add_option("--delta", verify_delta, "expected connection number (thm2)");
    verify->add_flag("--exhaustive", verify_exhaustive, "sweep every perturbation pair (thm2)");
    verify->add_option("--sample", verify_sample, "sampled perturbation pairs in fast mode");
    verify->add_option("--seed", verify_seed, "sampling seed");
    verify->add_option("--max-points", verify_max_points, "definition-check size cap");
    verify->add_flag("--json", verify_json, "machine-readable output");

    // analyze
    MatrixInput analyze_input;
    std::string analyze_mode = "thm1", analyze_dot;
    long analyze_delta = 0;
    double analyze_alpha = 0.5;
    bool analyze_json = false;
    auto* analyze = app.add_subcommand("analyze", "geometry parameters, spectra and expansion");
    add_matrix_input(analyze, analyze_input);
    analyze->add_option("--mode", analyze_mode, "thm1|thm2|definition")
        ->check(CLI::IsMember({"thm1", "thm2", "definition"}));
    analyze->add_option("--delta", analyze_delta, "expected connection number (thm2)");
    analyze->add_option("--alpha", analyze_alpha, "expansion fraction alpha in (0,1)");
    analyze->add_option("--dot", analyze_dot, "write the protograph in DOT format");
    analyze->add_flag("--json", analyze_json, "machine-readable output");

    // cycles
    MatrixInput cycles_input;
    long cycles_length = 0;
    bool cycles_json = false;
    auto* cycles = app.add_subcommand("cycles", "girth and exact short-cycle counts");
    add_matrix_input(cycles, cycles_input);
    cycles->add_option("--length", cycles_length, "cycle length to count (4, 6, 8 or 10)");
    cycles->add_flag("--json", cycles_json, "machine-readable output");

    // spectrum
    long spec_gamma = 0, spec_rho = 0, spec_delta = 0;
    std::string spec_numeric, spec_numeric_format = "auto";
    double spec_tolerance = 1e-9;
    bool spec_json = false;
    auto* spectrum = app.add_subcommand("spectrum", "closed-form spectra and numeric checks");
    spectrum->add_option("--gamma", spec_gamma, "lines per point")->required();
    spectrum->add_option("--rho", spec_rho, "points per line")->required();
    spectrum->add_option("--delta", spec_delta, "connection number")->required();
    spectrum->add_option("--numeric", spec_numeric, "matrix to eigensolve against the closed form");
    spectrum->add_option("--numeric-format", spec_numeric_format, "auto|alist|base|qc");
    spectrum->add_option("--tolerance", spec_tolerance, "numeric comparison tolerance");
    spectrum->add_flag("--json", spec_json, "machine-readable output");

    // trap
    MatrixInput trap_input;
    std::string trap_mode = "thm1", trap_classify, trap_csv;
    long trap_delta = 0, trap_kappa = 3, trap_tau = 1000, trap_samples = 20000;
    std::uint64_t trap_seed = 1;
    bool trap_json = false;
    auto* trap = app.add_subcommand("trap", "trapping-set search and classification");
    add_matrix_input(trap, trap_input);
    trap->add_option("--mode", trap_mode, "thm1|thm2|definition")
        ->check(CLI::IsMember({"thm1", "thm2", "definition"}));
    trap->add_option("--delta", trap_delta, "expected connection number (thm2)");
    trap->add_option("--kappa-max", trap_kappa, "largest subset size");
    trap->add_option("--tau-max", trap_tau, "keep subsets with tau at most this");
    trap->add_option("--classify", trap_classify, "classify one point set, e.g. 0,3,6");
    trap->add_option("--samples", trap_samples, "sample count beyond the exhaustive budget");
    trap->add_option("--seed", trap_seed, "sampling seed");
    trap->add_option("--csv", trap_csv, "write reports as CSV");
    trap->add_flag("--json", trap_json, "machine-readable output");

    // rank
    MatrixInput rank_input;
    bool rank_json = false;
    auto* rank = app.add_subcommand("rank", "GF(2) rank and code dimensions");
    add_matrix_input(rank, rank_input);
    rank->add_flag("--json", rank_json, "machine-readable output");

    // simulate
    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo BER/BLER estimation");
    simulate->add_option("input", sim.input.path, "parity-check matrix")->required();
    simulate->add_option("--format", sim.input.format, "auto|alist|base|qc");
    simulate->add_option("--config", sim.config_path, "key = value config file");
    simulate->add_option("--out", sim.out_csv, "CSV output path");
    simulate->add_option("--json-out", sim.out_json, "also dump the result as JSON");
    simulate->add_option("--ebno", sim.ebno, "Eb/N0 grid in dB");
    simulate->add_option("--max-iter", sim.max_iter, "decoder iterations");
    simulate->add_option("--decoder", sim.decoder, "msa|spa")
        ->check(CLI::IsMember({"", "msa", "spa"}));
    simulate->add_option("--attenuation", sim.attenuation, "min-sum scaling factor");
    simulate->add_option("--min-block-errors", sim.min_block_errors, "stop rule per SNR point");
    simulate->add_option("--max-trials", sim.max_trials, "trial cap per SNR point");
    simulate->add_option("--seed", sim.seed, "master seed");
    simulate->add_option("--workers", sim.workers, "worker threads");
    simulate->add_option("--random-codewords", sim.random_codewords,
                         "1: encode random messages, 0: all-zero transmission");
    simulate->add_flag("--json", sim.as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
        if (*construct) return cmd_construct(cons);
        if (*verify)
            return cmd_verify(verify_input, verify_mode, verify_delta, verify_exhaustive,
                              verify_sample, verify_seed, verify_max_points, verify_json);
        if (*analyze)
            return cmd_analyze(analyze_input, analyze_mode, analyze_delta, analyze_alpha,
                               analyze_dot, analyze_json);
        if (*cycles) return cmd_cycles(cycles_input, cycles_length, cycles_json);
        if (*spectrum)
            return cmd_spectrum(spec_gamma, spec_rho, spec_delta, spec_numeric,
                                spec_numeric_format, spec_tolerance, spec_json);
        if (*trap)
            return cmd_trap(trap_input, trap_mode, trap_delta, trap_kappa, trap_tau, trap_classify,
                            trap_samples, trap_seed, trap_csv, trap_json);
        if (*rank) return cmd_rank(rank_input, rank_json);
        if (*simulate) return cmd_simulate(sim);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const qcpg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
