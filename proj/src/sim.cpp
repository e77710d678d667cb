#include "qcpg/sim.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "qcpg/errors.hpp"
#include "qcpg/tanner_graph.hpp"
#include "qcpg/version.hpp"

namespace qcpg {

void SimConfig::validate() const {
    if (ebno_db.empty()) throw Error(ErrorCode::ConfigInvalid, "empty Eb/N0 grid");
    for (std::size_t i = 1; i < ebno_db.size(); ++i)
        if (!(ebno_db[i] > ebno_db[i - 1]))
            throw Error(ErrorCode::ConfigInvalid, "Eb/N0 grid must be strictly increasing");
    for (double e : ebno_db)
        if (!std::isfinite(e)) throw Error(ErrorCode::ConfigInvalid, "non-finite Eb/N0");
    if (max_iterations < 1) throw Error(ErrorCode::ConfigInvalid, "max_iterations must be >= 1");
    if (min_block_errors < 1)
        throw Error(ErrorCode::ConfigInvalid, "min_block_errors must be >= 1");
    if (max_trials < 1) throw Error(ErrorCode::ConfigInvalid, "max_trials must be >= 1");
    if (workers < 1) throw Error(ErrorCode::ConfigInvalid, "workers must be >= 1");
    if (!(attenuation > 0.0 && attenuation <= 1.0))
        throw Error(ErrorCode::ConfigInvalid, "attenuation must lie in (0,1]");
}

std::vector<double> awgn_bpsk_llr(std::span<const std::uint8_t> codeword, double ebno_db,
                                  double rate, TrialRng& rng) {
    if (!(rate > 0.0 && rate <= 1.0))
        throw Error(ErrorCode::InvalidRate, "rate " + std::to_string(rate));
    if (!std::isfinite(ebno_db)) throw Error(ErrorCode::ConfigInvalid, "non-finite Eb/N0");
    const double ebno = std::pow(10.0, ebno_db / 10.0);
    const double sigma2 = 1.0 / (2.0 * rate * ebno);
    const double sigma = std::sqrt(sigma2);
    const double scale = 2.0 / sigma2;
    std::vector<double> llr(codeword.size());
    for (std::size_t j = 0; j < codeword.size(); ++j) {
        const double x = codeword[j] ? -1.0 : 1.0;
        llr[j] = scale * (x + sigma * rng.next_gaussian());
    }
    return llr;
}

namespace {

struct TrialResult {
    long long bit_errors = 0;
    bool block_error = false;
    int iterations = 0;
};

TrialResult run_trial(const LinearCode& code, const SimConfig& config, double ebno_db,
                      IterativeDecoder& decoder, std::uint64_t trial) {
    TrialRng rng(config.seed, trial);
    std::vector<std::uint8_t> codeword;
    if (config.random_codewords) {
        std::vector<std::uint8_t> message(code.dimension);
        for (auto& b : message) b = static_cast<std::uint8_t>(rng.next_u64() & 1u);
        codeword = encode(code, message);
    } else {
        codeword.assign(code.n(), 0);
    }
    const auto llr = awgn_bpsk_llr(codeword, ebno_db, code.rate(), rng);
    const DecodeOutcome outcome = decoder.decode(llr);

    TrialResult res;
    res.iterations = outcome.iterations;
    for (long j = 0; j < code.n(); ++j) res.bit_errors += outcome.word[j] != codeword[j];
    res.block_error = res.bit_errors > 0;
    return res;
}

}  // namespace

SimResult run_monte_carlo(const LinearCode& code, const SimConfig& config) {
    config.validate();
    if (code.dimension < 1) throw Error(ErrorCode::ConfigInvalid, "code has dimension 0");

    SimResult result;
    result.config = config;
    result.rate = code.rate();
    result.code_n = code.n();

    const TannerGraph graph(code.H);
    DecoderOptions dec_options;
    dec_options.max_iterations = config.max_iterations;
    dec_options.attenuation = config.attenuation;

    // Trials are committed in fixed chunks: the stopping rule is evaluated
    // only on completed chunks, so the set of trials run is independent of
    // the worker count and of scheduling.
    constexpr long long kChunk = 1024;

    for (double ebno : config.ebno_db) {
        const auto t0 = std::chrono::steady_clock::now();
        SnrPoint point;
        point.ebno_db = ebno;

        std::atomic<long long> bit_errors{0}, block_errors{0}, iter_sum{0};
        long long done = 0;
        while (done < config.max_trials) {
            const long long chunk_end = std::min(done + kChunk, config.max_trials);
            const long long chunk_begin = done;
            std::atomic<long long> next{chunk_begin};

            auto worker = [&]() {
                IterativeDecoder decoder(graph, config.decoder, dec_options);
                long long local_bits = 0, local_blocks = 0, local_iters = 0;
                for (;;) {
                    const long long trial = next.fetch_add(1);
                    if (trial >= chunk_end) break;
                    const TrialResult r = run_trial(code, config, ebno, decoder,
                                                    static_cast<std::uint64_t>(trial));
                    local_bits += r.bit_errors;
                    local_blocks += r.block_error;
                    local_iters += r.iterations;
                }
                bit_errors += local_bits;
                block_errors += local_blocks;
                iter_sum += local_iters;
            };

            if (config.workers == 1) {
                worker();
            } else {
                std::vector<std::thread> pool;
                for (int w = 0; w < config.workers; ++w) pool.emplace_back(worker);
                for (auto& th : pool) th.join();
            }
            done = chunk_end;
            if (block_errors.load() >= config.min_block_errors) break;
        }

        point.trials = done;
        point.bit_errors = bit_errors.load();
        point.block_errors = block_errors.load();
        point.ber = static_cast<double>(point.bit_errors) /
                    (static_cast<double>(point.trials) * static_cast<double>(code.n()));
        point.bler = static_cast<double>(point.block_errors) / static_cast<double>(point.trials);
        point.mean_iterations =
            static_cast<double>(iter_sum.load()) / static_cast<double>(point.trials);
        point.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        result.points.push_back(point);
    }
    return result;
}

std::string sim_csv_string(const SimResult& result) {
    std::ostringstream out;
    out << "ebno_db,trials,bit_errors,block_errors,ber,bler,mean_iters\n";
    char buf[256];
    for (const auto& p : result.points) {
        std::snprintf(buf, sizeof buf, "%.10g,%lld,%lld,%lld,%.10g,%.10g,%.10g\n", p.ebno_db,
                      p.trials, p.bit_errors, p.block_errors, p.ber, p.bler, p.mean_iterations);
        out << buf;
    }
    return out.str();
}

void emit_csv(const SimResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");
    out << sim_csv_string(result);
    if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path);
}

std::string sim_to_json(const SimResult& result) {
    nlohmann::json j;
    j["toolkit_version"] = kVersion;
    j["config"] = {
        {"ebno_db", result.config.ebno_db},
        {"max_iter", result.config.max_iterations},
        {"decoder", result.config.decoder == IterativeDecoder::Kind::MinSum ? "msa" : "spa"},
        {"attenuation", result.config.attenuation},
        {"min_block_errors", result.config.min_block_errors},
        {"max_trials", result.config.max_trials},
        {"seed", result.config.seed},
        {"workers", result.config.workers},
        {"random_codewords", result.config.random_codewords},
    };
    j["rate"] = result.rate;
    j["n"] = result.code_n;
    for (const auto& p : result.points) {
        j["points"].push_back({{"ebno_db", p.ebno_db},
                               {"trials", p.trials},
                               {"bit_errors", p.bit_errors},
                               {"block_errors", p.block_errors},
                               {"ber", p.ber},
                               {"bler", p.bler},
                               {"mean_iters", p.mean_iterations},
                               {"wall_seconds", p.wall_seconds}});
    }
    return j.dump(2);
}

SimConfig parse_sim_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);
    SimConfig config;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw Error(ErrorCode::ConfigInvalid,
                            path + ":" + std::to_string(lineno) + ": expected key = value");
            continue;
        }
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "ebno_db") {
                std::istringstream vs(value);
                double x;
                config.ebno_db.clear();
                while (vs >> x) config.ebno_db.push_back(x);
            } else if (key == "max_iter") {
                config.max_iterations = std::stoi(value);
            } else if (key == "decoder") {
                if (value == "msa")
                    config.decoder = IterativeDecoder::Kind::MinSum;
                else if (value == "spa")
                    config.decoder = IterativeDecoder::Kind::SumProduct;
                else
                    throw Error(ErrorCode::ConfigInvalid, "decoder must be msa or spa");
            } else if (key == "attenuation") {
                config.attenuation = std::stod(value);
            } else if (key == "min_block_errors") {
                config.min_block_errors = std::stol(value);
            } else if (key == "max_trials") {
                config.max_trials = std::stoll(value);
            } else if (key == "seed") {
                config.seed = std::stoull(value);
            } else if (key == "workers") {
                config.workers = std::stoi(value);
            } else if (key == "random_codewords") {
                config.random_codewords = value == "1" || value == "true";
            } else {
                throw Error(ErrorCode::ConfigInvalid, "unknown key '" + key + "'");
            }
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw Error(ErrorCode::ConfigInvalid,
                        path + ":" + std::to_string(lineno) + ": bad value for " + key);
        }
    }
    return config;
}

void write_llr_csv(std::span<const double> llr, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");
    char buf[64];
    for (double x : llr) {
        std::snprintf(buf, sizeof buf, "%.17g\n", x);
        out << buf;
    }
}

std::vector<double> read_llr_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);
    std::vector<double> llr;
    double x;
    while (in >> x) llr.push_back(x);
    return llr;
}

}  // namespace qcpg
