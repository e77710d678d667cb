#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcpg/codec.hpp"
#include "qcpg/rng.hpp"

namespace qcpg {

struct SimConfig {
    std::vector<double> ebno_db;  // strictly increasing grid
    int max_iterations = 50;
    IterativeDecoder::Kind decoder = IterativeDecoder::Kind::MinSum;
    double attenuation = 1.0;
    long min_block_errors = 100;
    long long max_trials = 100'000'000;
    std::uint64_t seed = 1;
    int workers = 1;
    bool random_codewords = false;  // default: all-zero transmission

    void validate() const;
};

struct SnrPoint {
    double ebno_db = 0.0;
    long long trials = 0;
    long long bit_errors = 0;
    long long block_errors = 0;
    double ber = 0.0;
    double bler = 0.0;
    double mean_iterations = 0.0;
    double wall_seconds = 0.0;
};

struct SimResult {
    SimConfig config;
    double rate = 0.0;
    long code_n = 0;
    std::vector<SnrPoint> points;
};

/// BPSK over AWGN: 0 -> +1, 1 -> -1, noise variance sigma^2 =
/// 1/(2 * rate * 10^(EbN0/10)), LLR = 2y/sigma^2.
std::vector<double> awgn_bpsk_llr(std::span<const std::uint8_t> codeword, double ebno_db,
                                  double rate, TrialRng& rng);

/// Seeded Monte Carlo sweep. Each trial's random stream is derived from
/// (seed, trial index) and trials are committed in fixed-size chunks, so the
/// result is byte-identical for any worker count.
SimResult run_monte_carlo(const LinearCode& code, const SimConfig& config);

/// Header "ebno_db,trials,bit_errors,block_errors,ber,bler,mean_iters",
/// one row per SNR point, locale-independent decimal formatting.
void emit_csv(const SimResult& result, const std::string& path);
std::string sim_csv_string(const SimResult& result);
std::string sim_to_json(const SimResult& result);

/// Line-oriented "key = value" config files ('#' starts a comment).
/// Keys: ebno_db (space-separated list), max_iter, decoder (msa|spa),
/// attenuation, min_block_errors, max_trials, seed, workers,
/// random_codewords (0|1).
SimConfig parse_sim_config(const std::string& path);

void write_llr_csv(std::span<const double> llr, const std::string& path);
std::vector<double> read_llr_csv(const std::string& path);

}  // namespace qcpg
