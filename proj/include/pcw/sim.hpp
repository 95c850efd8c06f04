#ifndef PCW_SIM_HPP
#define PCW_SIM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pcw/combiner.hpp"
#include "pcw/ldpc.hpp"
#include "pcw/llr.hpp"
#include "pcw/vertical.hpp"

namespace pcw {

enum class Scheme { Baseline, Proposed };

struct SimConfig {
    std::vector<double> snr_db_points;
    std::uint64_t trials = 100;     // codeword matrices per SNR point
    std::size_t max_iters = 50;
    CombinePolicy policy;
    std::uint64_t seed = 1;
    Scheme scheme = Scheme::Baseline;
    std::uint64_t word_error_stop = 100; // early stop per SNR point (0 = none)
    unsigned threads = 0;                // 0 = hardware concurrency
};

struct WerRecord {
    Scheme scheme = Scheme::Baseline;
    double snr_db = 0.0;
    std::uint64_t matrices = 0;
    std::uint64_t systematic_words = 0;
    std::uint64_t word_errors = 0;
    double wer = 0.0;
    std::uint64_t bit_errors = 0;
    double ber = 0.0;
    std::uint64_t undetected = 0;
    std::uint64_t redecode_attempts = 0;
    std::uint64_t case1 = 0, case2 = 0, case3 = 0;
};

// Deterministic per-trial RNG substream derived from (seed, snr, trial).
std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t snr_index,
                          std::uint64_t trial);

// BPSK over AWGN: bit b -> symbol 1 - 2b, noise variance
// sigma^2 = 1 / (2 * rate * 10^(snr_db / 10)), LLR = 2 a / sigma^2.
// Punctured positions are not transmitted and get LLR 0.
LlrVector channel_llr(const BitVector& bits,
                      const std::vector<std::size_t>& punctured,
                      double snr_db, double rate, std::mt19937_64& rng);

// Overall code rate of the product construction, puncturing included.
double overall_rate(const LdpcCode& horizontal, const VerticalCode& vertical);

std::vector<WerRecord> run_sweep(const SimConfig& config,
                                 const LdpcCode& horizontal,
                                 const VerticalCode& vertical);

std::string emit_csv(const std::vector<WerRecord>& records);

} // namespace pcw

#endif
