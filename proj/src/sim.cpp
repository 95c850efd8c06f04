#include "pcw/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pcw {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

struct TrialStats {
    std::uint64_t word_errors = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t undetected = 0;
    std::uint64_t redecode_attempts = 0;
    std::uint64_t case1 = 0, case2 = 0, case3 = 0;
};

TrialStats run_trial(const SimConfig& cfg, const LdpcCode& horizontal,
                     const VerticalCode& vertical, double snr_db, double rate,
                     std::size_t snr_index, std::uint64_t trial) {
    auto rng = trial_rng(cfg.seed, snr_index, trial);
    std::uniform_int_distribution<int> coin(0, 1);

    // information block, LDPC-encoded per row, vertical-encoded per column
    std::vector<BitVector> info_rows;
    info_rows.reserve(vertical.k);
    for (std::size_t i = 0; i < vertical.k; ++i) {
        BitVector info(horizontal.k);
        for (std::size_t j = 0; j < horizontal.k; ++j)
            if (coin(rng)) info.set(j, true);
        info_rows.push_back(encode(horizontal, info));
    }
    std::vector<BitVector> matrix = encode_columns(info_rows, vertical);

    std::vector<LlrVector> received;
    received.reserve(vertical.n);
    for (const auto& row : matrix)
        received.push_back(channel_llr(row, horizontal.puncture_pattern, snr_db, rate, rng));

    TrialStats st;
    auto tally_row = [&](std::size_t row_idx, const BitVector& decoded) {
        const BitVector& truth = matrix[row_idx];
        std::size_t diff = 0;
        for (std::size_t j = 0; j < truth.size(); ++j)
            if (truth.get(j) != decoded.get(j)) ++diff;
        if (diff) {
            ++st.word_errors;
            st.bit_errors += diff;
            if (syndrome_is_zero(horizontal, decoded)) ++st.undetected;
        }
    };

    if (cfg.scheme == Scheme::Baseline) {
        for (std::size_t i : vertical.systematic_positions) {
            DecodeOutcome o = bp_decode(horizontal, received[i], cfg.max_iters);
            tally_row(i, o.codeword);
        }
    } else {
        ProductDecodeResult res =
            product_decode(received, horizontal, vertical, cfg.policy, cfg.max_iters);
        for (std::size_t i : vertical.systematic_positions)
            tally_row(i, res.recovered_rows[i]);
        st.redecode_attempts = res.redecode_attempts;
        st.case1 = res.case1_successes;
        st.case2 = res.case2_successes;
        st.case3 = res.case3_successes;
    }
    return st;
}

} // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t snr_index,
                          std::uint64_t trial) {
    std::uint64_t s = splitmix64(seed ^ splitmix64(std::uint64_t(snr_index) + 1));
    s = splitmix64(s ^ splitmix64(trial + 0x51ED270B9ull));
    return std::mt19937_64(s);
}

LlrVector channel_llr(const BitVector& bits,
                      const std::vector<std::size_t>& punctured,
                      double snr_db, double rate, std::mt19937_64& rng) {
    if (rate <= 0.0 || rate > 1.0)
        throw std::invalid_argument("channel_llr: rate must be in (0, 1]");
    const double sigma2 = 1.0 / (2.0 * rate * std::pow(10.0, snr_db / 10.0));
    const double sigma = std::sqrt(sigma2);
    std::normal_distribution<double> noise(0.0, 1.0);

    LlrVector out(bits.size());
    std::size_t pi = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (pi < punctured.size() && punctured[pi] == i) {
            ++pi;
            continue; // not transmitted, LLR stays 0
        }
        double symbol = bits.get(i) ? -1.0 : 1.0;
        double a = symbol + sigma * noise(rng);
        out.set(i, 2.0 * a / sigma2);
    }
    return out;
}

double overall_rate(const LdpcCode& horizontal, const VerticalCode& vertical) {
    const double info_bits = double(vertical.k) * double(horizontal.k);
    const double sent_bits =
        double(vertical.n) * double(horizontal.n - horizontal.puncture_pattern.size());
    return info_bits / sent_bits;
}

std::vector<WerRecord> run_sweep(const SimConfig& cfg, const LdpcCode& horizontal,
                                 const VerticalCode& vertical) {
    if (cfg.trials < 1) throw std::invalid_argument("run_sweep: trials must be >= 1");
    for (double s : cfg.snr_db_points)
        if (!std::isfinite(s)) throw std::invalid_argument("run_sweep: SNR must be finite");
    const double rate = overall_rate(horizontal, vertical);

    unsigned threads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;

    std::vector<WerRecord> records;
    for (std::size_t s = 0; s < cfg.snr_db_points.size(); ++s) {
        const double snr_db = cfg.snr_db_points[s];
        WerRecord rec;
        rec.scheme = cfg.scheme;
        rec.snr_db = snr_db;

        const std::uint64_t batch = std::uint64_t(threads) * 4;
        for (std::uint64_t t0 = 0; t0 < cfg.trials; t0 += batch) {
            const std::uint64_t t1 = std::min(cfg.trials, t0 + batch);
            std::vector<TrialStats> stats(t1 - t0);
            std::atomic<std::uint64_t> next{t0};
            auto worker = [&]() {
                while (true) {
                    std::uint64_t t = next.fetch_add(1);
                    if (t >= t1) return;
                    stats[t - t0] =
                        run_trial(cfg, horizontal, vertical, snr_db, rate, s, t);
                }
            };
            std::vector<std::thread> pool;
            for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
            worker();
            for (auto& th : pool) th.join();

            for (const auto& st : stats) {
                ++rec.matrices;
                rec.systematic_words += vertical.k;
                rec.word_errors += st.word_errors;
                rec.bit_errors += st.bit_errors;
                rec.undetected += st.undetected;
                rec.redecode_attempts += st.redecode_attempts;
                rec.case1 += st.case1;
                rec.case2 += st.case2;
                rec.case3 += st.case3;
            }
            if (cfg.word_error_stop && rec.word_errors >= cfg.word_error_stop) break;
        }
        rec.wer = rec.systematic_words ? double(rec.word_errors) / double(rec.systematic_words) : 0.0;
        const double total_bits = double(rec.systematic_words) * double(horizontal.n);
        rec.ber = total_bits > 0 ? double(rec.bit_errors) / total_bits : 0.0;
        records.push_back(rec);
    }
    return records;
}

std::string emit_csv(const std::vector<WerRecord>& records) {
    std::ostringstream out;
    out << "scheme,snr_db,matrices,systematic_words,word_errors,wer,"
           "bit_errors,ber,undetected,redecode_attempts,case1,case2,case3\n";
    char buf[64];
    auto g6 = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.6g", x);
        return std::string(buf);
    };
    for (const auto& r : records) {
        out << (r.scheme == Scheme::Baseline ? "baseline" : "proposed") << ','
            << g6(r.snr_db) << ',' << r.matrices << ',' << r.systematic_words << ','
            << r.word_errors << ',' << g6(r.wer) << ',' << r.bit_errors << ','
            << g6(r.ber) << ',' << r.undetected << ',' << r.redecode_attempts << ','
            << r.case1 << ',' << r.case2 << ',' << r.case3 << '\n';
    }
    return out.str();
}

} // namespace pcw
