// pcw: product-structure channel coding workbench.
//
// Subcommands:
//   analyze      restricted parity-check row-weight distribution over error subsets
//   decodability largest eta with every eps-subset combinable, eps <= eta
//   simulate     BPSK/AWGN Monte Carlo, baseline BP vs combining scheme
//   encode       LDPC (and optionally product) encoding of info bits
//   decode       BP (and optionally product) decoding of LLR rows

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pcw/codespec.hpp"
#include "pcw/combiner.hpp"
#include "pcw/decodability.hpp"
#include "pcw/sim.hpp"

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_subset(const std::vector<std::size_t>& s) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ',';
        out << s[i];
    }
    out << '}';
    return out.str();
}

int cmd_analyze(const std::string& code_spec, const std::string& e_spec,
                std::uint64_t budget, unsigned threads, const std::string& emit) {
    pcw::VerticalCode code = pcw::parse_vertical_code(code_spec);
    pcw::EnumOptions opts;
    opts.budget = budget;
    opts.threads = threads;
    auto dist = pcw::hp_distribution(code, pcw::parse_e_values(e_spec, code.n), opts);
    std::string csv = pcw::to_csv(dist);
    if (emit.empty()) std::cout << csv;
    else write_text(emit, csv);
    return 0;
}

int cmd_decodability(const std::string& code_spec, std::uint64_t budget,
                     unsigned threads) {
    pcw::VerticalCode code = pcw::parse_vertical_code(code_spec);
    pcw::EnumOptions opts;
    opts.budget = budget;
    opts.threads = threads;
    auto rep = pcw::combined_decodability(code, opts);
    std::cout << rep.code_name << ": combined-decodability eta = " << rep.eta << "\n";
    if (!rep.witness.empty())
        std::cout << "witness " << rep.witness.size() << "-subset with no weight-1/2 row: "
                  << format_subset(rep.witness) << "\n";
    else
        std::cout << "combinable at every failure count up to n\n";
    return 0;
}

int cmd_simulate(const std::string& ldpc_spec, const std::string& vertical_spec,
                 const std::string& snr_spec, std::uint64_t trials,
                 const std::string& scheme, std::size_t max_e, std::uint64_t seed,
                 const std::string& out_path, std::size_t max_iters,
                 std::size_t attempt_budget, bool use_posteriors, bool rate_match,
                 std::uint64_t stop, unsigned threads) {
    pcw::LdpcCode horizontal = pcw::parse_ldpc_code(ldpc_spec);
    if (rate_match) pcw::set_rate_matched_puncture(horizontal);
    pcw::VerticalCode vertical = pcw::parse_vertical_code(vertical_spec);

    pcw::SimConfig cfg;
    cfg.snr_db_points = pcw::parse_snr_points(snr_spec);
    cfg.trials = trials;
    cfg.max_iters = max_iters;
    cfg.policy.max_e = max_e;
    cfg.policy.attempt_budget = attempt_budget;
    cfg.policy.use_posteriors = use_posteriors;
    cfg.seed = seed;
    cfg.word_error_stop = stop;
    cfg.threads = threads;
    if (scheme == "baseline") cfg.scheme = pcw::Scheme::Baseline;
    else if (scheme == "proposed") cfg.scheme = pcw::Scheme::Proposed;
    else throw CLI::ValidationError("--scheme must be baseline or proposed");

    auto records = pcw::run_sweep(cfg, horizontal, vertical);
    std::string csv = pcw::emit_csv(records);
    if (out_path.empty()) std::cout << csv;
    else write_text(out_path, csv);
    return 0;
}

pcw::BitVector parse_bit_line(const std::string& line) {
    std::string bits;
    for (char c : line)
        if (c == '0' || c == '1') bits.push_back(c);
    return pcw::BitVector::from_string(bits);
}

int cmd_encode(const std::string& ldpc_spec, const std::string& vertical_spec,
               const std::string& in_path, const std::string& out_path) {
    pcw::LdpcCode horizontal = pcw::parse_ldpc_code(ldpc_spec);
    std::istringstream in(read_text(in_path));
    std::vector<pcw::BitVector> rows;
    std::string line;
    while (std::getline(in, line)) {
        pcw::BitVector b = parse_bit_line(line);
        if (b.size()) rows.push_back(b);
    }
    if (rows.empty()) throw std::runtime_error("no info bit rows in " + in_path);

    std::vector<pcw::BitVector> encoded;
    for (const auto& r : rows) encoded.push_back(pcw::encode(horizontal, r));
    if (!vertical_spec.empty()) {
        pcw::VerticalCode vertical = pcw::parse_vertical_code(vertical_spec);
        encoded = pcw::encode_columns(encoded, vertical);
    }
    std::ostringstream out;
    for (const auto& r : encoded) out << r.to_string() << "\n";
    if (out_path.empty()) std::cout << out.str();
    else write_text(out_path, out.str());
    return 0;
}

int cmd_decode(const std::string& ldpc_spec, const std::string& vertical_spec,
               const std::string& llr_path, std::size_t max_iters, std::size_t max_e,
               const std::string& out_path) {
    pcw::LdpcCode horizontal = pcw::parse_ldpc_code(ldpc_spec);
    std::istringstream in(read_text(llr_path));
    std::vector<pcw::LlrVector> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<double> vals;
        double x;
        while (ls >> x) vals.push_back(x);
        if (!vals.empty()) rows.emplace_back(std::move(vals));
    }
    if (rows.empty()) throw std::runtime_error("no LLR rows in " + llr_path);
    for (const auto& r : rows)
        if (r.size() != horizontal.n)
            throw std::runtime_error("LLR row length does not match code length");

    std::ostringstream out;
    if (vertical_spec.empty()) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto o = pcw::bp_decode(horizontal, rows[i], max_iters);
            out << "row " << i << ": "
                << (o.status == pcw::DecodeOutcome::Status::Success ? "success" : "failure")
                << " iterations " << o.iterations_used << " bits "
                << o.codeword.to_string() << "\n";
        }
    } else {
        pcw::VerticalCode vertical = pcw::parse_vertical_code(vertical_spec);
        pcw::CombinePolicy policy;
        policy.max_e = max_e;
        auto res = pcw::product_decode(rows, horizontal, vertical, policy, max_iters);
        out << "systematic rows " << (res.systematic_success ? "recovered" : "NOT recovered")
            << "; combined re-decodes " << res.redecode_attempts
            << "; case1/2/3 successes " << res.case1_successes << "/"
            << res.case2_successes << "/" << res.case3_successes << "\n";
        for (std::size_t i = 0; i < res.recovered_rows.size(); ++i)
            out << "row " << i << ": " << res.recovered_rows[i].to_string() << "\n";
    }
    if (out_path.empty()) std::cout << out.str();
    else write_text(out_path, out.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"product-structure channel coding workbench"};
    app.require_subcommand(1);

    std::string code_spec, e_spec, emit, ldpc_spec, vertical_spec, snr_spec;
    std::string scheme = "baseline", out_path, in_path, llr_path;
    std::uint64_t budget = 1'000'000'000, trials = 100, seed = 1, stop = 100;
    std::size_t max_e = 2, max_iters = 50, attempt_budget = 0;
    unsigned threads = 0;
    bool use_posteriors = false, rate_match = false;

    auto* analyze = app.add_subcommand(
        "analyze", "distribution of restricted parity-check row weights over error subsets");
    analyze->add_option("--code", code_spec, "vertical code (spc:n | hamming:m | dpc:n | file:path)")
        ->required();
    analyze->add_option("--e", e_spec, "failure counts, e.g. 2..6 or 3,5")->required();
    analyze->add_option("--budget", budget, "max subsets enumerated per e");
    analyze->add_option("--threads", threads, "worker threads (0 = all cores)");
    analyze->add_option("--emit", emit, "write CSV to this path instead of stdout");

    auto* decod = app.add_subcommand("decodability", "combined-decodability eta and witness");
    decod->add_option("--code", code_spec, "vertical code specifier")->required();
    decod->add_option("--budget", budget, "max subsets enumerated per e");
    decod->add_option("--threads", threads, "worker threads (0 = all cores)");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo WER/BER sweep");
    sim->add_option("--ldpc", ldpc_spec, "horizontal code alist path")->required();
    sim->add_option("--vertical", vertical_spec, "vertical code specifier")->required();
    sim->add_option("--snr", snr_spec, "Eb/N0 sweep a:step:b (dB) or list")->required();
    sim->add_option("--trials", trials, "codeword matrices per SNR point");
    sim->add_option("--scheme", scheme, "baseline | proposed");
    sim->add_option("--max-e", max_e, "largest restricted row weight attempted");
    sim->add_option("--seed", seed, "RNG seed");
    sim->add_option("--out", out_path, "CSV output path (default stdout)");
    sim->add_option("--max-iters", max_iters, "BP iteration cap");
    sim->add_option("--attempt-budget", attempt_budget, "combined re-decodes per matrix (0 = 4n)");
    sim->add_flag("--use-posteriors", use_posteriors, "combine BP posteriors instead of channel LLRs");
    sim->add_flag("--rate-match", rate_match, "puncture ceil(n/24) parity positions");
    sim->add_option("--stop", stop, "early stop per SNR point after this many word errors (0 = none)");
    sim->add_option("--threads", threads, "worker threads (0 = all cores)");

    auto* enc = app.add_subcommand("encode", "encode info bit rows");
    enc->add_option("--ldpc", ldpc_spec, "horizontal code alist path")->required();
    enc->add_option("--vertical", vertical_spec, "also column-encode with this vertical code");
    enc->add_option("--in", in_path, "file with one 0/1 info row per line")->required();
    enc->add_option("--out", out_path, "output path (default stdout)");

    auto* dec = app.add_subcommand("decode", "decode LLR rows");
    dec->add_option("--ldpc", ldpc_spec, "horizontal code alist path")->required();
    dec->add_option("--vertical", vertical_spec, "run the combining scheme with this vertical code");
    dec->add_option("--llr", llr_path, "file with one whitespace-separated LLR row per line")
        ->required();
    dec->add_option("--max-iters", max_iters, "BP iteration cap");
    dec->add_option("--max-e", max_e, "largest restricted row weight attempted");
    dec->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // usage errors exit 2, --help exits 0
    }

    try {
        if (*analyze) return cmd_analyze(code_spec, e_spec, budget, threads, emit);
        if (*decod) return cmd_decodability(code_spec, budget, threads);
        if (*sim)
            return cmd_simulate(ldpc_spec, vertical_spec, snr_spec, trials, scheme,
                                max_e, seed, out_path, max_iters, attempt_budget,
                                use_posteriors, rate_match, stop, threads);
        if (*enc) return cmd_encode(ldpc_spec, vertical_spec, in_path, out_path);
        if (*dec)
            return cmd_decode(ldpc_spec, vertical_spec, llr_path, max_iters, max_e, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
