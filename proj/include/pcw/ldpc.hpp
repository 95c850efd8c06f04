#ifndef PCW_LDPC_HPP
#define PCW_LDPC_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pcw/bits.hpp"
#include "pcw/llr.hpp"

namespace pcw {

// Horizontal code: sparse parity-check with a derived systematic
// generator.  Information bits live at the non-pivot columns of H.
struct LdpcCode {
    std::size_t n = 0; // block length
    std::size_t m = 0; // parity checks
    std::size_t k = 0; // n - rank(H)
    std::vector<std::vector<std::uint32_t>> check_nbrs; // per check, variable indices
    std::vector<std::vector<std::uint32_t>> var_nbrs;   // per variable, check indices
    std::vector<BitVector> generator_rows;              // k rows of length n
    std::vector<std::size_t> info_positions;            // k, ascending
    std::vector<std::size_t> pivot_positions;           // n - k, ascending
    std::vector<std::size_t> puncture_pattern;          // sorted, possibly empty
    std::vector<std::size_t> zero_degree_vars;          // accepted but flagged
};

// Standard alist text format: n m, max degrees, per-node degrees,
// per-node 1-indexed neighbor lists (zero padding permitted).
LdpcCode load_alist(const std::string& text);
LdpcCode load_alist_file(const std::string& path);
std::string to_alist(const LdpcCode& code);

// Build from a dense parity-check matrix (test fixtures, toy codes).
LdpcCode from_parity_matrix(const BitMatrix& h);

BitVector encode(const LdpcCode& code, const BitVector& info);
BitVector extract_info(const LdpcCode& code, const BitVector& word);

BitVector syndrome(const LdpcCode& code, const BitVector& word);
bool syndrome_is_zero(const LdpcCode& code, const BitVector& word);

struct DecodeOutcome {
    enum class Status { Success, Failure };
    Status status = Status::Failure;
    BitVector codeword;       // hard decision of the final posteriors
    std::size_t iterations_used = 0;
    LlrVector final_llrs;     // last posterior LLRs
};

// Flooding-schedule sum-product decoding with per-iteration syndrome
// checks (iteration 0 tests the channel hard decision).
DecodeOutcome bp_decode(const LdpcCode& code, const LlrVector& channel_llrs,
                        std::size_t max_iters);

// Bits surviving puncturing, in ascending variable order.
std::vector<std::uint8_t> apply_puncture(const LdpcCode& code, const BitVector& word);

// Rate matching: puncture ceil(n / 24) evenly spaced parity positions.
void set_rate_matched_puncture(LdpcCode& code);

} // namespace pcw

#endif
