#ifndef PCW_COMBINER_HPP
#define PCW_COMBINER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pcw/bits.hpp"
#include "pcw/ldpc.hpp"
#include "pcw/llr.hpp"
#include "pcw/vertical.hpp"

namespace pcw {

struct CombinePolicy {
    std::size_t max_e = 2;          // largest e_min attempted
    std::size_t attempt_budget = 0; // combined re-decodes allowed; 0 = 4n
    bool use_posteriors = false;    // combine BP posteriors instead of channel LLRs
};

// Received rows of one codeword matrix plus their first-pass outcomes.
struct SoftMatrix {
    std::vector<LlrVector> rows;        // channel LLRs, one per horizontal codeword
    std::vector<DecodeOutcome> outcomes;

    std::vector<std::size_t> failed() const;
};

// A check equation of H_E chosen for re-decoding: the row index, the
// failed rows on its support, and the weight of the row restricted to
// the failed set.
struct RedecodePlan {
    std::size_t he_row = 0;
    std::vector<std::size_t> support; // failed indices, ascending
    std::size_t e_min = 0;            // = support.size()
};

enum class CombineCase { Case1, Case2, Case3 };

struct CombineEvent {
    CombineCase kind;
    std::size_t he_row;
    std::size_t target;
    bool success;
};

struct ProductDecodeResult {
    bool systematic_success = false;
    std::vector<BitVector> recovered_rows;  // final bits, one per row
    std::vector<CombineEvent> events;
    std::size_t redecode_attempts = 0;      // combined re-decodes performed
    std::size_t undetectable_anomalies = 0; // recovered row failed the LDPC syndrome
    std::size_t case1_successes = 0;
    std::size_t case2_successes = 0;
    std::size_t case3_successes = 0;
};

// Row of H_E with the fewest failed participants (smallest weight in
// H_P, ties to the lowest row index).  Empty when no check touches any
// failed row.
std::optional<RedecodePlan> select_plan(const std::vector<std::size_t>& failed,
                                        const BitMatrix& he);

// e_min = 1: the failed row is the XOR of the other participants'
// decoded codewords.
BitVector case1_recover(const SoftMatrix& soft, const RedecodePlan& plan,
                        const BitMatrix& he);

// e_min = 2: r_target + (r_other boxplus the hard LLRs of the decoded
// participants).
LlrVector case2_combine(const SoftMatrix& soft, const RedecodePlan& plan,
                        const BitMatrix& he, std::size_t target,
                        const CombinePolicy& policy);

// e_min >= 3, singleton target vs the rest of the failed support.
LlrVector case3_combine(const SoftMatrix& soft, const RedecodePlan& plan,
                        const BitMatrix& he, std::size_t target,
                        const CombinePolicy& policy);

// Full decoding of one codeword matrix: BP per row, then combining
// sweeps until every systematic row is decoded or no attempt helps.
ProductDecodeResult product_decode(const std::vector<LlrVector>& received,
                                   const LdpcCode& horizontal,
                                   const VerticalCode& vertical,
                                   const CombinePolicy& policy,
                                   std::size_t max_iters);

// Bit-level erasure recovery: repeatedly resolve erased rows through
// weight-1 rows of H_P.  Returns true when every erased row was
// restored.  This is the hard-decision core of the e_min = 1 loop.
bool erasure_decode(std::vector<BitVector>& rows,
                    const std::vector<std::size_t>& erased,
                    const BitMatrix& he);

} // namespace pcw

#endif
