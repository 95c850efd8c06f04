#include "pcw/combiner.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcw {
namespace {

std::vector<std::size_t> row_participants(const BitMatrix& he, std::size_t j) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < he.cols(); ++i)
        if (he.get(j, i)) out.push_back(i);
    return out;
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
    return std::binary_search(v.begin(), v.end(), x);
}

} // namespace

std::vector<std::size_t> SoftMatrix::failed() const {
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        if (outcomes[i].status != DecodeOutcome::Status::Success) f.push_back(i);
    return f;
}

std::optional<RedecodePlan> select_plan(const std::vector<std::size_t>& failed,
                                        const BitMatrix& he) {
    if (failed.empty()) throw std::invalid_argument("select_plan: no failed rows");
    std::optional<RedecodePlan> best;
    for (std::size_t j = 0; j < he.rows(); ++j) {
        std::size_t w = 0;
        for (std::size_t idx : failed)
            if (he.get(j, idx)) ++w;
        if (w == 0) continue;
        if (!best || w < best->e_min) {
            RedecodePlan p;
            p.he_row = j;
            p.e_min = w;
            for (std::size_t idx : failed)
                if (he.get(j, idx)) p.support.push_back(idx);
            best = std::move(p);
            if (w == 1) break;
        }
    }
    return best;
}

BitVector case1_recover(const SoftMatrix& soft, const RedecodePlan& plan,
                        const BitMatrix& he) {
    if (plan.e_min != 1) throw std::invalid_argument("case1_recover: e_min must be 1");
    const std::size_t target = plan.support[0];
    BitVector acc;
    bool first = true;
    for (std::size_t l : row_participants(he, plan.he_row)) {
        if (l == target) continue;
        const auto& o = soft.outcomes[l];
        if (o.status != DecodeOutcome::Status::Success)
            throw std::invalid_argument("case1_recover: participant not decoded");
        if (first) {
            acc = o.codeword;
            first = false;
        } else {
            acc ^= o.codeword;
        }
    }
    if (first) throw std::invalid_argument("case1_recover: weight-1 check equation has no other participants");
    return acc;
}

LlrVector case2_combine(const SoftMatrix& soft, const RedecodePlan& plan,
                        const BitMatrix& he, std::size_t target,
                        const CombinePolicy& policy) {
    if (plan.e_min != 2) throw std::invalid_argument("case2_combine: e_min must be 2");
    if (!contains(plan.support, target))
        throw std::invalid_argument("case2_combine: target not in support");
    const std::size_t other = plan.support[0] == target ? plan.support[1] : plan.support[0];

    LlrVector acc = policy.use_posteriors ? soft.outcomes[other].final_llrs
                                          : soft.rows[other];
    for (std::size_t l : row_participants(he, plan.he_row)) {
        if (l == target || l == other) continue;
        LlrVector bar = hard_to_llr(soft.outcomes[l].codeword, acc.clamp());
        for (std::size_t j = 0; j < acc.size(); ++j)
            acc.set(j, boxplus(acc[j], bar[j], acc.clamp()));
    }
    const LlrVector& base = policy.use_posteriors ? soft.outcomes[target].final_llrs
                                                  : soft.rows[target];
    return add_llrs(base, acc);
}

LlrVector case3_combine(const SoftMatrix& soft, const RedecodePlan& plan,
                        const BitMatrix& he, std::size_t target,
                        const CombinePolicy& policy) {
    if (plan.e_min < 3) throw std::invalid_argument("case3_combine: e_min must be >= 3");
    if (!contains(plan.support, target))
        throw std::invalid_argument("case3_combine: target not in support");

    // boxplus over the other failed rows, then over the decoded participants
    LlrVector acc;
    bool first = true;
    for (std::size_t l : plan.support) {
        if (l == target) continue;
        const LlrVector& r = policy.use_posteriors ? soft.outcomes[l].final_llrs
                                                   : soft.rows[l];
        if (first) {
            acc = r;
            first = false;
        } else {
            for (std::size_t j = 0; j < acc.size(); ++j)
                acc.set(j, boxplus(acc[j], r[j], acc.clamp()));
        }
    }
    for (std::size_t l : row_participants(he, plan.he_row)) {
        if (contains(plan.support, l)) continue;
        LlrVector bar = hard_to_llr(soft.outcomes[l].codeword, acc.clamp());
        for (std::size_t j = 0; j < acc.size(); ++j)
            acc.set(j, boxplus(acc[j], bar[j], acc.clamp()));
    }
    const LlrVector& base = policy.use_posteriors ? soft.outcomes[target].final_llrs
                                                  : soft.rows[target];
    return add_llrs(base, acc);
}

ProductDecodeResult product_decode(const std::vector<LlrVector>& received,
                                   const LdpcCode& horizontal,
                                   const VerticalCode& vertical,
                                   const CombinePolicy& policy,
                                   std::size_t max_iters) {
    if (received.size() != vertical.n)
        throw std::invalid_argument("product_decode: expected one LLR row per vertical symbol");

    const BitMatrix he = extend_parity_check(vertical.h);
    const std::size_t budget =
        policy.attempt_budget ? policy.attempt_budget : 4 * vertical.n;

    SoftMatrix soft;
    soft.rows = received;
    soft.outcomes.reserve(received.size());
    for (const auto& r : received)
        soft.outcomes.push_back(bp_decode(horizontal, r, max_iters));

    ProductDecodeResult result;
    auto systematic_done = [&]() {
        for (std::size_t i : vertical.systematic_positions)
            if (soft.outcomes[i].status != DecodeOutcome::Status::Success) return false;
        return true;
    };

    bool out_of_budget = false;
    while (!systematic_done() && !out_of_budget) {
        std::vector<std::size_t> failed = soft.failed();
        bool progressed = false;

        const std::size_t w_cap = std::max<std::size_t>(policy.max_e, 2);
        for (std::size_t w = 1; w <= w_cap && !progressed && !out_of_budget; ++w) {
            for (std::size_t j = 0; j < he.rows() && !progressed; ++j) {
                RedecodePlan plan;
                plan.he_row = j;
                for (std::size_t idx : failed)
                    if (he.get(j, idx)) plan.support.push_back(idx);
                plan.e_min = plan.support.size();
                if (plan.e_min != w) continue;

                if (w == 1) {
                    const std::size_t target = plan.support[0];
                    BitVector cw = case1_recover(soft, plan, he);
                    const bool ok = syndrome_is_zero(horizontal, cw);
                    result.events.push_back({CombineCase::Case1, j, target, ok});
                    if (ok) {
                        DecodeOutcome o;
                        o.status = DecodeOutcome::Status::Success;
                        o.final_llrs = hard_to_llr(cw, soft.rows[target].clamp());
                        o.codeword = std::move(cw);
                        soft.outcomes[target] = std::move(o);
                        ++result.case1_successes;
                        progressed = true;
                    } else {
                        // contributors hide an undetected error; keep the row failed
                        ++result.undetectable_anomalies;
                    }
                    continue;
                }

                for (std::size_t target : plan.support) {
                    if (result.redecode_attempts >= budget) {
                        out_of_budget = true;
                        break;
                    }
                    LlrVector combined = w == 2
                        ? case2_combine(soft, plan, he, target, policy)
                        : case3_combine(soft, plan, he, target, policy);
                    ++result.redecode_attempts;
                    DecodeOutcome o = bp_decode(horizontal, combined, max_iters);
                    const bool ok = o.status == DecodeOutcome::Status::Success;
                    result.events.push_back(
                        {w == 2 ? CombineCase::Case2 : CombineCase::Case3, j, target, ok});
                    if (ok) {
                        soft.outcomes[target] = std::move(o);
                        if (w == 2) ++result.case2_successes;
                        else ++result.case3_successes;
                        progressed = true;
                        break;
                    }
                }
            }
        }
        if (!progressed) break;
    }

    result.systematic_success = systematic_done();
    result.recovered_rows.reserve(soft.outcomes.size());
    for (const auto& o : soft.outcomes) result.recovered_rows.push_back(o.codeword);
    return result;
}

bool erasure_decode(std::vector<BitVector>& rows,
                    const std::vector<std::size_t>& erased,
                    const BitMatrix& he) {
    std::vector<std::size_t> failed = erased;
    std::sort(failed.begin(), failed.end());
    while (!failed.empty()) {
        bool progressed = false;
        for (std::size_t j = 0; j < he.rows() && !progressed; ++j) {
            std::size_t w = 0, target = 0;
            for (std::size_t idx : failed)
                if (he.get(j, idx)) {
                    ++w;
                    target = idx;
                }
            if (w != 1) continue;
            BitVector acc(rows[target].size());
            for (std::size_t l = 0; l < he.cols(); ++l)
                if (l != target && he.get(j, l)) acc ^= rows[l];
            rows[target] = std::move(acc);
            failed.erase(std::find(failed.begin(), failed.end(), target));
            progressed = true;
        }
        if (!progressed) return false;
    }
    return true;
}

} // namespace pcw
