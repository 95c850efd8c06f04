#include "pcw/decodability.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pcw {
namespace {

std::vector<std::uint64_t> he_row_masks(const VerticalCode& code) {
    if (code.n > 63)
        throw std::invalid_argument("decodability: code length above 63 not supported");
    BitMatrix he = extend_parity_check(code.h);
    std::vector<std::uint64_t> masks(he.rows(), 0);
    for (std::size_t r = 0; r < he.rows(); ++r)
        for (std::size_t c = 0; c < code.n; ++c)
            if (he.get(r, c)) masks[r] |= std::uint64_t{1} << c;
    return masks;
}

bool has_w12_row(const std::vector<std::uint64_t>& masks, std::uint64_t subset) {
    for (std::uint64_t m : masks) {
        int p = std::popcount(m & subset);
        if (p == 1 || p == 2) return true;
    }
    return false;
}

// Lexicographic unranking of e-combinations of {0..n-1}.
std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t e,
                                            std::uint64_t rank) {
    std::vector<std::size_t> c(e);
    std::size_t a = 0;
    for (std::size_t i = 0; i < e; ++i) {
        while (true) {
            std::uint64_t cnt = binomial(n - 1 - a, e - 1 - i);
            if (rank < cnt) break;
            rank -= cnt;
            ++a;
        }
        c[i] = a++;
    }
    return c;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t e = c.size();
    std::size_t i = e;
    while (i-- > 0) {
        if (c[i] < n - e + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < e; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

struct RangeResult {
    std::uint64_t with_w12 = 0;
    bool has_fail = false;
    std::vector<std::size_t> first_fail;
};

// Scans ranks [begin, end).  When stop_at_fail is set, the scan of a
// range ends at its first failing subset; stop_hint lets later ranges
// abort once an earlier range has already failed.
RangeResult scan_range(const std::vector<std::uint64_t>& masks, std::size_t n,
                       std::size_t e, std::uint64_t begin, std::uint64_t end,
                       bool stop_at_fail, std::size_t range_index,
                       std::atomic<std::size_t>* first_failing_range) {
    RangeResult res;
    if (begin >= end) return res;
    std::vector<std::size_t> c = unrank_combination(n, e, begin);
    for (std::uint64_t r = begin; r < end; ++r) {
        if (r != begin) next_combination(c, n);
        std::uint64_t sm = 0;
        for (std::size_t idx : c) sm |= std::uint64_t{1} << idx;
        if (has_w12_row(masks, sm)) {
            ++res.with_w12;
        } else if (!res.has_fail) {
            res.has_fail = true;
            res.first_fail = c;
            if (stop_at_fail) {
                if (first_failing_range) {
                    std::size_t cur = first_failing_range->load();
                    while (range_index < cur &&
                           !first_failing_range->compare_exchange_weak(cur, range_index)) {}
                }
                return res;
            }
        }
        if (stop_at_fail && first_failing_range && (r & 0x3FFF) == 0 &&
            first_failing_range->load() < range_index)
            return res; // an earlier range already failed
    }
    return res;
}

std::vector<RangeResult> scan_parallel(const std::vector<std::uint64_t>& masks,
                                       std::size_t n, std::size_t e,
                                       std::uint64_t total, unsigned threads,
                                       bool stop_at_fail) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    // enough ranges that early-exit does not leave threads idle for long
    std::size_t ranges = std::min<std::uint64_t>(total, std::uint64_t(threads) * 16);
    if (ranges == 0) ranges = 1;
    std::vector<RangeResult> results(ranges);
    std::atomic<std::size_t> first_failing_range{SIZE_MAX};
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= ranges) return;
            std::uint64_t begin = total * i / ranges;
            std::uint64_t end = total * (i + 1) / ranges;
            results[i] = scan_range(masks, n, e, begin, end, stop_at_fail, i,
                                    &first_failing_range);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return results;
}

} // namespace

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) throw std::overflow_error("binomial: result exceeds 64 bits");
    }
    return std::uint64_t(r);
}

EpsilonResult is_epsilon_combinable(const VerticalCode& code, std::size_t eps,
                                    const EnumOptions& opts) {
    if (eps < 1 || eps > code.n)
        throw std::invalid_argument("is_epsilon_combinable: eps out of range");
    const std::uint64_t total = binomial(code.n, eps);
    if (total > opts.budget)
        throw std::runtime_error("is_epsilon_combinable: C(n, eps) exceeds budget; raise --budget");
    auto masks = he_row_masks(code);
    auto results = scan_parallel(masks, code.n, eps, total, opts.threads, true);
    for (const auto& r : results) {
        if (r.has_fail) return {false, r.first_fail};
    }
    return {true, {}};
}

DecodabilityReport combined_decodability(const VerticalCode& code,
                                         const EnumOptions& opts) {
    DecodabilityReport rep;
    rep.code_name = code.name;
    for (std::size_t eps = 1; eps <= code.n; ++eps) {
        EpsilonResult r = is_epsilon_combinable(code, eps, opts);
        if (!r.combinable) {
            rep.eta = eps - 1;
            rep.witness = r.witness;
            return rep;
        }
    }
    rep.eta = code.n; // combinable at every possible failure count
    return rep;
}

HpDistribution hp_distribution(const VerticalCode& code,
                               const std::vector<std::size_t>& e_values,
                               const EnumOptions& opts) {
    HpDistribution dist;
    dist.code_name = code.name;
    dist.n = code.n;
    dist.k = code.k;
    auto masks = he_row_masks(code);
    for (std::size_t e : e_values) {
        if (e < 1 || e > code.n)
            throw std::invalid_argument("hp_distribution: e out of range");
        const std::uint64_t total = binomial(code.n, e);
        if (total > opts.budget)
            throw std::runtime_error("hp_distribution: C(n, e) exceeds budget; raise --budget");
        auto results = scan_parallel(masks, code.n, e, total, opts.threads, false);
        HpDistRow row;
        row.e = e;
        row.total = total;
        for (const auto& r : results) row.with_w12 += r.with_w12;
        row.without_w12 = total - row.with_w12;
        dist.rows.push_back(row);
    }
    return dist;
}

LemmaReport check_structural_lemmas(const VerticalCode& code,
                                    const EnumOptions& opts) {
    LemmaReport rep;
    rep.code_name = code.name;
    const std::size_t big_m = code.big_m;

    auto combinable = [&](std::size_t eps) {
        return eps <= code.n && is_epsilon_combinable(code, eps, opts).combinable;
    };
    rep.three_combinable = combinable(3);
    rep.four_combinable = combinable(4);
    rep.five_combinable = combinable(5);

    // column multiset of H as m-tuples
    std::map<std::uint64_t, std::size_t> col_count;
    for (std::size_t c = 0; c < code.n; ++c) {
        std::uint64_t v = 0;
        for (std::size_t r = 0; r < code.m; ++r)
            if (code.h.get(r, c)) v |= std::uint64_t{1} << r;
        ++col_count[v];
    }
    auto all_counts_are = [&](std::size_t want) {
        if (col_count.size() != big_m) return false;
        for (const auto& [v, cnt] : col_count)
            if (cnt != want) return false;
        return true;
    };

    rep.bound_n_le_2m_ok = !rep.three_combinable ||
        (code.n < 2 * big_m || (code.n == 2 * big_m && all_counts_are(2)));
    if (code.n == 2 * big_m && all_counts_are(2) && !rep.three_combinable)
        rep.bound_n_le_2m_ok = false; // converse direction
    rep.bound_n_le_3m_ok = !rep.four_combinable ||
        (code.n < 3 * big_m || (code.n == 3 * big_m && all_counts_are(3)));
    if (code.n == 3 * big_m && all_counts_are(3) && !rep.four_combinable)
        rep.bound_n_le_3m_ok = false;
    if (code.d_min >= 3) {
        rep.bound_n_le_m_ok = !rep.five_combinable ||
            (code.n < big_m || (code.n == big_m && all_counts_are(1)));
        if (code.n == big_m && all_counts_are(1) && !rep.five_combinable)
            rep.bound_n_le_m_ok = false;
    } else {
        rep.bound_n_le_m_ok = true;
        rep.notes.push_back("d_min < 3: length-M bound not applicable");
    }
    rep.three_implies_four_ok = !rep.three_combinable || rep.four_combinable;
    rep.five_bound_2m_plus_2_ok = !rep.five_combinable || code.n <= 2 * big_m + 2;

    {
        std::ostringstream note;
        note << "columns: " << col_count.size() << " distinct of " << big_m
             << " possible nonzero tuples";
        rep.notes.push_back(note.str());
    }
    return rep;
}

std::string to_csv(const HpDistribution& dist) {
    std::ostringstream out;
    out << "code,n,k,e,total,with_w12,without_w12\n";
    for (const auto& r : dist.rows)
        out << dist.code_name << ',' << dist.n << ',' << dist.k << ',' << r.e << ','
            << r.total << ',' << r.with_w12 << ',' << r.without_w12 << '\n';
    return out.str();
}

} // namespace pcw
