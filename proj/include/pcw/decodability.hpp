#ifndef PCW_DECODABILITY_HPP
#define PCW_DECODABILITY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pcw/vertical.hpp"

namespace pcw {

struct EnumOptions {
    std::uint64_t budget = 1'000'000'000; // max subsets per epsilon
    unsigned threads = 0;                 // 0 = hardware concurrency
};

std::uint64_t binomial(std::size_t n, std::size_t k); // throws on 64-bit overflow

struct HpDistRow {
    std::size_t e = 0;
    std::uint64_t total = 0;       // C(n, e)
    std::uint64_t with_w12 = 0;    // H_P has a row of weight 1 or 2
    std::uint64_t without_w12 = 0;
};

struct HpDistribution {
    std::string code_name;
    std::size_t n = 0, k = 0;
    std::vector<HpDistRow> rows;
};

struct EpsilonResult {
    bool combinable = false;
    // lexicographically first failing subset, empty when combinable
    std::vector<std::size_t> witness;
};

struct DecodabilityReport {
    std::string code_name;
    std::size_t eta = 0;
    std::vector<std::size_t> witness; // failing (eta + 1)-subset
};

// Definition check: every eps-subset of columns leaves H_P with a row of
// weight 1 or 2.  Enumeration is exhaustive, parallel over subset ranks.
EpsilonResult is_epsilon_combinable(const VerticalCode& code, std::size_t eps,
                                    const EnumOptions& opts = {});

DecodabilityReport combined_decodability(const VerticalCode& code,
                                         const EnumOptions& opts = {});

HpDistribution hp_distribution(const VerticalCode& code,
                               const std::vector<std::size_t>& e_values,
                               const EnumOptions& opts = {});

// Enumerated checks of the structural results tying combinability to the
// column multiset of H.
struct LemmaReport {
    std::string code_name;
    bool three_combinable = false;
    bool four_combinable = false;
    bool five_combinable = false;
    bool bound_n_le_2m_ok = false;       // 3 combinable => n <= 2M (+ multiset at n = 2M)
    bool bound_n_le_3m_ok = false;       // 4 combinable => n <= 3M (+ multiset at n = 3M)
    bool bound_n_le_m_ok = false;        // d_min >= 3: 5 combinable => n <= M (+ multiset at n = M)
    bool three_implies_four_ok = false;
    bool five_bound_2m_plus_2_ok = false; // unproven remark: 5 combinable => n <= 2M + 2
    std::vector<std::string> notes;
};

LemmaReport check_structural_lemmas(const VerticalCode& code,
                                    const EnumOptions& opts = {});

std::string to_csv(const HpDistribution& dist);

} // namespace pcw

#endif
