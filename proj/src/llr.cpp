#include "pcw/llr.hpp"

#include <stdexcept>

namespace pcw {

LlrVector boxplus_vectors(std::span<const LlrVector> vs) {
    if (vs.empty()) throw std::invalid_argument("boxplus_vectors: empty list");
    LlrVector acc = vs[0];
    for (std::size_t i = 1; i < vs.size(); ++i) {
        if (vs[i].size() != acc.size())
            throw std::invalid_argument("boxplus_vectors: length mismatch");
        for (std::size_t j = 0; j < acc.size(); ++j)
            acc.set(j, boxplus(acc[j], vs[i][j], acc.clamp()));
    }
    return acc;
}

LlrVector hard_to_llr(const BitVector& word, double clamp) {
    LlrVector r(word.size(), clamp);
    for (std::size_t i = 0; i < word.size(); ++i)
        r.set(i, word.get(i) ? -clamp : clamp);
    return r;
}

LlrVector add_llrs(const LlrVector& a, const LlrVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add_llrs: length mismatch");
    LlrVector r(a.size(), a.clamp());
    for (std::size_t i = 0; i < a.size(); ++i) r.set(i, a[i] + b[i]);
    return r;
}

} // namespace pcw
