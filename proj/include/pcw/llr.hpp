#ifndef PCW_LLR_HPP
#define PCW_LLR_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "pcw/bits.hpp"

namespace pcw {

// Saturation magnitude standing in for +/- infinity.  tanh(x/2) is
// indistinguishable from 1 at double precision well before 30, so a
// saturated value behaves as a known bit in the boxplus algebra.
inline constexpr double kLlrClamp = 30.0;

inline double clamp_llr(double x, double clamp = kLlrClamp) {
    if (x > clamp) return clamp;
    if (x < -clamp) return -clamp;
    return x;
}

// Soft-XOR of two LLRs: 2 atanh(tanh(a/2) tanh(b/2)).  Saturated
// operands take the exact sign-change shortcut instead of the tanh
// product, so a +/-clamp operand acts as a known bit.
inline double boxplus(double a, double b, double clamp = kLlrClamp) {
    if (a >= clamp) return clamp_llr(b, clamp);
    if (a <= -clamp) return clamp_llr(-b, clamp);
    if (b >= clamp) return clamp_llr(a, clamp);
    if (b <= -clamp) return clamp_llr(-a, clamp);
    // Jacobian form; numerically stable for large |a|, |b|.
    double s = (a < 0) == (b < 0) ? 1.0 : -1.0;
    double r = s * std::min(std::fabs(a), std::fabs(b))
             + std::log1p(std::exp(-std::fabs(a + b)))
             - std::log1p(std::exp(-std::fabs(a - b)));
    return clamp_llr(r, clamp);
}

// Vector of per-bit LLRs with saturation semantics.
class LlrVector {
public:
    LlrVector() = default;
    explicit LlrVector(std::size_t len, double clamp = kLlrClamp)
        : v_(len, 0.0), clamp_(clamp) {}
    LlrVector(std::vector<double> vals, double clamp = kLlrClamp)
        : v_(std::move(vals)), clamp_(clamp) {
        for (auto& x : v_) x = clamp_llr(x, clamp_);
    }

    std::size_t size() const { return v_.size(); }
    double clamp() const { return clamp_; }
    double operator[](std::size_t i) const { return v_[i]; }
    void set(std::size_t i, double x) { v_[i] = clamp_llr(x, clamp_); }
    std::span<const double> values() const { return v_; }

    // bit = 0 iff LLR >= 0 (ties to zero)
    BitVector hard_decision() const {
        BitVector b(v_.size());
        for (std::size_t i = 0; i < v_.size(); ++i)
            if (v_[i] < 0.0) b.set(i, true);
        return b;
    }

private:
    std::vector<double> v_;
    double clamp_ = kLlrClamp;
};

// Elementwise left fold of boxplus.
LlrVector boxplus_vectors(std::span<const LlrVector> vs);

// bit 0 -> +clamp, bit 1 -> -clamp
LlrVector hard_to_llr(const BitVector& word, double clamp = kLlrClamp);

// Elementwise clamped sum (H-ARQ style combining of two observations).
LlrVector add_llrs(const LlrVector& a, const LlrVector& b);

} // namespace pcw

#endif
