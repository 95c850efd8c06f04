#include "pcw/bits.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcw {

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("BitVector: bit must be 0 or 1");
        v.set(i++, b != 0);
    }
    return v;
}

BitVector BitVector::from_string(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c == '0' || c == '1') t.push_back(c);
    if (t.empty()) throw std::invalid_argument("BitVector: empty bit string");
    BitVector v(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) v.set(i, t[i] == '1');
    return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitVector: length mismatch in xor");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

std::string BitVector::to_string() const {
    std::string s;
    s.reserve(len_);
    for (std::size_t i = 0; i < len_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("BitMatrix: dimensions must be positive");
}

void BitMatrix::xor_row_from(std::size_t dst, std::size_t src) {
    for (std::size_t i = 0; i < wpr_; ++i)
        w_[dst * wpr_ + i] ^= w_[src * wpr_ + i];
}

void BitMatrix::xor_row_from(std::size_t dst, const BitMatrix& other, std::size_t src) {
    if (cols_ != other.cols_) throw std::invalid_argument("BitMatrix: column mismatch");
    for (std::size_t i = 0; i < wpr_; ++i)
        w_[dst * wpr_ + i] ^= other.w_[src * other.wpr_ + i];
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < wpr_; ++i) w += std::popcount(w_[r * wpr_ + i]);
    return w;
}

bool BitMatrix::row_any(std::size_t r) const {
    for (std::size_t i = 0; i < wpr_; ++i)
        if (w_[r * wpr_ + i]) return true;
    return false;
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    auto dst = v.words();
    for (std::size_t i = 0; i < wpr_; ++i) dst[i] = w_[r * wpr_ + i];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix: row length mismatch");
    auto src = v.words();
    for (std::size_t i = 0; i < wpr_; ++i) w_[r * wpr_ + i] = src[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < wpr_; ++i)
        std::swap(w_[a * wpr_ + i], w_[b * wpr_ + i]);
}

bool BitMatrix::has_zero_column() const {
    for (std::size_t c = 0; c < cols_; ++c) {
        bool any = false;
        for (std::size_t r = 0; r < rows_ && !any; ++r) any = get(r, c);
        if (!any) return true;
    }
    return false;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            s.push_back(get(r, c) ? '1' : '0');
            if (c + 1 < cols_) s.push_back(' ');
        }
        s.push_back('\n');
    }
    return s;
}

BitMatrix extend_parity_check(const BitMatrix& h) {
    const std::size_t m = h.rows();
    if (m > 20) throw std::invalid_argument("extend_parity_check: m > 20");
    if (h.has_zero_column())
        throw std::invalid_argument("extend_parity_check: parity-check matrix has an all-zero column");
    const std::size_t big_m = (std::size_t{1} << m) - 1;
    BitMatrix he(big_m, h.cols());
    for (std::size_t mask = 1; mask <= big_m; ++mask) {
        // row(mask) = row(mask without lowest bit) ^ h-row(lowest bit)
        std::size_t low = std::size_t(std::countr_zero(mask));
        std::size_t rest = mask & (mask - 1);
        if (rest) he.xor_row_from(mask - 1, rest - 1);
        he.xor_row_from(mask - 1, h, low);
    }
    return he;
}

BitMatrix puncture_columns(const BitMatrix& he, std::span<const std::size_t> cols) {
    if (cols.empty()) throw std::invalid_argument("puncture_columns: empty column set");
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] >= he.cols()) throw std::invalid_argument("puncture_columns: column index out of range");
        if (i > 0 && cols[i] <= cols[i - 1])
            throw std::invalid_argument("puncture_columns: columns must be strictly increasing");
    }
    BitMatrix hp(he.rows(), cols.size());
    for (std::size_t r = 0; r < he.rows(); ++r)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (he.get(r, cols[j])) hp.set(r, j, true);
    return hp;
}

std::optional<RowWeightHit> min_nonzero_row_weight(const BitMatrix& m) {
    std::optional<RowWeightHit> best;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::size_t w = m.row_weight(r);
        if (w == 0) continue;
        if (!best || w < best->weight) best = RowWeightHit{w, r};
        if (best->weight == 1) break;
    }
    return best;
}

BitVector xor_rows(std::span<const BitVector> vs) {
    if (vs.empty()) throw std::invalid_argument("xor_rows: empty list");
    BitVector acc = vs[0];
    for (std::size_t i = 1; i < vs.size(); ++i) acc ^= vs[i];
    return acc;
}

BitMatrix row_reduce(const BitMatrix& m) {
    BitMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.rows() && !a.get(pivot, c)) ++pivot;
        if (pivot == a.rows()) continue;
        a.swap_rows(r, pivot);
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != r && a.get(i, c)) a.xor_row_from(i, r);
        ++r;
    }
    return a;
}

std::size_t rank(const BitMatrix& m) {
    BitMatrix a = row_reduce(m);
    std::size_t r = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (a.row_any(i)) ++r;
    return r;
}

} // namespace pcw
