#ifndef PCW_BITS_HPP
#define PCW_BITS_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pcw {

// Dense GF(2) vector, packed 64 bits per word.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), w_((len + 63) / 64, 0) {}

    static BitVector from_bits(std::initializer_list<int> bits);
    static BitVector from_string(const std::string& s); // "1011", ignores spaces

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }
    bool operator==(const BitVector& o) const { return len_ == o.len_ && w_ == o.w_; }

    std::size_t weight() const {
        std::size_t w = 0;
        for (auto x : w_) w += std::popcount(x);
        return w;
    }
    bool any() const {
        for (auto x : w_) if (x) return true;
        return false;
    }
    std::span<const std::uint64_t> words() const { return w_; }
    std::span<std::uint64_t> words() { return w_; }
    std::string to_string() const;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dense GF(2) matrix, row-major packed storage.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t m = std::uint64_t{1} << (c & 63);
        auto& word = w_[r * wpr_ + (c >> 6)];
        if (v) word |= m; else word &= ~m;
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {w_.data() + r * wpr_, wpr_};
    }
    void xor_row_from(std::size_t dst, std::size_t src); // row[dst] ^= row[src]
    void xor_row_from(std::size_t dst, const BitMatrix& other, std::size_t src);
    std::size_t row_weight(std::size_t r) const;
    bool row_any(std::size_t r) const;
    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    void swap_rows(std::size_t a, std::size_t b);

    bool has_zero_column() const;
    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
    }
    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

// All 2^m - 1 nonzero row combinations of h, ordered by ascending
// combination mask.  Requires m <= 20 and no all-zero column.
BitMatrix extend_parity_check(const BitMatrix& h);

// Column selection; cols must be strictly increasing and in range.
BitMatrix puncture_columns(const BitMatrix& he, std::span<const std::size_t> cols);

struct RowWeightHit {
    std::size_t weight;
    std::size_t row_index;
};

// Smallest nonzero row weight and the smallest row index attaining it.
// Empty when every row is all-zero.
std::optional<RowWeightHit> min_nonzero_row_weight(const BitMatrix& m);

BitVector xor_rows(std::span<const BitVector> vs);

std::size_t rank(const BitMatrix& m);
BitMatrix row_reduce(const BitMatrix& m); // reduced row echelon form

} // namespace pcw

#endif
