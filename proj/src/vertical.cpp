#include "pcw/vertical.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcw {
namespace {

// Solve h restricted to (parity | systematic) columns for the parity map:
// B * p = A * s  =>  p = inv(B) * A * s.
void finalize(VerticalCode& c) {
    if (c.h.has_zero_column())
        throw std::invalid_argument(c.name + ": parity-check matrix has an all-zero column");
    c.n = c.h.cols();
    c.m = c.h.rows();
    if (c.m > 20) throw std::invalid_argument(c.name + ": more than 20 parity rows");
    c.big_m = (std::size_t{1} << c.m) - 1;

    const std::size_t p_cnt = c.parity_positions.size();
    c.k = c.systematic_positions.size();
    if (c.k + p_cnt != c.n)
        throw std::invalid_argument(c.name + ": systematic/parity positions do not partition columns");
    if (c.k == 0)
        throw std::invalid_argument(c.name + ": code has no information positions");

    BitMatrix aug(c.m, p_cnt + c.k);
    for (std::size_t r = 0; r < c.m; ++r) {
        for (std::size_t j = 0; j < p_cnt; ++j)
            if (c.h.get(r, c.parity_positions[j])) aug.set(r, j, true);
        for (std::size_t i = 0; i < c.k; ++i)
            if (c.h.get(r, c.systematic_positions[i])) aug.set(r, p_cnt + i, true);
    }
    BitMatrix red = row_reduce(aug);

    c.parity_map = BitMatrix(std::max<std::size_t>(p_cnt, 1), std::max<std::size_t>(c.k, 1));
    std::vector<bool> solved(p_cnt, false);
    for (std::size_t r = 0; r < c.m; ++r) {
        std::size_t pivot = p_cnt + c.k;
        for (std::size_t col = 0; col < p_cnt + c.k; ++col)
            if (red.get(r, col)) { pivot = col; break; }
        if (pivot >= p_cnt + c.k) continue; // zero row (redundant check)
        if (pivot >= p_cnt)
            throw std::invalid_argument(c.name + ": parity columns are not invertible");
        for (std::size_t i = 0; i < c.k; ++i)
            if (red.get(r, p_cnt + i)) c.parity_map.set(pivot, i, true);
        solved[pivot] = true;
    }
    for (std::size_t j = 0; j < p_cnt; ++j)
        if (!solved[j])
            throw std::invalid_argument(c.name + ": rank of parity-check does not match parity count");
    if (rank(c.h) != p_cnt)
        throw std::invalid_argument(c.name + ": parity count must equal rank of parity-check");
}

void fill_tail_positions(VerticalCode& c, std::size_t n, std::size_t p_cnt) {
    c.systematic_positions.clear();
    c.parity_positions.clear();
    for (std::size_t i = 0; i < n - p_cnt; ++i) c.systematic_positions.push_back(i);
    for (std::size_t i = n - p_cnt; i < n; ++i) c.parity_positions.push_back(i);
}

// (x^n + 1) / (x^2 + x + 1) over GF(2), polynomials as bitmasks.
std::uint64_t dpc_check_poly(std::size_t n) {
    std::uint64_t num = (std::uint64_t{1} << n) | 1u;
    const std::uint64_t den = 0b111;
    std::uint64_t q = 0;
    while (num != 0 && (63 - std::size_t(std::countl_zero(num))) >= 2) {
        std::size_t sh = (63 - std::size_t(std::countl_zero(num))) - 2;
        q |= std::uint64_t{1} << sh;
        num ^= den << sh;
    }
    if (num != 0)
        throw std::invalid_argument("make_dpc: x^2+x+1 does not divide x^n+1 (n not a multiple of 3)");
    return q;
}

} // namespace

VerticalCode make_spc(std::size_t n) {
    if (n < 2) throw std::invalid_argument("make_spc: n must be >= 2");
    VerticalCode c;
    c.name = "spc:" + std::to_string(n);
    c.h = BitMatrix(1, n);
    for (std::size_t i = 0; i < n; ++i) c.h.set(0, i, true);
    fill_tail_positions(c, n, 1);
    finalize(c);
    c.d_min = n <= 24 ? compute_d_min(c) : 2;
    return c;
}

VerticalCode make_hamming(std::size_t m) {
    if (m < 2 || m > 10) throw std::invalid_argument("make_hamming: m must be in [2, 10]");
    const std::size_t n = (std::size_t{1} << m) - 1;
    std::vector<std::size_t> cols;
    if (m == 3) {
        cols = {6, 3, 7, 5, 4, 2, 1};
    } else {
        for (std::size_t v = 1; v <= n; ++v)
            if (std::popcount(v) >= 2) cols.push_back(v);
        for (std::size_t i = 0; i < m; ++i) cols.push_back(std::size_t{1} << (m - 1 - i));
    }
    VerticalCode c;
    c.name = "hamming:" + std::to_string(m);
    c.h = BitMatrix(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((cols[j] >> (m - 1 - i)) & 1u) c.h.set(i, j, true);
    fill_tail_positions(c, n, m);
    finalize(c);
    c.d_min = n <= 24 ? compute_d_min(c) : 3;
    return c;
}

VerticalCode make_dpc(std::size_t n) {
    if (n < 3 || n % 3 != 0)
        throw std::invalid_argument("make_dpc: n must be a positive multiple of 3");
    if (n > 62) throw std::invalid_argument("make_dpc: n too large");
    std::uint64_t hpoly = dpc_check_poly(n); // degree n - 2
    VerticalCode c;
    c.name = "dpc:" + std::to_string(n);
    c.h = BitMatrix(2, n);
    // rows are the two shifts of the reversed check polynomial
    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t i = 0; i <= n - 2; ++i)
            if ((hpoly >> (n - 2 - i)) & 1u) c.h.set(s, s + i, true);
    fill_tail_positions(c, n, 2);
    finalize(c);
    c.d_min = n <= 24 ? compute_d_min(c) : 2;
    return c;
}

VerticalCode make_from_matrix(std::string name, const BitMatrix& h) {
    VerticalCode c;
    c.name = std::move(name);
    c.h = h;
    // pick pivot (parity) columns right to left so parity sits last
    BitMatrix a = h;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t cc = a.cols(); cc-- > 0 && r < a.rows();) {
        std::size_t p = r;
        while (p < a.rows() && !a.get(p, cc)) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != r && a.get(i, cc)) a.xor_row_from(i, r);
        pivots.push_back(cc);
        ++r;
    }
    std::sort(pivots.begin(), pivots.end());
    c.parity_positions = pivots;
    for (std::size_t i = 0; i < h.cols(); ++i)
        if (!std::binary_search(pivots.begin(), pivots.end(), i))
            c.systematic_positions.push_back(i);
    finalize(c);
    c.d_min = c.n <= 24 ? compute_d_min(c) : 0;
    return c;
}

std::vector<BitVector> encode_columns(const std::vector<BitVector>& info_rows,
                                      const VerticalCode& code) {
    if (info_rows.size() != code.k)
        throw std::invalid_argument("encode_columns: expected " + std::to_string(code.k) + " info rows");
    const std::size_t width = info_rows.front().size();
    for (const auto& r : info_rows)
        if (r.size() != width)
            throw std::invalid_argument("encode_columns: info rows have unequal lengths");

    std::vector<BitVector> out(code.n, BitVector(width));
    for (std::size_t i = 0; i < code.k; ++i)
        out[code.systematic_positions[i]] = info_rows[i];
    for (std::size_t j = 0; j < code.parity_positions.size(); ++j) {
        BitVector p(width);
        for (std::size_t i = 0; i < code.k; ++i)
            if (code.parity_map.get(j, i)) p ^= info_rows[i];
        out[code.parity_positions[j]] = p;
    }
    return out;
}

std::size_t compute_d_min(const VerticalCode& code) {
    if (code.n > 24) throw std::invalid_argument("compute_d_min: n > 24");
    // generator codewords as packed words; Gray-code walk over info space
    std::vector<std::uint32_t> gen(code.k, 0);
    for (std::size_t i = 0; i < code.k; ++i) {
        gen[i] |= std::uint32_t{1} << code.systematic_positions[i];
        for (std::size_t j = 0; j < code.parity_positions.size(); ++j)
            if (code.parity_map.get(j, i))
                gen[i] |= std::uint32_t{1} << code.parity_positions[j];
    }
    std::size_t best = code.n + 1;
    std::uint32_t cw = 0;
    const std::uint64_t total = std::uint64_t{1} << code.k;
    for (std::uint64_t g = 1; g < total; ++g) {
        cw ^= gen[std::countr_zero(g)];
        std::size_t w = std::size_t(std::popcount(cw));
        if (w < best) best = w;
    }
    return best;
}

} // namespace pcw
