#ifndef PCW_VERTICAL_HPP
#define PCW_VERTICAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "pcw/bits.hpp"

namespace pcw {

// Systematic linear code applied along the column direction of the
// codeword matrix.  Parity rows sit below the systematic rows.
struct VerticalCode {
    std::string name;
    BitMatrix h;       // m x n parity-check matrix, no all-zero column
    std::size_t n = 0; // code length = number of horizontal codewords
    std::size_t k = 0; // information rows, n - rank(h)
    std::size_t m = 0; // parity-check rows
    std::size_t big_m = 0; // 2^m - 1
    std::size_t d_min = 0;
    std::vector<std::size_t> systematic_positions; // k indices, ascending
    std::vector<std::size_t> parity_positions;     // n - k indices, ascending
    // parity row j = XOR of info rows i with parity_map(j, i) = 1
    BitMatrix parity_map; // (n - k) x k
};

// Single parity-check code of length n >= 2: h = all-ones row, d_min = 2.
VerticalCode make_spc(std::size_t n);

// Hamming code with m parity rows, 2 <= m <= 10.  Columns are all
// nonzero m-tuples, ordered so the code is systematic with parity rows
// last; m = 3 uses a fixed column order matching the usual textbook form.
VerticalCode make_hamming(std::size_t m);

// Double parity-check code: cyclic, generated by x^2 + x + 1, length a
// multiple of 3.  h rows are the two shifts of the reversed check
// polynomial h(x) = (x^n - 1) / (x^2 + x + 1).
VerticalCode make_dpc(std::size_t n);

// Arbitrary user-supplied parity-check matrix.  Systematic positions are
// chosen as the non-pivot columns (pivots picked right to left so parity
// lands as far right as possible).
VerticalCode make_from_matrix(std::string name, const BitMatrix& h);

// Column-wise systematic encoding: takes k information rows of equal
// length, returns n rows with parity rows filled in.
std::vector<BitVector> encode_columns(const std::vector<BitVector>& info_rows,
                                      const VerticalCode& code);

// Exhaustive minimum distance; requires n <= 24.
std::size_t compute_d_min(const VerticalCode& code);

} // namespace pcw

#endif
