#ifndef PCW_CODESPEC_HPP
#define PCW_CODESPEC_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "pcw/ldpc.hpp"
#include "pcw/vertical.hpp"

namespace pcw {

// Vertical code specifier: spc:<n>, hamming:<m>, dpc:<n>, or
// file:<path> with the parity-check matrix in alist form.
VerticalCode parse_vertical_code(const std::string& spec);

// Horizontal code specifier: an alist path, optionally file:<path>.
LdpcCode parse_ldpc_code(const std::string& spec);

// "2..6" or "3,5,7" -> ascending unique values in [1, n].
std::vector<std::size_t> parse_e_values(const std::string& spec, std::size_t n);

// "a:step:b" inclusive sweep, or a single value, or "v1,v2,...".
std::vector<double> parse_snr_points(const std::string& spec);

} // namespace pcw

#endif
