#include "pcw/codespec.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>

namespace pcw {
namespace {

std::size_t parse_count(const std::string& s, const char* what) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw std::invalid_argument(std::string("expected an integer for ") + what +
                                    ", got '" + s + "'");
    return v;
}

double parse_real(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument(std::string("expected a number for ") + what +
                                    ", got '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t p = s.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
}

BitMatrix dense_h(const LdpcCode& code) {
    BitMatrix h(code.m, code.n);
    for (std::size_t c = 0; c < code.m; ++c)
        for (std::uint32_t v : code.check_nbrs[c]) h.set(c, v, true);
    return h;
}

} // namespace

VerticalCode parse_vertical_code(const std::string& spec) {
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("vertical code specifier must look like "
                                    "spc:<n>, hamming:<m>, dpc:<n>, or file:<path>");
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (kind == "spc") return make_spc(parse_count(arg, "spc length"));
    if (kind == "hamming") return make_hamming(parse_count(arg, "hamming parity rows"));
    if (kind == "dpc") return make_dpc(parse_count(arg, "dpc length"));
    if (kind == "file") {
        LdpcCode code = load_alist_file(arg);
        return make_from_matrix("file:" + arg, dense_h(code));
    }
    throw std::invalid_argument("unknown vertical code kind '" + kind + "'");
}

LdpcCode parse_ldpc_code(const std::string& spec) {
    const std::string path =
        spec.rfind("file:", 0) == 0 ? spec.substr(5) : spec;
    return load_alist_file(path);
}

std::vector<std::size_t> parse_e_values(const std::string& spec, std::size_t n) {
    std::set<std::size_t> vals;
    for (const std::string& part : split(spec, ',')) {
        std::size_t dots = part.find("..");
        if (dots != std::string::npos) {
            std::size_t lo = parse_count(part.substr(0, dots), "e range start");
            std::size_t hi = parse_count(part.substr(dots + 2), "e range end");
            if (lo > hi) throw std::invalid_argument("empty e range '" + part + "'");
            for (std::size_t e = lo; e <= hi; ++e) vals.insert(e);
        } else {
            vals.insert(parse_count(part, "e value"));
        }
    }
    if (vals.empty()) throw std::invalid_argument("no e values given");
    for (std::size_t e : vals)
        if (e < 1 || e > n)
            throw std::invalid_argument("e = " + std::to_string(e) +
                                        " out of range for code length " + std::to_string(n));
    return {vals.begin(), vals.end()};
}

std::vector<double> parse_snr_points(const std::string& spec) {
    if (spec.find(':') != std::string::npos) {
        auto parts = split(spec, ':');
        if (parts.size() != 3)
            throw std::invalid_argument("SNR sweep must be a:step:b");
        double a = parse_real(parts[0], "SNR start");
        double step = parse_real(parts[1], "SNR step");
        double b = parse_real(parts[2], "SNR end");
        if (step <= 0.0) throw std::invalid_argument("SNR step must be positive");
        if (b < a) throw std::invalid_argument("SNR end below start");
        std::vector<double> out;
        // half-step slack so a:0.5:b includes b despite rounding
        for (double x = a; x <= b + step / 2; x += step) out.push_back(x);
        return out;
    }
    std::vector<double> out;
    for (const std::string& part : split(spec, ','))
        out.push_back(parse_real(part, "SNR point"));
    return out;
}

} // namespace pcw
