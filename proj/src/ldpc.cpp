#include "pcw/ldpc.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pcw {
namespace {

// Derive the systematic generator by GF(2) elimination of the dense H.
// Pivot columns become parity, non-pivot columns carry information.
void derive_generator(LdpcCode& code) {
    BitMatrix h(std::max<std::size_t>(code.m, 1), code.n);
    if (code.m == 0) throw std::invalid_argument("ldpc: no parity checks");
    for (std::size_t c = 0; c < code.m; ++c)
        for (auto v : code.check_nbrs[c]) h.set(c, v, true);

    BitMatrix red = row_reduce(h);
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> pivot_row_of(code.n, SIZE_MAX);
    for (std::size_t r = 0; r < red.rows(); ++r) {
        for (std::size_t c = 0; c < code.n; ++c) {
            if (red.get(r, c)) {
                pivots.push_back(c);
                pivot_row_of[c] = r;
                break;
            }
        }
    }
    std::sort(pivots.begin(), pivots.end());
    code.pivot_positions = pivots;
    code.info_positions.clear();
    for (std::size_t c = 0; c < code.n; ++c)
        if (pivot_row_of[c] == SIZE_MAX) code.info_positions.push_back(c);
    code.k = code.info_positions.size();

    code.generator_rows.clear();
    code.generator_rows.reserve(code.k);
    for (std::size_t f : code.info_positions) {
        BitVector g(code.n);
        g.set(f, true);
        for (std::size_t p : pivots) {
            if (red.get(pivot_row_of[p], f)) g.set(p, true);
        }
        code.generator_rows.push_back(std::move(g));
    }
    code.zero_degree_vars.clear();
    for (std::size_t v = 0; v < code.n; ++v)
        if (code.var_nbrs[v].empty()) code.zero_degree_vars.push_back(v);
}

void build_var_adjacency(LdpcCode& code) {
    code.var_nbrs.assign(code.n, {});
    for (std::size_t c = 0; c < code.m; ++c)
        for (auto v : code.check_nbrs[c]) code.var_nbrs[v].push_back(std::uint32_t(c));
}

} // namespace

LdpcCode load_alist(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<long>> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<long> nums;
        long x;
        while (ls >> x) nums.push_back(x);
        if (!ls.eof() && ls.fail()) {
            ls.clear();
            std::string junk;
            if (ls >> junk) throw std::invalid_argument("alist: non-numeric token '" + junk + "'");
        }
        if (!nums.empty()) lines.push_back(std::move(nums));
    }
    std::size_t li = 0;
    auto next_line = [&]() -> const std::vector<long>& {
        if (li >= lines.size()) throw std::invalid_argument("alist: truncated file");
        return lines[li++];
    };

    const auto& hdr = next_line();
    if (hdr.size() < 2 || hdr[0] < 1 || hdr[1] < 1)
        throw std::invalid_argument("alist: bad n/m header");
    LdpcCode code;
    code.n = std::size_t(hdr[0]);
    code.m = std::size_t(hdr[1]);
    next_line(); // max degrees; informational only

    const auto& vdeg = next_line();
    const auto& cdeg = next_line();
    if (vdeg.size() != code.n) throw std::invalid_argument("alist: variable degree count mismatch");
    if (cdeg.size() != code.m) throw std::invalid_argument("alist: check degree count mismatch");

    // variable lists are read but adjacency is built from the check lists
    std::vector<std::vector<std::uint32_t>> var_lists(code.n);
    for (std::size_t v = 0; v < code.n; ++v) {
        const auto& nums = next_line();
        for (long x : nums) {
            if (x == 0) continue; // padding
            if (x < 1 || std::size_t(x) > code.m)
                throw std::invalid_argument("alist: check index out of range");
            var_lists[v].push_back(std::uint32_t(x - 1));
        }
        if (var_lists[v].size() != std::size_t(vdeg[v]))
            throw std::invalid_argument("alist: variable neighbor count disagrees with degree");
    }
    code.check_nbrs.assign(code.m, {});
    for (std::size_t c = 0; c < code.m; ++c) {
        const auto& nums = next_line();
        for (long x : nums) {
            if (x == 0) continue;
            if (x < 1 || std::size_t(x) > code.n)
                throw std::invalid_argument("alist: variable index out of range");
            code.check_nbrs[c].push_back(std::uint32_t(x - 1));
        }
        if (code.check_nbrs[c].size() != std::size_t(cdeg[c]))
            throw std::invalid_argument("alist: check neighbor count disagrees with degree");
        std::sort(code.check_nbrs[c].begin(), code.check_nbrs[c].end());
    }
    build_var_adjacency(code);
    // cross-check the two lists describe the same graph
    for (std::size_t v = 0; v < code.n; ++v) {
        auto a = var_lists[v];
        std::sort(a.begin(), a.end());
        if (a != code.var_nbrs[v])
            throw std::invalid_argument("alist: variable and check lists disagree");
    }
    derive_generator(code);
    return code;
}

LdpcCode load_alist_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open alist file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return load_alist(ss.str());
}

std::string to_alist(const LdpcCode& code) {
    std::ostringstream out;
    std::size_t maxv = 0, maxc = 0;
    for (const auto& l : code.var_nbrs) maxv = std::max(maxv, l.size());
    for (const auto& l : code.check_nbrs) maxc = std::max(maxc, l.size());
    out << code.n << ' ' << code.m << '\n' << maxv << ' ' << maxc << '\n';
    for (std::size_t v = 0; v < code.n; ++v)
        out << code.var_nbrs[v].size() << (v + 1 < code.n ? ' ' : '\n');
    for (std::size_t c = 0; c < code.m; ++c)
        out << code.check_nbrs[c].size() << (c + 1 < code.m ? ' ' : '\n');
    for (std::size_t v = 0; v < code.n; ++v) {
        for (std::size_t i = 0; i < code.var_nbrs[v].size(); ++i)
            out << code.var_nbrs[v][i] + 1 << (i + 1 < code.var_nbrs[v].size() ? " " : "");
        out << '\n';
    }
    for (std::size_t c = 0; c < code.m; ++c) {
        for (std::size_t i = 0; i < code.check_nbrs[c].size(); ++i)
            out << code.check_nbrs[c][i] + 1 << (i + 1 < code.check_nbrs[c].size() ? " " : "");
        out << '\n';
    }
    return out.str();
}

LdpcCode from_parity_matrix(const BitMatrix& h) {
    LdpcCode code;
    code.n = h.cols();
    code.m = h.rows();
    code.check_nbrs.assign(code.m, {});
    for (std::size_t c = 0; c < code.m; ++c)
        for (std::size_t v = 0; v < code.n; ++v)
            if (h.get(c, v)) code.check_nbrs[c].push_back(std::uint32_t(v));
    build_var_adjacency(code);
    derive_generator(code);
    return code;
}

BitVector encode(const LdpcCode& code, const BitVector& info) {
    if (info.size() != code.k)
        throw std::invalid_argument("encode: info length must be k");
    BitVector cw(code.n);
    for (std::size_t i = 0; i < code.k; ++i)
        if (info.get(i)) cw ^= code.generator_rows[i];
    return cw;
}

BitVector extract_info(const LdpcCode& code, const BitVector& word) {
    if (word.size() != code.n)
        throw std::invalid_argument("extract_info: word length must be n");
    BitVector info(code.k);
    for (std::size_t i = 0; i < code.k; ++i)
        if (word.get(code.info_positions[i])) info.set(i, true);
    return info;
}

BitVector syndrome(const LdpcCode& code, const BitVector& word) {
    if (word.size() != code.n)
        throw std::invalid_argument("syndrome: word length must be n");
    BitVector s(code.m);
    for (std::size_t c = 0; c < code.m; ++c) {
        bool acc = false;
        for (auto v : code.check_nbrs[c]) acc ^= word.get(v);
        if (acc) s.set(c, true);
    }
    return s;
}

bool syndrome_is_zero(const LdpcCode& code, const BitVector& word) {
    for (std::size_t c = 0; c < code.m; ++c) {
        bool acc = false;
        for (auto v : code.check_nbrs[c]) acc ^= word.get(v);
        if (acc) return false;
    }
    return true;
}

DecodeOutcome bp_decode(const LdpcCode& code, const LlrVector& channel_llrs,
                        std::size_t max_iters) {
    if (channel_llrs.size() != code.n)
        throw std::invalid_argument("bp_decode: LLR length must be n");
    const double clamp = channel_llrs.clamp();

    // per-edge check-to-variable messages, indexed by (check, slot)
    std::vector<std::size_t> edge_base(code.m + 1, 0);
    for (std::size_t c = 0; c < code.m; ++c)
        edge_base[c + 1] = edge_base[c] + code.check_nbrs[c].size();
    std::vector<double> c2v(edge_base[code.m], 0.0);

    std::vector<double> posterior(code.n);
    for (std::size_t v = 0; v < code.n; ++v) posterior[v] = channel_llrs[v];

    std::vector<double> fwd, bwd, t;
    DecodeOutcome out;
    for (std::size_t iter = 0;; ++iter) {
        BitVector hard(code.n);
        for (std::size_t v = 0; v < code.n; ++v)
            if (posterior[v] < 0.0) hard.set(v, true);
        if (syndrome_is_zero(code, hard)) {
            out.status = DecodeOutcome::Status::Success;
            out.codeword = std::move(hard);
            out.iterations_used = iter;
            out.final_llrs = LlrVector(posterior, clamp);
            return out;
        }
        if (iter == max_iters) {
            out.status = DecodeOutcome::Status::Failure;
            out.codeword = std::move(hard);
            out.iterations_used = iter;
            out.final_llrs = LlrVector(posterior, clamp);
            return out;
        }

        // check update, tanh rule via leave-one-out boxplus
        for (std::size_t c = 0; c < code.m; ++c) {
            const auto& nbrs = code.check_nbrs[c];
            const std::size_t d = nbrs.size();
            if (d == 0) continue;
            t.resize(d);
            for (std::size_t j = 0; j < d; ++j)
                t[j] = clamp_llr(posterior[nbrs[j]] - c2v[edge_base[c] + j], clamp);
            if (d == 1) {
                c2v[edge_base[c]] = clamp; // empty product is certainty of 0
                continue;
            }
            fwd.resize(d);
            bwd.resize(d);
            fwd[0] = t[0];
            for (std::size_t j = 1; j < d; ++j) fwd[j] = boxplus(fwd[j - 1], t[j], clamp);
            bwd[d - 1] = t[d - 1];
            for (std::size_t j = d - 1; j-- > 0;) bwd[j] = boxplus(bwd[j + 1], t[j], clamp);
            for (std::size_t j = 0; j < d; ++j) {
                double msg;
                if (j == 0) msg = bwd[1];
                else if (j == d - 1) msg = fwd[d - 2];
                else msg = boxplus(fwd[j - 1], bwd[j + 1], clamp);
                c2v[edge_base[c] + j] = msg;
            }
        }
        // posterior update
        for (std::size_t v = 0; v < code.n; ++v) posterior[v] = channel_llrs[v];
        for (std::size_t c = 0; c < code.m; ++c) {
            const auto& nbrs = code.check_nbrs[c];
            for (std::size_t j = 0; j < nbrs.size(); ++j)
                posterior[nbrs[j]] = clamp_llr(posterior[nbrs[j]] + c2v[edge_base[c] + j], clamp);
        }
    }
}

std::vector<std::uint8_t> apply_puncture(const LdpcCode& code, const BitVector& word) {
    if (word.size() != code.n)
        throw std::invalid_argument("apply_puncture: word length must be n");
    std::vector<std::uint8_t> out;
    out.reserve(code.n - code.puncture_pattern.size());
    std::size_t pi = 0;
    for (std::size_t v = 0; v < code.n; ++v) {
        if (pi < code.puncture_pattern.size() && code.puncture_pattern[pi] == v) {
            ++pi;
            continue;
        }
        out.push_back(word.get(v) ? 1 : 0);
    }
    return out;
}

void set_rate_matched_puncture(LdpcCode& code) {
    const std::size_t count = (code.n + 23) / 24;
    const auto& parity = code.pivot_positions;
    if (count > parity.size())
        throw std::invalid_argument("set_rate_matched_puncture: not enough parity positions");
    code.puncture_pattern.clear();
    for (std::size_t j = 0; j < count; ++j)
        code.puncture_pattern.push_back(parity[j * parity.size() / count]);
    std::sort(code.puncture_pattern.begin(), code.puncture_pattern.end());
    code.puncture_pattern.erase(
        std::unique(code.puncture_pattern.begin(), code.puncture_pattern.end()),
        code.puncture_pattern.end());
}

} // namespace pcw
