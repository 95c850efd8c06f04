#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "pcw/vertical.hpp"

using namespace pcw;

namespace {

std::vector<BitVector> random_rows(std::size_t count, std::size_t len,
                                   std::mt19937_64& rng) {
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < count; ++i) {
        BitVector r(len);
        for (std::size_t j = 0; j < len; ++j)
            if (rng() & 1) r.set(j, true);
        rows.push_back(r);
    }
    return rows;
}

void check_columns_are_codewords(const std::vector<BitVector>& rows,
                                 const VerticalCode& code) {
    REQUIRE(rows.size() == code.n);
    const std::size_t width = rows[0].size();
    for (std::size_t r = 0; r < code.m; ++r) {
        BitVector acc(width);
        for (std::size_t i = 0; i < code.n; ++i)
            if (code.h.get(r, i)) acc ^= rows[i];
        CHECK_FALSE(acc.any());
    }
}

std::map<std::uint64_t, std::size_t> column_multiset(const VerticalCode& c) {
    std::map<std::uint64_t, std::size_t> out;
    for (std::size_t col = 0; col < c.n; ++col) {
        std::uint64_t v = 0;
        for (std::size_t r = 0; r < c.m; ++r)
            if (c.h.get(r, col)) v |= std::uint64_t{1} << r;
        ++out[v];
    }
    return out;
}

} // namespace

TEST_CASE("single parity-check construction") {
    VerticalCode c = make_spc(24);
    CHECK(c.n == 24);
    CHECK(c.k == 23);
    CHECK(c.m == 1);
    CHECK(c.big_m == 1);
    CHECK(c.d_min == 2);
    CHECK(c.h.rows() == 1);
    CHECK(c.h.row_weight(0) == 24);
    REQUIRE(c.parity_positions.size() == 1);
    CHECK(c.parity_positions[0] == 23);
    CHECK_THROWS(make_spc(1));
}

TEST_CASE("Hamming m=3 matches the fixture matrix") {
    VerticalCode c = make_hamming(3);
    CHECK(c.n == 7);
    CHECK(c.k == 4);
    CHECK(c.d_min == 3);
    const char* want[3] = {"1011100", "1110010", "0111001"};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t col = 0; col < 7; ++col)
            CHECK(c.h.get(r, col) == (want[r][col] == '1'));
    CHECK(c.systematic_positions == std::vector<std::size_t>({0, 1, 2, 3}));
    CHECK(c.parity_positions == std::vector<std::size_t>({4, 5, 6}));
}

TEST_CASE("Hamming general construction") {
    for (std::size_t m = 2; m <= 6; ++m) {
        VerticalCode c = make_hamming(m);
        CHECK(c.n == (std::size_t{1} << m) - 1);
        CHECK(c.k == c.n - m);
        auto cols = column_multiset(c);
        CHECK(cols.size() == c.n); // pairwise distinct nonzero m-tuples
        for (const auto& [v, cnt] : cols) {
            CHECK(v != 0);
            CHECK(cnt == 1);
        }
        if (c.n <= 24) CHECK(compute_d_min(c) == 3);
    }
    CHECK_THROWS(make_hamming(1));
    CHECK_THROWS(make_hamming(11));
}

TEST_CASE("double parity-check construction") {
    VerticalCode c6 = make_dpc(6);
    CHECK(c6.n == 6);
    CHECK(c6.k == 4);
    CHECK(c6.m == 2);
    CHECK(c6.d_min == 2);
    // every nonzero 2-tuple appears exactly twice as a column
    auto cols = column_multiset(c6);
    REQUIRE(cols.size() == 3);
    for (const auto& [v, cnt] : cols) CHECK(cnt == 2);

    VerticalCode c12 = make_dpc(12);
    CHECK(c12.n == 12);
    CHECK(c12.k == 10);
    CHECK(c12.d_min == 2);
    auto cols12 = column_multiset(c12);
    REQUIRE(cols12.size() == 3);
    for (const auto& [v, cnt] : cols12) CHECK(cnt == 4);

    VerticalCode c3 = make_dpc(3);
    CHECK(c3.n == 3);
    CHECK(c3.k == 1);

    CHECK_THROWS(make_dpc(8));
}

TEST_CASE("column encoding satisfies every parity relation") {
    std::mt19937_64 rng(5);
    for (const VerticalCode& code :
         {make_spc(4), make_spc(24), make_hamming(3), make_dpc(6), make_dpc(12)}) {
        auto info = random_rows(code.k, 16, rng);
        auto rows = encode_columns(info, code);
        REQUIRE(rows.size() == code.n);
        for (std::size_t i = 0; i < code.k; ++i)
            CHECK(rows[code.systematic_positions[i]] == info[i]);
        check_columns_are_codewords(rows, code);
    }
}

TEST_CASE("column encoding corner cases") {
    VerticalCode spc4 = make_spc(4);
    std::mt19937_64 rng(6);
    auto info = random_rows(3, 8, rng);
    auto rows = encode_columns(info, spc4);
    CHECK(rows[3] == (info[0] ^ info[1] ^ info[2])); // even parity

    std::vector<BitVector> zeros(3, BitVector(8));
    auto zrows = encode_columns(zeros, spc4);
    for (const auto& r : zrows) CHECK_FALSE(r.any());

    std::vector<BitVector> wrong_count(2, BitVector(8));
    CHECK_THROWS(encode_columns(wrong_count, spc4));
}

TEST_CASE("encoded Hamming matrix satisfies the seven check equations") {
    VerticalCode h3 = make_hamming(3);
    std::mt19937_64 rng(7);
    auto info = random_rows(4, 12, rng);
    auto rows = encode_columns(info, h3);
    auto z = [&](std::initializer_list<std::size_t> idx) {
        BitVector acc(12);
        for (std::size_t i : idx) acc ^= rows[i];
        return !acc.any();
    };
    // s1 s2 s3 s4 p1 p2 p3 = rows 0..6
    CHECK(z({0, 2, 3, 4}));
    CHECK(z({0, 1, 2, 5}));
    CHECK(z({1, 2, 3, 6}));
    CHECK(z({1, 3, 4, 5}));
    CHECK(z({0, 1, 4, 6}));
    CHECK(z({0, 3, 5, 6}));
    CHECK(z({2, 4, 5, 6}));
}

TEST_CASE("d_min values") {
    CHECK(compute_d_min(make_spc(8)) == 2);
    CHECK(compute_d_min(make_hamming(3)) == 3);
    CHECK(compute_d_min(make_dpc(6)) == 2);
    CHECK(compute_d_min(make_dpc(12)) == 2);
}

TEST_CASE("make_from_matrix derives systematic structure") {
    VerticalCode ref = make_hamming(3);
    VerticalCode c = make_from_matrix("custom", ref.h);
    CHECK(c.n == 7);
    CHECK(c.k == 4);
    std::mt19937_64 rng(8);
    auto info = random_rows(4, 10, rng);
    auto rows = encode_columns(info, c);
    check_columns_are_codewords(rows, c);

    BitMatrix zero_col(2, 3);
    zero_col.set(0, 0, true);
    zero_col.set(1, 1, true);
    CHECK_THROWS(make_from_matrix("bad", zero_col));
}
