#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pcw/llr.hpp"

using namespace pcw;

TEST_CASE("boxplus saturation shortcut is exact") {
    CHECK(boxplus(kLlrClamp, 5.0) == 5.0);
    CHECK(boxplus(-kLlrClamp, 5.0) == -5.0);
    CHECK(boxplus(5.0, kLlrClamp) == 5.0);
    CHECK(boxplus(5.0, -kLlrClamp) == -5.0);
    CHECK(boxplus(kLlrClamp, -kLlrClamp) == -kLlrClamp);
    CHECK(boxplus(kLlrClamp, kLlrClamp) == kLlrClamp);
}

TEST_CASE("boxplus zero is absorbing") {
    CHECK(boxplus(0.0, 7.3) == 0.0);
    CHECK(boxplus(-12.0, 0.0) == 0.0);
    CHECK(boxplus(0.0, 0.0) == 0.0);
}

TEST_CASE("boxplus frozen reference value") {
    // 2 atanh(tanh(1)^2) to the last double digit
    CHECK(boxplus(2.0, 2.0) == doctest::Approx(1.3250027473578644).epsilon(1e-15));
}

TEST_CASE("boxplus algebra over random operands") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> d(-20.0, 20.0);
    for (int t = 0; t < 100000; ++t) {
        double a = d(rng), b = d(rng), c = d(rng);
        double ab = boxplus(a, b);
        CHECK(std::fabs(ab - boxplus(b, a)) <= 1e-9);                       // commutative
        CHECK(std::fabs(boxplus(ab, c) - boxplus(a, boxplus(b, c))) <= 1e-9); // associative
        CHECK(std::fabs(boxplus(a, kLlrClamp) - a) <= 1e-9);                 // identity
        if (a != 0.0 && b != 0.0) {
            double want = (a < 0) == (b < 0) ? 1.0 : -1.0;
            CHECK(ab * want >= 0.0); // sign rule
        }
        CHECK(std::fabs(ab) <= std::min(std::fabs(a), std::fabs(b)) + 1e-12);
        // agreement with the textbook formula away from saturation; the
        // naive atanh form itself loses digits at large magnitudes, so
        // the tolerance here is looser than for the algebraic laws
        double direct = 2.0 * std::atanh(std::tanh(a / 2) * std::tanh(b / 2));
        CHECK(std::fabs(ab - direct) <= 1e-7);
    }
}

TEST_CASE("LlrVector clamps and hard-decides") {
    LlrVector v(3);
    v.set(0, 100.0);
    v.set(1, -4.0);
    v.set(2, 0.0);
    CHECK(v[0] == kLlrClamp);
    CHECK(v[1] == -4.0);
    BitVector hd = v.hard_decision();
    CHECK_FALSE(hd.get(0));
    CHECK(hd.get(1));
    CHECK_FALSE(hd.get(2)); // tie goes to bit 0
}

TEST_CASE("hard_to_llr") {
    BitVector w = BitVector::from_string("010");
    LlrVector r = hard_to_llr(w);
    CHECK(r[0] == kLlrClamp);
    CHECK(r[1] == -kLlrClamp);
    CHECK(r[2] == kLlrClamp);
}

TEST_CASE("boxplus_vectors folds elementwise") {
    LlrVector a({1.0, -2.0, 3.0});
    LlrVector b({4.0, 5.0, -6.0});
    LlrVector c({-0.5, 1.5, 2.5});
    std::vector<LlrVector> vs{a, b, c};
    LlrVector out = boxplus_vectors(vs);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(out[i] == doctest::Approx(boxplus(boxplus(a[i], b[i]), c[i])).epsilon(1e-12));

    std::vector<LlrVector> single{a};
    LlrVector same = boxplus_vectors(single);
    for (std::size_t i = 0; i < 3; ++i) CHECK(same[i] == a[i]);

    LlrVector sat(3);
    for (std::size_t i = 0; i < 3; ++i) sat.set(i, kLlrClamp);
    std::vector<LlrVector> with_id{a, sat};
    LlrVector idr = boxplus_vectors(with_id);
    for (std::size_t i = 0; i < 3; ++i) CHECK(idr[i] == a[i]);

    std::vector<LlrVector> bad{a, LlrVector(2)};
    CHECK_THROWS(boxplus_vectors(bad));
}

TEST_CASE("add_llrs clamps the sum") {
    LlrVector a({20.0, -20.0, 1.0});
    LlrVector b({20.0, -20.0, 2.0});
    LlrVector s = add_llrs(a, b);
    CHECK(s[0] == kLlrClamp);
    CHECK(s[1] == -kLlrClamp);
    CHECK(s[2] == 3.0);
}
