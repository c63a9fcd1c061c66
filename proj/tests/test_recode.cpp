// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ecmul/recode.hpp"

using namespace ecmul;

TEST_CASE("recode: binary digits") {
    CHECK(recode_binary(BigInt(0)).digits.empty());
    auto s7 = recode_binary(BigInt(7));
    CHECK(s7.digits == std::vector<std::int32_t>{1, 1, 1});
    CHECK(s7.evaluate() == 7);
    std::mt19937_64 rng(61);
    for (int i = 0; i < 1000; ++i) {
        BigInt k = random_bits(rng, 160);
        auto s = recode_binary(k);
        REQUIRE(s.evaluate() == k);
        for (auto d : s.digits) REQUIRE((d == 0 || d == 1));
    }
}

TEST_CASE("recode: binary Hamming weight averages m/2") {
    std::mt19937_64 rng(62);
    const int n = 10000;
    std::uint64_t total = 0;
    for (int i = 0; i < n; ++i)
        total += recode_binary(random_bits(rng, 160)).nonzero_count();
    double mean = double(total) / n;
    CHECK(std::abs(mean - 80.0) / 80.0 < 0.02);
}

TEST_CASE("recode: NAF of 7 is 8 - 1 and non-adjacency always holds") {
    auto s = recode_naf(BigInt(7));
    CHECK(s.digits == std::vector<std::int32_t>{-1, 0, 0, 1});
    CHECK(recode_naf(BigInt(0)).digits.empty());

    std::mt19937_64 rng(63);
    for (int i = 0; i < 20000; ++i) {
        BigInt k = random_bits(rng, 160);
        auto nf = recode_naf(k);
        REQUIRE(nf.evaluate() == k);
        for (std::size_t j = 0; j + 1 < nf.digits.size(); ++j) {
            REQUIRE(!(nf.digits[j] != 0 && nf.digits[j + 1] != 0));
            REQUIRE(std::abs(nf.digits[j]) <= 1);
        }
    }
}

TEST_CASE("recode: wNAF digit constraints and value preservation") {
    auto s = recode_wnaf(BigInt(7), 3);
    REQUIRE(s.digits.size() == 4);
    CHECK(s.digits[0] == -1);
    CHECK(s.digits[3] == 1);

    std::mt19937_64 rng(64);
    for (int i = 0; i < 5000; ++i) {
        BigInt k = random_bits(rng, 160);
        for (int w : {2, 3, 4, 5}) {
            auto nf = recode_wnaf(k, w);
            REQUIRE(nf.evaluate() == k);
            int last_nonzero = -w - 1;
            for (std::size_t j = 0; j < nf.digits.size(); ++j) {
                auto d = nf.digits[j];
                if (d == 0) continue;
                REQUIRE(d % 2 != 0);
                REQUIRE(std::abs(d) < (1 << (w - 1)));
                REQUIRE(int(j) - last_nonzero >= w);
                last_nonzero = int(j);
            }
        }
        // w = 2 coincides with NAF
        REQUIRE(recode_wnaf(k, 2).digits == recode_naf(k).digits);
    }
}

TEST_CASE("recode: wNAF nonzero density approaches 1/(w+1)") {
    // Density over the scheme's nominal m+1 digit positions (the analytic
    // model's doubling count for wNAF is m + 1).
    std::mt19937_64 rng(65);
    const int n = 10000;
    const unsigned m = 160;
    for (int w : {3, 4, 5}) {
        std::uint64_t nonzeros = 0;
        std::mt19937_64 r2(rng());
        for (int i = 0; i < n; ++i) {
            BigInt k = random_bits(r2, m, /*msb_set=*/true);
            nonzeros += recode_wnaf(k, w).nonzero_count();
        }
        double density = double(nonzeros) / (double(n) * (m + 1));
        CHECK(std::abs(density * (w + 1) - 1.0) < 0.02);
    }
}

TEST_CASE("recode: complement identity instances") {
    // m = 3, k = 5: C1 = (2^3 - 1) - 5 = 2 and 2^3 - 2 - 1 = 5
    BigInt k = 5;
    BigInt c1 = (BigInt(7)) - k;
    CHECK(c1 == 2);
    CHECK((BigInt(8) - c1 - 1) == k);

    // the all-ones scalar collapses to 2^m - 1 = 2^w * 2^(m-w) - 1
    auto s = recode_complement_window((BigInt(1) << 8) - 1, 8, 3);
    CHECK(s.evaluate() == 255);
    CHECK(s.digits.back() == 8);  // leading digit 2^w
    CHECK(s.nonzero_count() == 2);
}

TEST_CASE("recode: complement-window structure and value preservation") {
    std::mt19937_64 rng(66);
    const unsigned m = 160;
    for (int i = 0; i < 5000; ++i) {
        BigInt k = random_bits(rng, m, /*msb_set=*/true);
        for (int w : {3, 5, 10}) {
            auto s = recode_complement_window(k, m, w);
            REQUIRE(s.evaluate() == k);
            // consumable in exactly m - w doublings
            REQUIRE(s.digits.size() == m - unsigned(w) + 1);
            auto lead = s.digits.back();
            REQUIRE(lead >= 1);
            REQUIRE(lead <= (1 << w));
            int last_nonzero = -(w + 2);
            std::size_t nonzero_low = 0;
            for (std::size_t j = 0; j + 1 < s.digits.size(); ++j) {
                auto d = s.digits[j];
                if (d == 0) continue;
                ++nonzero_low;
                REQUIRE(d % 2 != 0);
                REQUIRE(std::abs(d) <= (1 << w) - 1);
                REQUIRE(int(j) - last_nonzero >= w + 1);
                last_nonzero = int(j);
            }
            // addition bound: ceil((m-w)/(w+1)) + 1 covers lower digits plus
            // the assembly of an even leading multiple
            std::size_t adds = nonzero_low + (lead % 2 == 0 ? 1 : 0);
            REQUIRE(adds <= std::size_t((m - w + (w + 1) - 1) / (w + 1)) + 1);
        }
    }
    // value preservation for shorter scalars, recoded in their own bit length
    for (int i = 0; i < 5000; ++i) {
        BigInt k = random_bits(rng, m);
        unsigned bits = 0;
        for (BigInt t = k; t > 0; t >>= 1) ++bits;
        if (bits <= 5) continue;
        auto s = recode_complement_window(k, bits, 4);
        REQUIRE(s.evaluate() == k);
        REQUIRE(s.digits.size() == bits - 4 + 1);
    }
}

TEST_CASE("recode: argument validation") {
    CHECK_THROWS_AS(recode_wnaf(BigInt(5), 1), std::invalid_argument);
    CHECK_THROWS_AS(recode_complement_window(BigInt(0), 8, 3), std::invalid_argument);
    CHECK_THROWS_AS(recode_complement_window(BigInt(256), 8, 3), std::invalid_argument);
    CHECK_THROWS_AS(recode_complement_window(BigInt(5), 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(recode_binary(BigInt(-1)), std::invalid_argument);
}

TEST_CASE("recode: analytic cost model reproduces the published tables") {
    // binary row: m/2 additions, m doublings
    auto b = cost_model(Scheme::Binary, 160);
    CHECK(b.point_adds == Rational(80));
    CHECK(b.point_doubles == Rational(160));

    // recoded binary (NAF): m/3, m + 1
    auto nf = cost_model(Scheme::Naf, 160);
    CHECK(nf.point_adds == Rational(160, 3));
    CHECK(nf.point_doubles == Rational(161));

    // wNAF: m/(w+1) additions, m + 1 doublings, 2^(w-1) - 1 stored multiples
    for (int w : {3, 4, 5}) {
        auto cm = cost_model(Scheme::Wnaf, 160, w);
        CHECK(cm.point_adds == Rational(160, w + 1));
        CHECK(cm.point_doubles == Rational(161));
        CHECK(cm.precomp_stored == (1 << (w - 1)) - 1);
    }

    // complement window: the three published rows (PA, PD, precomputations)
    struct Row { int w; std::int64_t pa, pd, pre; };
    for (auto row : {Row{3, 40, 157, 7}, Row{5, 27, 155, 31}, Row{10, 15, 150, 1023}}) {
        auto cm = cost_model(Scheme::ComplementWindow, 160, row.w);
        CHECK(cm.point_adds.ceil() == row.pa);
        CHECK(cm.point_doubles == Rational(row.pd));
        CHECK(cm.precomp_reachable == row.pre);
    }
    CHECK_THROWS_AS(cost_model(Scheme::Wnaf, 160, 1), std::invalid_argument);
}
