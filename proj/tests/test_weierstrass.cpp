// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <memory>
#include <random>

#include "ecmul/oracle.hpp"
#include "ecmul/weierstrass.hpp"
#include "helpers.hpp"

using namespace ecmul;
using ecmul::test::fp_from_bigint;
using ecmul::test::fp_value;

namespace {

using Curve64 = WeierstrassCurve<std::uint64_t>;

std::unique_ptr<Curve64> toy_curve() {
    // p = 23, a = 1, b = 1; group order 28, generated by (3, 10)
    return std::make_unique<Curve64>("0x17", "0x1", "0x1", "0x3", "0xa", BigInt(28), 1);
}

std::unique_ptr<Curve64> secp160r1() {
    return std::make_unique<Curve64>(
        ecmul::test::kSecp160r1P, ecmul::test::kSecp160r1A, ecmul::test::kSecp160r1B,
        ecmul::test::kSecp160r1Gx, ecmul::test::kSecp160r1Gy,
        bigint_from_hex(ecmul::test::kSecp160r1N), 1);
}

oracle::Point to_oracle(const Curve64& c, const WAffinePoint<std::uint64_t>& P) {
    if (P.infinity) return oracle::Point::at_infinity();
    return oracle::Point{fp_value(c.field(), P.x), fp_value(c.field(), P.y), false};
}

WAffinePoint<std::uint64_t> from_oracle(const Curve64& c, const oracle::Point& P) {
    if (P.infinity) return Curve64::affine_infinity();
    return c.make_affine(bigint_to_hex(P.x), bigint_to_hex(P.y));
}

}  // namespace

TEST_CASE("weierstrass: constructor validates its invariants") {
    CHECK_NOTHROW(toy_curve());
    CHECK_NOTHROW(secp160r1());
    // singular: 4a^3 + 27b^2 = 0 for a = 0, b = 0
    CHECK_THROWS_AS(Curve64("0x17", "0x0", "0x0", "0x3", "0xa", BigInt(28), 1),
                    std::invalid_argument);
    // generator off curve
    CHECK_THROWS_AS(Curve64("0x17", "0x1", "0x1", "0x3", "0xb", BigInt(28), 1),
                    std::invalid_argument);
    // wrong order
    CHECK_THROWS_AS(Curve64("0x17", "0x1", "0x1", "0x3", "0xa", BigInt(27), 1),
                    std::invalid_argument);
}

TEST_CASE("weierstrass: conversions between affine and Jacobian") {
    auto c = toy_curve();
    const auto& f = c->field();

    auto inf = jac_infinity(*c);
    CHECK(inf.is_infinity());
    CHECK(fp_value(f, inf.X) == 1);  // paper encoding (1,1,0)
    CHECK(fp_value(f, inf.Y) == 1);
    CHECK(jac_to_affine(*c, inf).infinity);

    auto G = c->generator();
    auto J = jac_from_affine(*c, G);
    CHECK(fp_value(f, J.Z) == 1);
    CHECK(jac_to_affine(*c, J) == G);

    // projective equivalence: (lambda^2 x, lambda^3 y, lambda) -> (x, y)
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        BigInt lam = 1 + random_below(rng, BigInt(22));
        auto lamm = f.to_mont(fp_from_bigint(f, lam));
        JacobianPoint<std::uint64_t> S{f.mul(G.x, f.sqr(lamm)),
                                       f.mul(G.y, f.mul(f.sqr(lamm), lamm)), lamm};
        CHECK(jac_to_affine(*c, S) == G);
    }

    CHECK_THROWS_AS(jac_from_affine(*c, c->make_affine("0x3", "0xb")), std::domain_error);
}

TEST_CASE("weierstrass: toy-curve doubling and mixed addition match the oracle") {
    auto c = toy_curve();
    oracle::WeierstrassOracle oc{23, 1, 1};
    auto en = oracle::enumerate_curve(oc);
    REQUIRE(en.group_order == 28);

    // spec examples first
    auto P = c->make_affine("0x3", "0xa");
    CHECK(to_oracle(*c, jac_to_affine(*c, jac_double(*c, jac_from_affine(*c, P)))) ==
          (oracle::Point{7, 12, false}));
    auto Q = c->make_affine("0x9", "0x7");
    CHECK(to_oracle(*c, jac_to_affine(*c, jac_add_mixed(*c, jac_from_affine(*c, P), Q))) ==
          (oracle::Point{17, 20, false}));

    for (const auto& oP : en.points) {
        auto jp = jac_from_affine(*c, from_oracle(*c, oP));
        CHECK(to_oracle(*c, jac_to_affine(*c, jac_double(*c, jp))) == oc.dbl(oP));
        for (const auto& oQ : en.points) {
            auto sum = jac_add_mixed(*c, jp, from_oracle(*c, oQ));
            REQUIRE(to_oracle(*c, jac_to_affine(*c, sum)) == oc.add(oP, oQ));
        }
    }
}

TEST_CASE("weierstrass: identity and inverse edge cases") {
    auto c = toy_curve();
    auto P = jac_from_affine(*c, c->generator());
    CHECK(jac_to_affine(*c, jac_add_mixed(*c, P, Curve64::affine_infinity())) ==
          c->generator());
    auto negG = negate_affine(*c, c->generator());
    CHECK(jac_add_mixed(*c, P, negG).is_infinity());
    CHECK(jac_double(*c, jac_infinity(*c)).is_infinity());
    // 2-torsion: y = 0, doubling gives infinity (p=23: x^3+x+1 has a root x=18? scan)
    oracle::WeierstrassOracle oc{23, 1, 1};
    for (BigInt x = 0; x < 23; ++x) {
        if (oc.on_curve(oracle::Point{x, 0, false})) {
            auto T = c->make_affine(bigint_to_hex(x), "0x0");
            CHECK(jac_double(*c, jac_from_affine(*c, T)).is_infinity());
        }
    }
}

TEST_CASE("weierstrass: group laws on the toy curve") {
    auto c = toy_curve();
    oracle::WeierstrassOracle oc{23, 1, 1};
    auto en = oracle::enumerate_curve(oc);

    // commutativity across all pairs via the Jacobian path
    for (const auto& oP : en.points)
        for (const auto& oQ : en.points) {
            auto jp = jac_from_affine(*c, from_oracle(*c, oP));
            auto jq = jac_from_affine(*c, from_oracle(*c, oQ));
            auto pq = jac_to_affine(*c, jac_add_mixed(*c, jp, from_oracle(*c, oQ)));
            auto qp = jac_to_affine(*c, jac_add_mixed(*c, jq, from_oracle(*c, oP)));
            REQUIRE(pq == qp);
        }

    // associativity on sampled triples
    std::mt19937_64 rng(33);
    for (int i = 0; i < 10000; ++i) {
        const auto& A = en.points[std::uint64_t(random_below(rng, BigInt(en.points.size())))];
        const auto& B = en.points[std::uint64_t(random_below(rng, BigInt(en.points.size())))];
        const auto& C = en.points[std::uint64_t(random_below(rng, BigInt(en.points.size())))];
        auto left = jac_add_mixed(
            *c, jac_from_affine(*c, jac_to_affine(*c, jac_add_mixed(*c, jac_from_affine(*c, from_oracle(*c, A)), from_oracle(*c, B)))),
            from_oracle(*c, C));
        auto right = jac_add_mixed(
            *c, jac_from_affine(*c, jac_to_affine(*c, jac_add_mixed(*c, jac_from_affine(*c, from_oracle(*c, B)), from_oracle(*c, C)))),
            from_oracle(*c, A));
        REQUIRE(to_oracle(*c, jac_to_affine(*c, left)) == to_oracle(*c, jac_to_affine(*c, right)));
    }
}

TEST_CASE("weierstrass: secp160r1 sampled agreement with the oracle") {
    auto c = secp160r1();
    oracle::WeierstrassOracle oc{bigint_from_hex(ecmul::test::kSecp160r1P),
                                 bigint_from_hex(ecmul::test::kSecp160r1A),
                                 bigint_from_hex(ecmul::test::kSecp160r1B)};
    oracle::Point oG{bigint_from_hex(ecmul::test::kSecp160r1Gx),
                     bigint_from_hex(ecmul::test::kSecp160r1Gy), false};
    std::mt19937_64 rng(34);
    const BigInt n = bigint_from_hex(ecmul::test::kSecp160r1N);
    for (int i = 0; i < 100; ++i) {
        auto oP = oc.scalar_mul(random_below(rng, n), oG);
        auto oQ = oc.scalar_mul(random_below(rng, n), oG);
        auto P = from_oracle(*c, oP);
        auto jp = jac_from_affine(*c, P);
        REQUIRE(to_oracle(*c, jac_to_affine(*c, jac_double(*c, jp))) == oc.dbl(oP));
        REQUIRE(to_oracle(*c, jac_to_affine(*c, jac_add_mixed(*c, jp, from_oracle(*c, oQ)))) ==
                oc.add(oP, oQ));
    }
    // roundtrip on random multiples
    for (int i = 0; i < 100; ++i) {
        auto P = from_oracle(*c, oc.scalar_mul(random_below(rng, n), oG));
        CHECK(jac_to_affine(*c, jac_from_affine(*c, P)) == P);
    }
}

TEST_CASE("weierstrass: frozen field-op signatures") {
    // a = -3 curve (secp160r1): double = 4M + 4S + 14A, mixed add = 8M + 3S + 7A
    auto c = secp160r1();
    REQUIRE(c->a_is_minus3());
    auto J = jac_from_affine(*c, c->generator());
    {
        OpCounter ctr;
        auto R = jac_double(*c, J, &ctr);
        (void)R;
        CHECK(ctr.main().field_mul == 4);
        CHECK(ctr.main().field_sqr == 4);
        CHECK(ctr.main().const_mul == 0);
        CHECK(ctr.main().field_add_sub == 14);
        CHECK(ctr.main().point_double == 1);
    }
    auto J2 = jac_double(*c, J);
    {
        OpCounter ctr;
        auto R = jac_add_mixed(*c, J2, c->generator(), &ctr);
        (void)R;
        CHECK(ctr.main().field_mul == 8);
        CHECK(ctr.main().field_sqr == 3);
        CHECK(ctr.main().const_mul == 0);
        CHECK(ctr.main().field_add_sub == 7);
        CHECK(ctr.main().point_add == 1);
        CHECK(ctr.precheck() == OpTally{});
    }
    // generic-a curve: double = 3M + 6S + 1c + 13A
    auto toy = toy_curve();
    REQUIRE(!toy->a_is_minus3());
    {
        OpCounter ctr;
        auto R = jac_double(*toy, jac_from_affine(*toy, toy->generator()), &ctr);
        (void)R;
        CHECK(ctr.main().field_mul == 3);
        CHECK(ctr.main().field_sqr == 6);
        CHECK(ctr.main().const_mul == 1);
        CHECK(ctr.main().field_add_sub == 13);
    }
}
