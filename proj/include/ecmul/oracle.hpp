// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used as ground truth by the tests and
// the verify command: textbook affine chord/tangent group laws with one field
// inversion per operation, naive scalar multiplication, and exhaustive curve
// enumeration over toy fields.
//
// Deliberately shares no arithmetic with the fast paths: prime-field math is
// plain arbitrary-precision modular arithmetic (inversion by Fermat powm, not
// extended GCD; no Montgomery form), binary-field math is bit-at-a-time
// shift-and-add (not the comb multiplier). Speed is a non-goal here.

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ecmul/bigint.hpp"

namespace ecmul::oracle {

struct Point {
    BigInt x, y;
    bool infinity = false;

    static Point at_infinity() { return Point{0, 0, true}; }
    bool operator==(const Point& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

inline BigInt mod(const BigInt& a, const BigInt& p) {
    BigInt r = a % p;
    if (r < 0) r += p;
    return r;
}

// ---------------------------------------------------------------- GF(p) ----

inline BigInt inv_mod(const BigInt& a, const BigInt& p) {
    if (mod(a, p) == 0) throw std::domain_error("oracle: inverse of zero");
    return boost::multiprecision::powm(mod(a, p), p - 2, p);
}

/// Short Weierstrass y^2 = x^3 + ax + b over GF(p), affine law.
struct WeierstrassOracle {
    BigInt p, a, b;

    bool on_curve(const Point& P) const {
        if (P.infinity) return true;
        return mod(P.y * P.y - (P.x * P.x * P.x + a * P.x + b), p) == 0;
    }

    Point add(const Point& P, const Point& Q) const {
        if (!on_curve(P) || !on_curve(Q))
            throw std::domain_error("oracle: point not on curve");
        if (P.infinity) return Q;
        if (Q.infinity) return P;
        if (P.x == Q.x && mod(P.y + Q.y, p) == 0) return Point::at_infinity();
        BigInt lam;
        if (P == Q)
            lam = mod((3 * P.x * P.x + a) * inv_mod(2 * P.y, p), p);
        else
            lam = mod((Q.y - P.y) * inv_mod(Q.x - P.x, p), p);
        BigInt x3 = mod(lam * lam - P.x - Q.x, p);
        BigInt y3 = mod(lam * (P.x - x3) - P.y, p);
        return Point{x3, y3, false};
    }

    Point dbl(const Point& P) const { return add(P, P); }

    /// MSB-first double-and-add.
    Point scalar_mul(BigInt k, const Point& P) const {
        if (k < 0) throw std::invalid_argument("oracle: negative scalar");
        Point R = Point::at_infinity();
        for (int i = int(boost::multiprecision::msb(k == 0 ? BigInt(1) : k)); k != 0 && i >= 0; --i) {
            R = add(R, R);
            if (boost::multiprecision::bit_test(k, unsigned(i))) R = add(R, P);
        }
        return R;
    }

    /// Literal repeated addition, for cross-checking small k.
    Point scalar_mul_repeated(std::uint64_t k, const Point& P) const {
        Point R = Point::at_infinity();
        for (std::uint64_t i = 0; i < k; ++i) R = add(R, P);
        return R;
    }
};

// ------------------------------------------------------------- GF(2^m) ----

/// Bit-at-a-time polynomial arithmetic mod an irreducible polynomial.
struct BinaryFieldOracle {
    unsigned m;
    BigInt poly;

    BigInt mul(BigInt a, BigInt b) const {
        BigInt r = 0;
        while (b != 0) {
            if ((b & 1) != 0) r ^= a;
            b >>= 1;
            a <<= 1;
            if (boost::multiprecision::bit_test(a, m)) a ^= poly;
        }
        return r;
    }

    BigInt inv(const BigInt& a) const {
        if (a == 0) throw std::domain_error("oracle: inverse of zero in GF(2^m)");
        // Fermat: a^(2^m - 2)
        BigInt r = 1, base = a;
        for (unsigned i = 1; i < m; ++i) {
            base = mul(base, base);
            r = mul(r, base);
        }
        return r;
    }
};

/// Binary curve y^2 + xy = x^3 + ax^2 + b over GF(2^m), affine law.
struct BinaryCurveOracle {
    BinaryFieldOracle f;
    BigInt a, b;

    bool on_curve(const Point& P) const {
        if (P.infinity) return true;
        BigInt x2 = f.mul(P.x, P.x);
        BigInt lhs = f.mul(P.y, P.y) ^ f.mul(P.x, P.y);
        BigInt rhs = f.mul(x2, P.x) ^ f.mul(a, x2) ^ b;
        return lhs == rhs;
    }

    Point negate(const Point& P) const {
        if (P.infinity) return P;
        return Point{P.x, P.x ^ P.y, false};
    }

    Point add(const Point& P, const Point& Q) const {
        if (!on_curve(P) || !on_curve(Q))
            throw std::domain_error("oracle: point not on binary curve");
        if (P.infinity) return Q;
        if (Q.infinity) return P;
        if (P.x == Q.x) {
            if (P.y != Q.y || P.x == 0) return Point::at_infinity();
            // doubling: lambda = x + y/x
            BigInt lam = P.x ^ f.mul(P.y, f.inv(P.x));
            BigInt x3 = f.mul(lam, lam) ^ lam ^ a;
            BigInt y3 = f.mul(P.x, P.x) ^ f.mul(lam ^ 1, x3);
            return Point{x3, y3, false};
        }
        BigInt lam = f.mul(P.y ^ Q.y, f.inv(P.x ^ Q.x));
        BigInt x3 = f.mul(lam, lam) ^ lam ^ P.x ^ Q.x ^ a;
        BigInt y3 = f.mul(lam, P.x ^ x3) ^ x3 ^ P.y;
        return Point{x3, y3, false};
    }

    Point dbl(const Point& P) const { return add(P, P); }

    Point scalar_mul(BigInt k, const Point& P) const {
        Point R = Point::at_infinity();
        for (int i = k == 0 ? -1 : int(boost::multiprecision::msb(k)); i >= 0; --i) {
            R = add(R, R);
            if (boost::multiprecision::bit_test(k, unsigned(i))) R = add(R, P);
        }
        return R;
    }

    Point scalar_mul_repeated(std::uint64_t k, const Point& P) const {
        Point R = Point::at_infinity();
        for (std::uint64_t i = 0; i < k; ++i) R = add(R, P);
        return R;
    }
};

// ------------------------------------------------------------- Edwards ----

/// Edwards curve x^2 + y^2 = 1 + d x^2 y^2 (c = 1), unified affine law.
/// The neutral element (0, 1) is an ordinary curve point.
struct EdwardsOracle {
    BigInt p, d;

    bool on_curve(const Point& P) const {
        BigInt x2 = mod(P.x * P.x, p), y2 = mod(P.y * P.y, p);
        return mod(x2 + y2 - 1 - d * x2 % p * y2, p) == 0;
    }

    Point neutral() const { return Point{0, 1, false}; }

    Point add(const Point& P, const Point& Q) const {
        if (!on_curve(P) || !on_curve(Q))
            throw std::domain_error("oracle: point not on Edwards curve");
        BigInt t = d * P.x % p * Q.x % p * P.y % p * Q.y % p;
        BigInt den1 = mod(1 + t, p), den2 = mod(1 - t, p);
        if (den1 == 0 || den2 == 0)
            throw std::domain_error("oracle: exceptional Edwards denominator");
        BigInt x3 = mod((P.x * Q.y + P.y * Q.x) % p * inv_mod(den1, p), p);
        BigInt y3 = mod((P.y * Q.y - P.x * Q.x) % p * inv_mod(den2, p), p);
        return Point{x3, y3, false};
    }

    Point dbl(const Point& P) const { return add(P, P); }

    Point negate(const Point& P) const { return Point{mod(-P.x, p), P.y, false}; }

    Point scalar_mul(BigInt k, const Point& P) const {
        Point R = neutral();
        for (int i = k == 0 ? -1 : int(boost::multiprecision::msb(k)); i >= 0; --i) {
            R = add(R, R);
            if (boost::multiprecision::bit_test(k, unsigned(i))) R = add(R, P);
        }
        return R;
    }

    Point scalar_mul_repeated(std::uint64_t k, const Point& P) const {
        Point R = neutral();
        for (std::uint64_t i = 0; i < k; ++i) R = add(R, P);
        return R;
    }
};

// --------------------------------------------------------- enumeration ----

struct CurveEnumeration {
    std::vector<Point> points;  ///< all affine points; excludes infinity for
                                ///< Weierstrass/binary, includes the Edwards neutral
    std::uint64_t group_order = 0;
};

inline void check_enumeration_bound(std::uint64_t field_size) {
    if (field_size > (1u << 16))
        throw std::invalid_argument("enumerate_curve: field too large for exhaustive scan");
}

inline CurveEnumeration enumerate_curve(const WeierstrassOracle& c) {
    check_enumeration_bound(std::uint64_t(c.p));
    CurveEnumeration e;
    for (BigInt x = 0; x < c.p; ++x)
        for (BigInt y = 0; y < c.p; ++y)
            if (c.on_curve(Point{x, y, false})) e.points.push_back(Point{x, y, false});
    e.group_order = e.points.size() + 1;  // plus the point at infinity
    return e;
}

inline CurveEnumeration enumerate_curve(const BinaryCurveOracle& c) {
    check_enumeration_bound(std::uint64_t(1) << c.f.m);
    CurveEnumeration e;
    const std::uint64_t q = std::uint64_t(1) << c.f.m;
    for (std::uint64_t x = 0; x < q; ++x)
        for (std::uint64_t y = 0; y < q; ++y)
            if (c.on_curve(Point{x, y, false})) e.points.push_back(Point{BigInt(x), BigInt(y), false});
    e.group_order = e.points.size() + 1;
    return e;
}

inline CurveEnumeration enumerate_curve(const EdwardsOracle& c) {
    check_enumeration_bound(std::uint64_t(c.p));
    CurveEnumeration e;
    for (BigInt x = 0; x < c.p; ++x)
        for (BigInt y = 0; y < c.p; ++y)
            if (c.on_curve(Point{x, y, false})) e.points.push_back(Point{x, y, false});
    e.group_order = e.points.size();  // neutral (0,1) is itself a curve point
    return e;
}

/// |order - (q + 1)| <= 2*sqrt(q), a theorem-forced sanity bound.
inline bool hasse_bound_ok(std::uint64_t group_order, std::uint64_t field_size) {
    const double diff = std::abs(double(group_order) - double(field_size + 1));
    return diff <= 2.0 * std::sqrt(double(field_size)) + 1e-9;
}

}  // namespace ecmul::oracle
