// SPDX-License-Identifier: Apache-2.0
//
// Short Weierstrass curves y^2 = x^3 + ax + b over GF(p) with affine and
// Jacobian projective points. The Jacobian doubling has a dedicated a = -3
// path (active when the curve constant is congruent to -3, as standardized
// 160-bit curves are) alongside the generic-a path.

#pragma once

#include <stdexcept>
#include <string_view>

#include "ecmul/bigint.hpp"
#include "ecmul/fp.hpp"
#include "ecmul/opcount.hpp"

namespace ecmul {

template <class Limb>
struct WAffinePoint {
    FpElement<Limb> x, y;
    bool infinity = false;
    bool operator==(const WAffinePoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

/// (X : Y : Z) with x = X/Z^2, y = Y/Z^3; Z = 0 encodes infinity as (1,1,0).
template <class Limb>
struct JacobianPoint {
    FpElement<Limb> X, Y, Z;
    bool is_infinity() const { return Z.is_zero(); }
};

template <class Limb>
class WeierstrassCurve {
public:
    using Fp = FpParams<Limb>;
    using Element = FpElement<Limb>;
    using Affine = WAffinePoint<Limb>;

    WeierstrassCurve(std::string_view p_hex, std::string_view a_hex,
                     std::string_view b_hex, std::string_view gx_hex,
                     std::string_view gy_hex, const BigInt& order_n,
                     unsigned cofactor_h)
        : field_(p_hex),
          a_(field_.to_mont(field_.from_hex(a_hex))),
          b_(field_.to_mont(field_.from_hex(b_hex))),
          order_n_(order_n),
          cofactor_h_(cofactor_h) {
        if (order_n_ <= 0)
            throw std::invalid_argument("weierstrass: group order must be positive");
        // discriminant 4a^3 + 27b^2 != 0
        Element a3 = field_.mul(field_.mul(a_, a_), a_);
        Element b2 = field_.mul(b_, b_);
        Element disc = field_.add(repeated_add(a3, 4), repeated_add(b2, 27));
        if (disc.is_zero())
            throw std::invalid_argument("weierstrass: singular curve (4a^3 + 27b^2 = 0)");
        // a = -3 detection for the specialized doubling
        Element minus3 = field_.sub(field_.to_mont(field_.zero()),
                                    repeated_add(field_.to_mont(field_.one()), 3));
        a_is_minus3_ = (a_ == minus3);
        generator_ = make_affine(gx_hex, gy_hex);
        if (!on_curve(generator_))
            throw std::invalid_argument("weierstrass: generator does not satisfy curve equation");
        if (!validate_order())
            throw std::invalid_argument("weierstrass: order_n * generator is not the point at infinity");
    }

    WeierstrassCurve(const WeierstrassCurve&) = delete;
    WeierstrassCurve& operator=(const WeierstrassCurve&) = delete;

    const Fp& field() const { return field_; }
    const Element& a() const { return a_; }
    const Element& b() const { return b_; }
    const Affine& generator() const { return generator_; }
    const BigInt& order() const { return order_n_; }
    unsigned cofactor() const { return cofactor_h_; }
    bool a_is_minus3() const { return a_is_minus3_; }

    Affine make_affine(std::string_view x_hex, std::string_view y_hex) const {
        return Affine{field_.to_mont(field_.from_hex(x_hex)),
                      field_.to_mont(field_.from_hex(y_hex)), false};
    }
    static Affine affine_infinity() { return Affine{{}, {}, true}; }

    bool on_curve(const Affine& P) const {
        if (P.infinity) return true;
        Element lhs = field_.sqr(P.y);
        Element rhs = field_.add(field_.mul(field_.sqr(P.x), P.x),
                                 field_.add(field_.mul(a_, P.x), b_));
        return lhs == rhs;
    }

private:
    Element repeated_add(const Element& e, unsigned times) const {
        Element acc = e;
        for (unsigned i = 1; i < times; ++i) acc = field_.add(acc, e);
        return acc;
    }

    bool validate_order() const;  // defined below; needs the point ops

    Fp field_;
    Element a_, b_;
    Affine generator_{};
    BigInt order_n_;
    unsigned cofactor_h_;
    bool a_is_minus3_ = false;
};

// ------------------------------------------------------------ point ops ----

template <class Limb>
JacobianPoint<Limb> jac_infinity(const WeierstrassCurve<Limb>& c) {
    const auto& f = c.field();
    auto one = f.to_mont(f.one());
    return JacobianPoint<Limb>{one, one, f.to_mont(f.zero())};  // (1,1,0)
}

/// Lift an affine point; the input must lie on the curve.
template <class Limb>
JacobianPoint<Limb> jac_from_affine(const WeierstrassCurve<Limb>& c,
                                    const WAffinePoint<Limb>& P) {
    if (!c.on_curve(P)) throw std::domain_error("jac_from_affine: point not on curve");
    if (P.infinity) return jac_infinity(c);
    return JacobianPoint<Limb>{P.x, P.y, c.field().to_mont(c.field().one())};
}

/// (X, Y, Z) -> (X/Z^2, Y/Z^3). One field inversion.
template <class Limb>
WAffinePoint<Limb> jac_to_affine(const WeierstrassCurve<Limb>& c,
                                 const JacobianPoint<Limb>& P,
                                 OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    if (P.is_infinity()) return WeierstrassCurve<Limb>::affine_infinity();
    auto zi = f.inv(P.Z, ctr);
    auto zi2 = f.sqr(zi, ctr);
    WAffinePoint<Limb> r{f.mul(P.X, zi2, ctr),
                         f.mul(P.Y, f.mul(zi2, zi, ctr), ctr), false};
    if (!c.on_curve(r))
        throw std::logic_error("jac_to_affine: result violates curve equation");
    return r;
}

/// Jacobian doubling. Doubling infinity or a 2-torsion point (Y = 0) yields
/// infinity. Generic a: 3M + 6S + 1c; a = -3: 4M + 4S.
template <class Limb>
JacobianPoint<Limb> jac_double(const WeierstrassCurve<Limb>& c,
                               const JacobianPoint<Limb>& P,
                               OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    count_pdouble(ctr);
    if (P.is_infinity() || P.Y.is_zero()) return jac_infinity(c);

    auto A = f.sqr(P.Y, ctr);                                    // Y1^2
    auto B = f.mul(P.X, A, ctr);                                 // X1*A
    B = f.add(B, B, ctr); B = f.add(B, B, ctr);                  // 4*X1*A
    auto C = f.sqr(A, ctr);                                      // A^2
    C = f.add(C, C, ctr); C = f.add(C, C, ctr); C = f.add(C, C, ctr);  // 8A^2
    FpElement<Limb> D;
    if (c.a_is_minus3()) {
        // D = 3(X1 - Z1^2)(X1 + Z1^2)
        auto z2 = f.sqr(P.Z, ctr);
        auto t = f.mul(f.sub(P.X, z2, ctr), f.add(P.X, z2, ctr), ctr);
        D = f.add(f.add(t, t, ctr), t, ctr);
    } else {
        // D = 3*X1^2 + a*Z1^4
        auto x2 = f.sqr(P.X, ctr);
        D = f.add(f.add(x2, x2, ctr), x2, ctr);
        auto z4 = f.sqr(f.sqr(P.Z, ctr), ctr);
        D = f.add(D, f.mul_const(c.a(), z4, ctr), ctr);
    }
    auto X3 = f.sub(f.sqr(D, ctr), f.add(B, B, ctr), ctr);       // D^2 - 2B
    auto Y3 = f.sub(f.mul(D, f.sub(B, X3, ctr), ctr), C, ctr);   // D(B - X3) - C
    auto Z3 = f.mul(P.Y, P.Z, ctr);
    Z3 = f.add(Z3, Z3, ctr);                                     // 2*Y1*Z1
    return JacobianPoint<Limb>{X3, Y3, Z3};
}

/// Mixed Jacobian-affine addition, 8M + 3S on the ordinary path. Handles
/// P = infinity, Q = infinity, equal inputs (delegates to the doubling core)
/// and P = -Q by pre-checks; the equality test compares cross-multiplied
/// coordinates and is tallied in the Precheck bank.
template <class Limb>
JacobianPoint<Limb> jac_add_mixed(const WeierstrassCurve<Limb>& c,
                                  const JacobianPoint<Limb>& P,
                                  const WAffinePoint<Limb>& Q,
                                  OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    count_padd(ctr);
    if (Q.infinity) return P;
    if (P.is_infinity())
        return JacobianPoint<Limb>{Q.x, Q.y, f.to_mont(f.one())};

    auto A = f.sqr(P.Z, ctr);       // Z1^2
    auto B = f.mul(P.Z, A, ctr);    // Z1^3
    auto C = f.mul(Q.x, A, ctr);    // X2*Z1^2
    auto D = f.mul(Q.y, B, ctr);    // Y2*Z1^3
    auto E = f.sub(C, P.X, ctr);
    auto F = f.sub(D, P.Y, ctr);
    if (E.is_zero()) {
        if (F.is_zero()) {
            // same point: run the doubling formula (scheduled as an addition)
            BankScope precheck(ctr, Bank::Precheck);
            (void)precheck;
            OpCounter* inner = ctr;
            JacobianPoint<Limb> r = jac_double(c, P, inner);
            return r;
        }
        return jac_infinity(c);  // P = -Q
    }
    auto G = f.sqr(E, ctr);
    auto H = f.mul(G, E, ctr);
    auto I = f.mul(P.X, G, ctr);
    auto twoI = f.add(I, I, ctr);
    auto X3 = f.sub(f.sqr(F, ctr), f.add(H, twoI, ctr), ctr);
    auto Y3 = f.sub(f.mul(F, f.sub(I, X3, ctr), ctr), f.mul(P.Y, H, ctr), ctr);
    auto Z3 = f.mul(P.Z, E, ctr);
    return JacobianPoint<Limb>{X3, Y3, Z3};
}

/// -(x, y) = (x, -y); one field subtraction.
template <class Limb>
WAffinePoint<Limb> negate_affine(const WeierstrassCurve<Limb>& c,
                                 const WAffinePoint<Limb>& P,
                                 OpCounter* ctr = nullptr) {
    if (P.infinity) return P;
    return WAffinePoint<Limb>{P.x, c.field().negate(P.y, ctr), false};
}

template <class Limb>
bool WeierstrassCurve<Limb>::validate_order() const {
    // order_n * G = infinity, by plain MSB-first double-and-add
    JacobianPoint<Limb> R = jac_infinity(*this);
    for (int i = int(boost::multiprecision::msb(order_n_)); i >= 0; --i) {
        R = jac_double(*this, R);
        if (boost::multiprecision::bit_test(order_n_, unsigned(i)))
            R = jac_add_mixed(*this, R, generator_);
    }
    return R.is_infinity();
}

}  // namespace ecmul
