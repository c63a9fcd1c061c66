// SPDX-License-Identifier: Apache-2.0
//
// Binary-field curves y^2 + xy = x^3 + ax^2 + b over GF(2^m) with
// Lopez-Dahab projective points (x = X/Z, y = Y/Z^2, infinity at (1,0,0)).
// Budgets on the ordinary paths: full add 13M + 4S + 9A, mixed add
// 8M + 5S + 1c, double 4M + 4S + 1c + 5A. Degenerate operands are detected
// from the formulas' own leading intermediates, so no extra field work is
// spent on pre-checks.

#pragma once

#include <stdexcept>
#include <string_view>

#include "ecmul/bigint.hpp"
#include "ecmul/f2m.hpp"
#include "ecmul/opcount.hpp"

namespace ecmul {

struct BAffinePoint {
    F2mElement x, y;
    bool infinity = false;
    bool operator==(const BAffinePoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

struct LdPoint {
    F2mElement X, Y, Z;
    bool is_infinity() const { return Z.is_zero(); }
};

class BinaryCurve {
public:
    BinaryCurve(unsigned m, std::string_view poly_hex, std::string_view a_hex,
                std::string_view b_hex, std::string_view gx_hex,
                std::string_view gy_hex, const BigInt& order_n, unsigned cofactor_h)
        : field_(m, poly_hex),
          a_(field_.from_hex(a_hex)),
          b_(field_.from_hex(b_hex)),
          order_n_(order_n),
          cofactor_h_(cofactor_h) {
        if (b_.is_zero())
            throw std::invalid_argument("binary curve: b must be nonzero");
        if (order_n_ <= 0)
            throw std::invalid_argument("binary curve: group order must be positive");
        generator_ = BAffinePoint{field_.from_hex(gx_hex), field_.from_hex(gy_hex), false};
        if (!on_curve(generator_))
            throw std::invalid_argument("binary curve: generator does not satisfy curve equation");
        if (!validate_order())
            throw std::invalid_argument("binary curve: order_n * generator is not the point at infinity");
    }

    BinaryCurve(const BinaryCurve&) = delete;
    BinaryCurve& operator=(const BinaryCurve&) = delete;

    const F2mParams& field() const { return field_; }
    const F2mElement& a() const { return a_; }
    const F2mElement& b() const { return b_; }
    const BAffinePoint& generator() const { return generator_; }
    const BigInt& order() const { return order_n_; }
    unsigned cofactor() const { return cofactor_h_; }

    BAffinePoint make_affine(std::string_view x_hex, std::string_view y_hex) const {
        return BAffinePoint{field_.from_hex(x_hex), field_.from_hex(y_hex), false};
    }
    static BAffinePoint affine_infinity() { return BAffinePoint{{}, {}, true}; }

    bool on_curve(const BAffinePoint& P) const {
        if (P.infinity) return true;
        auto x2 = field_.sqr(P.x);
        auto lhs = field_.add(field_.sqr(P.y), field_.mul(P.x, P.y));
        auto rhs = field_.add(field_.add(field_.mul(x2, P.x), field_.mul(a_, x2)), b_);
        return lhs == rhs;
    }

private:
    bool validate_order() const;

    F2mParams field_;
    F2mElement a_, b_;
    BAffinePoint generator_{};
    BigInt order_n_;
    unsigned cofactor_h_;
};

// ------------------------------------------------------------ point ops ----

inline LdPoint ld_infinity(const BinaryCurve& c) {
    return LdPoint{c.field().one(), c.field().zero(), c.field().zero()};  // (1,0,0)
}

inline LdPoint ld_from_affine(const BinaryCurve& c, const BAffinePoint& P) {
    if (!c.on_curve(P)) throw std::domain_error("ld_from_affine: point not on curve");
    if (P.infinity) return ld_infinity(c);
    return LdPoint{P.x, P.y, c.field().one()};
}

/// x = X/Z, y = Y/Z^2. One field inversion.
inline BAffinePoint ld_to_affine(const BinaryCurve& c, const LdPoint& P,
                                 OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    if (P.is_infinity()) return BinaryCurve::affine_infinity();
    auto zi = f.inv(P.Z, ctr);
    BAffinePoint r{f.mul(P.X, zi, ctr), f.mul(P.Y, f.sqr(zi, ctr), ctr), false};
    if (!c.on_curve(r))
        throw std::logic_error("ld_to_affine: result violates curve equation");
    return r;
}

/// -(x, y) = (x, x + y).
inline BAffinePoint ld_negate_affine(const BinaryCurve& c, const BAffinePoint& P,
                                     OpCounter* ctr = nullptr) {
    if (P.infinity) return P;
    return BAffinePoint{P.x, c.field().add(P.x, P.y, ctr), false};
}

inline LdPoint ld_double(const BinaryCurve& c, const LdPoint& P, OpCounter* ctr = nullptr);

/// Full projective addition, 13M + 4S + 9A on the ordinary path.
inline LdPoint ld_add_full(const BinaryCurve& c, const LdPoint& P, const LdPoint& Q,
                           OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    count_padd(ctr);
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;

    auto A1 = f.mul(P.X, Q.Z, ctr);
    auto A2 = f.mul(Q.X, P.Z, ctr);
    auto E1 = f.mul(P.Y, f.sqr(Q.Z, ctr), ctr);
    auto E2 = f.mul(Q.Y, f.sqr(P.Z, ctr), ctr);
    if (A1 == A2) {  // same affine x
        if (E1 == E2) {
            BankScope precheck(ctr, Bank::Precheck);
            return ld_double(c, P, ctr);
        }
        return ld_infinity(c);  // Q = -P
    }
    auto C = f.add(A1, A2, ctr);
    auto B1 = f.sqr(A1, ctr);
    auto B2 = f.sqr(A2, ctr);
    auto D = f.add(B1, B2, ctr);
    auto F = f.add(E1, E2, ctr);
    auto G = f.mul(C, F, ctr);
    auto Z3 = f.mul(f.mul(P.Z, Q.Z, ctr), D, ctr);
    auto X3 = f.add(f.mul(A1, f.add(E2, B2, ctr), ctr),
                    f.mul(A2, f.add(E1, B1, ctr), ctr), ctr);
    auto Y3 = f.add(f.mul(f.add(f.mul(A1, G, ctr), f.mul(E1, D, ctr), ctr), D, ctr),
                    f.mul(f.add(G, Z3, ctr), X3, ctr), ctr);
    return LdPoint{X3, Y3, Z3};
}

/// Mixed addition of projective P and affine Q, 8M + 5S + 1c on the ordinary
/// path (9 field additions as implemented).
inline LdPoint ld_add_mixed(const BinaryCurve& c, const LdPoint& P, const BAffinePoint& Q,
                            OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    if (Q.infinity)
        throw std::invalid_argument("ld_add_mixed: affine operand must not be infinity");
    count_padd(ctr);
    if (P.is_infinity()) return LdPoint{Q.x, Q.y, f.one()};

    // paper variable names: (X1, Y1) affine = Q, (X2, Y2, Z2) projective = P
    auto U = f.add(f.mul(f.sqr(P.Z, ctr), Q.y, ctr), P.Y, ctr);
    auto S = f.add(f.mul(P.Z, Q.x, ctr), P.X, ctr);
    if (S.is_zero()) {  // same affine x
        if (U.is_zero()) {
            BankScope precheck(ctr, Bank::Precheck);
            return ld_double(c, P, ctr);
        }
        return ld_infinity(c);
    }
    auto T = f.mul(P.Z, S, ctr);
    auto Z3 = f.sqr(T, ctr);
    auto V = f.mul(Z3, Q.x, ctr);
    auto C = f.add(Q.x, Q.y, ctr);
    auto X3 = f.add(f.sqr(U, ctr),
                    f.mul(T, f.add(f.add(U, f.sqr(S, ctr), ctr),
                                   f.mul_const(c.a(), T, ctr), ctr), ctr), ctr);
    auto Y3 = f.add(f.mul(f.add(V, X3, ctr), f.add(f.mul(T, U, ctr), Z3, ctr), ctr),
                    f.mul(f.sqr(Z3, ctr), C, ctr), ctr);
    return LdPoint{X3, Y3, Z3};
}

/// Doubling, 4M + 4S + 1c + 5A. Doubling infinity or a point with X = 0
/// (2-torsion) yields infinity.
inline LdPoint ld_double(const BinaryCurve& c, const LdPoint& P, OpCounter* ctr) {
    const auto& f = c.field();
    count_pdouble(ctr);
    if (P.is_infinity() || P.X.is_zero()) return ld_infinity(c);

    auto S = f.sqr(P.X, ctr);
    auto U = f.add(S, P.Y, ctr);
    auto T = f.mul(P.X, P.Z, ctr);
    auto Z3 = f.sqr(T, ctr);
    T = f.mul(U, T, ctr);
    auto X3 = f.add(f.add(f.sqr(U, ctr), T, ctr), f.mul_const(c.a(), Z3, ctr), ctr);
    auto Y3 = f.add(f.mul(f.add(Z3, T, ctr), X3, ctr),
                    f.mul(f.sqr(S, ctr), Z3, ctr), ctr);
    return LdPoint{X3, Y3, Z3};
}

inline bool BinaryCurve::validate_order() const {
    LdPoint R = ld_infinity(*this);
    for (int i = int(boost::multiprecision::msb(order_n_)); i >= 0; --i) {
        R = ld_double(*this, R, nullptr);
        if (boost::multiprecision::bit_test(order_n_, unsigned(i)))
            R = ld_add_mixed(*this, R, generator_);
    }
    return R.is_infinity();
}

}  // namespace ecmul
