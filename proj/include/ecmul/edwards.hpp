// SPDX-License-Identifier: Apache-2.0
//
// Edwards curves x^2 + y^2 = c^2 (1 + d x^2 y^2) over GF(p) with standard
// projective and inverted coordinates, plus the inverted-coordinate tripling.
//
// d is required to be a non-square, which makes the standard addition law
// complete: it never hits a zero denominator and doubling uses the same
// formula as addition. Inverted coordinates (affine point = (Z/X, Z/Y))
// cannot represent the neutral element or the order-2/order-4 special points;
// operations that would produce one report it and the caller falls back to
// standard coordinates.
//
// Budgets on the ordinary paths: projective add 10M + 1S + 2c, projective
// double 3M + 4S + 3c, inverted add 9M + 1S + 1c, inverted double
// 3M + 4S + 1c, inverted triple 7M + 7S + 1c.

#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>

#include "ecmul/bigint.hpp"
#include "ecmul/fp.hpp"
#include "ecmul/opcount.hpp"

namespace ecmul {

/// An operation landed on a point the coordinate chart cannot represent.
struct ExceptionalPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class Limb>
struct EdAffinePoint {
    FpElement<Limb> x, y;
    bool operator==(const EdAffinePoint& o) const { return x == o.x && y == o.y; }
};

/// (X : Y : Z), Z != 0, affine (X/Z, Y/Z). Identity at (0, c, 1).
template <class Limb>
struct EdwardsProjPoint {
    FpElement<Limb> X, Y, Z;
};

/// (X : Y : Z) with X*Y*Z != 0, affine (Z/X, Z/Y).
template <class Limb>
struct InvEdwardsPoint {
    FpElement<Limb> X, Y, Z;
};

template <class Limb>
class EdwardsCurve {
public:
    using Fp = FpParams<Limb>;
    using Element = FpElement<Limb>;
    using Affine = EdAffinePoint<Limb>;

    EdwardsCurve(std::string_view p_hex, std::string_view c_hex, std::string_view d_hex,
                 std::string_view gx_hex, std::string_view gy_hex, const BigInt& order_n,
                 unsigned cofactor_h)
        : field_(p_hex),
          c_(field_.to_mont(field_.from_hex(c_hex))),
          d_(field_.to_mont(field_.from_hex(d_hex))),
          order_n_(order_n),
          cofactor_h_(cofactor_h) {
        Element d_plain = field_.from_hex(d_hex);
        if (d_plain.is_zero() || d_plain == field_.one())
            throw std::invalid_argument("edwards: d must avoid {0, 1}");
        if (field_.is_square(d_plain))
            throw std::invalid_argument("edwards: d must be a non-square for the complete law");
        if (c_.is_zero())
            throw std::invalid_argument("edwards: c must be nonzero");
        if (order_n_ <= 0)
            throw std::invalid_argument("edwards: group order must be positive");
        if (!on_curve(neutral()))
            throw std::invalid_argument("edwards: neutral element (0, c) violates curve equation");
        generator_ = Affine{field_.to_mont(field_.from_hex(gx_hex)),
                            field_.to_mont(field_.from_hex(gy_hex))};
        if (!on_curve(generator_))
            throw std::invalid_argument("edwards: generator does not satisfy curve equation");
        if (!validate_order())
            throw std::invalid_argument("edwards: order_n * generator is not the neutral element");
    }

    EdwardsCurve(const EdwardsCurve&) = delete;
    EdwardsCurve& operator=(const EdwardsCurve&) = delete;

    const Fp& field() const { return field_; }
    const Element& c() const { return c_; }
    const Element& d() const { return d_; }
    const Affine& generator() const { return generator_; }
    const BigInt& order() const { return order_n_; }
    unsigned cofactor() const { return cofactor_h_; }

    Affine neutral() const { return Affine{field_.to_mont(field_.zero()), c_}; }

    Affine make_affine(std::string_view x_hex, std::string_view y_hex) const {
        return Affine{field_.to_mont(field_.from_hex(x_hex)),
                      field_.to_mont(field_.from_hex(y_hex))};
    }

    /// x^2 + y^2 = c^2 (1 + d x^2 y^2)
    bool on_curve(const Affine& P) const {
        auto x2 = field_.sqr(P.x), y2 = field_.sqr(P.y);
        auto lhs = field_.add(x2, y2);
        auto one = field_.to_mont(field_.one());
        auto rhs = field_.mul(field_.sqr(c_),
                              field_.add(one, field_.mul(d_, field_.mul(x2, y2))));
        return lhs == rhs;
    }

private:
    bool validate_order() const;

    Fp field_;
    Element c_, d_;
    Affine generator_{};
    BigInt order_n_;
    unsigned cofactor_h_;
};

// ----------------------------------------------------------- affine law ----

/// Unified affine addition; also doubles. Two field inversions as written.
/// Throws ExceptionalPointError on a zero denominator (impossible when d is
/// a non-square).
template <class Limb>
EdAffinePoint<Limb> ed_add_affine(const EdwardsCurve<Limb>& c,
                                  const EdAffinePoint<Limb>& P,
                                  const EdAffinePoint<Limb>& Q,
                                  OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    auto t = f.mul(f.mul(f.mul_const(c.d(), P.x, ctr), Q.x, ctr),
                   f.mul(P.y, Q.y, ctr), ctr);
    auto one = f.to_mont(f.one());
    auto den1 = f.mul_const(c.c(), f.add(one, t, ctr), ctr);
    auto den2 = f.mul_const(c.c(), f.sub(one, t, ctr), ctr);
    if (den1.is_zero() || den2.is_zero())
        throw ExceptionalPointError("ed_add_affine: zero denominator");
    auto x3 = f.mul(f.add(f.mul(P.x, Q.y, ctr), f.mul(P.y, Q.x, ctr), ctr),
                    f.inv(den1, ctr), ctr);
    auto y3 = f.mul(f.sub(f.mul(P.y, Q.y, ctr), f.mul(P.x, Q.x, ctr), ctr),
                    f.inv(den2, ctr), ctr);
    return EdAffinePoint<Limb>{x3, y3};
}

template <class Limb>
EdAffinePoint<Limb> ed_negate_affine(const EdwardsCurve<Limb>& c,
                                     const EdAffinePoint<Limb>& P,
                                     OpCounter* ctr = nullptr) {
    return EdAffinePoint<Limb>{c.field().negate(P.x, ctr), P.y};
}

// ------------------------------------------------- standard projective ----

template <class Limb>
EdwardsProjPoint<Limb> ed_identity(const EdwardsCurve<Limb>& c) {
    const auto& f = c.field();
    return EdwardsProjPoint<Limb>{f.to_mont(f.zero()), c.c(), f.to_mont(f.one())};
}

template <class Limb>
EdwardsProjPoint<Limb> ed_from_affine(const EdwardsCurve<Limb>& c,
                                      const EdAffinePoint<Limb>& P) {
    if (!c.on_curve(P)) throw std::domain_error("ed_from_affine: point not on curve");
    return EdwardsProjPoint<Limb>{P.x, P.y, c.field().to_mont(c.field().one())};
}

/// (X : Y : Z) -> (X/Z, Y/Z). One field inversion.
template <class Limb>
EdAffinePoint<Limb> ed_to_affine(const EdwardsCurve<Limb>& c,
                                 const EdwardsProjPoint<Limb>& P,
                                 OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    if (P.Z.is_zero()) throw std::logic_error("ed_to_affine: Z = 0");
    auto zi = f.inv(P.Z, ctr);
    EdAffinePoint<Limb> r{f.mul(P.X, zi, ctr), f.mul(P.Y, zi, ctr)};
    if (!c.on_curve(r))
        throw std::logic_error("ed_to_affine: result violates curve equation");
    return r;
}

/// Projective unified addition, 10M + 1S + 2 constant multiplications.
/// Complete: no degenerate pre-checks are needed for non-square d.
template <class Limb>
EdwardsProjPoint<Limb> ed_add(const EdwardsCurve<Limb>& c,
                              const EdwardsProjPoint<Limb>& P,
                              const EdwardsProjPoint<Limb>& Q,
                              OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    count_padd(ctr);
    auto A = f.mul(P.Z, Q.Z, ctr);
    auto B = f.sqr(A, ctr);
    auto C = f.mul(P.X, Q.X, ctr);
    auto D = f.mul(P.Y, Q.Y, ctr);
    auto E = f.mul_const(c.d(), f.mul(C, D, ctr), ctr);
    auto F = f.sub(B, E, ctr);
    auto G = f.add(B, E, ctr);
    auto X3 = f.mul(f.mul(A, F, ctr),
                    f.sub(f.sub(f.mul(f.add(P.X, P.Y, ctr), f.add(Q.X, Q.Y, ctr), ctr),
                                C, ctr),
                          D, ctr),
                    ctr);
    auto Y3 = f.mul(f.mul(A, G, ctr), f.sub(D, C, ctr), ctr);
    auto Z3 = f.mul_const(c.c(), f.mul(F, G, ctr), ctr);
    return EdwardsProjPoint<Limb>{X3, Y3, Z3};
}

/// Projective doubling, 3M + 4S + 3 constant multiplications.
template <class Limb>
EdwardsProjPoint<Limb> ed_double(const EdwardsCurve<Limb>& c,
                                 const EdwardsProjPoint<Limb>& P,
                                 OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    count_pdouble(ctr);
    auto B = f.sqr(f.add(P.X, P.Y, ctr), ctr);
    auto C = f.sqr(P.X, ctr);
    auto D = f.sqr(P.Y, ctr);
    auto E = f.add(C, D, ctr);
    auto H = f.sqr(f.mul_const(c.c(), P.Z, ctr), ctr);
    auto twoH = f.add(H, H, ctr);
    auto J = f.sub(E, twoH, ctr);
    auto X3 = f.mul_const(c.c(), f.mul(f.sub(B, E, ctr), J, ctr), ctr);
    auto Y3 = f.mul_const(c.c(), f.mul(E, f.sub(C, D, ctr), ctr), ctr);
    auto Z3 = f.mul(E, J, ctr);
    return EdwardsProjPoint<Limb>{X3, Y3, Z3};
}

template <class Limb>
EdwardsProjPoint<Limb> ed_negate(const EdwardsCurve<Limb>& c,
                                 const EdwardsProjPoint<Limb>& P,
                                 OpCounter* ctr = nullptr) {
    return EdwardsProjPoint<Limb>{c.field().negate(P.X, ctr), P.Y, P.Z};
}

/// Projective equality via cross-multiplication (4M when counted).
template <class Limb>
bool ed_equals(const EdwardsCurve<Limb>& c, const EdwardsProjPoint<Limb>& P,
               const EdwardsProjPoint<Limb>& Q, OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    return f.mul(P.X, Q.Z, ctr) == f.mul(Q.X, P.Z, ctr) &&
           f.mul(P.Y, Q.Z, ctr) == f.mul(Q.Y, P.Z, ctr);
}

// --------------------------------------------------------------- inverted ----

/// Standard -> inverted: (Y1 Z1 : X1 Z1 : X1 Y1); requires X*Y*Z != 0.
/// The same map converts back ("and vice versa").
template <class Limb>
InvEdwardsPoint<Limb> ed_to_inverted(const EdwardsCurve<Limb>& c,
                                     const EdwardsProjPoint<Limb>& P,
                                     OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    if (P.X.is_zero() || P.Y.is_zero() || P.Z.is_zero())
        throw ExceptionalPointError("ed_to_inverted: zero coordinate");
    return InvEdwardsPoint<Limb>{f.mul(P.Y, P.Z, ctr), f.mul(P.X, P.Z, ctr),
                                 f.mul(P.X, P.Y, ctr)};
}

template <class Limb>
EdwardsProjPoint<Limb> inverted_to_ed(const EdwardsCurve<Limb>& c,
                                      const InvEdwardsPoint<Limb>& P,
                                      OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    if (P.X.is_zero() || P.Y.is_zero() || P.Z.is_zero())
        throw ExceptionalPointError("inverted_to_ed: zero coordinate");
    return EdwardsProjPoint<Limb>{f.mul(P.Y, P.Z, ctr), f.mul(P.X, P.Z, ctr),
                                  f.mul(P.X, P.Y, ctr)};
}

template <class Limb>
InvEdwardsPoint<Limb> inv_ed_from_affine(const EdwardsCurve<Limb>& c,
                                         const EdAffinePoint<Limb>& P,
                                         OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    if (!c.on_curve(P)) throw std::domain_error("inv_ed_from_affine: point not on curve");
    if (P.x.is_zero() || P.y.is_zero())
        throw ExceptionalPointError("inv_ed_from_affine: special point");
    // affine (x, y) -> (y : x : xy), since (Z/X, Z/Y) = (x, y)
    return InvEdwardsPoint<Limb>{P.y, P.x, f.mul(P.x, P.y, ctr)};
}

/// (X : Y : Z) -> (Z/X, Z/Y). One field inversion, five multiplications.
template <class Limb>
EdAffinePoint<Limb> inv_ed_to_affine(const EdwardsCurve<Limb>& c,
                                     const InvEdwardsPoint<Limb>& P,
                                     OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    if (P.X.is_zero() || P.Y.is_zero() || P.Z.is_zero())
        throw ExceptionalPointError("inv_ed_to_affine: zero coordinate");
    auto t = f.mul(P.X, P.Y, ctr);
    auto ti = f.inv(t, ctr);
    EdAffinePoint<Limb> r{f.mul(f.mul(P.Z, P.Y, ctr), ti, ctr),
                          f.mul(f.mul(P.Z, P.X, ctr), ti, ctr)};
    if (!c.on_curve(r))
        throw std::logic_error("inv_ed_to_affine: result violates curve equation");
    return r;
}

template <class Limb>
bool inv_ed_valid(const InvEdwardsPoint<Limb>& P) {
    return !P.X.is_zero() && !P.Y.is_zero() && !P.Z.is_zero();
}

namespace eddetail {
template <class Limb>
void require_inv_operand(const InvEdwardsPoint<Limb>& P) {
    if (!inv_ed_valid(P))
        throw std::invalid_argument("inverted Edwards: operand violates XYZ != 0");
}
}  // namespace eddetail

/// Inverted addition, 9M + 1S + 1 constant multiplication. Returns nullopt
/// when the sum is a special point the chart cannot represent; the caller
/// falls back to standard coordinates.
template <class Limb>
std::optional<InvEdwardsPoint<Limb>> inv_ed_add(const EdwardsCurve<Limb>& c,
                                                const InvEdwardsPoint<Limb>& P,
                                                const InvEdwardsPoint<Limb>& Q,
                                                OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    eddetail::require_inv_operand(P);
    eddetail::require_inv_operand(Q);
    count_padd(ctr);
    auto A = f.mul(P.Z, Q.Z, ctr);
    auto B = f.mul_const(c.d(), f.sqr(A, ctr), ctr);
    auto C = f.mul(P.X, Q.X, ctr);
    auto D = f.mul(P.Y, Q.Y, ctr);
    auto E = f.mul(C, D, ctr);
    auto H = f.sub(C, D, ctr);
    auto I = f.sub(f.sub(f.mul(f.add(P.X, P.Y, ctr), f.add(Q.X, Q.Y, ctr), ctr), C, ctr),
                   D, ctr);
    auto X3 = f.mul(f.add(E, B, ctr), H, ctr);
    auto Y3 = f.mul(f.sub(E, B, ctr), I, ctr);
    auto Z3 = f.mul(f.mul(A, H, ctr), I, ctr);
    InvEdwardsPoint<Limb> r{X3, Y3, Z3};
    if (!inv_ed_valid(r)) return std::nullopt;
    return r;
}

/// Inverted doubling, 3M + 4S + 1 constant multiplication.
template <class Limb>
std::optional<InvEdwardsPoint<Limb>> inv_ed_double(const EdwardsCurve<Limb>& c,
                                                   const InvEdwardsPoint<Limb>& P,
                                                   OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    eddetail::require_inv_operand(P);
    count_pdouble(ctr);
    auto A = f.sqr(P.X, ctr);
    auto B = f.sqr(P.Y, ctr);
    auto C = f.add(A, B, ctr);
    auto D = f.sub(A, B, ctr);
    auto E = f.sub(f.sqr(f.add(P.X, P.Y, ctr), ctr), C, ctr);
    auto Z3 = f.mul(D, E, ctr);
    auto X3 = f.mul(C, D, ctr);
    auto dz2 = f.mul_const(c.d(), f.sqr(P.Z, ctr), ctr);
    auto Y3 = f.mul(E, f.sub(C, f.add(dz2, dz2, ctr), ctr), ctr);
    InvEdwardsPoint<Limb> r{X3, Y3, Z3};
    if (!inv_ed_valid(r)) return std::nullopt;
    return r;
}

/// Inverted tripling, 7M + 7S + 1 constant multiplication.
template <class Limb>
std::optional<InvEdwardsPoint<Limb>> inv_ed_triple(const EdwardsCurve<Limb>& c,
                                                   const InvEdwardsPoint<Limb>& P,
                                                   OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    eddetail::require_inv_operand(P);
    count_ptriple(ctr);
    auto A = f.sqr(P.X, ctr);
    auto B = f.sqr(P.Y, ctr);
    auto C = f.sqr(P.Z, ctr);
    auto D = f.add(A, B, ctr);
    auto DmdC = f.sub(D, f.mul_const(c.d(), C, ctr), ctr);
    auto E = f.add(DmdC, DmdC, ctr);
    E = f.add(E, E, ctr);  // 4(D - dC)
    auto BmA = f.sub(B, A, ctr);
    auto H = f.mul(D, BmA, ctr);
    H = f.add(H, H, ctr);  // 2D(B - A)
    auto D2 = f.sqr(D, ctr);
    auto Pv = f.sub(D2, f.mul(A, E, ctr), ctr);
    auto Qv = f.sub(D2, f.mul(B, E, ctr), ctr);
    auto Q2 = f.sqr(Qv, ctr);
    auto X3 = f.mul(f.add(H, Qv, ctr),
                    f.sub(f.sub(f.sqr(f.add(Qv, P.X, ctr), ctr), Q2, ctr), A, ctr), ctr);
    auto HmP = f.sub(H, Pv, ctr);
    auto Y3 = f.mul(f.mul(f.add(HmP, HmP, ctr), Pv, ctr), P.Y, ctr);
    auto Z3 = f.mul(Pv,
                    f.sub(f.sub(f.sqr(f.add(Qv, P.Z, ctr), ctr), Q2, ctr), C, ctr), ctr);
    InvEdwardsPoint<Limb> r{X3, Y3, Z3};
    if (!inv_ed_valid(r)) return std::nullopt;
    return r;
}

template <class Limb>
InvEdwardsPoint<Limb> inv_ed_negate(const EdwardsCurve<Limb>& c,
                                    const InvEdwardsPoint<Limb>& P,
                                    OpCounter* ctr = nullptr) {
    return InvEdwardsPoint<Limb>{c.field().negate(P.X, ctr), P.Y, P.Z};
}

template <class Limb>
bool inv_ed_equals(const EdwardsCurve<Limb>& c, const InvEdwardsPoint<Limb>& P,
                   const InvEdwardsPoint<Limb>& Q, OpCounter* ctr = nullptr) {
    const auto& f = c.field();
    return f.mul(P.X, Q.Z, ctr) == f.mul(Q.X, P.Z, ctr) &&
           f.mul(P.Y, Q.Z, ctr) == f.mul(Q.Y, P.Z, ctr);
}

template <class Limb>
bool EdwardsCurve<Limb>::validate_order() const {
    EdwardsProjPoint<Limb> R = ed_identity(*this);
    EdwardsProjPoint<Limb> G{generator_.x, generator_.y, field_.to_mont(field_.one())};
    for (int i = int(boost::multiprecision::msb(order_n_)); i >= 0; --i) {
        R = ed_double(*this, R);
        if (boost::multiprecision::bit_test(order_n_, unsigned(i)))
            R = ed_add(*this, R, G);
    }
    // projectively equal to (0, c, 1)?
    return R.X.is_zero() && R.Y == field_.mul(c_, R.Z);
}

}  // namespace ecmul
