// SPDX-License-Identifier: Apache-2.0
//
// Scalar-multiplication engine, generic over a coordinate system and a
// recoding scheme, with odd-multiple precomputation tables and per-run
// operation counting.
//
// Evaluation is left-to-right (Horner). For binary/NAF/wNAF the loop runs
// over every digit position of the recoded scalar, counting the scheduled
// doubling at each position (the initial ones act on the group identity and
// consume no field operations). For the complement-window scheme the
// accumulator starts from the leading window digit, so a full-length scalar
// consumes exactly m - w real doublings.
//
// Counting banks: table construction lands in Bank::Precomp, degenerate-case
// detection inside the formulas in Bank::Precheck, everything else in
// Bank::Main. A run performs exactly one Main-bank field inversion (the final
// conversion to affine coordinates).

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ecmul/bigint.hpp"
#include "ecmul/edwards.hpp"
#include "ecmul/lopez_dahab.hpp"
#include "ecmul/opcount.hpp"
#include "ecmul/recode.hpp"
#include "ecmul/weierstrass.hpp"

namespace ecmul {

enum class CoordSystem { Jacobian, Ld, Edwards, InvertedEdwards };

inline const char* coord_name(CoordSystem c) {
    switch (c) {
        case CoordSystem::Jacobian: return "jacobian";
        case CoordSystem::Ld: return "ld";
        case CoordSystem::Edwards: return "edwards";
        case CoordSystem::InvertedEdwards: return "inverted_edwards";
    }
    return "?";
}

struct MultiplierConfig {
    CoordSystem coord = CoordSystem::Jacobian;
    Scheme recoding = Scheme::Binary;
    int width_w = 0;
    bool use_tripling = false;

    void validate() const {
        const bool windowed =
            recoding == Scheme::Wnaf || recoding == Scheme::ComplementWindow;
        if (windowed && width_w < 2)
            throw std::invalid_argument("MultiplierConfig: windowed recoding needs width_w >= 2");
        if (!windowed && width_w != 0)
            throw std::invalid_argument("MultiplierConfig: width_w only applies to windowed recodings");
        if (use_tripling && coord != CoordSystem::InvertedEdwards)
            throw std::invalid_argument("MultiplierConfig: tripling applies to inverted Edwards only");
    }
};

/// Immutable snapshot of a counter's tallies.
struct CounterReport {
    OpTally main;
    OpTally precheck;
    OpTally precomp;
    OpTally total;
};

inline CounterReport counter_report(const OpCounter& c) {
    return CounterReport{c.main(), c.precheck(), c.precomp(), c.total()};
}

// ------------------------------------------------------ system adapters ----

template <class Limb>
struct JacobianSystem {
    using Curve = WeierstrassCurve<Limb>;
    using Affine = WAffinePoint<Limb>;
    using Point = JacobianPoint<Limb>;
    using TableEntry = Affine;
    static constexpr bool has_triple = false;

    static bool on_curve(const Curve& c, const Affine& P) { return c.on_curve(P); }
    static bool affine_is_neutral(const Curve&, const Affine& P) { return P.infinity; }
    static Affine neutral_affine(const Curve&) { return Curve::affine_infinity(); }

    static Point lift(const Curve& c, const Affine& P) { return jac_from_affine(c, P); }
    static Point dbl(const Curve& c, const Point& P, OpCounter* ctr) {
        return jac_double(c, P, ctr);
    }
    static Point add_entry(const Curve& c, const Point& P, const TableEntry& T,
                           bool negate, OpCounter* ctr) {
        return jac_add_mixed(c, P, negate ? negate_affine(c, T, ctr) : T, ctr);
    }
    static Point lift_entry(const Curve& c, const TableEntry& T, bool negate,
                            OpCounter* ctr) {
        return lift(c, negate ? negate_affine(c, T, ctr) : T);
    }
    static Affine to_affine(const Curve& c, const Point& P, OpCounter* ctr) {
        return jac_to_affine(c, P, ctr);
    }
    static Affine entry_affine(const Curve&, const TableEntry& T) { return T; }

    /// Batch conversion with one shared inversion (Montgomery's trick).
    static std::vector<TableEntry> normalize(const Curve& c,
                                             const std::vector<Point>& pts,
                                             OpCounter* ctr) {
        const auto& f = c.field();
        std::vector<FpElement<Limb>> zinv = batch_invert(f, pts, ctr);
        std::vector<TableEntry> out;
        out.reserve(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            auto zi2 = f.sqr(zinv[i], ctr);
            out.push_back(Affine{f.mul(pts[i].X, zi2, ctr),
                                 f.mul(pts[i].Y, f.mul(zi2, zinv[i], ctr), ctr), false});
        }
        return out;
    }

    static std::vector<FpElement<Limb>> batch_invert(const FpParams<Limb>& f,
                                                     const std::vector<Point>& pts,
                                                     OpCounter* ctr) {
        std::vector<FpElement<Limb>> prefix(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i)
            prefix[i] = i == 0 ? pts[0].Z : f.mul(prefix[i - 1], pts[i].Z, ctr);
        auto acc = f.inv(prefix.back(), ctr);
        std::vector<FpElement<Limb>> out(pts.size());
        for (std::size_t i = pts.size(); i-- > 0;) {
            out[i] = i == 0 ? acc : f.mul(acc, prefix[i - 1], ctr);
            if (i > 0) acc = f.mul(acc, pts[i].Z, ctr);
        }
        return out;
    }
};

struct LdSystem {
    using Curve = BinaryCurve;
    using Affine = BAffinePoint;
    using Point = LdPoint;
    using TableEntry = Affine;
    static constexpr bool has_triple = false;

    static bool on_curve(const Curve& c, const Affine& P) { return c.on_curve(P); }
    static bool affine_is_neutral(const Curve&, const Affine& P) { return P.infinity; }
    static Affine neutral_affine(const Curve&) { return Curve::affine_infinity(); }

    static Point lift(const Curve& c, const Affine& P) { return ld_from_affine(c, P); }
    static Point dbl(const Curve& c, const Point& P, OpCounter* ctr) {
        return ld_double(c, P, ctr);
    }
    static Point add_entry(const Curve& c, const Point& P, const TableEntry& T,
                           bool negate, OpCounter* ctr) {
        return ld_add_mixed(c, P, negate ? ld_negate_affine(c, T, ctr) : T, ctr);
    }
    static Point lift_entry(const Curve& c, const TableEntry& T, bool negate,
                            OpCounter* ctr) {
        return lift(c, negate ? ld_negate_affine(c, T, ctr) : T);
    }
    static Affine to_affine(const Curve& c, const Point& P, OpCounter* ctr) {
        return ld_to_affine(c, P, ctr);
    }
    static Affine entry_affine(const Curve&, const TableEntry& T) { return T; }

    static std::vector<TableEntry> normalize(const Curve& c,
                                             const std::vector<Point>& pts,
                                             OpCounter* ctr) {
        const auto& f = c.field();
        std::vector<F2mElement> prefix(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i)
            prefix[i] = i == 0 ? pts[0].Z : f.mul(prefix[i - 1], pts[i].Z, ctr);
        auto acc = f.inv(prefix.back(), ctr);
        std::vector<F2mElement> zinv(pts.size());
        for (std::size_t i = pts.size(); i-- > 0;) {
            zinv[i] = i == 0 ? acc : f.mul(acc, prefix[i - 1], ctr);
            if (i > 0) acc = f.mul(acc, pts[i].Z, ctr);
        }
        std::vector<TableEntry> out;
        out.reserve(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i)
            out.push_back(Affine{f.mul(pts[i].X, zinv[i], ctr),
                                 f.mul(pts[i].Y, f.sqr(zinv[i], ctr), ctr), false});
        return out;
    }
};

template <class Limb>
struct EdwardsSystem {
    using Curve = EdwardsCurve<Limb>;
    using Affine = EdAffinePoint<Limb>;
    using Point = EdwardsProjPoint<Limb>;
    using TableEntry = Affine;
    static constexpr bool has_triple = false;

    static bool on_curve(const Curve& c, const Affine& P) { return c.on_curve(P); }
    static bool affine_is_neutral(const Curve& c, const Affine& P) {
        return P == c.neutral();
    }
    static Affine neutral_affine(const Curve& c) { return c.neutral(); }

    static Point lift(const Curve& c, const Affine& P) { return ed_from_affine(c, P); }
    static Point dbl(const Curve& c, const Point& P, OpCounter* ctr) {
        return ed_double(c, P, ctr);
    }
    static Point add_entry(const Curve& c, const Point& P, const TableEntry& T,
                           bool negate, OpCounter* ctr) {
        auto q = negate ? ed_negate_affine(c, T, ctr) : T;
        Point qp{q.x, q.y, c.field().to_mont(c.field().one())};
        return ed_add(c, P, qp, ctr);
    }
    static Point lift_entry(const Curve& c, const TableEntry& T, bool negate,
                            OpCounter* ctr) {
        auto q = negate ? ed_negate_affine(c, T, ctr) : T;
        return Point{q.x, q.y, c.field().to_mont(c.field().one())};
    }
    static Affine to_affine(const Curve& c, const Point& P, OpCounter* ctr) {
        return ed_to_affine(c, P, ctr);
    }
    static Affine entry_affine(const Curve&, const TableEntry& T) { return T; }

    static std::vector<TableEntry> normalize(const Curve& c,
                                             const std::vector<Point>& pts,
                                             OpCounter* ctr) {
        const auto& f = c.field();
        std::vector<FpElement<Limb>> prefix(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i)
            prefix[i] = i == 0 ? pts[0].Z : f.mul(prefix[i - 1], pts[i].Z, ctr);
        auto acc = f.inv(prefix.back(), ctr);
        std::vector<FpElement<Limb>> zinv(pts.size());
        for (std::size_t i = pts.size(); i-- > 0;) {
            zinv[i] = i == 0 ? acc : f.mul(acc, prefix[i - 1], ctr);
            if (i > 0) acc = f.mul(acc, pts[i].Z, ctr);
        }
        std::vector<TableEntry> out;
        out.reserve(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i)
            out.push_back(Affine{f.mul(pts[i].X, zinv[i], ctr),
                                 f.mul(pts[i].Y, zinv[i], ctr)});
        return out;
    }
};

/// Inverted-Edwards accumulator: primarily in inverted coordinates, falling
/// back to standard coordinates whenever an operation meets a point the
/// inverted chart cannot represent. Table entries carry both forms.
template <class Limb>
struct InvEdwardsSystem {
    using Curve = EdwardsCurve<Limb>;
    using Affine = EdAffinePoint<Limb>;
    static constexpr bool has_triple = true;

    struct Point {
        bool inverted = false;
        InvEdwardsPoint<Limb> pi{};
        EdwardsProjPoint<Limb> ps{};
    };
    struct TableEntry {
        Affine aff;
        bool inv_ok = false;
        InvEdwardsPoint<Limb> inv_form{};
    };

    static bool on_curve(const Curve& c, const Affine& P) { return c.on_curve(P); }
    static bool affine_is_neutral(const Curve& c, const Affine& P) {
        return P == c.neutral();
    }
    static Affine neutral_affine(const Curve& c) { return c.neutral(); }

    static Point from_std(const Curve& c, const EdwardsProjPoint<Limb>& S,
                          OpCounter* ctr) {
        // return to the inverted chart when representable (3M conversion)
        if (!S.X.is_zero() && !S.Y.is_zero() && !S.Z.is_zero())
            return Point{true, ed_to_inverted(c, S, ctr), {}};
        return Point{false, {}, S};
    }

    static Point lift(const Curve& c, const Affine& P) {
        auto S = ed_from_affine(c, P);
        if (!P.x.is_zero() && !P.y.is_zero())
            return Point{true, ed_to_inverted(c, S, nullptr), {}};
        return Point{false, {}, S};
    }

    static Point dbl(const Curve& c, const Point& P, OpCounter* ctr) {
        if (P.inverted) {
            if (auto r = inv_ed_double(c, P.pi, ctr)) return Point{true, *r, {}};
            // exceptional result: redo in standard coordinates
            auto S = inverted_to_ed(c, P.pi, ctr);
            return from_std(c, ed_double(c, S, ctr), ctr);
        }
        return from_std(c, ed_double(c, P.ps, ctr), ctr);
    }

    static Point add_entry(const Curve& c, const Point& P, const TableEntry& T,
                           bool negate, OpCounter* ctr) {
        if (P.inverted && T.inv_ok) {
            auto q = negate ? inv_ed_negate(c, T.inv_form, ctr) : T.inv_form;
            if (auto r = inv_ed_add(c, P.pi, q, ctr)) return Point{true, *r, {}};
            auto S = inverted_to_ed(c, P.pi, ctr);
            return add_std(c, S, T, negate, ctr);
        }
        auto S = P.inverted ? inverted_to_ed(c, P.pi, ctr) : P.ps;
        return add_std(c, S, T, negate, ctr);
    }

    static Point lift_entry(const Curve& c, const TableEntry& T, bool negate,
                            OpCounter* ctr) {
        if (T.inv_ok) {
            auto q = negate ? inv_ed_negate(c, T.inv_form, ctr) : T.inv_form;
            return Point{true, q, {}};
        }
        auto q = negate ? ed_negate_affine(c, T.aff, ctr) : T.aff;
        return Point{false, {}, ed_from_affine(c, q)};
    }

    static std::optional<Point> triple(const Curve& c, const Point& P, OpCounter* ctr) {
        if (!P.inverted) return std::nullopt;
        if (auto r = inv_ed_triple(c, P.pi, ctr)) return Point{true, *r, {}};
        return std::nullopt;
    }

    /// Does the accumulator equal this (positive) table entry? Cross-product
    /// comparison in the dominant chart; tallied by the caller's bank scope.
    static bool equals_entry(const Curve& c, const Point& P, const TableEntry& T,
                             OpCounter* ctr) {
        if (P.inverted && T.inv_ok)
            return inv_ed_equals(c, P.pi, T.inv_form, ctr);
        if (!P.inverted) {
            EdwardsProjPoint<Limb> q{T.aff.x, T.aff.y, c.field().to_mont(c.field().one())};
            return ed_equals(c, P.ps, q, ctr);
        }
        return false;
    }

    static Affine to_affine(const Curve& c, const Point& P, OpCounter* ctr) {
        if (P.inverted) return inv_ed_to_affine(c, P.pi, ctr);
        return ed_to_affine(c, P.ps, ctr);
    }

    static Affine entry_affine(const Curve&, const TableEntry& T) { return T.aff; }

    static std::vector<TableEntry> make_entries(const Curve& c,
                                                const std::vector<Affine>& affs,
                                                OpCounter* ctr) {
        std::vector<TableEntry> out;
        out.reserve(affs.size());
        for (const auto& a : affs) {
            TableEntry e;
            e.aff = a;
            if (!a.x.is_zero() && !a.y.is_zero()) {
                e.inv_ok = true;
                e.inv_form = inv_ed_from_affine(c, a, ctr);
            }
            out.push_back(e);
        }
        return out;
    }

private:
    static Point add_std(const Curve& c, const EdwardsProjPoint<Limb>& S,
                         const TableEntry& T, bool negate, OpCounter* ctr) {
        auto q = negate ? ed_negate_affine(c, T.aff, ctr) : T.aff;
        EdwardsProjPoint<Limb> qp{q.x, q.y, c.field().to_mont(c.field().one())};
        return from_std(c, ed_add(c, S, qp, ctr), ctr);
    }
};

// --------------------------------------------------------------- tables ----

template <class System>
struct PrecompTable {
    std::vector<typename System::TableEntry> entries;  ///< entry[i] = (2i+1) * P
    std::int32_t max_odd = 1;
};

namespace mulimpl {

/// Odd multiples {1, 3, ..., max_odd} * P, normalized for mixed addition.
template <class System>
PrecompTable<System> build_odd_multiples(const typename System::Curve& curve,
                                         const typename System::Affine& P,
                                         std::int32_t max_odd, OpCounter* ctr) {
    PrecompTable<System> table;
    table.max_odd = max_odd;
    const std::size_t count = std::size_t(max_odd + 1) / 2;
    if (max_odd == 1) {
        std::vector<typename System::Affine> base{P};
        if constexpr (requires { System::make_entries(curve, base, ctr); })
            table.entries = System::make_entries(curve, base, ctr);
        else
            table.entries = base;
        return table;
    }
    // one normalized doubling, then a chain of mixed additions
    auto two_p_proj = System::dbl(curve, System::lift(curve, P), ctr);
    auto two_p = System::to_affine(curve, two_p_proj, ctr);
    std::vector<typename System::Point> chain;
    chain.reserve(count - 1);
    auto acc = System::lift(curve, P);
    for (std::size_t i = 1; i < count; ++i) {
        acc = System::add_entry(curve, acc, table_entry_from_affine<System>(curve, two_p, ctr), false, ctr);
        chain.push_back(acc);
    }
    // normalize the chain in one shared inversion
    std::vector<typename System::Affine> affs{P};
    if (!chain.empty()) {
        auto norm = normalize_points<System>(curve, chain, ctr);
        affs.insert(affs.end(), norm.begin(), norm.end());
    }
    if constexpr (requires { System::make_entries(curve, affs, ctr); })
        table.entries = System::make_entries(curve, affs, ctr);
    else
        table.entries = affs;
    return table;
}

template <class System>
typename System::TableEntry table_entry_from_affine(const typename System::Curve& curve,
                                                    const typename System::Affine& a,
                                                    OpCounter* ctr) {
    if constexpr (requires(std::vector<typename System::Affine> v) {
                      System::make_entries(curve, v, ctr);
                  }) {
        std::vector<typename System::Affine> v{a};
        return System::make_entries(curve, v, ctr)[0];
    } else {
        return a;
    }
}

template <class System>
std::vector<typename System::Affine> normalize_points(
    const typename System::Curve& curve, const std::vector<typename System::Point>& pts,
    OpCounter* ctr) {
    if constexpr (requires { System::normalize(curve, pts, ctr); }) {
        return System::normalize(curve, pts, ctr);
    } else {
        // dual-chart accumulator points: convert one by one (toy table sizes)
        std::vector<typename System::Affine> out;
        out.reserve(pts.size());
        for (const auto& p : pts) out.push_back(System::to_affine(curve, p, ctr));
        return out;
    }
}

}  // namespace mulimpl

/// Precomputation table of the odd multiples {1, 3, ..., 2^w - 1} * P.
template <class System>
PrecompTable<System> build_precomp(const typename System::Curve& curve,
                                   const typename System::Affine& P, int w,
                                   OpCounter* ctr = nullptr) {
    if (w < 2) throw std::invalid_argument("build_precomp: width must be >= 2");
    if (!System::on_curve(curve, P))
        throw std::domain_error("build_precomp: point not on curve");
    return mulimpl::build_odd_multiples<System>(curve, P,
                                                std::int32_t((1u << w) - 1), ctr);
}

// --------------------------------------------------------------- engine ----

template <class System>
typename System::Affine scalar_mul(const typename System::Curve& curve,
                                   const BigInt& k_in,
                                   const typename System::Affine& P,
                                   const MultiplierConfig& cfg, OpCounter& ctr) {
    cfg.validate();
    if (!System::on_curve(curve, P))
        throw std::domain_error("scalar_mul: point not on curve");
    if (k_in < 0 || k_in >= 2 * curve.order())
        throw std::invalid_argument("scalar_mul: scalar outside [0, 2n)");

    BigInt k = k_in % curve.order();
    if (k == 0 || System::affine_is_neutral(curve, P))
        return System::neutral_affine(curve);

    const unsigned bitlen = unsigned(boost::multiprecision::msb(k)) + 1;
    Scheme scheme = cfg.recoding;
    if (scheme == Scheme::ComplementWindow && bitlen <= unsigned(cfg.width_w))
        scheme = Scheme::Binary;  // frame shorter than the window

    SignedDigitString digits;
    std::int32_t max_odd = 1;
    switch (scheme) {
        case Scheme::Binary: digits = recode_binary(k); break;
        case Scheme::Naf: digits = recode_naf(k); break;
        case Scheme::Wnaf:
            digits = recode_wnaf(k, cfg.width_w);
            max_odd = std::int32_t((1u << (cfg.width_w - 1)) - 1);
            break;
        case Scheme::ComplementWindow:
            digits = recode_complement_window(k, bitlen, cfg.width_w);
            max_odd = std::int32_t((1u << cfg.width_w) - 1);
            break;
    }
    if (max_odd < 1) max_odd = 1;

    PrecompTable<System> table;
    {
        BankScope precomp(&ctr, Bank::Precomp);
        table = mulimpl::build_odd_multiples<System>(curve, P, max_odd, &ctr);
    }
    auto entry_for = [&](std::int32_t digit) -> const typename System::TableEntry& {
        return table.entries[std::size_t((digit < 0 ? -digit : digit) - 1) / 2];
    };

    typename System::Point A{};
    bool active = false;
    std::size_t first = digits.digits.size();

    if (scheme == Scheme::ComplementWindow) {
        // assemble the leading window value
        std::int32_t lead = digits.digits.back();
        first = digits.digits.size() - 1;
        if (lead % 2 != 0) {
            A = System::lift_entry(curve, entry_for(lead), false, &ctr);
        } else {
            A = System::lift_entry(curve, entry_for(lead - 1), false, &ctr);
            A = System::add_entry(curve, A, entry_for(1), false, &ctr);
        }
        active = true;
    }

    for (std::size_t pos = first; pos-- > 0;) {
        const std::int32_t d = digits.digits[pos];
        // greedy triple substitution: a doubling followed by adding a table
        // multiple equal to the accumulator computes 3A in one operation
        if constexpr (System::has_triple) {
            if (cfg.use_tripling && active && d > 0) {
                bool same;
                {
                    BankScope precheck(&ctr, Bank::Precheck);
                    same = System::equals_entry(curve, A, entry_for(d), &ctr);
                }
                if (same) {
                    if (auto t = System::triple(curve, A, &ctr)) {
                        A = *t;
                        continue;
                    }
                }
            }
        }
        if (active)
            A = System::dbl(curve, A, &ctr);
        else
            ctr.pdouble();  // scheduled doubling of the identity
        if (d != 0) {
            if (active) {
                A = System::add_entry(curve, A, entry_for(d), d < 0, &ctr);
            } else {
                ctr.padd();  // scheduled addition to the identity
                A = System::lift_entry(curve, entry_for(d), d < 0, &ctr);
                active = true;
            }
        }
    }
    if (!active) return System::neutral_affine(curve);
    return System::to_affine(curve, A, &ctr);
}

}  // namespace ecmul
