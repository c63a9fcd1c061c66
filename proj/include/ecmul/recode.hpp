// SPDX-License-Identifier: Apache-2.0
//
// Scalar recodings for left-to-right (Horner) evaluation: plain binary, NAF,
// width-w NAF, and the one's-complement windowed form, plus the analytic
// point-addition/doubling cost model for each scheme.
//
// The one's-complement form writes k = 2^m - C1 - 1 (C1 the bitwise
// complement of k in m bits), equivalently (L+1)*2^(m-w) - (complement of the
// low bits + 1), and picks whichever of it and the direct expansion has fewer
// nonzero digits. The result carries a single leading digit at position m-w
// followed by signed odd digits from width-(w+1) windows, so the multiplier
// consumes exactly m - w doublings.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ecmul/bigint.hpp"

namespace ecmul {

enum class Scheme { Binary, Naf, Wnaf, ComplementWindow };

inline const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Binary: return "binary";
        case Scheme::Naf: return "naf";
        case Scheme::Wnaf: return "wnaf";
        case Scheme::ComplementWindow: return "complement_window";
    }
    return "?";
}

/// A signed-digit expansion; digits[i] is the coefficient of 2^i.
struct SignedDigitString {
    std::vector<std::int32_t> digits;
    Scheme scheme = Scheme::Binary;
    int width_w = 1;
    unsigned source_bits = 0;

    BigInt evaluate() const {
        BigInt v = 0;
        for (std::size_t i = digits.size(); i-- > 0;) {
            v <<= 1;
            v += digits[i];
        }
        return v;
    }
    std::size_t nonzero_count() const {
        std::size_t n = 0;
        for (auto d : digits)
            if (d) ++n;
        return n;
    }
};

/// Plain base-2 digits, LSB first; evaluation order in the multiplier is
/// MSB first.
inline SignedDigitString recode_binary(const BigInt& k) {
    if (k < 0) throw std::invalid_argument("recode_binary: negative scalar");
    SignedDigitString s;
    s.scheme = Scheme::Binary;
    s.width_w = 1;
    BigInt t = k;
    while (t > 0) {
        s.digits.push_back(static_cast<std::int32_t>(t & 1));
        t >>= 1;
    }
    s.source_bits = unsigned(s.digits.size());
    return s;
}

/// Width-w non-adjacent form: odd digits, |digit| < 2^(w-1), at most one
/// nonzero among any w consecutive digits. w = 2 is the classic NAF.
inline SignedDigitString recode_wnaf(const BigInt& k, int w) {
    if (k < 0) throw std::invalid_argument("recode_wnaf: negative scalar");
    if (w < 2) throw std::invalid_argument("recode_wnaf: width must be >= 2");
    SignedDigitString s;
    s.scheme = Scheme::Wnaf;
    s.width_w = w;
    const std::int64_t full = std::int64_t(1) << w;
    const std::int64_t half = std::int64_t(1) << (w - 1);
    BigInt t = k;
    while (t > 0) {
        if ((t & 1) != 0) {
            std::int64_t d = std::int64_t(t & (full - 1));
            if (d >= half) d -= full;
            s.digits.push_back(static_cast<std::int32_t>(d));
            t -= d;
        } else {
            s.digits.push_back(0);
        }
        t >>= 1;
    }
    s.source_bits = unsigned(s.digits.size());
    return s;
}

inline SignedDigitString recode_naf(const BigInt& k) {
    SignedDigitString s = recode_wnaf(k, 2);
    s.scheme = Scheme::Naf;
    s.width_w = 1;
    return s;
}

/// One's-complement windowed recoding of k < 2^m for width 1 < w < m.
/// Digits occupy positions 0..m-w; the leading digit lies in [1, 2^w], lower
/// digits are odd with |digit| <= 2^w - 1 and at least w+1 positions apart.
inline SignedDigitString recode_complement_window(const BigInt& k, unsigned m, int w) {
    if (k <= 0 || k >= (BigInt(1) << m))
        throw std::invalid_argument("recode_complement_window: scalar out of (0, 2^m)");
    if (w < 2 || unsigned(w) >= m)
        throw std::invalid_argument("recode_complement_window: need 1 < w < m");

    const unsigned low_bits = m - unsigned(w);
    const BigInt lead_direct = k >> low_bits;
    const BigInt r = k & ((BigInt(1) << low_bits) - 1);

    // Fold the width-(w+1) wNAF of `low` into positions 0..m-w with the
    // possible carry digit at m-w absorbed into the leading digit.
    auto pack = [&](BigInt lead, const BigInt& low, bool negate)
        -> std::vector<std::int32_t> {
        SignedDigitString nf = low == 0 ? SignedDigitString{} : recode_wnaf(low, w + 1);
        std::vector<std::int32_t> digits(low_bits + 1, 0);
        if (nf.digits.size() > low_bits + 1) return {};
        for (std::size_t i = 0; i < nf.digits.size() && i < low_bits; ++i)
            digits[i] = negate ? -nf.digits[i] : nf.digits[i];
        if (nf.digits.size() == low_bits + 1) {
            std::int32_t top = nf.digits[low_bits];
            lead += negate ? -top : top;
        }
        if (lead < 1 || lead > (BigInt(1) << w)) return {};
        digits[low_bits] = static_cast<std::int32_t>(lead);
        return digits;
    };

    auto weight = [](const std::vector<std::int32_t>& d) {
        std::size_t n = 0;
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i]) ++n;
        return n;
    };

    SignedDigitString s;
    s.scheme = Scheme::ComplementWindow;
    s.width_w = w;
    s.source_bits = m;

    // direct: k = L*2^(m-w) + r
    std::vector<std::int32_t> direct = pack(lead_direct, r, false);
    // complement: k = (L+1)*2^(m-w) - ((2^(m-w) - 1 - r) + 1)
    std::vector<std::int32_t> comp = pack(lead_direct + 1, (BigInt(1) << low_bits) - r, true);

    if (!direct.empty() && (comp.empty() || weight(direct) <= weight(comp)))
        s.digits = direct;
    else if (!comp.empty())
        s.digits = comp;
    else
        // Happens only when k is far below 2^(m-1): no string with a nonzero
        // digit at position m-w can reach so small a value. Recode within the
        // scalar's own bit length instead.
        throw std::invalid_argument(
            "recode_complement_window: scalar too short for the m-bit frame");
    return s;
}

// -------------------------------------------------------------- cost model ----

/// Exact rational for the analytic table entries (m/2, m/(w+1), ...).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    bool is_integer() const { return den == 1; }
    std::int64_t ceil() const { return (num + den - 1) / den; }
    double value() const { return double(num) / double(den); }
    bool operator==(const Rational&) const = default;
};

/// Analytic per-scalar cost for an m-bit scalar: expected point additions,
/// point doublings, and the precomputed-table figures. `precomp_stored` is
/// the number of stored odd multiples ((2^(w-1) - 1) beyond the base point);
/// `precomp_reachable` counts all distinct multiples the windowed form can
/// reach (2^w - 1), the convention used by the per-window results table.
struct CostModel {
    Scheme scheme = Scheme::Binary;
    unsigned m = 0;
    int width_w = 1;
    Rational point_adds;
    Rational point_doubles;
    std::int64_t precomp_stored = 0;
    std::int64_t precomp_reachable = 0;
};

inline CostModel cost_model(Scheme scheme, unsigned m, int w = 0) {
    CostModel cm;
    cm.scheme = scheme;
    cm.m = m;
    cm.width_w = w;
    switch (scheme) {
        case Scheme::Binary:
            cm.width_w = 1;
            cm.point_adds = Rational(m, 2);
            cm.point_doubles = Rational(m);
            break;
        case Scheme::Naf:
            cm.width_w = 1;
            cm.point_adds = Rational(m, 3);
            cm.point_doubles = Rational(m + 1);
            break;
        case Scheme::Wnaf:
            if (w < 2) throw std::invalid_argument("cost_model: wnaf needs w >= 2");
            cm.point_adds = Rational(m, w + 1);
            cm.point_doubles = Rational(m + 1);
            cm.precomp_stored = (std::int64_t(1) << (w - 1)) - 1;
            cm.precomp_reachable = (std::int64_t(1) << w) - 1;
            break;
        case Scheme::ComplementWindow:
            if (w < 2) throw std::invalid_argument("cost_model: complement window needs w >= 2");
            cm.point_adds = Rational(m, w + 1);
            cm.point_doubles = Rational(std::int64_t(m) - w);
            cm.precomp_stored = (std::int64_t(1) << (w - 1)) - 1;
            cm.precomp_reachable = (std::int64_t(1) << w) - 1;
            break;
    }
    return cm;
}

}  // namespace ecmul
