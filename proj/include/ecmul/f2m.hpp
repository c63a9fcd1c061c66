// SPDX-License-Identifier: Apache-2.0
//
// Binary-field arithmetic GF(2^m) in polynomial basis, m < 192. Elements are
// bit vectors over three 64-bit words; multiplication is a left-to-right comb
// with a 4-bit window, squaring spreads bits through a byte table, inversion
// is the polynomial extended Euclidean algorithm. Reduction is generic for
// any configured irreducible polynomial.

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ecmul/opcount.hpp"

namespace ecmul {

class F2mParams;

struct F2mElement {
    std::array<std::uint64_t, 3> w{};
    const F2mParams* params = nullptr;

    bool operator==(const F2mElement& o) const { return params == o.params && w == o.w; }
    bool is_zero() const { return !(w[0] | w[1] | w[2]); }
};

class F2mParams {
public:
    using Words = std::array<std::uint64_t, 3>;

    /// Construct from the extension degree and the reduction polynomial given
    /// as a hex bit vector (must have degree exactly m and a nonzero constant
    /// term). For m <= 32 irreducibility is verified by exhaustive trial
    /// division; larger polynomials are trusted from configuration.
    F2mParams(unsigned m, std::string_view poly_hex) : m_(m) {
        if (m < 2 || m > 191)
            throw std::invalid_argument("F2mParams: extension degree out of range");
        poly_ = parse_hex(poly_hex);
        if (degree(poly_) != int(m) || !(poly_[0] & 1))
            throw std::invalid_argument(
                "F2mParams: reduction polynomial must have degree m and nonzero constant term");
        if (m <= 32 && !irreducible_small())
            throw std::invalid_argument("F2mParams: reduction polynomial is reducible");
    }

    unsigned degree_m() const { return m_; }
    const Words& poly_words() const { return poly_; }

    F2mElement zero() const { return make({}); }
    F2mElement one() const { return make({1, 0, 0}); }

    F2mElement from_uint(std::uint64_t bits) const {
        Words w{bits, 0, 0};
        if (degree(w) >= int(m_))
            throw std::invalid_argument("f2m: value not reduced");
        return make(w);
    }

    F2mElement from_hex(std::string_view hex) const {
        Words w = parse_hex(hex);
        if (degree(w) >= int(m_))
            throw std::invalid_argument("f2m: hex value not reduced");
        return make(w);
    }

    std::string to_hex(const F2mElement& a) const {
        static const char* digits = "0123456789abcdef";
        std::string out;
        bool lead = true;
        for (std::size_t i = 3; i-- > 0;) {
            for (int s = 60; s >= 0; s -= 4) {
                unsigned nib = unsigned(a.w[i] >> s) & 0xFu;
                if (lead && nib == 0 && !(i == 0 && s == 0)) continue;
                lead = false;
                out += digits[nib];
            }
        }
        return "0x" + out;
    }

    /// Coefficient-wise XOR.
    F2mElement add(const F2mElement& a, const F2mElement& b, OpCounter* c = nullptr) const {
        check_pair(a, b);
        count_add_sub(c);
        return make({a.w[0] ^ b.w[0], a.w[1] ^ b.w[1], a.w[2] ^ b.w[2]});
    }

    F2mElement mul(const F2mElement& a, const F2mElement& b, OpCounter* c = nullptr) const {
        check_pair(a, b);
        count_mul(c);
        return make(reduce(comb_mul(a.w, b.w)));
    }

    F2mElement sqr(const F2mElement& a, OpCounter* c = nullptr) const {
        check_one(a);
        count_sqr(c);
        return make(reduce(spread(a.w)));
    }

    /// Multiplication by the curve constant a; tallied separately.
    F2mElement mul_const(const F2mElement& constant, const F2mElement& a,
                         OpCounter* c = nullptr) const {
        check_pair(constant, a);
        count_const_mul(c);
        return make(reduce(comb_mul(constant.w, a.w)));
    }

    /// Polynomial extended Euclid; one field inversion.
    F2mElement inv(const F2mElement& a, OpCounter* c = nullptr) const {
        check_one(a);
        if (a.is_zero())
            throw std::domain_error("f2m_inv: zero has no inverse");
        count_inv(c);
        Words u = a.w, v = poly_;
        Words g1{1, 0, 0}, g2{};
        while (!(u[0] == 1 && u[1] == 0 && u[2] == 0)) {
            int j = degree(u) - degree(v);
            if (j < 0) {
                std::swap(u, v);
                std::swap(g1, g2);
                j = -j;
            }
            xor_shifted(u, v, unsigned(j));
            xor_shifted(g1, g2, unsigned(j));
        }
        return make(g1);
    }

private:
    F2mElement make(Words w) const {
        F2mElement e;
        e.w = w;
        e.params = this;
        return e;
    }

    void check_one(const F2mElement& a) const {
        if (a.params != this)
            throw std::invalid_argument("f2m: element belongs to different F2mParams");
    }
    void check_pair(const F2mElement& a, const F2mElement& b) const {
        check_one(a);
        check_one(b);
    }

    static Words parse_hex(std::string_view hex) {
        if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
        if (hex.empty()) throw std::invalid_argument("f2m: empty hex string");
        Words w{};
        unsigned bitpos = 0;
        for (std::size_t i = hex.size(); i-- > 0;) {
            char ch = hex[i];
            unsigned nib;
            if (ch >= '0' && ch <= '9') nib = unsigned(ch - '0');
            else if (ch >= 'a' && ch <= 'f') nib = unsigned(ch - 'a' + 10);
            else if (ch >= 'A' && ch <= 'F') nib = unsigned(ch - 'A' + 10);
            else throw std::invalid_argument("f2m: bad hex digit");
            if (nib && bitpos + 4 > 192)
                throw std::invalid_argument("f2m: hex value exceeds 192 bits");
            if (bitpos < 192) w[bitpos / 64] |= std::uint64_t(nib) << (bitpos % 64);
            bitpos += 4;
        }
        return w;
    }

    static int degree(const Words& w) {
        for (std::size_t i = 3; i-- > 0;) {
            if (w[i]) {
                int b = 63;
                while (!((w[i] >> b) & 1)) --b;
                return int(i) * 64 + b;
            }
        }
        return -1;  // zero polynomial
    }

    static void xor_shifted(Words& dst, const Words& src, unsigned shift) {
        unsigned ws = shift / 64, bs = shift % 64;
        for (std::size_t i = 3; i-- > ws;) {
            std::uint64_t v = src[i - ws] << bs;
            if (bs && i - ws > 0) v |= src[i - ws - 1] >> (64 - bs);
            dst[i] ^= v;
        }
    }

    using Prod = std::array<std::uint64_t, 6>;

    static Prod comb_mul(const Words& a, const Words& b) {
        // 4-bit window table of u(x)*b(x) for u in 0..15
        std::array<std::array<std::uint64_t, 4>, 16> tab{};
        for (unsigned u = 1; u < 16; ++u) {
            for (unsigned bit = 0; bit < 4; ++bit) {
                if (!((u >> bit) & 1)) continue;
                for (std::size_t i = 0; i < 3; ++i) {
                    tab[u][i] ^= b[i] << bit;
                    if (bit && i + 1 < 4) tab[u][i + 1] ^= b[i] >> (64 - bit);
                }
            }
        }
        Prod r{};
        for (std::size_t wi = 0; wi < 3; ++wi) {
            for (unsigned ni = 0; ni < 16; ++ni) {
                unsigned nib = unsigned(a[wi] >> (4 * ni)) & 0xFu;
                if (!nib) continue;
                unsigned shift = 4 * ni;
                for (std::size_t j = 0; j < 4; ++j) {
                    r[wi + j] ^= tab[nib][j] << shift;
                    if (shift && wi + j + 1 < 6) r[wi + j + 1] ^= tab[nib][j] >> (64 - shift);
                }
            }
        }
        return r;
    }

    static Prod spread(const Words& a) {
        // square by interleaving zeros between coefficients
        static constexpr auto table = [] {
            std::array<std::uint16_t, 256> t{};
            for (unsigned v = 0; v < 256; ++v) {
                std::uint16_t s = 0;
                for (unsigned b = 0; b < 8; ++b)
                    if ((v >> b) & 1) s |= std::uint16_t(1u << (2 * b));
                t[v] = s;
            }
            return t;
        }();
        Prod r{};
        for (std::size_t i = 0; i < 3; ++i) {
            std::uint64_t lo = 0, hi = 0;
            for (unsigned byte = 0; byte < 4; ++byte)
                lo |= std::uint64_t(table[(a[i] >> (8 * byte)) & 0xFF]) << (16 * byte);
            for (unsigned byte = 4; byte < 8; ++byte)
                hi |= std::uint64_t(table[(a[i] >> (8 * byte)) & 0xFF]) << (16 * (byte - 4));
            r[2 * i] = lo;
            r[2 * i + 1] = hi;
        }
        return r;
    }

    Words reduce(Prod t) const {
        for (int bit = 2 * int(m_) - 2; bit >= int(m_); --bit) {
            if ((t[std::size_t(bit) / 64] >> (bit % 64)) & 1) {
                unsigned shift = unsigned(bit) - m_;
                unsigned ws = shift / 64, bs = shift % 64;
                for (std::size_t i = 0; i < 3; ++i) {
                    t[i + ws] ^= poly_[i] << bs;
                    if (bs && i + ws + 1 < 6) t[i + ws + 1] ^= poly_[i] >> (64 - bs);
                }
            }
        }
        return {t[0], t[1], t[2]};
    }

    /// Trial division by every polynomial of degree 1..m/2 (m <= 32 only).
    bool irreducible_small() const {
        std::uint64_t f = poly_[0];
        for (unsigned dd = 1; dd <= m_ / 2; ++dd) {
            for (std::uint64_t g = (1ull << dd); g < (2ull << dd); ++g) {
                // remainder of f mod g
                std::uint64_t r = f;
                int dr;
                auto deg64 = [](std::uint64_t x) { return 63 - __builtin_clzll(x); };
                while (r && (dr = deg64(r)) >= int(dd))
                    r ^= g << (dr - int(dd));
                if (r == 0) return false;
            }
        }
        return true;
    }

    unsigned m_;
    Words poly_{};
};

}  // namespace ecmul
