// SPDX-License-Identifier: Apache-2.0
//
// Multiprecision prime-field arithmetic GF(p) in Montgomery form.
//
// The limb width is a template parameter (16, 32 or 64 bits); the 16-bit
// instantiation mirrors digit-serial word sizes of small fixed-point targets,
// the 64-bit one is the fast desktop configuration. For the same inputs all
// three widths produce bit-identical plain-domain results.
//
// Representation: little-endian limb vectors, fully reduced (< p). Elements
// carry a domain flag; mont_mul(aR, bR) = abR with R = 2^(limb_bits * n).
// Reduction is word-by-word CIOS. Inversion is a binary extended GCD on
// plain-domain values with a Montgomery-domain fix-up.
//
// NOT constant time. Operand-dependent branches are taken freely throughout;
// this library measures operation counts and must not be used where timing
// side channels matter.

#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ecmul/opcount.hpp"

namespace ecmul {

inline constexpr std::size_t kMaxFieldBits = 192;

template <class Limb> struct LimbTraits;
template <> struct LimbTraits<std::uint16_t> { using Wide = std::uint32_t; };
template <> struct LimbTraits<std::uint32_t> { using Wide = std::uint64_t; };
template <> struct LimbTraits<std::uint64_t> { using Wide = unsigned __int128; };

enum class Domain : std::uint8_t { Plain, Montgomery };

template <class Limb> class FpParams;

/// A residue mod p. Value semantics; ties back to its FpParams.
template <class Limb>
struct FpElement {
    static constexpr unsigned limb_bits = std::numeric_limits<Limb>::digits;
    static constexpr std::size_t max_limbs = kMaxFieldBits / limb_bits;
    using Words = std::array<Limb, max_limbs>;

    Words v{};
    const FpParams<Limb>* params = nullptr;
    Domain domain = Domain::Plain;

    bool operator==(const FpElement& o) const {
        return params == o.params && domain == o.domain && v == o.v;
    }
    bool is_zero() const {
        for (Limb w : v)
            if (w) return false;
        return true;
    }
};

namespace fpdetail {

// Little-endian fixed-size limb helpers. All lengths are in limbs.

template <class Limb, std::size_t N>
int cmp(const std::array<Limb, N>& a, const std::array<Limb, N>& b, std::size_t n) {
    for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

template <class Limb, std::size_t N>
Limb add_n(std::array<Limb, N>& r, const std::array<Limb, N>& a,
           const std::array<Limb, N>& b, std::size_t n) {
    using Wide = typename LimbTraits<Limb>::Wide;
    constexpr unsigned bits = std::numeric_limits<Limb>::digits;
    Limb carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Wide s = Wide(a[i]) + b[i] + carry;
        r[i] = Limb(s);
        carry = Limb(s >> bits);
    }
    return carry;
}

template <class Limb, std::size_t N>
Limb sub_n(std::array<Limb, N>& r, const std::array<Limb, N>& a,
           const std::array<Limb, N>& b, std::size_t n) {
    using Wide = typename LimbTraits<Limb>::Wide;
    constexpr unsigned bits = std::numeric_limits<Limb>::digits;
    Limb borrow = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Wide d = Wide(a[i]) - b[i] - borrow;
        r[i] = Limb(d);
        borrow = Limb((d >> bits) & 1);
    }
    return borrow;
}

template <class Limb, std::size_t N>
void shr1(std::array<Limb, N>& a, std::size_t n, Limb carry_in = 0) {
    constexpr unsigned bits = std::numeric_limits<Limb>::digits;
    for (std::size_t i = n; i-- > 0;) {
        Limb out = a[i] & 1;
        a[i] = Limb((a[i] >> 1) | (Limb(carry_in) << (bits - 1)));
        carry_in = out;
    }
}

}  // namespace fpdetail

/// Field description plus the Montgomery constants. Immutable after
/// construction; safe to share across threads. All arithmetic lives here so
/// each operation can report itself to an OpCounter.
template <class Limb>
class FpParams {
public:
    using Element = FpElement<Limb>;
    using Words = typename Element::Words;
    using Wide = typename LimbTraits<Limb>::Wide;
    static constexpr unsigned limb_bits = Element::limb_bits;
    static constexpr std::size_t max_limbs = Element::max_limbs;

    /// Construct from the modulus as a big-endian hex string.
    /// Requires p odd, 3 < p < 2^192. Primality is trusted from configuration.
    explicit FpParams(std::string_view p_hex) {
        p_ = parse_hex(p_hex);
        bit_length_ = bits_of(p_);
        if (bit_length_ == 0 || bit_length_ > kMaxFieldBits)
            throw std::invalid_argument("FpParams: modulus out of range");
        if (!(p_[0] & 1))
            throw std::invalid_argument("FpParams: modulus must be odd");
        if (bit_length_ <= 2)  // p > 3 required by the short-Weierstrass model
            throw std::invalid_argument("FpParams: modulus must exceed 3");
        num_limbs_ = (bit_length_ + limb_bits - 1) / limb_bits;
        n0_ = compute_n0(p_[0]);
        // Self-check: p * n_prime = -1 mod 2^limb_bits.
        if (Limb(p_[0] * n0_) != Limb(~Limb(0)))
            throw std::logic_error("FpParams: n_prime self-check failed");
        compute_r2();
        one_mont_ = mont_mul_raw(words_from_uint(1), r2_);
    }

    std::size_t num_limbs() const { return num_limbs_; }
    unsigned bit_length() const { return bit_length_; }
    const Words& modulus_words() const { return p_; }
    const Words& r2_words() const { return r2_; }

    // ----- element construction -----

    Element zero() const { return make(Words{}, Domain::Plain); }
    Element one() const { return from_uint(1); }

    Element from_uint(std::uint64_t x) const {
        Words w = words_from_uint(x);
        if (fpdetail::cmp(w, p_, num_limbs_) >= 0)
            throw std::invalid_argument("FpParams: value not reduced");
        return make(w, Domain::Plain);
    }

    /// Parse a big-endian hex residue; must already be reduced (< p).
    Element from_hex(std::string_view hex) const {
        Words w = parse_hex(hex);
        if (fpdetail::cmp(w, p_, num_limbs_) >= 0)
            throw std::invalid_argument("FpParams: hex value not reduced mod p");
        return make(w, Domain::Plain);
    }

    std::string to_hex(const Element& a) const {
        static const char* digits = "0123456789abcdef";
        std::string out;
        bool lead = true;
        for (std::size_t i = num_limbs_; i-- > 0;) {
            for (int s = int(limb_bits) - 4; s >= 0; s -= 4) {
                unsigned nib = unsigned(a.v[i] >> s) & 0xFu;
                if (lead && nib == 0 && !(i == 0 && s == 0)) continue;
                lead = false;
                out += digits[nib];
            }
        }
        return "0x" + out;
    }

    // ----- arithmetic -----

    Element add(const Element& a, const Element& b, OpCounter* c = nullptr) const {
        check_pair(a, b);
        count_add_sub(c);
        Element r = a;
        Limb carry = fpdetail::add_n(r.v, a.v, b.v, num_limbs_);
        if (carry || fpdetail::cmp(r.v, p_, num_limbs_) >= 0)
            fpdetail::sub_n(r.v, r.v, p_, num_limbs_);
        return r;
    }

    Element sub(const Element& a, const Element& b, OpCounter* c = nullptr) const {
        check_pair(a, b);
        count_add_sub(c);
        Element r = a;
        Limb borrow = fpdetail::sub_n(r.v, a.v, b.v, num_limbs_);
        if (borrow) fpdetail::add_n(r.v, r.v, p_, num_limbs_);
        return r;
    }

    Element negate(const Element& a, OpCounter* c = nullptr) const {
        return sub(make(Words{}, a.domain), a, c);
    }

    /// Enter the Montgomery domain: a -> a*R mod p.
    Element to_mont(const Element& a, OpCounter* c = nullptr) const {
        check_one(a);
        if (a.domain != Domain::Plain)
            throw std::invalid_argument("to_mont: element already in Montgomery domain");
        count_mul(c);
        return make(mont_mul_raw(a.v, r2_), Domain::Montgomery);
    }

    /// Leave the Montgomery domain: a*R -> a.
    Element from_mont(const Element& a, OpCounter* c = nullptr) const {
        check_one(a);
        if (a.domain != Domain::Montgomery)
            throw std::invalid_argument("from_mont: element already plain");
        count_mul(c);
        return make(mont_mul_raw(a.v, words_from_uint(1)), Domain::Plain);
    }

    /// Montgomery product a*b*R^-1 mod p; for aR, bR this is (ab)R.
    Element mul(const Element& a, const Element& b, OpCounter* c = nullptr) const {
        check_pair(a, b);
        require_mont(a);
        count_mul(c);
        return make(mont_mul_raw(a.v, b.v), Domain::Montgomery);
    }

    /// Same product as mul(a, a) but tallied as a squaring.
    Element sqr(const Element& a, OpCounter* c = nullptr) const {
        check_one(a);
        require_mont(a);
        count_sqr(c);
        return make(mont_mul_raw(a.v, a.v), Domain::Montgomery);
    }

    /// Multiplication by a curve constant; tallied separately (the cost-model
    /// symbols C and D), computed like any other product.
    Element mul_const(const Element& constant, const Element& a, OpCounter* c = nullptr) const {
        check_pair(constant, a);
        require_mont(a);
        count_const_mul(c);
        return make(mont_mul_raw(constant.v, a.v), Domain::Montgomery);
    }

    /// a^-1 in the same domain as a. Binary extended GCD on the plain value
    /// with a domain fix-up; counts as one field inversion.
    Element inv(const Element& a, OpCounter* c = nullptr) const {
        check_one(a);
        if (a.is_zero())
            throw std::domain_error("fp_inv: zero has no inverse");
        count_inv(c);
        Words x = egcd_inverse(a.v);
        if (a.domain == Domain::Plain)
            return make(x, Domain::Plain);
        // a.v = aR; egcd gives (aR)^-1 = a^-1 R^-1. Two Montgomery products
        // by R^2 lift it back to a^-1 R.
        x = mont_mul_raw(x, r2_);
        x = mont_mul_raw(x, r2_);
        return make(x, Domain::Montgomery);
    }

    /// a^e for a Montgomery-domain base; exponent is a plain reduced value.
    /// Used for Euler's criterion and test oracles; not tallied.
    Element pow(const Element& a, const Words& e, std::size_t e_limbs) const {
        require_mont(a);
        Element acc = make(one_mont_, Domain::Montgomery);
        for (std::size_t i = e_limbs; i-- > 0;) {
            for (int bit = int(limb_bits) - 1; bit >= 0; --bit) {
                acc = make(mont_mul_raw(acc.v, acc.v), Domain::Montgomery);
                if ((e[i] >> bit) & 1)
                    acc = make(mont_mul_raw(acc.v, a.v), Domain::Montgomery);
            }
        }
        return acc;
    }

    /// Euler's criterion: is a (plain or Montgomery) a nonzero square mod p?
    bool is_square(const Element& a) const {
        check_one(a);
        if (a.is_zero()) return false;
        Element am = a.domain == Domain::Montgomery ? a : to_mont(a);
        Words e = p_;
        e[0] -= 1;             // p odd, no borrow
        fpdetail::shr1(e, num_limbs_);
        Element r = pow(am, e, num_limbs_);
        return r.v == one_mont_;
    }

    const Words& one_mont_words() const { return one_mont_; }

private:
    Element make(const Words& w, Domain d) const {
        Element e;
        e.v = w;
        e.params = this;
        e.domain = d;
        return e;
    }

    void check_one(const Element& a) const {
        if (a.params != this)
            throw std::invalid_argument("fp: element belongs to different FpParams");
    }
    void check_pair(const Element& a, const Element& b) const {
        check_one(a);
        check_one(b);
        if (a.domain != b.domain)
            throw std::invalid_argument("fp: mixed plain/Montgomery operands");
    }
    void require_mont(const Element& a) const {
        if (a.domain != Domain::Montgomery)
            throw std::invalid_argument("fp: operation requires Montgomery domain");
    }

    static Words words_from_uint(std::uint64_t x) {
        Words w{};
        for (std::size_t i = 0; i < max_limbs && x; ++i) {
            w[i] = Limb(x);
            if constexpr (limb_bits >= 64) x = 0;
            else x >>= limb_bits;
        }
        return w;
    }

    static Words parse_hex(std::string_view hex) {
        if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
        if (hex.empty()) throw std::invalid_argument("fp: empty hex string");
        Words w{};
        unsigned bitpos = 0;
        for (std::size_t i = hex.size(); i-- > 0;) {
            char ch = hex[i];
            unsigned nib;
            if (ch >= '0' && ch <= '9') nib = unsigned(ch - '0');
            else if (ch >= 'a' && ch <= 'f') nib = unsigned(ch - 'a' + 10);
            else if (ch >= 'A' && ch <= 'F') nib = unsigned(ch - 'A' + 10);
            else throw std::invalid_argument("fp: bad hex digit");
            if (nib && bitpos + 4 > kMaxFieldBits)
                throw std::invalid_argument("fp: hex value exceeds 192 bits");
            if (bitpos < kMaxFieldBits)
                w[bitpos / limb_bits] |= Limb(Limb(nib) << (bitpos % limb_bits));
            bitpos += 4;
        }
        return w;
    }

    static unsigned bits_of(const Words& w) {
        for (std::size_t i = max_limbs; i-- > 0;) {
            if (w[i]) {
                unsigned b = limb_bits;
                Limb top = w[i];
                while (!(top >> (b - 1))) --b;
                return unsigned(i) * limb_bits + b;
            }
        }
        return 0;
    }

    /// n0 = -p^-1 mod 2^limb_bits via Newton iteration on the low limb.
    static Limb compute_n0(Limb p0) {
        Limb inv = p0;  // correct mod 2^3 for odd p0... iterate to full width
        for (int i = 0; i < 6; ++i)
            inv = Limb(inv * (Limb(2) - Limb(p0 * inv)));
        return Limb(Limb(0) - inv);
    }

    /// R^2 mod p by 2*num_limbs*limb_bits doublings of 1 mod p.
    void compute_r2() {
        Words x = words_from_uint(1);
        const std::size_t total = 2 * num_limbs_ * limb_bits;
        for (std::size_t i = 0; i < total; ++i) {
            Limb carry = fpdetail::add_n(x, x, x, num_limbs_);
            if (carry || fpdetail::cmp(x, p_, num_limbs_) >= 0)
                fpdetail::sub_n(x, x, p_, num_limbs_);
        }
        r2_ = x;
    }

    /// CIOS Montgomery product of two reduced operands.
    Words mont_mul_raw(const Words& a, const Words& b) const {
        const std::size_t n = num_limbs_;
        std::array<Limb, max_limbs + 2> t{};
        for (std::size_t i = 0; i < n; ++i) {
            // t += a[i] * b
            Wide carry = 0;
            for (std::size_t j = 0; j < n; ++j) {
                Wide cur = Wide(t[j]) + Wide(a[i]) * b[j] + carry;
                t[j] = Limb(cur);
                carry = cur >> limb_bits;
            }
            Wide cur = Wide(t[n]) + carry;
            t[n] = Limb(cur);
            t[n + 1] = Limb(t[n + 1] + Limb(cur >> limb_bits));
            // reduce one limb
            Limb m = Limb(t[0] * n0_);
            carry = (Wide(t[0]) + Wide(m) * p_[0]) >> limb_bits;
            for (std::size_t j = 1; j < n; ++j) {
                Wide c2 = Wide(t[j]) + Wide(m) * p_[j] + carry;
                t[j - 1] = Limb(c2);
                carry = c2 >> limb_bits;
            }
            cur = Wide(t[n]) + carry;
            t[n - 1] = Limb(cur);
            t[n] = Limb(t[n + 1] + Limb(cur >> limb_bits));
            t[n + 1] = 0;
        }
        Words r{};
        for (std::size_t i = 0; i < n; ++i) r[i] = t[i];
        if (t[n] || fpdetail::cmp(r, p_, n) >= 0)
            fpdetail::sub_n(r, r, p_, n);
        return r;
    }

    /// Binary extended GCD inverse of a reduced nonzero plain value.
    Words egcd_inverse(const Words& a) const {
        const std::size_t n = num_limbs_;
        Words u = a, v = p_;
        Words x1 = words_from_uint(1), x2{};
        auto is_one = [&](const Words& w) {
            if (w[0] != 1) return false;
            for (std::size_t i = 1; i < n; ++i)
                if (w[i]) return false;
            return true;
        };
        auto halve_mod_p = [&](Words& w) {
            Limb carry = 0;
            if (w[0] & 1) carry = fpdetail::add_n(w, w, p_, n);
            fpdetail::shr1(w, n, carry);
        };
        while (!is_one(u) && !is_one(v)) {
            while (!(u[0] & 1)) {
                fpdetail::shr1(u, n);
                halve_mod_p(x1);
            }
            while (!(v[0] & 1)) {
                fpdetail::shr1(v, n);
                halve_mod_p(x2);
            }
            if (fpdetail::cmp(u, v, n) >= 0) {
                fpdetail::sub_n(u, u, v, n);
                if (fpdetail::sub_n(x1, x1, x2, n)) fpdetail::add_n(x1, x1, p_, n);
            } else {
                fpdetail::sub_n(v, v, u, n);
                if (fpdetail::sub_n(x2, x2, x1, n)) fpdetail::add_n(x2, x2, p_, n);
            }
        }
        return is_one(u) ? x1 : x2;
    }

    Words p_{};
    Words r2_{};
    Words one_mont_{};
    Limb n0_ = 0;
    std::size_t num_limbs_ = 0;
    unsigned bit_length_ = 0;
};

}  // namespace ecmul
