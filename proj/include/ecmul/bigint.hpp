// SPDX-License-Identifier: Apache-2.0
//
// Arbitrary-precision integers for scalars, curve orders, config parsing and
// the reference oracles. The fast field paths (fp.hpp, f2m.hpp) do not use
// this type; keeping them limb-level makes the oracle an independent check.

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ecmul {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt bigint_from_hex(std::string_view hex) {
    std::string s(hex);
    if (!s.starts_with("0x") && !s.starts_with("0X")) s = "0x" + s;
    return BigInt(s);
}

inline std::string bigint_to_hex(const BigInt& x) {
    if (x < 0) throw std::invalid_argument("bigint_to_hex: negative value");
    std::string out;
    BigInt t = x;
    static const char* digits = "0123456789abcdef";
    if (t == 0) out = "0";
    while (t > 0) {
        out += digits[static_cast<unsigned>(t & 0xF)];
        t >>= 4;
    }
    std::reverse(out.begin(), out.end());
    return "0x" + out;
}

/// Uniform random integer with exactly `bits` usable positions; if msb_set,
/// the top bit is forced so the value has full bit length. Deterministic for
/// a given generator state (mt19937_64 is specified bit-exactly).
inline BigInt random_bits(std::mt19937_64& rng, unsigned bits, bool msb_set = false) {
    BigInt x = 0;
    for (unsigned got = 0; got < bits; got += 64) {
        std::uint64_t w = rng();
        unsigned take = std::min(64u, bits - got);
        if (take < 64) w &= (std::uint64_t(1) << take) - 1;
        x |= BigInt(w) << got;
    }
    if (msb_set) x |= BigInt(1) << (bits - 1);
    return x;
}

inline BigInt random_below(std::mt19937_64& rng, const BigInt& bound) {
    if (bound <= 0) throw std::invalid_argument("random_below: bound must be positive");
    unsigned bits = 0;
    for (BigInt t = bound; t > 0; t >>= 1) ++bits;
    for (;;) {
        BigInt x = random_bits(rng, bits);
        if (x < bound) return x;
    }
}

}  // namespace ecmul
