// SPDX-License-Identifier: Apache-2.0
//
// Shared fixtures and conversions for the test suites.

#pragma once

#include <random>
#include <string>

#include "ecmul/bigint.hpp"
#include "ecmul/fp.hpp"

namespace ecmul::test {

inline const std::string kSecp160r1P = "0xffffffffffffffffffffffffffffffff7fffffff";

template <class Limb>
BigInt fp_value(const FpParams<Limb>& fp, const FpElement<Limb>& a) {
    const FpElement<Limb> plain =
        a.domain == Domain::Montgomery ? fp.from_mont(a) : a;
    return bigint_from_hex(fp.to_hex(plain));
}

template <class Limb>
FpElement<Limb> fp_from_bigint(const FpParams<Limb>& fp, const BigInt& x) {
    return fp.from_hex(bigint_to_hex(x));
}

template <class Limb>
FpElement<Limb> random_element(const FpParams<Limb>& fp, const BigInt& p,
                               std::mt19937_64& rng) {
    return fp_from_bigint(fp, random_below(rng, p));
}

// secp160r1 (SEC2)
inline const std::string kSecp160r1A = "0xffffffffffffffffffffffffffffffff7ffffffc";
inline const std::string kSecp160r1B = "0x1c97befc54bd7a8b65acf89f81d4d4adc565fa45";
inline const std::string kSecp160r1Gx = "0x4a96b5688ef573284664698968c38bb913cbfc82";
inline const std::string kSecp160r1Gy = "0x23a628553168947d59dcc912042351377ac5fb32";
inline const std::string kSecp160r1N = "0x0100000000000000000001f4c8f927aed3ca752257";

}  // namespace ecmul::test
