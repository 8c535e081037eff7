/**************************************************************************
 * bigint.hpp
 *
 * Copyright 2026 The mdscount Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/
#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mds {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 128-bit counter used inside enumeration kernels.
using Counter = unsigned __int128;

inline BigInt to_big(Counter c) {
    BigInt hi = static_cast<std::uint64_t>(c >> 64);
    return (hi << 64) + static_cast<std::uint64_t>(c);
}

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline std::uint64_t binomial_u64(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Saturating conversion; values above 2^64-1 come back as UINT64_MAX.
inline std::uint64_t saturate_u64(const BigInt& v) {
    if (v < 0) return 0;
    if (v > BigInt(UINT64_MAX)) return UINT64_MAX;
    return static_cast<std::uint64_t>(v);
}

}  // namespace mds
