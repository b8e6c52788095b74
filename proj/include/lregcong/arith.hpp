/*
   Copyright 2026 The lregcong Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LREGCONG_ARITH_HPP
#define LREGCONG_ARITH_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "lregcong/error.hpp"

namespace lregcong {

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

// Overflow-checked primitives. `index` names the coefficient (or scan position) being computed
// and is carried by the exception.
template <typename T>
T checked_add(T a, T b, std::size_t index = 0) {
    T out;
    if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("addition overflow", index);
    return out;
}

template <typename T>
T checked_sub(T a, T b, std::size_t index = 0) {
    T out;
    if (__builtin_sub_overflow(a, b, &out)) throw ArithmeticOverflow("subtraction overflow", index);
    return out;
}

template <typename T>
T checked_mul(T a, T b, std::size_t index = 0) {
    T out;
    if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("multiplication overflow", index);
    return out;
}

template <typename T>
T checked_pow(T base, unsigned exponent, std::size_t index = 0) {
    T out = 1;
    for (unsigned i = 0; i < exponent; ++i) out = checked_mul(out, base, index);
    return out;
}

// Canonical representative of v in [0, m).
inline std::uint64_t reduce_mod(Int128 v, std::uint64_t m) {
    Int128 r = v % static_cast<Int128>(m);
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<UInt128>(a) * b % m);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;  // a, b < m < 2^63, no wraparound
    return s >= m ? s - m : s;
}

// Inverse of a modulo m, or 0 when gcd(a, m) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

// floor(sqrt(n)) for n >= 0, exact.
std::int64_t isqrt(std::int64_t n);

std::string to_string(Int128 v);

inline bool fits_int64(Int128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

}  // namespace lregcong

#endif  // LREGCONG_ARITH_HPP
