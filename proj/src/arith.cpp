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

#include "lregcong/arith.hpp"

#include <algorithm>
#include <cmath>

namespace lregcong {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 0;
    Int128 old_r = a % m, r = m;
    Int128 old_s = 1, s = 0;
    while (r != 0) {
        Int128 q = old_r / r;
        Int128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) return 0;
    return reduce_mod(old_s, m);
}

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw UsageError("isqrt of a negative number");
    auto x = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (x > 0 && static_cast<Int128>(x) * x > n) --x;
    while (static_cast<Int128>(x + 1) * (x + 1) <= n) ++x;
    return x;
}

std::string to_string(Int128 v) {
    if (v == 0) return "0";
    bool negative = v < 0;
    UInt128 u = negative ? static_cast<UInt128>(-(v + 1)) + 1 : static_cast<UInt128>(v);
    std::string digits;
    while (u != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace lregcong
