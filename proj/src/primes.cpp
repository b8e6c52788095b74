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

#include "lregcong/primes.hpp"

namespace lregcong {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
}

}  // namespace lregcong
