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

#ifndef LREGCONG_PRIMES_HPP
#define LREGCONG_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace lregcong {

bool is_prime(std::int64_t n);

// Sieve of Eratosthenes; primes p with 2 <= p <= bound, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

}  // namespace lregcong

#endif  // LREGCONG_PRIMES_HPP
