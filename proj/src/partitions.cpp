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

#include "lregcong/partitions.hpp"

#include <string>

namespace lregcong {

namespace {

void check_oracle_args(int ell, int n, int bound) {
    if (ell < 2) throw UsageError("ell must be at least 2");
    if (n < 0) throw UsageError("oracle index must be nonnegative");
    if (n > bound) throw UsageError("oracle index " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
}

}  // namespace

std::vector<std::uint64_t> oracle_table(int ell, int n_max) {
    check_oracle_args(ell, n_max, kExactOracleBound);
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(n_max) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n_max; ++part) {
        if (part % ell == 0) continue;
        for (int s = part; s <= n_max; ++s) ways[s] += ways[s - part];
    }
    return ways;
}

std::uint64_t oracle_b(int ell, int n) { return oracle_table(ell, n).back(); }

std::vector<std::uint64_t> oracle_table_mod(int ell, int n_max, std::uint64_t m) {
    check_oracle_args(ell, n_max, kOracleBound);
    if (m == 0 || m > (std::uint64_t{1} << 62)) throw UsageError("oracle modulus must lie in [1, 2^62]");
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(n_max) + 1, 0);
    ways[0] = 1 % m;
    for (int part = 1; part <= n_max; ++part) {
        if (part % ell == 0) continue;
        for (int s = part; s <= n_max; ++s) {
            std::uint64_t v = ways[s] + ways[s - part];
            ways[s] = v >= m ? v - m : v;
        }
    }
    return ways;
}

std::uint64_t oracle_b_mod(int ell, int n, std::uint64_t m) { return oracle_table_mod(ell, n, m).back(); }

}  // namespace lregcong
