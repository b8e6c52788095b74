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

#ifndef LREGCONG_PARTITIONS_HPP
#define LREGCONG_PARTITIONS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lregcong/series.hpp"

namespace lregcong {

// b_ell(0..N), optionally reduced modulo m. b_ell(n) = 0 for n < 0.
template <typename T = std::int64_t>
struct RegularPartitionTable {
    int ell;
    TruncatedSeries<T> values;

    std::size_t precision() const noexcept { return values.precision(); }
    const std::optional<Modulus>& modulus() const noexcept { return values.modulus(); }

    T operator()(std::int64_t n) const {
        if (n < 0) return T{0};
        return values.at(static_cast<std::size_t>(n));
    }
};

// Coefficients of (q^ell; q^ell)_inf / (q; q)_inf through q^N.
template <typename T = std::int64_t>
RegularPartitionTable<T> regular_series(int ell, std::size_t N, std::optional<Modulus> modulus = std::nullopt) {
    if (ell < 2) throw UsageError("ell must be at least 2");
    const auto euler = euler_series<T>(N, modulus);
    const auto numerator = dilate(euler_series<T>(N / static_cast<std::size_t>(ell), modulus),
                                  static_cast<std::size_t>(ell), N);
    return {ell, mul(numerator, inverse(euler))};
}

// Brute-force counting by a knapsack over the allowed parts. It shares no code with the
// series routines above and serves as their oracle.
inline constexpr int kOracleBound = 5000;
inline constexpr int kExactOracleBound = 300;

// Independent primes near 2^60 for the multi-modular comparison beyond the exact range.
inline constexpr std::array<std::uint64_t, 3> kOraclePrimes = {
    2305843009213693951ULL,  // 2^61 - 1
    1152921504606846883ULL,  // 2^60 - 93
    576460752303423433ULL,   // 2^59 - 55
};

std::uint64_t oracle_b(int ell, int n);
std::vector<std::uint64_t> oracle_table(int ell, int n_max);

std::uint64_t oracle_b_mod(int ell, int n, std::uint64_t m);
std::vector<std::uint64_t> oracle_table_mod(int ell, int n_max, std::uint64_t m);

}  // namespace lregcong

#endif  // LREGCONG_PARTITIONS_HPP
