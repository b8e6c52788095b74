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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lregcong/partitions.hpp"
#include "oracles.hpp"

using namespace lregcong;

TEST_CASE("regular_series small values") {
    for (int ell : {2, 3, 5, 11, 13, 25}) CHECK(regular_series(ell, 10)(0) == 1);
    CHECK(regular_series(3, 10)(4) == 4);
    CHECK(oracle::count_partitions(4, 4, 3) == 4);
    CHECK(regular_series(11, 10)(5) == 7);
    CHECK(regular_series(11, 10)(-1) == 0);
    CHECK_THROWS_AS(regular_series(1, 10), UsageError);
    CHECK_THROWS_AS(regular_series(3, 10)(11), PrecisionShortfall);
}

TEST_CASE("oracle values") {
    CHECK(oracle_b(7, 0) == 1);
    CHECK(oracle_b(13, 75) % 13 == 0);
    CHECK(oracle_b(25, 4) % 5 == 0);
    CHECK(oracle_b_mod(13, 75, 13) == 0);
    for (int ell : {2, 3, 4, 13})
        for (int n = 0; n <= 30; ++n) REQUIRE(oracle_b(ell, n) == oracle::count_partitions(n, n, ell));
}

TEST_CASE("oracle bounds") {
    CHECK_THROWS_AS(oracle_b(3, kExactOracleBound + 1), UsageError);
    CHECK_THROWS_AS(oracle_b_mod(3, kOracleBound + 1, 7), UsageError);
    CHECK_THROWS_AS(oracle_b(1, 5), UsageError);
    CHECK_THROWS_AS(oracle_b(3, -1), UsageError);
}

TEST_CASE("series agrees with oracle, exact range") {
    for (int ell : {3, 11, 13, 25}) {
        const auto table = regular_series(ell, kExactOracleBound);
        const auto oracle = oracle_table(ell, kExactOracleBound);
        for (int n = 0; n <= kExactOracleBound; ++n) {
            REQUIRE(table(n) >= 0);
            REQUIRE(static_cast<std::uint64_t>(table(n)) == oracle[n]);
        }
    }
}

TEST_CASE("below ell every partition is regular") {
    const auto p = oracle_table(1 << 20, 30);
    for (int ell : {3, 11, 13, 25}) {
        const auto table = regular_series(ell, 30);
        for (int n = 0; n < ell && n <= 30; ++n) CHECK(static_cast<std::uint64_t>(table(n)) == p[n]);
    }
}

TEST_CASE("modular tables are exact tables reduced") {
    for (int ell : {3, 11, 13, 25})
        for (Modulus m : {3u, 5u, 11u, 13u, 25u}) {
            const auto exact = regular_series<Int128>(ell, 350);
            const auto modular = regular_series(ell, 350, m);
            for (std::int64_t n = 0; n <= 350; ++n) REQUIRE(modular(n) == static_cast<std::int64_t>(reduce_mod(exact(n), m)));
        }
}

TEST_CASE("multi-modular agreement beyond 64 bits") {
    for (auto prime : kOraclePrimes) {
        const auto table = regular_series(3, 600, prime);
        const auto oracle = oracle_table_mod(3, 600, prime);
        for (int n = 0; n <= 600; ++n) REQUIRE(static_cast<std::uint64_t>(table(n)) == oracle[n]);
    }
}

TEST_CASE("exact 64-bit table overflows loudly") {
    CHECK_THROWS_AS(regular_series(3, 2000), ArithmeticOverflow);
}
