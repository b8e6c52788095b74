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

#include <set>

#include "lregcong/winquist.hpp"
#include "oracles.hpp"

using namespace lregcong;

TEST_CASE("theta and c values") {
    CHECK(theta_at(0, 0) == 0);
    CHECK(theta_at(0, -1) == 1);
    CHECK(theta_at(3, 1) == 20);
    CHECK(c_at(0, 0) == 1);
    CHECK(c_at(0, -1) == -10);
    CHECK(c_at(1, -1) == -105);
    CHECK_THROWS_AS(theta_at(-1, 0), UsageError);
    CHECK_THROWS_AS(c_at(-1, 0), UsageError);
}

TEST_CASE("completed square form") {
    for (std::int64_t k = 0; k <= 40; ++k)
        for (std::int64_t l = -40; l <= 40; ++l) {
            const auto t = theta_at(k, l);
            REQUIRE(t >= 0);
            REQUIRE(24 * t + 10 == 9 * (2 * k + 1) * (2 * k + 1) + (6 * l + 1) * (6 * l + 1));
            REQUIRE(ThetaSystem::completed_square(k, l) == Rational(t));
        }
}

TEST_CASE("lattice enumeration visits each point once") {
    for (std::int64_t N : {0, 1, 7, 50, 333, 2000}) {
        std::vector<LatticePoint> visited;
        for_each_lattice_point(N, [&](LatticePoint pt) { visited.push_back(pt); });
        const std::set<LatticePoint> unique(visited.begin(), visited.end());
        REQUIRE(unique.size() == visited.size());

        // theta <= N forces k <= sqrt(N) and |l| <= sqrt(N) + 1
        std::set<LatticePoint> scanned;
        const std::int64_t R = isqrt(N) + 2;
        for (std::int64_t k = 0; k <= R; ++k)
            for (std::int64_t l = -R; l <= R; ++l)
                if (theta_at(k, l) <= N) scanned.insert({k, l});
        REQUIRE(unique == scanned);
    }
}

TEST_CASE("winquist series equals the brute-force tenth power") {
    const std::size_t N = 1500;
    const auto lattice = winquist_series(N);
    CHECK(lattice[0] == 1);
    CHECK(lattice[1] == -10);
    const auto brute = oracle::product_expansion(N, {{1, 10}});
    for (std::size_t n = 0; n <= N; ++n) REQUIRE(lattice[n] == static_cast<std::int64_t>(brute[n]));
    CHECK(lattice == pow(euler_series(N), 10));
}
