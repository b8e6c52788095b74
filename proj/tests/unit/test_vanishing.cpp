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

#include "lregcong/primes.hpp"
#include "lregcong/vanishing.hpp"
#include "lregcong/winquist.hpp"

using namespace lregcong;

TEST_CASE("vanishing case parameters") {
    const auto v7 = make_vanishing_case(7);
    CHECK(v7.theta0 == 20);
    CHECK(v7.r == 3);
    CHECK(v7.s_offset == 1);
    CHECK(v7.s == 1);
    CHECK(v7.sigma_sign == 1);

    const auto v11 = make_vanishing_case(11);
    CHECK(v11.theta0 == 50);
    CHECK(v11.r == 5);
    CHECK(v11.s_offset == -2);
    CHECK(v11.s == 9);
    CHECK(v11.sigma_sign == -1);

    CHECK_THROWS_AS(make_vanishing_case(5), UsageError);
    CHECK_THROWS_AS(make_vanishing_case(3), UsageError);
    CHECK_THROWS_AS(make_vanishing_case(15), UsageError);
}

TEST_CASE("residue solutions") {
    const auto s7 = unique_solution(7, 20);
    REQUIRE(s7.unique());
    CHECK(*s7.solution == LatticePoint{3, 1});
    const auto s11 = unique_solution(11, 50);
    REQUIRE(s11.unique());
    CHECK(*s11.solution == LatticePoint{5, 9});

    const auto s5 = unique_solution(5, 10);
    CHECK_FALSE(s5.unique());
    CHECK(s5.count == 9);
    CHECK_FALSE(s5.solution.has_value());
}

TEST_CASE("uniqueness tracks p mod 4") {
    for (auto p : primes_up_to(60)) {
        if (p < 5) continue;
        const std::int64_t theta0 = 5 * (p * p - 1) / 12;
        const auto sol = unique_solution(p, theta0);
        CAPTURE(p);
        CHECK(sol.unique() == (p % 4 == 3));
        if (p % 4 == 3) {
            const auto vc = make_vanishing_case(p);
            CHECK(*sol.solution == LatticePoint{vc.r, vc.s});
            CHECK(theta_at(vc.r, vc.s_offset) == theta0);
        }
    }
}

TEST_CASE("transform lambda is p^4") {
    for (auto p : primes_up_to(60)) {
        if (p < 5 || p % 4 != 3) continue;
        CAPTURE(p);
        const auto vc = make_vanishing_case(p);
        CHECK(verify_transform(vc, 15) == p * p * p * p);
        CHECK(verify_transform(vc, 0) == p * p * p * p);
    }
    CHECK(c_at(3, 1) == 2401 * c_at(0, 0));
    CHECK(c_at(5, -2) == 14641 * c_at(0, 0));
}

TEST_CASE("vanishing scan on (q;q)^10") {
    const auto v7 = make_vanishing_case(7);
    const auto w = winquist_series(vanishing_required_precision(v7, 20));
    CHECK(w[20] == 2401);
    CHECK(w[27] == 0);
    const auto rep = vanishing_scan(v7, 20, w);
    CHECK(rep.lambda == 2401);
    CHECK(rep.recursion_checked == 21);
    CHECK(rep.vanishing_checked > 0);

    const auto v11 = make_vanishing_case(11);
    const auto rep11 = vanishing_scan(v11, 10);
    CHECK(rep11.lambda == 14641);
    CHECK(winquist_series(60)[50] == 14641);

    CHECK_THROWS_AS(vanishing_scan(v7, 20, winquist_series(100)), PrecisionShortfall);
}

TEST_CASE("vanishing scan rejects a perturbed series") {
    const auto v7 = make_vanishing_case(7);
    const auto w = winquist_series(vanishing_required_precision(v7, 5));
    std::vector<std::int64_t> bumped(w.coefficients().begin(), w.coefficients().end());
    bumped[27] += 1;
    CHECK_THROWS_AS(vanishing_scan(v7, 5, TruncatedSeries<std::int64_t>(bumped)), VanishingViolation);
}
