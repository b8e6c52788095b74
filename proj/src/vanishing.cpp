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

#include "lregcong/vanishing.hpp"

#include "lregcong/primes.hpp"

namespace lregcong {

VanishingCase make_vanishing_case(std::int64_t p) {
    if (!is_prime(p) || p < 5) throw UsageError("vanishing case needs a prime p >= 5");
    if (p % 4 != 3) throw UsageError("vanishing case needs p = 3 (mod 4)");
    VanishingCase vc{};
    vc.p = p;
    vc.theta0 = 5 * (p * p - 1) / 12;
    vc.r = (p - 1) / 2;
    if ((p - 1) % 6 == 0) {
        vc.s_offset = (p - 1) / 6;
        vc.sigma_sign = 1;
    } else {
        vc.s_offset = (-p - 1) / 6;
        vc.sigma_sign = -1;
    }
    vc.s = ((vc.s_offset % p) + p) % p;
    return vc;
}

ResidueSolutions unique_solution(std::int64_t p, std::int64_t theta0) {
    if (!is_prime(p)) throw UsageError("unique_solution needs a prime");
    const std::int64_t target = ((theta0 % p) + p) % p;
    ResidueSolutions out;
    for (std::int64_t k = 0; k < p; ++k)
        for (std::int64_t l = 0; l < p; ++l)
            if (theta_at(k, l) % p == target) {
                ++out.count;
                out.solution = LatticePoint{k, l};
            }
    if (out.count != 1) out.solution.reset();
    return out;
}

ConditionViolation::ConditionViolation(const std::string& condition_, LatticePoint at_)
    : ViolationError("condition " + condition_ + " fails at (k, l) = (" + std::to_string(at_.k) + ", " +
                     std::to_string(at_.l) + ")"),
      condition(condition_), at(at_) {}

std::int64_t verify_transform(const VanishingCase& vc, std::int64_t K) {
    if (K < 0) throw UsageError("transform window must be nonnegative");
    const std::int64_t p = vc.p;
    const std::int64_t lambda = c_at(vc.r, vc.s_offset) / c_at(0, 0);
    for (std::int64_t k = 0; k <= K; ++k) {
        for (std::int64_t l = -K; l <= K; ++l) {
            const std::int64_t sk = p * k + vc.r;
            const std::int64_t sl = p * l + vc.s_offset;
            const std::int64_t tl = vc.sigma_sign * l;
            if (theta_at(sk, sl) != checked_add(checked_mul(p * p, theta_at(k, tl)), vc.theta0))
                throw ConditionViolation("(b) exponent transform", {k, l});
            if (c_at(sk, sl) != checked_mul(lambda, c_at(k, tl)))
                throw ConditionViolation("(c) coefficient transform", {k, l});
        }
    }
    return lambda;
}

VanishingViolation::VanishingViolation(const std::string& what, std::int64_t n_)
    : ViolationError(what + " at n=" + std::to_string(n_)), n(n_) {}

std::size_t vanishing_required_precision(const VanishingCase& vc, std::int64_t N) {
    return static_cast<std::size_t>(vc.p * vc.p * N + vc.theta0);
}

VanishingReport vanishing_scan(const VanishingCase& vc, std::int64_t N, const TruncatedSeries<std::int64_t>& tenth_power) {
    if (N < 0) throw UsageError("scan bound must be nonnegative");
    const std::size_t required = vanishing_required_precision(vc, N);
    if (tenth_power.precision() < required) throw PrecisionShortfall("vanishing scan needs a longer expansion", required);
    const std::int64_t p = vc.p;
    const std::int64_t lambda = verify_transform(vc, 0);

    VanishingReport report{p, N, lambda, 0, 0};
    auto a = [&](std::int64_t n) { return tenth_power[static_cast<std::size_t>(n)]; };
    for (std::int64_t n = 0; n <= N; ++n) {
        if (a(p * p * n + vc.theta0) != checked_mul(lambda, a(n)))
            throw VanishingViolation("a(p^2 n + theta0) != lambda a(n)", n);
        ++report.recursion_checked;
    }
    for (std::int64_t n = 0; n <= p * N; ++n) {
        if (n % p == 0) continue;
        if (a(p * n + vc.theta0) != 0) throw VanishingViolation("a(p n + theta0) != 0", n);
        ++report.vanishing_checked;
    }
    return report;
}

VanishingReport vanishing_scan(const VanishingCase& vc, std::int64_t N) {
    return vanishing_scan(vc, N, winquist_series(vanishing_required_precision(vc, N)));
}

}  // namespace lregcong
