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

#ifndef LREGCONG_VANISHING_HPP
#define LREGCONG_VANISHING_HPP

// Vanishing-property machinery on the Winquist lattice of (q;q)^10.
//
// For a prime p = 3 (mod 4), p >= 5, theta(k, l) = theta0 (mod p) pins (k, l) to a single
// residue pair (r, s), and the map (k, l) -> (pk + r, pl + s_offset) rescales exponents by p^2
// (plus theta0) and coefficients by lambda. Consequently a(p^2 n + theta0) = lambda a(n) and
// a(pn + theta0) = 0 for p not dividing n.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "lregcong/error.hpp"
#include "lregcong/series.hpp"
#include "lregcong/winquist.hpp"

namespace lregcong {

struct VanishingCase {
    std::int64_t p;
    std::int64_t theta0;      // 5(p^2 - 1)/12
    std::int64_t r;           // (p - 1)/2
    std::int64_t s_offset;    // (+-p - 1)/6, whichever is integral
    std::int64_t s;           // s_offset mod p, in [0, p)
    std::int64_t sigma_sign;  // sigma(k, l) = (k, sigma_sign * l)
};

// Requires p prime, p >= 5, p = 3 (mod 4).
VanishingCase make_vanishing_case(std::int64_t p);

struct ResidueSolutions {
    std::size_t count = 0;
    std::optional<LatticePoint> solution;  // set iff count == 1

    bool unique() const noexcept { return count == 1; }
};

// Scans all p^2 residue pairs for theta(k, l) = theta0 (mod p).
ResidueSolutions unique_solution(std::int64_t p, std::int64_t theta0);

class ConditionViolation : public ViolationError {
   public:
    ConditionViolation(const std::string& condition, LatticePoint at);

    std::string condition;
    LatticePoint at;
};

// Checks the exponent and coefficient transforms on 0 <= k <= K, |l| <= K and returns lambda,
// which is computed from the (0, 0) point and then required to be the same everywhere.
std::int64_t verify_transform(const VanishingCase& vc, std::int64_t K);

struct VanishingReport {
    std::int64_t p;
    std::int64_t n_max;
    std::int64_t lambda;
    std::size_t recursion_checked;  // values n with a(p^2 n + theta0) = lambda a(n) verified
    std::size_t vanishing_checked;  // values n with a(pn + theta0) = 0 verified
};

class VanishingViolation : public ViolationError {
   public:
    VanishingViolation(const std::string& what, std::int64_t n);

    std::int64_t n;
};

// Exact check on the coefficients a(n) of (q;q)^10, which must reach p^2 N + theta0.
VanishingReport vanishing_scan(const VanishingCase& vc, std::int64_t N, const TruncatedSeries<std::int64_t>& tenth_power);
VanishingReport vanishing_scan(const VanishingCase& vc, std::int64_t N);

std::size_t vanishing_required_precision(const VanishingCase& vc, std::int64_t N);

}  // namespace lregcong

#endif  // LREGCONG_VANISHING_HPP
