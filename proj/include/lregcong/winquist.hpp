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

#ifndef LREGCONG_WINQUIST_HPP
#define LREGCONG_WINQUIST_HPP

// (q;q)_inf^10 as a lattice sum over k >= 0, l in Z:
//
//   sum c(k,l) q^theta(k,l),
//   theta(k,l) = 3k(k+1)/2 + l(3l+1)/2,
//   c(k,l)     = (-1)^(k+l) (2k+1)(6l+1) ((3k+1)(3k+2)/2 - 3l(3l+1)/2).

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>

#include "lregcong/arith.hpp"
#include "lregcong/series.hpp"

namespace lregcong {

using Rational = boost::rational<std::int64_t>;

struct LatticePoint {
    std::int64_t k;
    std::int64_t l;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

std::int64_t theta_at(std::int64_t k, std::int64_t l);
std::int64_t c_at(std::int64_t k, std::int64_t l);

// theta in completed-square form: scale * ((k + k_shift)^2 + (l + l_shift)^2) + constant.
struct ThetaSystem {
    static inline const Rational scale{3, 2};
    static inline const Rational k_shift{1, 2};
    static inline const Rational l_shift{1, 6};
    static inline const Rational constant{-5, 12};

    static std::int64_t exponent(std::int64_t k, std::int64_t l) { return theta_at(k, l); }
    static std::int64_t coefficient(std::int64_t k, std::int64_t l) { return c_at(k, l); }
    static Rational completed_square(std::int64_t k, std::int64_t l);
};

// Visits every (k, l) with k >= 0 and theta(k, l) <= N exactly once, k ascending, l ascending.
template <typename Fn>
void for_each_lattice_point(std::int64_t N, Fn&& fn) {
    if (N < 0) return;
    for (std::int64_t k = 0; 3 * k * (k + 1) / 2 <= N; ++k) {
        const std::int64_t rest = N - 3 * k * (k + 1) / 2;
        // l(3l+1)/2 <= rest  <=>  (6l+1)^2 <= 24 rest + 1
        const std::int64_t radius = 1 + isqrt(24 * rest + 1);
        for (std::int64_t l = (-1 - radius) / 6 - 1; l <= (radius - 1) / 6 + 1; ++l)
            if (theta_at(k, l) <= N) fn(LatticePoint{k, l});
    }
}

TruncatedSeries<std::int64_t> winquist_series(std::size_t N);

}  // namespace lregcong

#endif  // LREGCONG_WINQUIST_HPP
