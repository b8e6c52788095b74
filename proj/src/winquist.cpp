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

#include "lregcong/winquist.hpp"

#include <vector>

namespace lregcong {

std::int64_t theta_at(std::int64_t k, std::int64_t l) {
    if (k < 0) throw UsageError("theta(k, l) requires k >= 0");
    const std::int64_t a = checked_mul<std::int64_t>(3 * k, k + 1) / 2;
    const std::int64_t b = checked_mul<std::int64_t>(l, 3 * l + 1) / 2;
    return checked_add(a, b);
}

std::int64_t c_at(std::int64_t k, std::int64_t l) {
    if (k < 0) throw UsageError("c(k, l) requires k >= 0");
    const std::int64_t sign = ((k + l) % 2 == 0) ? 1 : -1;
    const std::int64_t bracket =
        checked_sub(checked_mul(3 * k + 1, 3 * k + 2) / 2, checked_mul(3 * l, 3 * l + 1) / 2);
    return checked_mul(checked_mul(sign * (2 * k + 1), 6 * l + 1), bracket);
}

Rational ThetaSystem::completed_square(std::int64_t k, std::int64_t l) {
    const Rational x = Rational(k) + k_shift;
    const Rational y = Rational(l) + l_shift;
    return scale * (x * x + y * y) + constant;
}

TruncatedSeries<std::int64_t> winquist_series(std::size_t N) {
    std::vector<std::int64_t> coeffs(N + 1, 0);
    for_each_lattice_point(static_cast<std::int64_t>(N), [&](LatticePoint pt) {
        const auto e = static_cast<std::size_t>(theta_at(pt.k, pt.l));
        coeffs[e] = checked_add(coeffs[e], c_at(pt.k, pt.l), e);
    });
    return TruncatedSeries<std::int64_t>(std::move(coeffs));
}

}  // namespace lregcong
