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

#ifndef LREGCONG_MODULAR_FORMS_HPP
#define LREGCONG_MODULAR_FORMS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lregcong/arith.hpp"
#include "lregcong/error.hpp"
#include "lregcong/winquist.hpp"

namespace lregcong {

// prod_{delta | level} eta(delta z)^{r_delta}.
class EtaQuotient {
   public:
    EtaQuotient(std::string name, std::int64_t level, std::map<std::int64_t, std::int64_t> exponents);

    const std::string& name() const noexcept { return name_; }
    std::int64_t level() const noexcept { return level_; }
    const std::map<std::int64_t, std::int64_t>& exponents() const noexcept { return exponents_; }

    // (1/2) sum r_delta
    Rational weight() const;
    // prod delta^{r_delta}
    Rational character_integer() const;
    // sum delta r_delta / 24, the q-exponent of the leading term
    Rational leading_exponent() const;

    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

   private:
    std::string name_;
    std::int64_t level_;
    std::map<std::int64_t, std::int64_t> exponents_;
};

EtaQuotient eta_squared_12z();  // eta^2(12z), level 144
EtaQuotient eta_twelfth_2z();   // eta^12(2z), level 4
EtaQuotient eta_24th_z();       // eta^24(z), level 1

// Looks up one of the three forms by its short name: eta2-12, eta12-2, eta24-1.
std::optional<EtaQuotient> eta_quotient_by_name(std::string_view name);
std::vector<EtaQuotient> standard_eta_quotients();

struct GhnReport {
    Rational weight;
    Rational character_integer;
    std::int64_t sum_delta_r;     // sum delta r_delta
    std::int64_t sum_level_r;     // sum (N / delta) r_delta
    bool cond1;                   // sum_delta_r == 0 mod 24
    bool cond2;                   // sum_level_r == 0 mod 24
};

GhnReport ghn_check(const EtaQuotient& eq);

// Order of vanishing at the cusp c/d of Gamma_0(N):
// N / (24 d gcd(d, N/d)) * sum_{delta | N} gcd(d, delta)^2 r_delta / delta.
Rational cusp_order(const EtaQuotient& eq, std::int64_t c, std::int64_t d);

// (-1/d) for odd positive d.
int kronecker_minus_one(std::int64_t d);

// chi(d) = ((-1)^k s / d) for the supported forms, where s is a perfect square so that the
// symbol collapses to (-1/d)^k. Returns 0 when gcd(d, level) > 1.
int character_value(const EtaQuotient& eq, std::int64_t d);

// a(0..N) of an eta-quotient, exact.
struct CoefficientSequence {
    EtaQuotient form;
    std::vector<Int128> a;

    std::size_t precision() const noexcept { return a.size() - 1; }
    std::int64_t weight() const;
    int chi(std::int64_t d) const { return character_value(form, d); }

    // a(n), taken as 0 for n < 0.
    Int128 operator()(std::int64_t n) const;
};

CoefficientSequence eta_expansion(const EtaQuotient& eq, std::size_t N);

// f | T_p: a'(n) = a(pn) + chi(p) p^{k-1} a(n/p), precision floor(N / p).
CoefficientSequence hecke_tp(const CoefficientSequence& seq, std::int64_t p);

struct EigenReport {
    std::int64_t p;
    Int128 lambda;
    std::size_t verified_to;
};

class EigenViolation : public ViolationError {
   public:
    EigenViolation(std::int64_t p, std::int64_t n, Int128 lhs, Int128 rhs);

    std::int64_t p;
    std::int64_t n;
    Int128 lhs;
    Int128 rhs;
};

// Checks a(pn) + chi(p) p^{k-1} a(n/p) == a(p) a(n) for 1 <= n <= N. Finite evidence only.
EigenReport eigen_check(const CoefficientSequence& seq, std::int64_t p, std::size_t N);

}  // namespace lregcong

#endif  // LREGCONG_MODULAR_FORMS_HPP
