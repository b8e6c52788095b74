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

#include "lregcong/modular_forms.hpp"

#include <numeric>
#include <utility>

#include "lregcong/primes.hpp"
#include "lregcong/series.hpp"

namespace lregcong {

EtaQuotient::EtaQuotient(std::string name, std::int64_t level, std::map<std::int64_t, std::int64_t> exponents)
    : name_(std::move(name)), level_(level) {
    if (level < 1) throw UsageError("eta-quotient level must be positive");
    for (const auto& [delta, r] : exponents) {
        if (delta < 1 || level % delta != 0)
            throw UsageError("eta-quotient exponent key " + std::to_string(delta) + " does not divide the level");
        if (r != 0) exponents_.emplace(delta, r);
    }
}

Rational EtaQuotient::weight() const {
    std::int64_t total = 0;
    for (const auto& [delta, r] : exponents_) total += r;
    return Rational(total, 2);
}

Rational EtaQuotient::character_integer() const {
    std::int64_t num = 1, den = 1;
    for (const auto& [delta, r] : exponents_) {
        if (r > 0)
            num = checked_mul(num, checked_pow(delta, static_cast<unsigned>(r)));
        else
            den = checked_mul(den, checked_pow(delta, static_cast<unsigned>(-r)));
    }
    return Rational(num, den);
}

Rational EtaQuotient::leading_exponent() const {
    std::int64_t total = 0;
    for (const auto& [delta, r] : exponents_) total = checked_add(total, checked_mul(delta, r));
    return Rational(total, 24);
}

EtaQuotient eta_squared_12z() { return EtaQuotient("eta2-12", 144, {{12, 2}}); }
EtaQuotient eta_twelfth_2z() { return EtaQuotient("eta12-2", 4, {{2, 12}}); }
EtaQuotient eta_24th_z() { return EtaQuotient("eta24-1", 1, {{1, 24}}); }

std::vector<EtaQuotient> standard_eta_quotients() { return {eta_squared_12z(), eta_twelfth_2z(), eta_24th_z()}; }

std::optional<EtaQuotient> eta_quotient_by_name(std::string_view name) {
    for (auto& eq : standard_eta_quotients())
        if (eq.name() == name) return eq;
    return std::nullopt;
}

GhnReport ghn_check(const EtaQuotient& eq) {
    std::int64_t sum_delta_r = 0, sum_level_r = 0;
    for (const auto& [delta, r] : eq.exponents()) {
        sum_delta_r = checked_add(sum_delta_r, checked_mul(delta, r));
        sum_level_r = checked_add(sum_level_r, checked_mul(eq.level() / delta, r));
    }
    return {eq.weight(), eq.character_integer(), sum_delta_r, sum_level_r, sum_delta_r % 24 == 0,
            sum_level_r % 24 == 0};
}

Rational cusp_order(const EtaQuotient& eq, std::int64_t c, std::int64_t d) {
    const std::int64_t N = eq.level();
    if (c < 1 || d < 1) throw UsageError("cusp c/d needs positive c and d");
    if (N % d != 0) throw UsageError("cusp denominator " + std::to_string(d) + " does not divide the level");
    if (std::gcd(c, d) != 1) throw UsageError("cusp c/d must be in lowest terms");
    Rational sum(0);
    for (const auto& [delta, r] : eq.exponents()) {
        const std::int64_t g = std::gcd(d, delta);
        sum += Rational(checked_mul(g * g, r), delta);
    }
    return Rational(N, checked_mul<std::int64_t>(24 * d, std::gcd(d, N / d))) * sum;
}

int kronecker_minus_one(std::int64_t d) {
    if (d < 1 || d % 2 == 0) throw UsageError("(-1/d) needs an odd positive d");
    return d % 4 == 1 ? 1 : -1;
}

namespace {

bool is_square(std::int64_t v) {
    if (v < 0) return false;
    const std::int64_t r = isqrt(v);
    return r * r == v;
}

}  // namespace

int character_value(const EtaQuotient& eq, std::int64_t d) {
    if (d < 1) throw UsageError("character argument must be positive");
    const Rational k = eq.weight();
    if (k.denominator() != 1) throw UsageError("character needs an integral weight");
    const Rational s = eq.character_integer();
    if (!is_square(s.numerator()) || !is_square(s.denominator()))
        throw UsageError("character of " + eq.name() + " is not supported (s is not a square)");
    if (std::gcd(d, eq.level()) != 1 || std::gcd(d, s.numerator()) != 1 || std::gcd(d, s.denominator()) != 1)
        return 0;
    if (k.numerator() % 2 == 0) return 1;
    return kronecker_minus_one(d);
}

std::int64_t CoefficientSequence::weight() const {
    const Rational k = form.weight();
    if (k.denominator() != 1) throw DomainError("weight of " + form.name() + " is not integral");
    return k.numerator();
}

Int128 CoefficientSequence::operator()(std::int64_t n) const {
    if (n < 0) return 0;
    if (static_cast<std::size_t>(n) > precision())
        throw PrecisionShortfall("coefficient beyond expansion precision", static_cast<std::size_t>(n));
    return a[static_cast<std::size_t>(n)];
}

CoefficientSequence eta_expansion(const EtaQuotient& eq, std::size_t N) {
    const Rational lead = eq.leading_exponent();
    if (lead.denominator() != 1 || lead.numerator() < 0)
        throw DomainError("leading q-exponent of " + eq.name() + " is not a nonnegative integer");
    const auto shift = static_cast<std::size_t>(lead.numerator());

    CoefficientSequence out{eq, std::vector<Int128>(N + 1, 0)};
    if (N < shift) return out;
    const std::size_t M = N - shift;

    auto product = TruncatedSeries<Int128>::constant(1, M);
    for (const auto& [delta, r] : eq.exponents()) {
        const auto d = static_cast<std::size_t>(delta);
        auto factor = pow(dilate(euler_series<Int128>(M / d), d, M), static_cast<unsigned>(r < 0 ? -r : r));
        if (r < 0) factor = inverse(factor);
        product = mul(product, factor);
    }
    for (std::size_t n = 0; n <= M; ++n) out.a[n + shift] = product[n];
    return out;
}

namespace {

void require_prime(std::int64_t p) {
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
}

// chi(p) p^{k-1} a(n/p), or 0 when p does not divide n.
Int128 hecke_tail(const CoefficientSequence& seq, std::int64_t p, std::int64_t n, Int128 scale) {
    if (n % p != 0) return 0;
    return checked_mul(scale, seq(n / p), static_cast<std::size_t>(n));
}

Int128 hecke_scale(const CoefficientSequence& seq, std::int64_t p) {
    const std::int64_t k = seq.weight();
    if (k < 1) throw DomainError("Hecke action needs weight at least 1");
    return checked_mul<Int128>(seq.chi(p), checked_pow<Int128>(p, static_cast<unsigned>(k - 1)));
}

}  // namespace

CoefficientSequence hecke_tp(const CoefficientSequence& seq, std::int64_t p) {
    require_prime(p);
    const Int128 scale = hecke_scale(seq, p);
    const std::size_t M = seq.precision() / static_cast<std::size_t>(p);
    CoefficientSequence out{seq.form, std::vector<Int128>(M + 1, 0)};
    for (std::size_t n = 0; n <= M; ++n) {
        const auto ni = static_cast<std::int64_t>(n);
        out.a[n] = checked_add(seq(p * ni), hecke_tail(seq, p, ni, scale), n);
    }
    return out;
}

EigenViolation::EigenViolation(std::int64_t p_, std::int64_t n_, Int128 lhs_, Int128 rhs_)
    : ViolationError("eigen relation fails for p=" + std::to_string(p_) + " at n=" + std::to_string(n_) +
                     ": " + to_string(lhs_) + " != " + to_string(rhs_)),
      p(p_), n(n_), lhs(lhs_), rhs(rhs_) {}

EigenReport eigen_check(const CoefficientSequence& seq, std::int64_t p, std::size_t N) {
    require_prime(p);
    const std::size_t required = static_cast<std::size_t>(p) * N;
    if (seq.precision() < required) throw PrecisionShortfall("eigen check needs a(p N)", required);
    const Int128 scale = hecke_scale(seq, p);
    const Int128 lambda = seq(p);
    for (std::size_t n = 1; n <= N; ++n) {
        const auto ni = static_cast<std::int64_t>(n);
        const Int128 lhs = checked_add(seq(p * ni), hecke_tail(seq, p, ni, scale), n);
        const Int128 rhs = checked_mul(lambda, seq(ni), n);
        if (lhs != rhs) throw EigenViolation(p, ni, lhs, rhs);
    }
    return {p, lambda, N};
}

}  // namespace lregcong
