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

#include "lregcong/congruence.hpp"

#include <algorithm>

#include "lregcong/modular_forms.hpp"
#include "lregcong/primes.hpp"
#include "lregcong/vanishing.hpp"

namespace lregcong {

namespace {

constexpr std::array<CongruenceTheorem, 4> kTheorems = {{
    {TheoremId::T3, 3, 3, 1, 12},
    {TheoremId::T11, 11, 11, 5, 12},
    {TheoremId::T13, 13, 13, 1, 2},
    {TheoremId::T25, 25, 5, 1, 1},
}};

void require_primes(std::span<const std::int64_t> primes) {
    if (primes.empty()) throw UsageError("at least one prime is required");
    for (auto p : primes)
        if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
}

void require_table(const CongruenceTheorem& th, const PartitionTable& table) {
    if (table.ell != th.ell)
        throw UsageError("table holds b_" + std::to_string(table.ell) + ", theorem needs b_" + std::to_string(th.ell));
    if (table.modulus() && *table.modulus() % th.modulus != 0)
        throw UsageError("table modulus is incompatible with the theorem modulus");
}

void require_precision(const PartitionTable& table, std::size_t required) {
    if (table.precision() < required) throw PrecisionShortfall("b_ell table is too short", required);
}

std::uint64_t residue(const PartitionTable& table, std::int64_t n, Modulus m) { return reduce_mod(table(n), m); }

std::int64_t to_int64(Int128 v) {
    if (!fits_int64(v)) throw ArithmeticOverflow("value exceeds 64 bits", 0);
    return static_cast<std::int64_t>(v);
}

std::vector<std::int64_t> sorted_js(std::span<const std::int64_t> js, std::span<const std::int64_t> primes) {
    std::vector<std::int64_t> out = js.empty() ? default_j_residues(primes)
                                               : std::vector<std::int64_t>(js.begin(), js.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Certificate blank_certificate(const CongruenceTheorem& th, std::span<const std::int64_t> primes, std::int64_t n_max,
                              std::vector<std::int64_t> js, std::size_t precision) {
    Certificate cert;
    cert.theorem = std::string(theorem_name(th.id));
    cert.ell = th.ell;
    cert.modulus = th.modulus;
    cert.primes.assign(primes.begin(), primes.end());
    cert.alpha = static_cast<int>(primes.size()) - 1;
    cert.n_max = n_max;
    cert.j_residues = std::move(js);
    cert.precision = precision;
    cert.engine_version = engine_version();
    cert.timestamp = utc_timestamp();
    return cert;
}

void record(Certificate& cert, std::int64_t n, std::int64_t j, std::int64_t argument, std::uint64_t value) {
    ++cert.checked;
    if (value == 0) return;
    cert.passed = false;
    ++cert.counterexample_count;
    if (cert.counterexamples.size() < kMaxRecordedCounterexamples) cert.counterexamples.push_back({n, j, argument, value});
}

// Multiplier c(p) of b_ell(n) in the single-prime recurrence, reduced mod m.
std::uint64_t recurrence_factor(const CongruenceTheorem& th, std::int64_t p) {
    const Modulus m = th.modulus;
    switch (th.id) {
        case TheoremId::T3:
            return reduce_mod(-kronecker_minus_one(p), m);
        case TheoremId::T11:
            return reduce_mod(checked_pow<Int128>(p, 4), m);
        case TheoremId::T13:
            return reduce_mod(-checked_pow<Int128>(p % 13, 5), m);
        case TheoremId::T25:
            return reduce_mod(-checked_pow<Int128>(p % 5, 11), m);
    }
    throw InternalConsistencyError("unknown theorem");
}

}  // namespace

const CongruenceTheorem& congruence_theorem(TheoremId id) {
    for (const auto& th : kTheorems)
        if (th.id == id) return th;
    throw InternalConsistencyError("unknown theorem");
}

std::string_view theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::T3:
            return "T3";
        case TheoremId::T11:
            return "T11";
        case TheoremId::T13:
            return "T13";
        case TheoremId::T25:
            return "T25";
    }
    return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
    for (auto id : kAllTheorems)
        if (theorem_name(id) == name) return id;
    return std::nullopt;
}

std::optional<std::int64_t> eligibility_index(const CongruenceTheorem& th, std::int64_t p) {
    switch (th.id) {
        case TheoremId::T13:
            return (p - 1) / 2;
        case TheoremId::T25:
            return p - 1;
        default:
            return std::nullopt;
    }
}

bool prime_eligible(const CongruenceTheorem& th, std::int64_t p, const PartitionTable& table) {
    if (!is_prime(p)) return false;
    switch (th.id) {
        case TheoremId::T3:
            return p >= 5 && p % 12 != 1;
        case TheoremId::T11:
            return p >= 5 && p % 4 == 3;
        case TheoremId::T13:
            if (p == 2) return false;
            break;
        case TheoremId::T25:
            break;
    }
    require_table(th, table);
    return residue(table, *eligibility_index(th, p), th.modulus) == 0;
}

bool prime_eligible(const CongruenceTheorem& th, std::int64_t p) {
    const auto index = eligibility_index(th, p);
    const auto precision = static_cast<std::size_t>(std::max<std::int64_t>(index.value_or(0), 0));
    return prime_eligible(th, p, theorem_table(th, precision));
}

std::int64_t family_argument(const CongruenceTheorem& th, std::span<const std::int64_t> primes, std::int64_t n,
                             std::int64_t j) {
    require_primes(primes);
    if (n < 0) throw UsageError("n must be nonnegative");
    const std::int64_t p = primes.back();
    if (j % p == 0) throw UsageError("j must not be divisible by the last prime " + std::to_string(p));

    Int128 leading = 1;  // p_1^2 ... p_a^2
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) leading = checked_mul<Int128>(leading, primes[i] * primes[i]);

    const Int128 numerator = checked_sub<Int128>(
        checked_mul<Int128>(checked_mul<Int128>(leading, p), checked_add<Int128>(Int128{th.divisor} * j, Int128{th.offset_unit} * p)),
        th.offset_unit);
    if (numerator % th.divisor != 0)
        throw InternalConsistencyError("family offset is not integral; is every prime eligible?");
    const Int128 argument =
        checked_add<Int128>(checked_mul<Int128>(checked_mul<Int128>(leading, Int128{p} * p), n), numerator / th.divisor);
    if (argument < 0) throw UsageError("family argument is negative");
    return to_int64(argument);
}

std::vector<std::int64_t> default_j_residues(std::span<const std::int64_t> primes) {
    require_primes(primes);
    std::vector<std::int64_t> js;
    for (std::int64_t j = 1; j < primes.back(); ++j) js.push_back(j);
    return js;
}

std::size_t required_precision(const CongruenceTheorem& th, std::span<const std::int64_t> primes, std::int64_t n_max,
                               std::span<const std::int64_t> js) {
    std::size_t best = 0;
    for (auto j : sorted_js(js, primes))
        best = std::max(best, static_cast<std::size_t>(family_argument(th, primes, n_max, j)));
    return best;
}

PartitionTable theorem_table(const CongruenceTheorem& th, std::size_t precision) {
    return regular_series<std::int64_t>(th.ell, precision, th.modulus);
}

Certificate verify_family(const CongruenceTheorem& th, std::span<const std::int64_t> primes, std::int64_t n_max,
                          const PartitionTable& table, const FamilyOptions& options) {
    require_primes(primes);
    require_table(th, table);
    if (n_max < 0) throw UsageError("n_max must be nonnegative");
    const auto js = sorted_js(options.js, primes);
    const std::size_t required = required_precision(th, primes, n_max, js);
    require_precision(table, required);
    if (!options.force)
        for (auto p : primes)
            if (!prime_eligible(th, p, table))
                throw UsageError(std::to_string(p) + " is not eligible for " + std::string(theorem_name(th.id)));

    Certificate cert = blank_certificate(th, primes, n_max, js, table.precision());
    cert.forced = options.force;
    for (std::int64_t n = 0; n <= n_max; ++n)
        for (auto j : js) {
            const std::int64_t arg = family_argument(th, primes, n, j);
            record(cert, n, j, arg, residue(table, arg, th.modulus));
        }
    return cert;
}

Certificate verify_mixed_family(const CongruenceTheorem& th, std::span<const std::int64_t> primes,
                                std::int64_t n_max, std::size_t cap, const FamilyOptions& options) {
    const std::size_t required = required_precision(th, primes, n_max, options.js);
    if (required > cap) throw PrecisionShortfall("family grid exceeds the precision cap", required);
    return verify_family(th, primes, n_max, theorem_table(th, required), options);
}

ExplicitFamily explicit_family(TheoremId id) {
    switch (id) {
        case TheoremId::T3:
            return {id, 5, {25, 5, -3, 5, 1}};
        case TheoremId::T11:
            return {id, 7, {49, 7, -1, 7, 3}};
        case TheoremId::T13:
            return {id, 151, {22801, 151, 75, 151, 75}};
        case TheoremId::T25:
            return {id, 5, {25, 5, -1, 5, 0}};
    }
    throw InternalConsistencyError("unknown theorem");
}

std::vector<std::int64_t> default_explicit_js(const LinearForm& form) {
    std::vector<std::int64_t> js;
    for (std::int64_t j = 1; j <= form.j_modulus; ++j)
        if (form.admits(j)) js.push_back(j);
    return js;
}

std::size_t required_precision(const LinearForm& form, std::int64_t n_max, std::span<const std::int64_t> js) {
    std::int64_t best = 0;
    for (auto j : js) best = std::max(best, form(n_max, j));
    return static_cast<std::size_t>(best);
}

Certificate verify_explicit_family(const ExplicitFamily& family, std::int64_t n_max, const PartitionTable& table,
                                   std::span<const std::int64_t> js_in) {
    const auto& th = congruence_theorem(family.theorem);
    require_table(th, table);
    if (n_max < 0) throw UsageError("n_max must be nonnegative");
    std::vector<std::int64_t> js =
        js_in.empty() ? default_explicit_js(family.form) : std::vector<std::int64_t>(js_in.begin(), js_in.end());
    std::sort(js.begin(), js.end());
    js.erase(std::unique(js.begin(), js.end()), js.end());
    for (auto j : js)
        if (!family.form.admits(j)) throw UsageError("j = " + std::to_string(j) + " is excluded by the family");
    require_precision(table, required_precision(family.form, n_max, js));

    const std::int64_t primes[] = {family.prime};
    Certificate cert = blank_certificate(th, primes, n_max, js, table.precision());
    cert.form = family.form;
    for (std::int64_t n = 0; n <= n_max; ++n)
        for (auto j : js) {
            const std::int64_t arg = family.form(n, j);
            if (arg < 0) {
                ++cert.vacuous;
                continue;
            }
            record(cert, n, j, arg, residue(table, arg, th.modulus));
        }
    return cert;
}

StrengtheningNote mod25_strengthening(const Certificate& cert, const PartitionTable& table25) {
    if (cert.theorem != "T25") throw UsageError("the mod 25 strengthening applies to T25 only");
    if (table25.ell != 25 || table25.modulus() != Modulus{25}) throw UsageError("expected a table of b_25 mod 25");
    const auto& th = congruence_theorem(TheoremId::T25);
    StrengtheningNote note{25, 0, true, std::nullopt};
    for (std::int64_t n = 0; n <= cert.n_max; ++n)
        for (auto j : cert.j_residues) {
            const std::int64_t arg = cert.form ? (*cert.form)(n, j) : family_argument(th, cert.primes, n, j);
            if (arg < 0) continue;
            const std::uint64_t value = residue(table25, arg, 25);
            ++note.checked;
            if (value != 0 && note.holds) {
                note.holds = false;
                note.first_failure = Counterexample{n, j, arg, value};
            }
        }
    return note;
}

RecurrenceReport verify_iterated_recurrence(const CongruenceTheorem& th, std::span<const std::int64_t> primes,
                                            std::int64_t n_max, const PartitionTable& table) {
    require_primes(primes);
    require_table(th, table);
    if (n_max < 0) throw UsageError("n_max must be nonnegative");
    const Modulus m = th.modulus;

    Int128 square = 1;
    std::uint64_t factor = 1 % m;
    for (auto p : primes) {
        square = checked_mul<Int128>(square, Int128{p} * p);
        factor = mul_mod(factor, recurrence_factor(th, p), m);
    }
    const Int128 numerator = checked_mul<Int128>(th.offset_unit, square - 1);
    if (numerator % th.divisor != 0) throw InternalConsistencyError("recurrence offset is not integral");
    const std::int64_t step = to_int64(square);
    const std::int64_t offset = to_int64(numerator / th.divisor);
    require_precision(table, static_cast<std::size_t>(to_int64(checked_add<Int128>(checked_mul<Int128>(step, n_max), offset))));
    for (auto p : primes)
        if (!prime_eligible(th, p, table))
            throw UsageError(std::to_string(p) + " is not eligible for " + std::string(theorem_name(th.id)) +
                             "; the recurrence is not asserted");

    RecurrenceReport report{th.id, std::vector<std::int64_t>(primes.begin(), primes.end()), n_max, factor, 0, {}};
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const std::uint64_t lhs = residue(table, step * n + offset, m);
        const std::uint64_t rhs = mul_mod(factor, residue(table, n, m), m);
        ++report.checked;
        if (lhs != rhs) report.violations.push_back({n, 0, lhs, rhs});
    }
    return report;
}

RecurrenceReport verify_recurrence(const CongruenceTheorem& th, std::int64_t p, std::int64_t n_max,
                                   const PartitionTable& table) {
    const std::int64_t primes[] = {p};
    auto report = verify_iterated_recurrence(th, primes, n_max, table);
    if (th.id == TheoremId::T11) vanishing_scan(make_vanishing_case(p), n_max);
    return report;
}

RecurrenceReport verify_hecke_relation(const CongruenceTheorem& th, std::int64_t p, std::int64_t n_max,
                                       const PartitionTable& table) {
    require_table(th, table);
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    if (n_max < 0) throw UsageError("n_max must be nonnegative");
    std::int64_t e, o;
    unsigned weight_exponent;
    switch (th.id) {
        case TheoremId::T13:
            if (p == 2) throw UsageError("the b_13 relation needs an odd prime");
            e = (p - 1) / 2;
            o = (p * p - 1) / 2;
            weight_exponent = 5;
            break;
        case TheoremId::T25:
            e = p - 1;
            o = p * p - 1;
            weight_exponent = 11;
            break;
        default:
            throw UsageError("Hecke relations are provided for T13 and T25");
    }
    const Modulus m = th.modulus;
    require_precision(table, static_cast<std::size_t>(p * p * n_max + o + p * (p - 1)));
    const std::uint64_t be = residue(table, e, m);
    const std::uint64_t weight_factor = reduce_mod(checked_pow<Int128>(p % static_cast<std::int64_t>(m), weight_exponent), m);

    RecurrenceReport report{th.id, {p}, n_max, be, 0, {}};
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const std::uint64_t lhs = add_mod(residue(table, p * p * n + o, m), mul_mod(weight_factor, residue(table, n, m), m), m);
        const std::uint64_t rhs = mul_mod(be, residue(table, p * n + e, m), m);
        ++report.checked;
        if (lhs != rhs) report.violations.push_back({n, 0, lhs, rhs});
        for (std::int64_t j = 1; j < p; ++j) {
            const std::uint64_t lhs_j = residue(table, p * p * n + o + p * j, m);
            const std::uint64_t rhs_j = mul_mod(be, residue(table, p * n + e + j, m), m);
            ++report.checked;
            if (lhs_j != rhs_j) report.violations.push_back({n, j, lhs_j, rhs_j});
        }
    }
    return report;
}

std::vector<EligiblePrime> search_primes(const CongruenceTheorem& th, std::int64_t bound) {
    if (bound < 2) throw UsageError("search bound must be at least 2");
    const auto candidates = primes_up_to(bound);
    const auto top = eligibility_index(th, bound);
    const PartitionTable table = theorem_table(th, static_cast<std::size_t>(std::max<std::int64_t>(top.value_or(0), 0)));
    std::vector<EligiblePrime> out;
    for (auto p : candidates) {
        if (!prime_eligible(th, p, table)) continue;
        const auto index = eligibility_index(th, p);
        out.push_back({p, index ? std::optional<std::uint64_t>(residue(table, *index, th.modulus)) : std::nullopt});
    }
    return out;
}

}  // namespace lregcong
