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

#ifndef LREGCONG_CONGRUENCE_HPP
#define LREGCONG_CONGRUENCE_HPP

// The four congruence families for b_ell(n), ell in {3, 11, 13, 25}.
//
// With primes p_1..p_{a+1}, P_a = p_1 ... p_a, p = p_{a+1} and j not divisible by p, every
// family reads
//
//   b_ell( P_a^2 p^2 n + (P_a^2 p (D j + u p) - u) / D ) = 0  (mod m)
//
// for the per-theorem constants (ell, m, u, D) below.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lregcong/certificate.hpp"
#include "lregcong/partitions.hpp"

namespace lregcong {

enum class TheoremId { T3, T11, T13, T25 };

inline constexpr std::array<TheoremId, 4> kAllTheorems = {TheoremId::T3, TheoremId::T11, TheoremId::T13,
                                                          TheoremId::T25};

struct CongruenceTheorem {
    TheoremId id;
    int ell;
    Modulus modulus;
    std::int64_t offset_unit;  // u
    std::int64_t divisor;      // D
};

const CongruenceTheorem& congruence_theorem(TheoremId id);
std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);

inline constexpr std::size_t kDefaultPrecisionCap = 1'000'000;

using PartitionTable = RegularPartitionTable<std::int64_t>;

// Index whose b_ell value decides eligibility (T13: (p-1)/2, T25: p-1), if any.
std::optional<std::int64_t> eligibility_index(const CongruenceTheorem& th, std::int64_t p);

bool prime_eligible(const CongruenceTheorem& th, std::int64_t p, const PartitionTable& table);
bool prime_eligible(const CongruenceTheorem& th, std::int64_t p);

std::int64_t family_argument(const CongruenceTheorem& th, std::span<const std::int64_t> primes, std::int64_t n,
                             std::int64_t j);

// 1..p-1 for the last prime.
std::vector<std::int64_t> default_j_residues(std::span<const std::int64_t> primes);

// Largest family argument over 0 <= n <= n_max and the given j values.
std::size_t required_precision(const CongruenceTheorem& th, std::span<const std::int64_t> primes, std::int64_t n_max,
                               std::span<const std::int64_t> js);

// Table of b_ell mod m for the theorem, to the given precision.
PartitionTable theorem_table(const CongruenceTheorem& th, std::size_t precision);

struct FamilyOptions {
    std::vector<std::int64_t> js;  // empty: default_j_residues
    bool force = false;            // skip the eligibility check (negative controls)
};

Certificate verify_family(const CongruenceTheorem& th, std::span<const std::int64_t> primes, std::int64_t n_max,
                          const PartitionTable& table, const FamilyOptions& options = {});

// Builds its own table after checking the required precision against `cap`.
Certificate verify_mixed_family(const CongruenceTheorem& th, std::span<const std::int64_t> primes,
                                std::int64_t n_max, std::size_t cap = kDefaultPrecisionCap,
                                const FamilyOptions& options = {});

// The single-prime families in shifted form, e.g. b_3(25n + 5j - 3) with j != 1 (mod 5).
struct ExplicitFamily {
    TheoremId theorem;
    std::int64_t prime;
    LinearForm form;
};

ExplicitFamily explicit_family(TheoremId id);

// Default j values 1..j_modulus, skipping the excluded residue.
std::vector<std::int64_t> default_explicit_js(const LinearForm& form);

std::size_t required_precision(const LinearForm& form, std::int64_t n_max, std::span<const std::int64_t> js);

// Negative arguments are counted as vacuous (b_ell vanishes there).
Certificate verify_explicit_family(const ExplicitFamily& family, std::int64_t n_max, const PartitionTable& table,
                                   std::span<const std::int64_t> js = {});

// For T25 only: does b_25 vanish modulo 25 on the same arguments? `table25` holds b_25 mod 25.
StrengtheningNote mod25_strengthening(const Certificate& cert, const PartitionTable& table25);

struct RecurrenceViolation {
    std::int64_t n;
    std::int64_t j;  // 0 for relations without a j parameter
    std::uint64_t lhs;
    std::uint64_t rhs;
};

struct RecurrenceReport {
    TheoremId theorem;
    std::vector<std::int64_t> primes;
    std::int64_t n_max = 0;
    std::uint64_t factor = 0;  // multiplier of b_ell(n), reduced mod m
    std::size_t checked = 0;
    std::vector<RecurrenceViolation> violations;

    bool passed() const noexcept { return violations.empty(); }
};

// b_ell(P^2 n + u(P^2 - 1)/D) = c(p_1) ... c(p_a) b_ell(n) (mod m), with
// c(p) = -(-1/p) for T3, p^4 for T11, -p^5 for T13 and -p^11 for T25.
RecurrenceReport verify_iterated_recurrence(const CongruenceTheorem& th, std::span<const std::int64_t> primes,
                                            std::int64_t n_max, const PartitionTable& table);

// Single-prime case. For T11 the exact relation on (q;q)^10 is also scanned to n_max.
RecurrenceReport verify_recurrence(const CongruenceTheorem& th, std::int64_t p, std::int64_t n_max,
                                   const PartitionTable& table);

// T13 and T25, any odd prime (T25: any prime), no eligibility needed:
//   b(p^2 n + o) + p^{k-1} b(n) = b(e) b(p n + e)  and  b(p^2 n + o + p j) = b(e) b(p n + e + j), p !| j,
// with (o, e) = ((p^2-1)/2, (p-1)/2), k = 6 for T13 and (p^2-1, p-1), k = 12 for T25.
RecurrenceReport verify_hecke_relation(const CongruenceTheorem& th, std::int64_t p, std::int64_t n_max,
                                       const PartitionTable& table);

struct EligiblePrime {
    std::int64_t p;
    std::optional<std::uint64_t> evidence;  // b_ell at the eligibility index, mod m
};

std::vector<EligiblePrime> search_primes(const CongruenceTheorem& th, std::int64_t bound);

}  // namespace lregcong

#endif  // LREGCONG_CONGRUENCE_HPP
