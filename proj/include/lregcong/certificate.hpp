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

#ifndef LREGCONG_CERTIFICATE_HPP
#define LREGCONG_CERTIFICATE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lregcong/series.hpp"

namespace lregcong {

std::string engine_version();

// Current UTC time, ISO 8601, second resolution.
std::string utc_timestamp();

struct Counterexample {
    std::int64_t n;
    std::int64_t j;
    std::int64_t argument;
    std::uint64_t value;  // b_ell(argument) mod m

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

// argument = n_coeff * n + j_coeff * j + constant, for j not congruent to excluded_residue
// modulo j_modulus.
struct LinearForm {
    std::int64_t n_coeff;
    std::int64_t j_coeff;
    std::int64_t constant;
    std::int64_t j_modulus;
    std::int64_t excluded_residue;

    bool admits(std::int64_t j) const noexcept {
        return ((j - excluded_residue) % j_modulus + j_modulus) % j_modulus != 0;
    }
    std::int64_t operator()(std::int64_t n, std::int64_t j) const noexcept {
        return n_coeff * n + j_coeff * j + constant;
    }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// Whether a congruence also held modulo a higher power, reported but never asserted.
struct StrengtheningNote {
    Modulus modulus;
    std::size_t checked = 0;
    bool holds = true;
    std::optional<Counterexample> first_failure;
};

inline constexpr std::size_t kMaxRecordedCounterexamples = 100;

struct Certificate {
    std::string theorem;
    int ell = 0;
    Modulus modulus = 0;
    std::vector<std::int64_t> primes;
    int alpha = 0;
    std::int64_t n_max = 0;
    std::vector<std::int64_t> j_residues;
    std::size_t precision = 0;
    bool passed = true;
    bool forced = false;
    std::size_t checked = 0;
    // arguments below zero, where b_ell vanishes by convention
    std::size_t vacuous = 0;
    std::size_t counterexample_count = 0;
    // the first kMaxRecordedCounterexamples, sorted by (n, j)
    std::vector<Counterexample> counterexamples;
    std::optional<LinearForm> form;
    std::optional<StrengtheningNote> strengthening;
    nlohmann::json run_config = nlohmann::json::object();
    std::string engine_version;
    std::string timestamp;
};

nlohmann::json to_json(const Certificate& cert);
std::string to_csv(const Certificate& cert);

// Parses the JSON produced by to_json.
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace lregcong

#endif  // LREGCONG_CERTIFICATE_HPP
