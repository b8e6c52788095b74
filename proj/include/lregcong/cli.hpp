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

#ifndef LREGCONG_CLI_HPP
#define LREGCONG_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace lregcong::cli {

enum ExitCode : int {
    kPass = 0,
    kUsage = 1,
    kCounterexample = 2,
    kShortfall = 3,
};

enum class Format { Json, Csv };

// Everything needed to replay a run; embedded in every certificate.
struct RunConfig {
    std::string command;
    std::string theorem;
    std::optional<int> ell;
    std::optional<std::uint64_t> modulus;
    std::size_t precision = 0;  // expansion length, or the cap for verify
    std::vector<std::int64_t> primes;
    int alpha = 0;
    std::int64_t n_max = 0;
    std::string j_policy = "full";  // full | explicit list | preset
    std::vector<std::int64_t> js;
    bool force = false;
    bool preset = false;
    Format format = Format::Json;
    std::string out_path;
};

nlohmann::json to_json(const RunConfig& config);

// Runs one command line (args excludes the program name). Output goes to `out` unless --out
// names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lregcong::cli

#endif  // LREGCONG_CLI_HPP
