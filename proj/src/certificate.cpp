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

#include "lregcong/certificate.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#ifndef LREGCONG_VERSION
#define LREGCONG_VERSION "0.0.0"
#endif

namespace lregcong {

std::string engine_version() { return std::string("lregcong ") + LREGCONG_VERSION; }

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace {

nlohmann::json to_json(const Counterexample& c) {
    return {{"n", c.n}, {"j", c.j}, {"argument", c.argument}, {"value", c.value}};
}

Counterexample counterexample_from_json(const nlohmann::json& j) {
    return {j.at("n").get<std::int64_t>(), j.at("j").get<std::int64_t>(), j.at("argument").get<std::int64_t>(),
            j.at("value").get<std::uint64_t>()};
}

template <typename Range>
std::string join(const Range& values, char sep) {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : values) {
        if (!first) os << sep;
        os << v;
        first = false;
    }
    return os.str();
}

}  // namespace

nlohmann::json to_json(const Certificate& cert) {
    nlohmann::json out;
    out["theorem"] = cert.theorem;
    out["ell"] = cert.ell;
    out["modulus"] = cert.modulus;
    out["primes"] = cert.primes;
    out["alpha"] = cert.alpha;
    out["n_max"] = cert.n_max;
    out["j_residues"] = cert.j_residues;
    out["precision"] = cert.precision;
    out["result"] = cert.passed ? "pass" : "fail";
    out["forced"] = cert.forced;
    out["checked"] = cert.checked;
    out["vacuous"] = cert.vacuous;
    out["counterexample_count"] = cert.counterexample_count;
    out["counterexamples"] = nlohmann::json::array();
    for (const auto& c : cert.counterexamples) out["counterexamples"].push_back(to_json(c));
    if (cert.form) {
        const auto& f = *cert.form;
        out["form"] = {{"n_coeff", f.n_coeff},
                       {"j_coeff", f.j_coeff},
                       {"constant", f.constant},
                       {"j_modulus", f.j_modulus},
                       {"excluded_residue", f.excluded_residue}};
    }
    if (cert.strengthening) {
        const auto& s = *cert.strengthening;
        nlohmann::json note = {{"modulus", s.modulus}, {"checked", s.checked}, {"holds", s.holds}};
        if (s.first_failure) note["first_failure"] = to_json(*s.first_failure);
        out["strengthening"] = note;
    }
    out["run_config"] = cert.run_config;
    out["engine_version"] = cert.engine_version;
    out["timestamp"] = cert.timestamp;
    return out;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate cert;
    cert.theorem = j.at("theorem").get<std::string>();
    cert.ell = j.at("ell").get<int>();
    cert.modulus = j.at("modulus").get<Modulus>();
    cert.primes = j.at("primes").get<std::vector<std::int64_t>>();
    cert.alpha = j.at("alpha").get<int>();
    cert.n_max = j.at("n_max").get<std::int64_t>();
    cert.j_residues = j.at("j_residues").get<std::vector<std::int64_t>>();
    cert.precision = j.at("precision").get<std::size_t>();
    cert.passed = j.at("result").get<std::string>() == "pass";
    cert.forced = j.value("forced", false);
    cert.checked = j.value("checked", std::size_t{0});
    cert.vacuous = j.value("vacuous", std::size_t{0});
    cert.counterexample_count = j.value("counterexample_count", std::size_t{0});
    for (const auto& c : j.at("counterexamples")) cert.counterexamples.push_back(counterexample_from_json(c));
    if (j.contains("form")) {
        const auto& f = j["form"];
        cert.form = LinearForm{f.at("n_coeff").get<std::int64_t>(), f.at("j_coeff").get<std::int64_t>(),
                               f.at("constant").get<std::int64_t>(), f.at("j_modulus").get<std::int64_t>(),
                               f.at("excluded_residue").get<std::int64_t>()};
    }
    if (j.contains("strengthening")) {
        const auto& s = j["strengthening"];
        StrengtheningNote note{s.at("modulus").get<Modulus>(), s.at("checked").get<std::size_t>(),
                               s.at("holds").get<bool>(), std::nullopt};
        if (s.contains("first_failure")) note.first_failure = counterexample_from_json(s["first_failure"]);
        cert.strengthening = note;
    }
    cert.run_config = j.value("run_config", nlohmann::json::object());
    cert.engine_version = j.at("engine_version").get<std::string>();
    cert.timestamp = j.at("timestamp").get<std::string>();
    return cert;
}

std::string to_csv(const Certificate& cert) {
    std::ostringstream os;
    os << "theorem,ell,modulus,primes,alpha,n_max,j_residues,precision,result,checked,vacuous,"
          "counterexample_count,n,j,argument,value,engine_version,timestamp\n";
    const std::string prefix = cert.theorem + ',' + std::to_string(cert.ell) + ',' + std::to_string(cert.modulus) +
                               ',' + join(cert.primes, ';') + ',' + std::to_string(cert.alpha) + ',' +
                               std::to_string(cert.n_max) + ',' + join(cert.j_residues, ';') + ',' +
                               std::to_string(cert.precision) + ',' + (cert.passed ? "pass" : "fail") + ',' +
                               std::to_string(cert.checked) + ',' + std::to_string(cert.vacuous) + ',' +
                               std::to_string(cert.counterexample_count) + ',';
    const std::string suffix = ',' + cert.engine_version + ',' + cert.timestamp + '\n';
    if (cert.counterexamples.empty()) os << prefix << ",,," << suffix;
    for (const auto& c : cert.counterexamples)
        os << prefix << c.n << ',' << c.j << ',' << c.argument << ',' << c.value << suffix;
    return os.str();
}

}  // namespace lregcong
