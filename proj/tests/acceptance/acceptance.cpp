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

// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lregcong/cli.hpp"
#include "lregcong/congruence.hpp"
#include "lregcong/modular_forms.hpp"
#include "lregcong/partitions.hpp"
#include "lregcong/primes.hpp"
#include "lregcong/vanishing.hpp"
#include "lregcong/winquist.hpp"

using namespace lregcong;
using nlohmann::json;

namespace {

// A criterion returns an empty string on success and a reason otherwise.
using Check = std::function<std::string(std::string& detail)>;

struct Criterion {
    int id;
    std::string title;
    std::optional<double> limit_seconds;
    Check check;
};

std::string fail(const std::string& what) { return what.empty() ? "failed" : what; }

struct CliRun {
    std::vector<std::string> args;
    int code;
    std::string out;
};

CliRun cli_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {std::move(args), code, out.str()};
}

std::string strip_timestamp(const std::string& line) {
    auto j = json::parse(line);
    j.erase("timestamp");
    return j.dump();
}

// Certificates produced by the suite, in order; criterion 10 replays them.
std::vector<CliRun> g_certificates;

const std::vector<std::vector<std::string>> kFamilyRuns = {
    {"verify", "--theorem", "T3", "--preset", "--nmax", "200"},
    {"verify", "--theorem", "T11", "--preset", "--nmax", "200"},
    {"verify", "--theorem", "T25", "--preset", "--nmax", "200"},
    {"verify", "--theorem", "T13", "--preset", "--nmax", "3", "--j=-1,1,-2,2,10,100", "--precision", "1000000"},
};

const std::vector<std::vector<std::string>> kMixedRuns = {
    {"verify", "--theorem", "T3", "--primes", "5,7", "--nmax", "20"},
    {"verify", "--theorem", "T3", "--primes", "7,5", "--nmax", "20"},
};

const std::vector<std::string> kNegativeRun = {"verify", "--theorem", "T3", "--primes", "13", "--nmax", "200",
                                               "--force"};

std::string c1_oracle(std::string& detail) {
    constexpr int kBound = 2000;
    std::size_t compared = 0;
    for (int ell : {3, 11, 13, 25}) {
        const auto exact = regular_series<Int128>(ell, kExactOracleBound);
        const auto oracle = oracle_table(ell, kExactOracleBound);
        for (int n = 0; n <= kExactOracleBound; ++n, ++compared)
            if (exact(n) != static_cast<Int128>(oracle[n]))
                return "ell=" + std::to_string(ell) + " exact mismatch at n=" + std::to_string(n);
        for (auto m : kOraclePrimes) {
            const auto series = regular_series<std::int64_t>(ell, kBound, m);
            const auto table = oracle_table_mod(ell, kBound, m);
            for (int n = 0; n <= kBound; ++n, ++compared)
                if (static_cast<std::uint64_t>(series(n)) != table[n])
                    return "ell=" + std::to_string(ell) + " mismatch mod " + std::to_string(m) + " at n=" +
                           std::to_string(n);
        }
    }
    detail = std::to_string(compared) + " values; exact to n=300, three 59-61 bit primes to n=2000";
    return {};
}

std::string c2_winquist(std::string& detail) {
    const std::size_t N = 5000;
    const auto lattice = winquist_series(N);
    const auto power = pow(euler_series<std::int64_t>(N), 10);
    for (std::size_t e = 0; e <= N; ++e)
        if (lattice[e] != power[e]) return "first mismatch at q^" + std::to_string(e);
    detail = "q^0..q^5000 identical";
    return {};
}

std::string c3_eigen(std::string& detail) {
    const std::int64_t pmax = 50, bound = 200;
    const auto primes = primes_up_to(pmax);
    for (const auto& eq : standard_eta_quotients()) {
        const auto seq = eta_expansion(eq, static_cast<std::size_t>(pmax * bound));
        for (auto p : primes) {
            try {
                (void)eigen_check(seq, p, bound);
            } catch (const EigenViolation& v) {
                return eq.name() + ": p=" + std::to_string(p) + " fails at n=" + std::to_string(v.n);
            }
        }
    }
    const auto a = eta_expansion(eta_squared_12z(), 200);
    std::size_t zeros = 0;
    for (auto p : primes_up_to(200)) {
        if (p < 5 || p % 12 == 1) continue;
        if (a(p) != 0) return "a(" + std::to_string(p) + ") != 0 for eta^2(12z)";
        ++zeros;
    }
    if (a(13) != -2) return "negative control: a(13) = " + to_string(a(13)) + ", expected -2";
    detail = std::to_string(primes.size()) + " primes x 3 forms; " + std::to_string(zeros) +
             " vanishing a(p); a(13) = -2";
    return {};
}

std::string c4_ghn(std::string& detail) {
    const std::int64_t weights[] = {1, 6, 12};
    const auto forms = standard_eta_quotients();
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const auto& eq = forms[i];
        const auto g = ghn_check(eq);
        if (!g.cond1 || !g.cond2) return eq.name() + ": divisibility condition fails";
        if (g.weight != Rational(weights[i])) return eq.name() + ": wrong weight";
        if (g.sum_delta_r != 24) return eq.name() + ": sum delta r_delta != 24";
        if (cusp_order(eq, 1, eq.level()) != Rational(1)) return eq.name() + ": order at infinity != 1";
    }
    detail = "weights 1, 6, 12; order 1 at infinity";
    return {};
}

std::string c5_vanishing(std::string& detail) {
    std::vector<std::int64_t> good, bad;
    for (auto p : primes_up_to(60)) {
        if (p < 5) continue;
        const std::int64_t theta0 = 5 * (p * p - 1) / 12;
        const auto sol = unique_solution(p, theta0);
        if (p % 4 == 1) {
            if (sol.unique()) return "p=" + std::to_string(p) + ": unexpected unique solution";
            bad.push_back(p);
            continue;
        }
        if (!sol.unique()) return "p=" + std::to_string(p) + ": residue solution not unique";
        const auto vc = make_vanishing_case(p);
        if (verify_transform(vc, 15) != p * p * p * p) return "p=" + std::to_string(p) + ": lambda != p^4";
        const auto rep = vanishing_scan(vc, 30);
        if (rep.lambda != p * p * p * p) return "p=" + std::to_string(p) + ": scan lambda";
        good.push_back(p);
    }
    detail = std::to_string(good.size()) + " primes 3 mod 4 verified, " + std::to_string(bad.size()) +
             " primes 1 mod 4 non-unique";
    return {};
}

std::string check_certificates(const std::vector<std::vector<std::string>>& runs, std::string& detail) {
    std::size_t checked = 0;
    for (const auto& args : runs) {
        auto r = cli_run(args);
        g_certificates.push_back(r);
        if (r.code != 0) return args[2] + " exit code " + std::to_string(r.code);
        const auto j = json::parse(r.out);
        if (j["result"] != "pass" || !j["counterexamples"].empty()) return args[2] + " reported counterexamples";
        checked += j["checked"].get<std::size_t>();
    }
    detail = std::to_string(checked) + " arguments, no counterexamples";
    return {};
}

std::string c6_families(std::string& detail) { return check_certificates(kFamilyRuns, detail); }

std::string c7_recurrences(std::string& detail) {
    std::ostringstream os;
    const auto& t3 = congruence_theorem(TheoremId::T3);
    const auto table3 = theorem_table(t3, 121 * 200 + 10);
    for (std::int64_t p : {5, 7, 11}) {
        const auto rep = verify_recurrence(t3, p, 200, table3);
        if (!rep.passed()) return "T3 p=" + std::to_string(p) + " fails at n=" + std::to_string(rep.violations[0].n);
    }

    const auto& t13 = congruence_theorem(TheoremId::T13);
    std::vector<std::int64_t> t13_primes;
    for (const auto& e : search_primes(t13, 151)) t13_primes.push_back(e.p);
    if (t13_primes.empty() || t13_primes.back() != 151) return "search did not find 151 for T13";
    const auto table13 = theorem_table(t13, static_cast<std::size_t>(22801 * 3 + 11400));
    for (auto p : t13_primes) {
        const auto rep = verify_recurrence(t13, p, 3, table13);
        if (!rep.passed()) return "T13 p=" + std::to_string(p) + " fails";
    }

    const auto& t25 = congruence_theorem(TheoremId::T25);
    const auto table25 = theorem_table(t25, 25 * 200 + 24);
    if (!verify_recurrence(t25, 5, 200, table25).passed()) return "T25 p=5 fails";

    os << "T3 p=5,7,11 and T25 p=5 to n=200; T13 primes <= 151 found by search: " << t13_primes.size()
       << " (p=151, n<=3)";
    detail = os.str();
    return {};
}

std::string c8_mixed(std::string& detail) { return check_certificates(kMixedRuns, detail); }

std::string c9_negative(std::string& detail) {
    auto r = cli_run(kNegativeRun);
    g_certificates.push_back(r);
    if (r.code != 2) return "exit code " + std::to_string(r.code) + ", expected 2";
    const auto j = json::parse(r.out);
    if (j["result"] != "fail" || j["counterexamples"].empty()) return "certificate records no counterexample";
    const auto& first = j["counterexamples"][0];
    detail = std::to_string(j["counterexample_count"].get<std::size_t>()) + " counterexamples, first at n=" +
             first["n"].dump() + ", j=" + first["j"].dump();
    return {};
}

std::string c10_determinism(std::string& detail) {
    if (g_certificates.empty()) return "no certificates from the first pass";
    for (const auto& first : g_certificates) {
        const auto second = cli_run(first.args);
        if (second.code != first.code) return "exit code differs on replay";
        if (strip_timestamp(second.out) != strip_timestamp(first.out)) return "certificate differs on replay";
    }
    detail = std::to_string(g_certificates.size()) + " certificates replayed byte-identical modulo timestamp";
    return {};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence for ell in {3, 11, 13, 25}, n <= 2000", 5.0, c1_oracle},
        {2, "lattice sum equals (q;q)^10 to q^5000", 10.0, c2_winquist},
        {3, "Hecke eigen relations, p <= 50, scan bound 200", std::nullopt, c3_eigen},
        {4, "eta-quotient conditions and cusp order at infinity", std::nullopt, c4_ghn},
        {5, "vanishing conditions for primes 5 <= p <= 60", 30.0, c5_vanishing},
        {6, "shifted single-prime congruence families", 60.0, c6_families},
        {7, "recurrence congruences", std::nullopt, c7_recurrences},
        {8, "mixed-prime family T3 [5,7] and [7,5]", std::nullopt, c8_mixed},
        {9, "negative control T3 with p = 13", std::nullopt, c9_negative},
        {10, "determinism of certificates", std::nullopt, c10_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail, reason;
        const auto start = std::chrono::steady_clock::now();
        try {
            reason = c.check(detail);
        } catch (const std::exception& e) {
            reason = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (reason.empty() && c.limit_seconds && secs >= *c.limit_seconds) reason = "over the time limit";

        std::ostringstream timing;
        timing.setf(std::ios::fixed);
        timing.precision(2);
        timing << secs << " s";
        if (c.limit_seconds) timing << " / limit " << *c.limit_seconds << " s";

        const bool ok = reason.empty();
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << timing.str()
                  << ")";
        std::cout << (ok ? (detail.empty() ? "" : " - " + detail) : " - " + reason) << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
