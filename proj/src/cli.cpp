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

#include "lregcong/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "lregcong/congruence.hpp"
#include "lregcong/modular_forms.hpp"
#include "lregcong/partitions.hpp"
#include "lregcong/primes.hpp"
#include "lregcong/vanishing.hpp"
#include "lregcong/winquist.hpp"

namespace lregcong::cli {

namespace {

using nlohmann::json;

// Integers beyond 64 bits are emitted as decimal strings.
json integer_json(Int128 v) {
    if (fits_int64(v)) return static_cast<std::int64_t>(v);
    return to_string(v);
}

json rational_json(const Rational& r) {
    if (r.denominator() == 1) return r.numerator();
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

class Output {
   public:
    Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw UsageError("cannot open output file " + path);
    }

    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

   private:
    std::ofstream file_;
    std::ostream& fallback_;
};

const CongruenceTheorem& theorem_from(const std::string& name) {
    const auto id = parse_theorem_id(name);
    if (!id) throw UsageError("unknown theorem '" + name + "' (expected T3, T11, T13 or T25)");
    return congruence_theorem(*id);
}

int cmd_expand(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.ell || *cfg.ell < 2) throw UsageError("--ell must be at least 2");
    Output sink(cfg.out_path, out);
    auto& os = sink.stream();
    auto emit = [&](std::size_t n, Int128 value) {
        if (cfg.format == Format::Csv)
            os << n << ',' << to_string(value) << '\n';
        else
            os << json{{"n", n}, {"value", integer_json(value)}}.dump() << '\n';
    };
    if (cfg.format == Format::Csv) os << "n,value\n";
    if (cfg.modulus) {
        const auto table = regular_series<std::int64_t>(*cfg.ell, cfg.precision, *cfg.modulus);
        for (std::size_t n = 0; n <= table.precision(); ++n) emit(n, table.values[n]);
    } else {
        const auto table = regular_series<Int128>(*cfg.ell, cfg.precision);
        for (std::size_t n = 0; n <= table.precision(); ++n) emit(n, table.values[n]);
    }
    return kPass;
}

int cmd_verify(RunConfig cfg, std::ostream& out) {
    const auto& th = theorem_from(cfg.theorem);
    cfg.ell = th.ell;
    cfg.modulus = th.modulus;

    Certificate cert;
    if (cfg.preset) {
        const auto family = explicit_family(th.id);
        cfg.primes = {family.prime};
        cfg.j_policy = cfg.js.empty() ? "preset" : "explicit";
        const auto js = cfg.js.empty() ? default_explicit_js(family.form) : cfg.js;
        const std::size_t required = required_precision(family.form, cfg.n_max, js);
        if (required > cfg.precision) throw PrecisionShortfall("family grid exceeds the precision cap", required);
        cert = verify_explicit_family(family, cfg.n_max, theorem_table(th, required), js);
    } else {
        if (cfg.primes.empty()) throw UsageError("--primes is required unless --preset is given");
        cfg.j_policy = cfg.js.empty() ? "full" : "explicit";
        cert = verify_mixed_family(th, cfg.primes, cfg.n_max, cfg.precision, {cfg.js, cfg.force});
    }
    cfg.alpha = static_cast<int>(cfg.primes.size()) - 1;
    if (th.id == TheoremId::T25)
        cert.strengthening = mod25_strengthening(cert, regular_series<std::int64_t>(25, cert.precision, 25));
    cert.run_config = to_json(cfg);

    Output sink(cfg.out_path, out);
    if (cfg.format == Format::Csv)
        sink.stream() << to_csv(cert);
    else
        sink.stream() << to_json(cert).dump() << '\n';
    return cert.passed ? kPass : kCounterexample;
}

int cmd_search(const RunConfig& cfg, std::int64_t bound, std::ostream& out) {
    const auto& th = theorem_from(cfg.theorem);
    Output sink(cfg.out_path, out);
    auto& os = sink.stream();
    if (cfg.format == Format::Csv) os << "theorem,p,evidence\n";
    for (const auto& e : search_primes(th, bound)) {
        if (cfg.format == Format::Csv) {
            os << cfg.theorem << ',' << e.p << ',';
            if (e.evidence) os << *e.evidence;
            os << '\n';
        } else {
            json row{{"theorem", cfg.theorem}, {"p", e.p}};
            row["evidence"] = e.evidence ? json(*e.evidence) : json(nullptr);
            os << row.dump() << '\n';
        }
    }
    return kPass;
}

struct IdentityOptions {
    std::string which;
    std::int64_t n = -1;
    std::int64_t p = 0;
    std::int64_t pmax = 50;
    std::int64_t k = 15;
    std::string form;
};

int identity_winquist(const IdentityOptions& opt, json& report) {
    const auto N = static_cast<std::size_t>(opt.n < 0 ? 5000 : opt.n);
    const auto lattice = winquist_series(N);
    const auto power = pow(euler_series<std::int64_t>(N), 10);
    report["n"] = N;
    for (std::size_t e = 0; e <= N; ++e) {
        if (lattice[e] != power[e]) {
            report["result"] = "fail";
            report["first_mismatch"] = {{"index", e}, {"lattice", lattice[e]}, {"power", power[e]}};
            return kCounterexample;
        }
    }
    report["result"] = "pass";
    return kPass;
}

int identity_eigen(const IdentityOptions& opt, json& report) {
    const std::int64_t bound = opt.n < 0 ? 200 : opt.n;
    std::vector<EtaQuotient> forms;
    if (opt.form.empty()) {
        forms = standard_eta_quotients();
    } else {
        auto eq = eta_quotient_by_name(opt.form);
        if (!eq) throw UsageError("unknown form '" + opt.form + "' (expected eta2-12, eta12-2 or eta24-1)");
        forms.push_back(*eq);
    }
    const auto primes = primes_up_to(opt.pmax);
    int code = kPass;
    report["scan_bound"] = bound;
    report["forms"] = json::array();
    for (const auto& eq : forms) {
        const auto seq = eta_expansion(eq, static_cast<std::size_t>(opt.pmax * bound));
        json rows = json::array();
        for (auto p : primes) {
            try {
                const auto r = eigen_check(seq, p, static_cast<std::size_t>(bound));
                rows.push_back({{"p", p}, {"lambda", integer_json(r.lambda)}, {"verified_to", r.verified_to}});
            } catch (const EigenViolation& v) {
                rows.push_back({{"p", p}, {"result", "fail"}, {"n", v.n}, {"lhs", integer_json(v.lhs)},
                                {"rhs", integer_json(v.rhs)}});
                code = kCounterexample;
            }
        }
        report["forms"].push_back({{"form", eq.name()}, {"rows", rows}});
    }
    report["result"] = code == kPass ? "pass" : "fail";
    return code;
}

int identity_ghn(json& report) {
    report["forms"] = json::array();
    bool ok = true;
    for (const auto& eq : standard_eta_quotients()) {
        const auto g = ghn_check(eq);
        const auto at_infinity = cusp_order(eq, 1, eq.level());
        const auto at_zero = cusp_order(eq, 1, 1);
        ok = ok && g.cond1 && g.cond2 && at_infinity == eq.leading_exponent();
        report["forms"].push_back({{"form", eq.name()},
                                   {"level", eq.level()},
                                   {"weight", rational_json(g.weight)},
                                   {"character_integer", rational_json(g.character_integer)},
                                   {"sum_delta_r", g.sum_delta_r},
                                   {"sum_level_r", g.sum_level_r},
                                   {"cond1", g.cond1},
                                   {"cond2", g.cond2},
                                   {"cusp_order_infinity", rational_json(at_infinity)},
                                   {"cusp_order_zero", rational_json(at_zero)}});
    }
    report["result"] = ok ? "pass" : "fail";
    return ok ? kPass : kCounterexample;
}

int identity_vanishing(const IdentityOptions& opt, json& report) {
    const std::int64_t p = opt.p;
    if (!is_prime(p) || p < 5) throw UsageError("--p must be a prime >= 5");
    const std::int64_t theta0 = 5 * (p * p - 1) / 12;
    const auto sol = unique_solution(p, theta0);
    report["p"] = p;
    report["theta0"] = theta0;
    report["solution_count"] = sol.count;
    if (!sol.unique()) {
        report["result"] = "fail";
        report["reason"] = "residue solution is not unique";
        return kCounterexample;
    }
    report["residues"] = {sol.solution->k, sol.solution->l};
    const auto vc = make_vanishing_case(p);
    try {
        report["lambda"] = verify_transform(vc, opt.k);
        report["transform_window"] = opt.k;
        const auto scan = vanishing_scan(vc, opt.n < 0 ? 30 : opt.n);
        report["scan_bound"] = scan.n_max;
        report["recursion_checked"] = scan.recursion_checked;
        report["vanishing_checked"] = scan.vanishing_checked;
    } catch (const ConditionViolation& v) {
        report["result"] = "fail";
        report["reason"] = v.what();
        report["at"] = {v.at.k, v.at.l};
        return kCounterexample;
    } catch (const VanishingViolation& v) {
        report["result"] = "fail";
        report["reason"] = v.what();
        report["n"] = v.n;
        return kCounterexample;
    }
    report["result"] = "pass";
    return kPass;
}

int cmd_identities(const IdentityOptions& opt, const RunConfig& cfg, std::ostream& out) {
    json report{{"identity", opt.which}};
    int code = kUsage;
    if (opt.which == "winquist")
        code = identity_winquist(opt, report);
    else if (opt.which == "eigen")
        code = identity_eigen(opt, report);
    else if (opt.which == "ghn")
        code = identity_ghn(report);
    else if (opt.which == "vanishing")
        code = identity_vanishing(opt, report);
    else
        throw UsageError("unknown identity suite '" + opt.which + "'");
    report["engine_version"] = engine_version();
    Output sink(cfg.out_path, out);
    sink.stream() << report.dump() << '\n';
    return code;
}

}  // namespace

nlohmann::json to_json(const RunConfig& c) {
    json j{{"command", c.command}, {"precision", c.precision}, {"format", c.format == Format::Csv ? "csv" : "json"}};
    if (!c.theorem.empty()) j["theorem"] = c.theorem;
    j["ell"] = c.ell ? json(*c.ell) : json(nullptr);
    j["modulus"] = c.modulus ? json(*c.modulus) : json(nullptr);
    j["primes"] = c.primes;
    j["alpha"] = c.alpha;
    j["n_max"] = c.n_max;
    j["j_policy"] = c.j_policy;
    j["js"] = c.js;
    j["force"] = c.force;
    j["preset"] = c.preset;
    j["output_path"] = c.out_path.empty() ? json(nullptr) : json(c.out_path);
    return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Congruences for l-regular partition counts: tables, identity checks and certificates",
                 "lregcong"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "json";
    std::int64_t precision_cap = static_cast<std::int64_t>(kDefaultPrecisionCap);
    std::int64_t n_expand = 0;
    std::int64_t search_bound = 0;
    int ell = 0;
    std::uint64_t modulus = 0;
    IdentityOptions idopt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output encoding")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
    };

    auto* expand = app.add_subcommand("expand", "Print b_ell(n) for 0 <= n <= N");
    expand->add_option("--ell", ell, "ell >= 2")->required();
    expand->add_option("--n", n_expand, "Last index N")->required()->check(CLI::NonNegativeNumber);
    expand->add_option("--mod", modulus, "Reduce modulo m");
    add_common(expand);

    auto* verify = app.add_subcommand("verify", "Check a congruence family and write a certificate");
    verify->add_option("--theorem", cfg.theorem, "T3, T11, T13 or T25")->required();
    verify->add_option("--primes", cfg.primes, "p_1,...,p_{a+1}")->delimiter(',');
    verify->add_option("--nmax", cfg.n_max, "Largest n")->check(CLI::NonNegativeNumber);
    verify->add_option("--j", cfg.js, "Explicit j values instead of a full residue system")->delimiter(',');
    verify->add_option("--precision", precision_cap, "Precision cap for the b_ell table")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--force", cfg.force, "Allow ineligible primes (negative controls)");
    verify->add_flag("--preset", cfg.preset, "Use the shifted single-prime family for this theorem");
    add_common(verify);
    cfg.n_max = 200;

    auto* identities = app.add_subcommand("identities", "Run an identity suite");
    identities->add_option("which", idopt.which, "winquist, eigen, ghn or vanishing")
        ->required()
        ->check(CLI::IsMember({"winquist", "eigen", "ghn", "vanishing"}));
    identities->add_option("--n", idopt.n, "Precision or scan bound");
    identities->add_option("--p", idopt.p, "Prime for the vanishing suite");
    identities->add_option("--pmax", idopt.pmax, "Largest prime for the eigen suite");
    identities->add_option("--k", idopt.k, "Transform window for the vanishing suite");
    identities->add_option("--form", idopt.form, "eta2-12, eta12-2 or eta24-1");
    identities->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");

    auto* search = app.add_subcommand("search", "List eligible primes up to a bound");
    search->add_option("--theorem", cfg.theorem, "T3, T11, T13 or T25")->required();
    search->add_option("--bound", search_bound, "Largest prime considered")->required();
    add_common(search);

    std::vector<const char*> argv{"lregcong"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    cfg.format = format == "csv" ? Format::Csv : Format::Json;
    try {
        if (expand->parsed()) {
            cfg.command = "expand";
            cfg.ell = ell;
            if (modulus != 0) cfg.modulus = modulus;
            cfg.precision = static_cast<std::size_t>(n_expand);
            return cmd_expand(cfg, out);
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            cfg.precision = static_cast<std::size_t>(precision_cap);
            return cmd_verify(cfg, out);
        }
        if (identities->parsed()) {
            cfg.command = "identities";
            return cmd_identities(idopt, cfg, out);
        }
        if (search->parsed()) {
            cfg.command = "search";
            return cmd_search(cfg, search_bound, out);
        }
    } catch (const PrecisionShortfall& e) {
        err << "error: " << e.what() << '\n';
        return kShortfall;
    } catch (const ArithmeticOverflow& e) {
        err << "error: " << e.what() << "; use --mod for large tables\n";
        return kShortfall;
    } catch (const ViolationError& e) {
        err << "violation: " << e.what() << '\n';
        return kCounterexample;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace lregcong::cli
