/*
   Copyright 2026 The lehmer-ff Authors

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

#include "lehmer_ff/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <regex>
#include <sstream>

#include "lehmer_ff/cyclo.hpp"
#include "lehmer_ff/errors.hpp"
#include "lehmer_ff/lehmer_search.hpp"
#include "lehmer_ff/serialize.hpp"
#include "lehmer_ff/totient.hpp"
#include "lehmer_ff/verify.hpp"

namespace lehmer_ff::cli {

namespace {

enum class Format { text, json, csv };

struct RunConfig {
    std::string format = "text";
    unsigned workers = 1;

    std::optional<std::uint32_t> q;
    std::optional<std::uint32_t> p;
    std::uint32_t k = 1;

    std::string poly;
    bool bruteforce = false;
    std::optional<std::size_t> max_degree;
    bool expand_units = false;

    std::uint64_t n = 0;
    std::optional<std::string> eval_at;
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    std::string factoring_budget;
    std::optional<unsigned> n_max;
    std::optional<std::uint64_t> a_max;
    bool all_partitions = false;
    std::string suite;
    std::uint64_t seed = 20260101;

    Format fmt() const
    {
        if (format == "json")
            return Format::json;
        if (format == "csv")
            return Format::csv;
        return Format::text;
    }
};

BigInt parse_integer(const std::string& text, const char* what)
{
    static const std::regex pattern("-?[0-9]+");
    if (!std::regex_match(text, pattern))
        throw InvalidInput(std::string(what) + " must be a decimal integer, got '" + text + "'");
    return BigInt(text);
}

Field resolve_field(const RunConfig& cfg)
{
    if (cfg.q && cfg.p)
        throw InvalidInput("give either --q or --p/--k, not both");
    if (cfg.q)
        return make_field_of_order(*cfg.q);
    if (cfg.p)
        return make_field(*cfg.p, cfg.k);
    throw InvalidInput("a field is required: --q Q or --p P [--k K]");
}

void emit_json(std::ostream& out, const std::string& command, Json body)
{
    body["schema"] = json_schema_version;
    body["command"] = command;
    out << body.dump(2) << "\n";
}

std::string factor_text(const Factorization& fac)
{
    std::string s;
    for (const auto& [poly, mult] : fac.factors)
        s += (s.empty() ? "" : " ") + ("(" + format(poly) + ")^" + std::to_string(mult));
    return s;
}

int cmd_totient(const RunConfig& cfg, std::ostream& out)
{
    const Field field = resolve_field(cfg);
    const Poly f = parse_poly(field, cfg.poly);
    const LehmerVerdict v = is_lehmer(f);
    std::optional<BigInt> brute;
    if (cfg.bruteforce)
        brute = totient_bruteforce(f);

    switch (cfg.fmt()) {
    case Format::json: {
        Json body{{"report", to_json(v.report)}, {"in_script_L", v.in_script_L}, {"in_L", v.in_L}};
        if (brute)
            body["phi_bruteforce"] = to_decimal(*brute);
        emit_json(out, "totient", std::move(body));
        break;
    }
    case Format::csv:
        out << totient_csv_header() << ",in_script_L,in_L\n"
            << to_csv(v.report) << "," << (v.in_script_L ? "true" : "false") << "," << (v.in_L ? "true" : "false")
            << "\n";
        break;
    case Format::text:
        out << "f            " << format(f) << "\n"
            << "field        F_" << field->q() << "\n"
            << "degree       " << f.degree().str() << "\n"
            << "factors      unit " << field->format(v.report.factorization.unit) << "; "
            << factor_text(v.report.factorization) << "\n"
            << "phi          " << v.report.phi << "\n";
        if (brute)
            out << "phi (count)  " << *brute << "\n";
        out << "q^n - 1      " << v.report.modulus_value << "\n"
            << "divides      " << (v.report.divides ? "yes" : "no") << "\n"
            << "reducible    " << (v.report.reducible ? "yes" : "no") << "\n"
            << "Lehmer       " << (v.in_L ? "yes" : "no") << "\n";
        break;
    }
    return ok;
}

int cmd_lehmer(const RunConfig& cfg, std::ostream& out)
{
    const Field field = resolve_field(cfg);
    const std::size_t max_degree = cfg.max_degree.value_or(default_sweep_degree(field->q()));
    const auto members = lehmer_set(field, max_degree, {cfg.expand_units, cfg.workers});

    switch (cfg.fmt()) {
    case Format::json: {
        Json list = Json::array();
        for (const Poly& f : members)
            list.push_back(to_json(totient_report(f)));
        emit_json(out, "lehmer",
                  Json{{"q", field->q()},
                       {"max_degree", max_degree},
                       {"expand_units", cfg.expand_units},
                       {"members", list}});
        break;
    }
    case Format::csv:
        out << totient_csv_header() << "\n";
        for (const Poly& f : members)
            out << to_csv(totient_report(f)) << "\n";
        break;
    case Format::text: {
        std::size_t width = 4;
        for (const Poly& f : members)
            width = std::max(width, format(f).size());
        out << "L-set over F_" << field->q() << ", degree <= " << max_degree
            << (cfg.expand_units ? ", all unit multiples" : ", monic") << ": " << members.size() << " member(s)\n";
        if (members.empty())
            break;
        out << std::left << std::setw(static_cast<int>(width)) << "poly"
            << "  deg  phi      q^n-1    factors\n";
        for (const Poly& f : members) {
            const auto r = totient_report(f);
            out << std::left << std::setw(static_cast<int>(width)) << format(f) << "  " << std::setw(3)
                << f.degree().str() << "  " << std::setw(7) << r.phi.str() << "  " << std::setw(7)
                << r.modulus_value.str() << "  " << factor_text(r.factorization) << "\n";
        }
        break;
    }
    }
    return ok;
}

int cmd_cyclotomic(const RunConfig& cfg, std::ostream& out)
{
    const IntPoly phi = cyclotomic(cfg.n);
    std::optional<BigInt> at, value;
    if (cfg.eval_at) {
        at = parse_integer(*cfg.eval_at, "--eval");
        value = phi.eval(*at);
    }
    switch (cfg.fmt()) {
    case Format::json: {
        Json body{{"n", cfg.n}, {"poly", phi.str()}, {"degree", phi.degree()}};
        if (at) {
            body["eval_at"] = to_decimal(*at);
            body["value"] = to_decimal(*value);
        }
        emit_json(out, "cyclotomic", std::move(body));
        break;
    }
    case Format::csv:
        out << "n,degree,poly,eval_at,value\n"
            << cfg.n << "," << phi.degree() << "," << csv_field(phi.str()) << "," << (at ? at->str() : "") << ","
            << (value ? value->str() : "") << "\n";
        break;
    case Format::text:
        out << "Phi_" << cfg.n << "(x) = " << phi.str() << "\n"
            << "degree = " << phi.degree() << "\n";
        if (at)
            out << "Phi_" << cfg.n << "(" << *at << ") = " << *value << "\n";
        break;
    }
    return ok;
}

int cmd_zsigmondy(const RunConfig& cfg, std::ostream& out)
{
    ZsigmondyOptions options;
    if (!cfg.factoring_budget.empty())
        options.factoring_budget = parse_integer(cfg.factoring_budget, "--factoring-budget");
    const ZsigmondyResult r = zsigmondy(cfg.a, cfg.b, cfg.n, options);
    auto join = [](const std::vector<BigInt>& v, const char* sep) {
        std::string s;
        for (const auto& p : v)
            s += (s.empty() ? "" : sep) + p.str();
        return s;
    };
    const std::string exception = r.exception ? to_string(*r.exception) : "";
    switch (cfg.fmt()) {
    case Format::json:
        emit_json(out, "zsigmondy", Json{{"result", to_json(r)}});
        break;
    case Format::csv:
        out << "a,b,n,primitive_primes,algebraic_primes,exception,primitive_part\n"
            << r.a << "," << r.b << "," << r.n << "," << join(r.primitive_primes, ";") << ","
            << join(r.algebraic_primes, ";") << "," << exception << "," << r.primitive_part << "\n";
        break;
    case Format::text:
        out << r.a << "^" << r.n << " - " << r.b << "^" << r.n << "\n"
            << "primitive primes  " << (r.primitive_primes.empty() ? "none" : join(r.primitive_primes, " ")) << "\n"
            << "algebraic primes  " << (r.algebraic_primes.empty() ? "none" : join(r.algebraic_primes, " "))
            << "\n"
            << "primitive part    " << r.primitive_part << "\n"
            << "exception         " << (exception.empty() ? "none" : exception) << "\n";
        break;
    }
    return ok;
}

int cmd_partitions(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.a < 2)
        throw InvalidInput("--a must be at least 2");
    const unsigned n_max = cfg.n_max.value_or(10);
    if (n_max < 2)
        throw InvalidInput("--n-max must be at least 2");
    std::vector<Partition> rows;
    for (unsigned n = 2; n <= n_max; ++n)
        for (Partition& p : partitions(n))
            if (cfg.all_partitions || mersenne_divisibility(cfg.a, p))
                rows.push_back(std::move(p));

    auto exps_text = [](const Partition& p) {
        std::string s;
        const auto map = exponent_map(p.n(), p);
        for (auto [d, e] : map.exponents())
            s += (s.empty() ? "" : ";") + std::to_string(d) + ":" + std::to_string(e);
        return s;
    };
    switch (cfg.fmt()) {
    case Format::json: {
        Json list = Json::array();
        for (const auto& p : rows)
            list.push_back(search_report(cfg.a, p));
        emit_json(out, "partitions", Json{{"a", cfg.a}, {"n_max", n_max}, {"reports", list}});
        break;
    }
    case Format::csv:
        out << "a,n,parts,divides,exponent_map\n";
        for (const auto& p : rows) {
            std::string parts;
            for (unsigned e : p.parts())
                parts += (parts.empty() ? "" : " ") + std::to_string(e);
            out << cfg.a << "," << p.n() << "," << parts << "," << (mersenne_divisibility(cfg.a, p) ? "true" : "false")
                << "," << exps_text(p) << "\n";
        }
        break;
    case Format::text:
        out << "a = " << cfg.a << ", n <= " << n_max << ": " << rows.size() << " partition(s)"
            << (cfg.all_partitions ? "" : " with prod (a^e_i - 1) | a^n - 1") << "\n";
        for (const auto& p : rows)
            out << "  n=" << std::left << std::setw(4) << p.n() << std::setw(20) << p.str() << " "
                << (mersenne_divisibility(cfg.a, p) ? "divides  " : "no       ") << exps_text(p) << "\n";
        break;
    }
    return ok;
}

int cmd_candidates(const RunConfig& cfg, std::ostream& out)
{
    const CandidateSets sets = candidate_degrees(cfg.n_max.value_or(200));
    auto join = [](const std::vector<unsigned>& v) {
        std::string s;
        for (unsigned x : v)
            s += (s.empty() ? "" : " ") + std::to_string(x);
        return s;
    };
    switch (cfg.fmt()) {
    case Format::json:
        emit_json(out, "candidates", to_json(sets));
        break;
    case Format::csv:
        out << "set,n\n";
        for (unsigned n : sets.coarse)
            out << "coarse," << n << "\n";
        for (unsigned n : sets.refined)
            out << "refined," << n << "\n";
        break;
    case Format::text:
        out << "coarse   " << join(sets.coarse) << "\n"
            << "refined  " << join(sets.refined) << "\n"
            << "smallest margin " << sets.min_margin.str(8) << "\n";
        break;
    }
    return ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    SuiteReport report;
    if (cfg.suite == "main-theorem") {
        MainTheoremOptions options;
        if (cfg.q)
            options.orders = {*cfg.q};
        else if (cfg.p)
            options.orders = {resolve_field(cfg)->q()};
        options.max_degree = cfg.max_degree;
        options.workers = cfg.workers;
        report = verify_main_theorem(options);
    } else if (cfg.suite == "prop31") {
        report = verify_prop31(cfg.a_max.value_or(8), cfg.n_max.value_or(10), cfg.workers);
    } else if (cfg.suite == "prop36") {
        report = verify_prop36_suite(cfg.n_max.value_or(30), cfg.workers);
    } else if (cfg.suite == "cyclo-lemmas") {
        report = verify_cyclo_lemmas();
    } else if (cfg.suite == "bounds") {
        report = verify_bounds(cfg.n_max.value_or(100000));
    } else {
        report = verify_oracle(cfg.seed);
    }

    switch (cfg.fmt()) {
    case Format::json:
        emit_json(out, "verify", Json{{"report", report.to_json()}});
        break;
    case Format::csv:
        out << "suite,check,passed,detail\n";
        for (const auto& c : report.checks)
            out << report.suite << "," << csv_field(c.name) << "," << (c.passed ? "true" : "false") << ","
                << csv_field(c.detail) << "\n";
        break;
    case Format::text:
        out << report.to_text();
        break;
    }
    return report.passed() ? ok : verification_failed;
}

void add_field_options(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--q", cfg.q, "Field order (a prime power)");
    sub->add_option("--p", cfg.p, "Field characteristic");
    sub->add_option("--k", cfg.k, "Extension degree")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Euler totient and Lehmer-set computations over F_q[x]", "lehmer-ff"};
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    auto* workers_opt = app.add_option("--workers", cfg.workers, "Worker threads for sweeps (env LEHMER_FF_WORKERS)")
                            ->check(CLI::Range(1u, 1024u));

    auto* totient_cmd = app.add_subcommand("totient", "Totient, factorization and Lehmer membership of one polynomial");
    totient_cmd->add_option("poly", cfg.poly, "Polynomial, e.g. x^3+x+1")->required();
    add_field_options(totient_cmd, cfg);
    totient_cmd->add_flag("--bruteforce", cfg.bruteforce, "Also count coprime residues directly");

    auto* lehmer_cmd = app.add_subcommand("lehmer", "Exhaustive sweep for the Lehmer set of F_q[x]");
    add_field_options(lehmer_cmd, cfg);
    lehmer_cmd->add_option("--max-degree", cfg.max_degree, "Largest degree swept")->check(CLI::PositiveNumber);
    lehmer_cmd->add_flag("--expand-units", cfg.expand_units, "List every unit multiple of each monic member");

    auto* cyclo_cmd = app.add_subcommand("cyclotomic", "Cyclotomic polynomial Phi_n and its values");
    cyclo_cmd->add_option("--n", cfg.n, "Index n")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000}));
    cyclo_cmd->add_option("--eval", cfg.eval_at, "Evaluate at this integer");

    auto* zsig_cmd = app.add_subcommand("zsigmondy", "Primitive prime divisors of a^n - b^n");
    zsig_cmd->add_option("--a", cfg.a, "Base a")->required();
    zsig_cmd->add_option("--b", cfg.b, "Base b (default 1)");
    zsig_cmd->add_option("--n", cfg.n, "Exponent n >= 2")->required();
    zsig_cmd->add_option("--factoring-budget", cfg.factoring_budget, "Largest a^n - b^n to factor (default 2^64)");

    auto* part_cmd = app.add_subcommand("partitions", "Partitions e with prod (a^e_i - 1) | a^n - 1");
    part_cmd->add_option("--a", cfg.a, "Base a >= 2")->required();
    part_cmd->add_option("--n-max", cfg.n_max, "Largest n (default 10)");
    part_cmd->add_flag("--all", cfg.all_partitions, "Report every partition, dividing or not");

    auto* cand_cmd = app.add_subcommand("candidates", "Degrees surviving the coarse and refined size inequalities");
    cand_cmd->add_option("--n-max", cfg.n_max, "Largest n (default 200)");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", cfg.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"main-theorem", "prop31", "prop36", "cyclo-lemmas", "bounds", "oracle"}));
    add_field_options(verify_cmd, cfg);
    verify_cmd->add_option("--max-degree", cfg.max_degree, "Sweep degree for main-theorem")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--n-max", cfg.n_max, "Bound on n for prop31, prop36 and bounds");
    verify_cmd->add_option("--a-max", cfg.a_max, "Bound on a for prop31");
    verify_cmd->add_option("--seed", cfg.seed, "Seed for the random pairs of the oracle suite");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }
    if (workers_opt->count() == 0)
        if (const char* env = std::getenv("LEHMER_FF_WORKERS"); env && *env) {
            const std::string_view text(env);
            unsigned value = 0;
            auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || end != text.data() + text.size() || value < 1 || value > 1024) {
                err << "LEHMER_FF_WORKERS: expected an integer in [1, 1024], got '" << text << "'\n";
                return usage_error;
            }
            cfg.workers = value;
        }

    try {
        if (totient_cmd->parsed())
            return cmd_totient(cfg, out);
        if (lehmer_cmd->parsed())
            return cmd_lehmer(cfg, out);
        if (cyclo_cmd->parsed())
            return cmd_cyclotomic(cfg, out);
        if (zsig_cmd->parsed())
            return cmd_zsigmondy(cfg, out);
        if (part_cmd->parsed())
            return cmd_partitions(cfg, out);
        if (cand_cmd->parsed())
            return cmd_candidates(cfg, out);
        return cmd_verify(cfg, out);
    } catch (const ResourceError& e) {
        err << "lehmer-ff: " << e.what() << "\n";
        return resource_error;
    } catch (const PrecisionAlert& e) {
        err << "lehmer-ff: precision alert: " << e.what() << "\n";
        return verification_failed;
    } catch (const InvariantViolation& e) {
        err << "lehmer-ff: " << e.what() << "\n";
        return verification_failed;
    } catch (const std::bad_alloc&) {
        err << "lehmer-ff: out of memory\n";
        return resource_error;
    } catch (const std::exception& e) {
        err << "lehmer-ff: " << e.what() << "\n";
        return usage_error;
    }
}

}  // namespace lehmer_ff::cli
