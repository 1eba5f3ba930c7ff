/*
   Copyright 2026 The tmon Authors

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

#ifndef TMON_CLI_HPP
#define TMON_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "testing/acceptance.hpp"

namespace tmon::cli {

enum ExitCode : int { kOk = 0, kDegenerate = 2, kValidation = 3, kInternal = 4 };

inline int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotInGeneralPosition:
        case ErrorCode::NotInDenseOrbit:
            return kDegenerate;
        case ErrorCode::ContextDegenerate:
        case ErrorCode::GeneratorSearchExhausted:
        case ErrorCode::InvariantViolation:
            return kInternal;
        default:
            return kValidation;
    }
}

struct Options {
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "json";
};

inline void emit(const io::json& j, const Options& opt, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    if (opt.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(opt.out_path);
    if (!f) fail(ErrorCode::InvalidArgument, "cannot write " + opt.out_path);
    f << text;
}

inline io::json cmd_define(const std::string& path) {
    EtaleAlgebra e = io::algebra_from(io::read_file(path));
    const std::size_t n = e.degree();
    io::json factors = io::json::array();
    for (std::size_t i = 0; i < e.factor_count(); ++i)
        factors.push_back({{"factor", io::to_json(e.factor(i))}, {"text", e.factor(i).str()}, {"degree", e.factor_degree(i)}, {"squarefree", true}});
    std::string branch;
    if (n % 2 == 1)
        branch = n >= 5 ? "parametrization available" : "below the range n >= 5";
    else
        branch = n >= 6 ? "obstruction module applies" : "below the range n >= 6";
    const std::string parity = n % 2 ? "odd" : "even";
    return {{"degree", n},
            {"parity", parity},
            {"etale", true},
            {"factors", factors},
            {"branch", branch},
            {"summary", "degree " + std::to_string(n) + ", " + parity + ", " + branch}};
}

inline io::json cmd_context(const std::string& path, std::uint64_t seed) {
    EtaleAlgebra e = io::algebra_from(io::read_file(path));
    return io::to_json(build_context(e, seed), seed);
}

inline io::json canonical_report(const ParamContext& ctx, const Subspace& s) {
    return {{"canonical", io::to_json(s)}, {"pluecker", io::to_json(plucker(s))}, {"chart", io::to_json(chart_coords(ctx, s))}};
}

inline io::json cmd_canonical(const std::string& ctx_path, const std::string& cfg_path) {
    ParamContext ctx = io::context_from(io::read_file(ctx_path));
    Configuration cfg = io::configuration_from(io::read_file(cfg_path), ctx.algebra());
    return canonical_report(ctx, canonical(ctx, cfg));
}

/// EQUIVALENT / DIFFERENT, or DEGENERATE with the reason; degenerate results
/// are reported through the returned exit code as well.
inline io::json cmd_compare(const std::string& ctx_path, const std::string& a_path, const std::string& b_path, int& code) {
    ParamContext ctx = io::context_from(io::read_file(ctx_path));
    const std::vector<std::pair<std::string, std::string>> inputs{{"A", a_path}, {"B", b_path}};
    std::vector<Subspace> forms;
    for (const auto& [label, path] : inputs) {
        Configuration cfg = io::configuration_from(io::read_file(path), ctx.algebra());
        try {
            forms.push_back(canonical(ctx, cfg));
        } catch (const Error& e) {
            if (exit_code_for(e.code()) != kDegenerate) throw;
            code = kDegenerate;
            return {{"result", "DEGENERATE"}, {"reason", std::string(to_string(e.code()))}, {"configuration", label}, {"detail", e.detail()}};
        }
    }
    code = kOk;
    const bool same = forms[0] == forms[1];
    return {{"result", same ? "EQUIVALENT" : "DIFFERENT"}, {"canonical_A", io::to_json(forms[0])}, {"canonical_B", io::to_json(forms[1])}};
}

inline io::json cmd_roundtrip(const std::string& ctx_path, std::uint64_t seed, std::size_t trials, int& code) {
    ParamContext ctx = io::context_from(io::read_file(ctx_path));
    Rng rng(seed);
    const std::size_t m = ctx.s() + 1;
    io::json rows = io::json::array();
    std::size_t passed = 0, skipped = 0;
    while (rows.size() < trials && skipped < 100 * trials + 100) {
        Matrix coef(2, m);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < m; ++j) coef(i, j) = Rational(rng.integer(-10, 10));
        if (rank(coef) != 2) continue;
        Subspace s = Subspace::row_space(coef * ctx.z().basis());
        ChartPoint p = chart_coords(ctx, s);
        Subspace rebuilt = from_chart(ctx, p);
        Configuration cfg = realize(ctx, rebuilt);
        Subspace back;
        try {
            back = canonical(ctx, cfg);
        } catch (const Error& e) {
            if (exit_code_for(e.code()) != kDegenerate) throw;
            ++skipped;
            continue;
        }
        const bool ok = rebuilt == s && back == s;
        passed += ok;
        rows.push_back({{"chart", io::to_json(p)}, {"ok", ok}});
    }
    code = passed == rows.size() && rows.size() == trials ? kOk : kInternal;
    return {{"seed", seed}, {"trials", rows.size()}, {"passed", passed}, {"skipped_not_general", skipped}, {"results", rows}};
}

inline io::json cmd_obstruction(std::size_t n, const std::string& path) {
    return io::to_json(non_retract_witness(n, io::quaternion_from(io::read_file(path))));
}

inline io::json cmd_residues(const std::string& path, const std::vector<std::string>& points) {
    QuaternionOverFt A = io::ft_quaternion_from(io::read_file(path));
    std::vector<Rational> extra;
    for (const auto& p : points) extra.push_back(Rational::parse(p));
    io::json table = io::json::array();
    bool constant = true;
    for (const auto& r : residue_table(A, extra)) {
        table.push_back(io::to_json(r));
        constant = constant && r.trivial();
    }
    return {{"symbol", io::to_json(A)}, {"residues", table}, {"all_trivial", constant}};
}

inline int cmd_selftest(const std::string& scale, std::uint64_t seed, std::ostream& out) {
    auto results = acceptance::run_all(scale == "full" ? acceptance::Scale::Full : acceptance::Scale::Small, seed, out);
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
    out << (ok ? "selftest: all criteria passed\n" : "selftest: FAILED\n");
    return ok ? kOk : kInternal;
}

/// Entry point shared by the executable and the tests. args excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations for twisted forms of M_{0,n}", "tmon"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--seed", opt.seed, "Seed for all sampled values")->capture_default_str();
    app.add_option("--out", opt.out_path, "Write the JSON result to this path");
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json"}))->capture_default_str();

    std::string p1, p2, p3, scale = "small";
    std::size_t n = 0, trials = 20;
    std::vector<std::string> points;

    auto* define = app.add_subcommand("define", "Validate an etale algebra descriptor");
    define->add_option("algebra", p1)->required();
    auto* context = app.add_subcommand("context", "Build a parametrization context");
    context->add_option("algebra", p1)->required();
    auto* canon = app.add_subcommand("canonical", "Canonical point of Gr(2, Z) for a configuration");
    canon->add_option("context", p1)->required();
    canon->add_option("config", p2)->required();
    auto* compare = app.add_subcommand("compare", "Compare two configurations up to the twisted group");
    compare->add_option("context", p1)->required();
    compare->add_option("configA", p2)->required();
    compare->add_option("configB", p3)->required();
    auto* roundtrip = app.add_subcommand("roundtrip", "Chart / realize / canonical round trips on random points of Gr(2, Z)");
    roundtrip->add_option("context", p1)->required();
    roundtrip->add_option("--trials", trials)->capture_default_str();
    auto* obstruction = app.add_subcommand("obstruction", "Non-retract-rationality certificate for even n");
    obstruction->add_option("--n", n)->required();
    obstruction->add_option("quaternion", p1)->required();
    auto* residues = app.add_subcommand("residues", "Residue table of a symbol algebra over Q(t)");
    residues->add_option("quaternion", p1)->required();
    residues->add_option("--at", points, "Extra rational points t = c");
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
    selftest->add_option("--scale", scale)->check(CLI::IsMember({"small", "full"}))->capture_default_str();
    for (auto* sub : {define, context, canon, compare, roundtrip, obstruction, residues, selftest}) sub->fallthrough();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: UsageError: " << e.what() << "\n";
        return kValidation;
    }

    try {
        int code = kOk;
        if (*define) emit(cmd_define(p1), opt, out);
        else if (*context) emit(cmd_context(p1, opt.seed), opt, out);
        else if (*canon) emit(cmd_canonical(p1, p2), opt, out);
        else if (*compare) emit(cmd_compare(p1, p2, p3, code), opt, out);
        else if (*roundtrip) emit(cmd_roundtrip(p1, opt.seed, trials, code), opt, out);
        else if (*obstruction) emit(cmd_obstruction(n, p1), opt, out);
        else if (*residues) emit(cmd_residues(p1, points), opt, out);
        else if (*selftest) code = cmd_selftest(scale, opt.seed, out);
        return code;
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.detail() << "\n";
        return exit_code_for(e.code());
    } catch (const nlohmann::json::exception& e) {
        err << "error: ParseError: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        err << "error: InvariantViolation: " << e.what() << "\n";
        return kInternal;
    }
}

}  // namespace tmon::cli

#endif  // TMON_CLI_HPP
