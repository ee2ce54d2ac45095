/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rcbethe/rcbethe.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitResidual = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIncomplete = 3;
constexpr int kExitInternal = 4;

struct TextDeleter {
    void operator()(rcb_text* t) const { rcb_text_free(t); }
};
struct SetDeleter {
    void operator()(rcb_solution_set* s) const { rcb_solution_set_free(s); }
};
struct ConfigDeleter {
    void operator()(rcb_config* c) const { rcb_config_free(c); }
};
using Text = std::unique_ptr<rcb_text, TextDeleter>;
using SolutionSet = std::unique_ptr<rcb_solution_set, SetDeleter>;
using Config = std::unique_ptr<rcb_config, ConfigDeleter>;

struct Options {
    int n = -1;
    int ell = -1;
    int two_s = 1;
    std::string json_path;
    std::string svg_dir;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    std::string census;
    bool timing = false;
    bool all = false;
    int n_min = 2;
    int n_max = 14;
};

class Failure : public std::runtime_error {
public:
    Failure(int code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

int exit_code_for(rcb_status s)
{
    switch (s) {
    case RCB_OK: return kExitOk;
    case RCB_INVALID_ARGUMENT:
    case RCB_OUT_OF_SCOPE: return kExitBadInput;
    case RCB_INCOMPLETE_CENSUS: return kExitIncomplete;
    case RCB_NO_CONVERGENCE:
    case RCB_DIVERGENT_ENERGY:
    case RCB_ZERO_VECTOR:
    case RCB_POLE_IN_C:
    case RCB_NON_DISTINCT: return kExitResidual;
    default: return kExitInternal;
    }
}

void check(rcb_status s)
{
    if (s != RCB_OK)
        throw Failure(exit_code_for(s), std::string(rcb_status_string(s)) + ": " + rcb_last_error());
}

void require_n_ell(const Options& o)
{
    if (o.n < 0 || o.ell < 0)
        throw Failure(kExitBadInput, "--N and --ell are required");
}

// Writes to --json when given, otherwise to stdout.
void emit_json(const Options& o, const rcb_text* text)
{
    if (o.json_path.empty()) {
        std::cout << rcb_text_data(text);
        return;
    }
    std::ofstream f(o.json_path, std::ios::binary);
    f << rcb_text_data(text);
    if (!f)
        throw Failure(kExitInternal, "cannot write " + o.json_path);
}

Config make_config(const Options& o)
{
    rcb_config* raw = nullptr;
    check(rcb_config_new(&raw));
    Config cfg(raw);
    if (o.seed)
        check(rcb_config_set_seed(cfg.get(), *o.seed));
    if (o.tol)
        check(rcb_config_set_tol(cfg.get(), *o.tol));
    if (const char* env = std::getenv("RCBETHE_THREADS")) {
        char* end = nullptr;
        const long t = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || t < 1 || t > 1024)
            throw Failure(kExitBadInput, "RCBETHE_THREADS must be a positive integer");
        check(rcb_config_set_threads(cfg.get(), static_cast<int>(t)));
    }
    return cfg;
}

SolutionSet solve(const Options& o, double& seconds)
{
    require_n_ell(o);
    const Config cfg = make_config(o);
    rcb_solution_set* raw = nullptr;
    const auto t0 = std::chrono::steady_clock::now();
    check(rcb_solve(o.n, o.ell, cfg.get(), &raw));
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return SolutionSet(raw);
}

rcb_run_info run_info(const std::string& command, const Options& o, double seconds)
{
    return rcb_run_info{command.c_str(), o.timing ? seconds : -1.0};
}

int cmd_rc(const Options& o, bool enumerate)
{
    require_n_ell(o);
    if (!o.census.empty() && o.census != "physical-singular")
        throw Failure(kExitBadInput, "--census accepts only physical-singular");
    const std::string command = enumerate ? "rc enumerate" : "rc count";
    const auto t0 = std::chrono::steady_clock::now();
    rcb_text* raw = nullptr;
    const rcb_run_info probe{command.c_str(), -1.0};
    check(rcb_rc_report_json(o.n, o.two_s, o.ell, enumerate, !o.census.empty(), &probe, &raw));
    Text text(raw);
    if (o.timing) {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const auto info = run_info(command, o, secs);
        rcb_text* timed = nullptr;
        check(rcb_rc_report_json(o.n, o.two_s, o.ell, enumerate, !o.census.empty(), &info, &timed));
        text.reset(timed);
    }
    emit_json(o, text.get());
    return kExitOk;
}

int cmd_solve(const Options& o)
{
    double secs = 0.0;
    const SolutionSet set = solve(o, secs);
    const auto info = run_info("bae solve", o, secs);
    rcb_text* raw = nullptr;
    check(rcb_solution_set_json(set.get(), o.all, &info, &raw));
    const Text text(raw);
    emit_json(o, text.get());

    if (!o.svg_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(o.svg_dir, ec);
        size_t written = 0;
        check(rcb_solution_set_write_svg(set.get(), o.all, o.svg_dir.c_str(), &written));
        std::cerr << "wrote " << written << " plots to " << o.svg_dir << "\n";
    }

    const double limit = 100.0 * o.tol.value_or(1e-11);
    bool residual_ok = true;
    for (size_t i = 0; i < rcb_solution_count(set.get()); ++i) {
        rcb_solution_class cls{};
        check(rcb_solution_class_of(set.get(), i, &cls));
        if (cls != RCB_REGULAR && cls != RCB_SINGULAR_PHYSICAL)
            continue;
        double r = 0.0;
        check(rcb_solution_residual(set.get(), i, &r));
        residual_ok = residual_ok && r <= limit;
    }
    if (!rcb_solution_set_complete(set.get())) {
        std::cerr << "incomplete census: fewer solutions than rigged configurations\n";
        return kExitIncomplete;
    }
    if (!residual_ok) {
        std::cerr << "residual above tolerance\n";
        return kExitResidual;
    }
    return kExitOk;
}

int cmd_verify(const Options& o)
{
    double secs = 0.0;
    const SolutionSet set = solve(o, secs);
    const auto info = run_info("aba verify", o, secs);
    rcb_text* raw = nullptr;
    int ok = 0;
    check(rcb_verify_json(set.get(), o.tol.value_or(0.0), &info, &raw, &ok));
    const Text text(raw);
    emit_json(o, text.get());
    if (!ok) {
        std::cerr << "residual above tolerance\n";
        return kExitResidual;
    }
    if (!rcb_solution_set_complete(set.get())) {
        std::cerr << "incomplete census: fewer solutions than rigged configurations\n";
        return kExitIncomplete;
    }
    return kExitOk;
}

int cmd_census(const Options& o)
{
    const auto t0 = std::chrono::steady_clock::now();
    rcb_text* raw = nullptr;
    check(rcb_census_table_text(o.n_min, o.n_max, &raw));
    const Text table(raw);
    if (o.json_path.empty()) {
        std::cout << rcb_text_data(table.get());
        return kExitOk;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto info = run_info("census table", o, secs);
    rcb_text* js = nullptr;
    check(rcb_census_table_json(o.n_min, o.n_max, &info, &js));
    const Text json(js);
    emit_json(o, json.get());
    std::cout << rcb_text_data(table.get());
    return kExitOk;
}

void add_common(CLI::App* app, Options& o, bool needs_n)
{
    if (needs_n) {
        app->add_option("--N", o.n, "number of sites")->required()->check(CLI::NonNegativeNumber);
        app->add_option("--ell", o.ell, "number of magnons")->required()->check(CLI::NonNegativeNumber);
    }
    app->add_option("--json", o.json_path, "write JSON to this path instead of stdout");
    app->add_flag("--timing", o.timing, "record wall time in the manifest");
}

void add_solver_flags(CLI::App* app, Options& o)
{
    app->add_option("--seed", o.seed, "random seed");
    app->add_option("--tol", o.tol, "residual tolerance")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rigged configurations and Bethe ansatz solutions of the XXX chain"};
    app.set_version_flag("--version", std::string(rcb_version()));
    app.require_subcommand(1);
    Options o;

    auto* rc = app.add_subcommand("rc", "rigged configurations");
    rc->require_subcommand(1);
    auto* rc_enum = rc->add_subcommand("enumerate", "list rigged configurations");
    auto* rc_count = rc->add_subcommand("count", "count rigged configurations");
    for (auto* sub : {rc_enum, rc_count}) {
        add_common(sub, o, true);
        sub->add_option("--two-s", o.two_s, "twice the spin per site")->check(CLI::PositiveNumber);
        sub->add_option("--census", o.census, "add a census (physical-singular)");
    }

    auto* bae = app.add_subcommand("bae", "Bethe ansatz equations");
    bae->require_subcommand(1);
    auto* bae_solve = bae->add_subcommand("solve", "find all solutions");
    add_common(bae_solve, o, true);
    add_solver_flags(bae_solve, o);
    bae_solve->add_option("--svg", o.svg_dir, "directory for root-plane plots");
    bae_solve->add_flag("--all", o.all, "include non-physical singular solutions");

    auto* aba = app.add_subcommand("aba", "algebraic Bethe ansatz");
    aba->require_subcommand(1);
    auto* aba_verify = aba->add_subcommand("verify", "check eigenvectors and completeness");
    add_common(aba_verify, o, true);
    add_solver_flags(aba_verify, o);

    auto* census = app.add_subcommand("census", "solution count tables");
    census->require_subcommand(1);
    auto* census_table = census->add_subcommand("table", "counts over a range of N");
    add_common(census_table, o, false);
    census_table->add_option("--N-min", o.n_min, "smallest N")->check(CLI::PositiveNumber);
    census_table->add_option("--N-max", o.n_max, "largest N")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*rc_enum)
            return cmd_rc(o, true);
        if (*rc_count)
            return cmd_rc(o, false);
        if (*bae_solve)
            return cmd_solve(o);
        if (*aba_verify)
            return cmd_verify(o);
        if (*census_table)
            return cmd_census(o);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.what() << "\n";
        return f.code();
    }
    return kExitBadInput;
}
