/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "rcbethe/rcbethe.h"

#include <exception>
#include <filesystem>
#include <fstream>
#include <new>
#include <string>

#include "aba.hpp"
#include "errors.hpp"
#include "report.hpp"
#include "solver.hpp"

struct rcb_text {
    std::string data;
};

struct rcb_config {
    rcbethe::SolverConfig cfg;
};

struct rcb_solution_set {
    rcbethe::SolveReport report;
};

namespace {

thread_local std::string g_last_error;

rcb_status fail(rcb_status s, const std::string& msg)
{
    g_last_error = msg;
    return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
rcb_status guarded(F&& f)
{
    try {
        g_last_error.clear();
        return f();
    } catch (const rcbethe::Error& e) {
        return fail(static_cast<rcb_status>(static_cast<int>(e.code())), e.what());
    } catch (const std::bad_alloc&) {
        return fail(RCB_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(RCB_INTERNAL, e.what());
    } catch (...) {
        return fail(RCB_INTERNAL, "unknown error");
    }
}

rcb_status emit_text(std::string s, rcb_text** out)
{
    if (!out)
        return fail(RCB_INVALID_ARGUMENT, "null output pointer");
    *out = new rcb_text{std::move(s)};
    return RCB_OK;
}

rcbethe::RunManifest manifest(const rcb_run_info* info, const std::string& fallback, int n, int ell, int two_s)
{
    rcbethe::RunManifest m;
    m.command = info && info->command ? info->command : fallback;
    m.n = n;
    m.ell = ell;
    m.two_s = two_s;
    if (info && info->wall_time_s >= 0.0)
        m.wall_time_s = info->wall_time_s;
    return m;
}

rcbethe::BetheRoots read_roots(const double* re_im, size_t ell)
{
    if (ell > 0 && !re_im)
        throw rcbethe::InvalidArgument("null roots pointer");
    std::vector<rcbethe::cplx> r;
    r.reserve(ell);
    for (size_t i = 0; i < ell; ++i)
        r.emplace_back(re_im[2 * i], re_im[2 * i + 1]);
    return rcbethe::BetheRoots(std::move(r));
}

rcb_status write_state(const rcbethe::StateVector& v, double* out, size_t cap)
{
    if (!out || cap < 2 * v.size())
        return fail(RCB_INVALID_ARGUMENT, "output buffer needs 2^(N+1) doubles");
    for (size_t i = 0; i < v.size(); ++i) {
        out[2 * i] = v[i].real();
        out[2 * i + 1] = v[i].imag();
    }
    return RCB_OK;
}

const rcbethe::SolutionRecord* record(const rcb_solution_set* set, size_t index)
{
    if (!set)
        throw rcbethe::InvalidArgument("null solution set");
    if (index >= set->report.records.size())
        throw rcbethe::InvalidArgument("record index out of range");
    return &set->report.records[index];
}

}  // namespace

extern "C" {

const char* rcb_version(void)
{
    return rcbethe::version_string();
}

const char* rcb_status_string(rcb_status status)
{
    switch (status) {
    case RCB_OK: return "ok";
    case RCB_INVALID_ARGUMENT: return "invalid argument";
    case RCB_OUT_OF_SCOPE: return "out of scope";
    case RCB_INCOMPLETE_CENSUS: return "incomplete census";
    case RCB_NO_CONVERGENCE: return "no convergence";
    case RCB_DIVERGENT_ENERGY: return "divergent energy";
    case RCB_ZERO_VECTOR: return "zero vector";
    case RCB_POLE_IN_C: return "pole in c";
    case RCB_NON_DISTINCT: return "non-distinct roots";
    case RCB_IO_ERROR: return "i/o error";
    case RCB_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* rcb_last_error(void)
{
    return g_last_error.c_str();
}

const char* rcb_text_data(const rcb_text* text)
{
    return text ? text->data.c_str() : "";
}

size_t rcb_text_size(const rcb_text* text)
{
    return text ? text->data.size() : 0;
}

void rcb_text_free(rcb_text* text)
{
    delete text;
}

rcb_status rcb_config_new(rcb_config** out)
{
    return guarded([&] {
        if (!out)
            return fail(RCB_INVALID_ARGUMENT, "null output pointer");
        *out = new rcb_config{};
        return RCB_OK;
    });
}

void rcb_config_free(rcb_config* cfg)
{
    delete cfg;
}

rcb_status rcb_config_set_tol(rcb_config* cfg, double newton_tol)
{
    return guarded([&] {
        if (!cfg)
            return fail(RCB_INVALID_ARGUMENT, "null config");
        auto c = cfg->cfg;
        c.newton_tol = newton_tol;
        c.validate();
        cfg->cfg = c;
        return RCB_OK;
    });
}

rcb_status rcb_config_set_seed(rcb_config* cfg, uint64_t seed)
{
    return guarded([&] {
        if (!cfg)
            return fail(RCB_INVALID_ARGUMENT, "null config");
        cfg->cfg.rng_seed = seed;
        return RCB_OK;
    });
}

rcb_status rcb_config_set_threads(rcb_config* cfg, int threads)
{
    return guarded([&] {
        if (!cfg)
            return fail(RCB_INVALID_ARGUMENT, "null config");
        auto c = cfg->cfg;
        c.threads = threads;
        c.validate();
        cfg->cfg = c;
        return RCB_OK;
    });
}

rcb_status rcb_config_set_max_random_seeds(rcb_config* cfg, int max_seeds, int stall_limit)
{
    return guarded([&] {
        if (!cfg)
            return fail(RCB_INVALID_ARGUMENT, "null config");
        auto c = cfg->cfg;
        c.max_random_seeds = max_seeds;
        c.stall_limit = stall_limit;
        c.validate();
        cfg->cfg = c;
        return RCB_OK;
    });
}

rcb_status rcb_rc_count(int n, int two_s, int ell, rcb_text** decimal)
{
    return guarded([&] {
        if (n < 1 || two_s < 1 || ell < 0)
            return fail(RCB_INVALID_ARGUMENT, "need N >= 1, 2s >= 1, ell >= 0");
        const auto c = rcbethe::count_rigged_configurations(rcbethe::SpinProfile::uniform(n, two_s), ell);
        return emit_text(c.str(), decimal);
    });
}

rcb_status rcb_rc_report_json(int n, int two_s, int ell, int enumerate, int census, const rcb_run_info* info,
                              rcb_text** json)
{
    return guarded([&] {
        rcbethe::RcQuery q{n, two_s, ell, enumerate != 0, census != 0};
        const auto j = rcbethe::rc_report_json(q, manifest(info, enumerate ? "rc enumerate" : "rc count", n, ell, two_s));
        return emit_text(j.dump(2) + "\n", json);
    });
}

rcb_status rcb_physical_singular_count(int n, int two_s, int ell, rcb_text** decimal)
{
    return guarded([&] {
        const auto r = rcbethe::count_physical_singular({n, two_s, ell});
        return emit_text(r.n_sp_enumerated.str(), decimal);
    });
}

rcb_status rcb_solve(int n, int ell, const rcb_config* cfg, rcb_solution_set** out)
{
    return guarded([&] {
        if (!out)
            return fail(RCB_INVALID_ARGUMENT, "null output pointer");
        const rcbethe::SolverConfig c = cfg ? cfg->cfg : rcbethe::SolverConfig{};
        *out = new rcb_solution_set{rcbethe::solve_all(n, ell, c)};
        return RCB_OK;
    });
}

void rcb_solution_set_free(rcb_solution_set* set)
{
    delete set;
}

int rcb_solution_set_complete(const rcb_solution_set* set)
{
    return set && set->report.complete() ? 1 : 0;
}

size_t rcb_solution_count(const rcb_solution_set* set)
{
    return set ? set->report.records.size() : 0;
}

rcb_status rcb_solution_class_of(const rcb_solution_set* set, size_t index, rcb_solution_class* cls)
{
    return guarded([&] {
        const auto* r = record(set, index);
        if (!cls)
            return fail(RCB_INVALID_ARGUMENT, "null output pointer");
        *cls = static_cast<rcb_solution_class>(static_cast<int>(r->cls));
        return RCB_OK;
    });
}

rcb_status rcb_solution_roots(const rcb_solution_set* set, size_t index, double* re_im, size_t cap)
{
    return guarded([&] {
        const auto* r = record(set, index);
        if (!re_im || cap < 2 * r->roots.size())
            return fail(RCB_INVALID_ARGUMENT, "output buffer needs 2*ell doubles");
        for (size_t i = 0; i < r->roots.size(); ++i) {
            re_im[2 * i] = r->roots[i].real();
            re_im[2 * i + 1] = r->roots[i].imag();
        }
        return RCB_OK;
    });
}

rcb_status rcb_solution_residual(const rcb_solution_set* set, size_t index, double* residual)
{
    return guarded([&] {
        const auto* r = record(set, index);
        if (!residual)
            return fail(RCB_INVALID_ARGUMENT, "null output pointer");
        *residual = r->residual;
        return RCB_OK;
    });
}

rcb_status rcb_solution_energy(const rcb_solution_set* set, size_t index, double* re, double* im)
{
    return guarded([&] {
        const auto* r = record(set, index);
        if (!re || !im)
            return fail(RCB_INVALID_ARGUMENT, "null output pointer");
        if (!r->energy)
            return fail(RCB_DIVERGENT_ENERGY, "energy is defined for regular solutions only");
        *re = r->energy->real();
        *im = r->energy->imag();
        return RCB_OK;
    });
}

rcb_status rcb_solution_rc_json(const rcb_solution_set* set, size_t index, rcb_text** json)
{
    return guarded([&] {
        const auto* r = record(set, index);
        return emit_text(r->matched_rc ? rcbethe::rc_json(*r->matched_rc).dump() : std::string("null"), json);
    });
}

rcb_status rcb_solution_set_json(const rcb_solution_set* set, int include_nonphysical, const rcb_run_info* info,
                                 rcb_text** json)
{
    return guarded([&] {
        if (!set)
            return fail(RCB_INVALID_ARGUMENT, "null solution set");
        auto m = manifest(info, "bae solve", set->report.n, set->report.ell, 1);
        m.config = set->report.config;
        const auto j = rcbethe::solve_report_json(set->report, m, include_nonphysical != 0);
        return emit_text(j.dump(2) + "\n", json);
    });
}

rcb_status rcb_solution_set_write_svg(const rcb_solution_set* set, int include_nonphysical, const char* directory,
                                      size_t* written)
{
    return guarded([&] {
        if (!set || !directory)
            return fail(RCB_INVALID_ARGUMENT, "null argument");
        const std::filesystem::path dir(directory);
        if (!std::filesystem::is_directory(dir))
            return fail(RCB_IO_ERROR, "not a directory: " + dir.string());
        size_t count = 0;
        for (const auto& [name, svg] : rcbethe::solution_plots(set->report, include_nonphysical != 0)) {
            std::ofstream f(dir / name, std::ios::binary);
            f << svg;
            if (!f)
                return fail(RCB_IO_ERROR, "cannot write " + (dir / name).string());
            ++count;
        }
        if (written)
            *written = count;
        return RCB_OK;
    });
}

rcb_status rcb_verify_json(const rcb_solution_set* set, double tol, const rcb_run_info* info, rcb_text** json,
                           int* ok)
{
    return guarded([&] {
        if (!set)
            return fail(RCB_INVALID_ARGUMENT, "null solution set");
        rcbethe::VerifyTolerances t;
        if (tol > 0.0) {
            t.eigen = tol;
            t.highest_weight = tol;
        }
        auto m = manifest(info, "aba verify", set->report.n, set->report.ell, 1);
        m.config = set->report.config;
        const auto res = rcbethe::verify_report(set->report, m, t);
        if (ok)
            *ok = res.ok ? 1 : 0;
        return emit_text(res.report.dump(2) + "\n", json);
    });
}

rcb_status rcb_bethe_vector(int n, const double* roots_re_im, size_t ell, double* out, size_t cap)
{
    return guarded([&] { return write_state(rcbethe::bethe_vector(read_roots(roots_re_im, ell), n), out, cap); });
}

rcb_status rcb_eigen_residual(int n, const double* state, size_t cap, double* energy_re, double* energy_im,
                              double* residual)
{
    return guarded([&] {
        if (n < 1 || n > rcbethe::kMaxStateSites)
            return fail(RCB_INVALID_ARGUMENT, "N out of range");
        const size_t dim = size_t{1} << n;
        if (!state || cap < 2 * dim)
            return fail(RCB_INVALID_ARGUMENT, "state needs 2^(N+1) doubles");
        std::vector<rcbethe::cplx> amp(dim);
        for (size_t i = 0; i < dim; ++i)
            amp[i] = {state[2 * i], state[2 * i + 1]};
        const auto r = rcbethe::eigen_residual(rcbethe::StateVector(n, std::move(amp)));
        if (energy_re)
            *energy_re = r.energy.real();
        if (energy_im)
            *energy_im = r.energy.imag();
        if (residual)
            *residual = r.residual;
        return RCB_OK;
    });
}

rcb_status rcb_nw_constant(int n, const double* roots_re_im, size_t ell, double* re, double* im)
{
    return guarded([&] {
        if (!re || !im)
            return fail(RCB_INVALID_ARGUMENT, "null output pointer");
        const auto c = rcbethe::nw_constant(read_roots(roots_re_im, ell), n);
        *re = c.real();
        *im = c.imag();
        return RCB_OK;
    });
}

rcb_status rcb_regularized_vector(int n, const double* roots_re_im, size_t ell, double* out, size_t cap)
{
    return guarded([&] {
        const auto rep = rcbethe::regularized_singular_vector(read_roots(roots_re_im, ell), n, rcbethe::SolverConfig{});
        return write_state(rep.vector, out, cap);
    });
}

rcb_status rcb_census_table_json(int n_min, int n_max, const rcb_run_info* info, rcb_text** json)
{
    return guarded([&] {
        const auto rows = rcbethe::census_rows(n_min, n_max);
        const auto j = rcbethe::census_table_json(rows, manifest(info, "census table", n_max, 0, 1));
        return emit_text(j.dump(2) + "\n", json);
    });
}

rcb_status rcb_census_table_text(int n_min, int n_max, rcb_text** text)
{
    return guarded([&] { return emit_text(rcbethe::census_table_text(rcbethe::census_rows(n_min, n_max)), text); });
}

}  // extern "C"
