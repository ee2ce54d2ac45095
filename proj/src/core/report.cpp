/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "aba.hpp"
#include "errors.hpp"

#ifndef RCBETHE_VERSION
#define RCBETHE_VERSION "0.0.0"
#endif

namespace rcbethe {

namespace {

json cplx_json(cplx z)
{
    const cplx r = round12(z);
    return json::array({r.real(), r.imag()});
}

double round_sig(double v, int digits)
{
    if (!std::isfinite(v) || v == 0.0)
        return v == 0.0 ? 0.0 : v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

json config_json(const SolverConfig& c)
{
    return json{{"newton_tol", c.newton_tol},
                {"max_iters", c.max_iters},
                {"dedup_tol", c.dedup_tol},
                {"singular_tol", c.singular_tol},
                {"distinct_tol", c.distinct_tol},
                {"random_seeds_per_rc", c.random_seeds_per_rc},
                {"max_random_seeds", c.max_random_seeds},
                {"stall_limit", c.stall_limit}};
}

json optional_bigint(const std::optional<BigInt>& v)
{
    return v ? bigint_json(*v) : json(nullptr);
}

std::string opt_text(const std::optional<BigInt>& v)
{
    return v ? v->str() : std::string("-");
}

// Numerical solution counts for rows outside the rigging census (odd N)
// or where the count identity fails.
struct NumericalRow {
    int n, ell;
    int n_sp;  // -1 when the enumerated value is used
    const char* note;
};
constexpr NumericalRow kNumerical[] = {
    {9, 3, 2, "numerical census: N(9,3) + N_sp(9,3) = 54 + 2 = C(8,3) = 56; N_s(9,3) = 8 = C(8,1)"},
    {12, 5, -1, "numerical census: N(12,5) + N_sp(12,5) = 456 + 4 = 460 < C(11,5) = 462; N_s(12,5) = 163 < C(11,3) = 165"},
};

}  // namespace

const char* version_string()
{
    return RCBETHE_VERSION;
}

double round12(double v)
{
    return round_sig(v, 12);
}

cplx round12(cplx z)
{
    const double cut = 1e-12 * std::max(1.0, std::abs(z));
    const double re = std::abs(z.real()) < cut ? 0.0 : z.real();
    const double im = std::abs(z.imag()) < cut ? 0.0 : z.imag();
    return {round12(re), round12(im)};
}

std::string format12(double v)
{
    return json(round12(v)).dump();
}

json manifest_json(const RunManifest& m)
{
    json j{{"command", m.command},
           {"parameters", {{"N", m.n}, {"ell", m.ell}, {"two_s", m.two_s}}},
           {"tool", "rcbethe"},
           {"version", version_string()}};
    if (m.config) {
        j["config"] = config_json(*m.config);
        j["rng_seed"] = m.config->rng_seed;
    }
    if (m.wall_time_s)
        j["wall_time_s"] = round_sig(*m.wall_time_s, 4);
    return j;
}

json bigint_json(const BigInt& v)
{
    if (v >= BigInt(std::numeric_limits<long long>::min()) && v <= BigInt(std::numeric_limits<long long>::max()))
        return json(static_cast<long long>(v));
    return json(v.str());
}

json partition_json(const Partition& nu)
{
    return json(nu.parts());
}

json rc_json(const RiggedConfiguration& rc)
{
    json rig = json::object();
    for (const auto& [k, js] : rc.riggings())
        rig[std::to_string(k)] = js;
    return json{{"nu", partition_json(rc.nu())}, {"riggings", rig}};
}

json rc_report_json(const RcQuery& q, const RunManifest& m)
{
    if (q.n < 1 || q.two_s < 1 || q.ell < 0)
        throw InvalidArgument("rc query needs N >= 1, 2s >= 1, ell >= 0");
    const SpinProfile mu = SpinProfile::uniform(q.n, q.two_s);
    json out{{"manifest", manifest_json(m)},
             {"query", {{"N", q.n}, {"two_s", q.two_s}, {"ell", q.ell}}}};

    std::optional<CensusResult> census;
    std::string census_error;
    if (q.census_physical_singular) {
        try {
            census = count_physical_singular({q.n, q.two_s, q.ell});
        } catch (const OutOfScope& e) {
            census_error = e.what();
        }
    }

    json parts = json::array();
    BigInt total = 0;
    for (const auto& nu : admissible_configurations(mu, q.ell)) {
        const VacancyTable vac = vacancy_numbers(mu, nu);
        json vj = json::object();
        for (const auto& [k, p] : vac.values())
            vj[std::to_string(k)] = p;
        json pj{{"nu", partition_json(nu)}, {"vacancy", vj}};
        const BigInt cnt = count_riggings(mu, nu);
        total += cnt;
        if (q.enumerate) {
            json rigs = json::array();
            for (const auto& rc : rigged_configurations_for(mu, nu))
                rigs.push_back(rc_json(rc)["riggings"]);
            pj["riggings"] = std::move(rigs);
        }
        pj["count"] = bigint_json(cnt);
        pj["flip_invariant_count"] = bigint_json(count_flip_invariant(mu, nu));
        if (census) {
            for (const auto& d : census->details)
                if (d.nu == nu)
                    pj["physical_singular"] = bigint_json(d.contribution);
        }
        parts.push_back(std::move(pj));
    }
    out["partitions"] = std::move(parts);
    json totals{{"n_rc", bigint_json(total)}};
    if (q.census_physical_singular) {
        if (census) {
            totals["regime"] = to_string(census->regime);
            totals["n_sp"] = bigint_json(census->n_sp_enumerated);
            totals["n_sp_closed_form"] = optional_bigint(census->n_sp_formula);
            json alts = json::array();
            for (const auto& a : census->alternatives) {
                json pl = json::array();
                for (const auto& p : a.partitions)
                    pl.push_back(partition_json(p));
                alts.push_back({{"label", a.label}, {"partitions", pl}, {"total", bigint_json(a.total)}});
            }
            if (!alts.empty())
                totals["alternative_readings"] = std::move(alts);
        } else {
            totals["n_sp"] = nullptr;
            totals["census"] = "out_of_scope: " + census_error;
        }
    }
    out["totals"] = std::move(totals);
    return out;
}

std::vector<const SolutionRecord*> emitted_records(const SolveReport& rep, bool include_nonphysical)
{
    std::vector<const SolutionRecord*> out;
    for (const auto& r : rep.records) {
        if (r.cls == SolutionClass::Regular || r.cls == SolutionClass::SingularPhysical ||
            (include_nonphysical && r.cls == SolutionClass::SingularNonPhysical))
            out.push_back(&r);
    }
    return out;
}

json solve_report_json(const SolveReport& rep, const RunManifest& m, bool include_nonphysical)
{
    json summary{{"rc_count", rep.rc_count},
                 {"regular", rep.counts.regular},
                 {"singular_physical", rep.counts.singular_physical},
                 {"singular_nonphysical", rep.counts.singular_nonphysical},
                 {"non_distinct", rep.counts.non_distinct},
                 {"n_distinct", rep.counts.distinct()},
                 {"complete", rep.complete()},
                 {"ambiguous_matching", rep.ambiguous},
                 {"seeds_tried", rep.seeds_tried}};
    json unmatched = json::array();
    for (const auto& rc : rep.unmatched_rcs)
        unmatched.push_back(rc_json(rc));
    summary["unmatched_rcs"] = std::move(unmatched);

    json records = json::array();
    int idx = 0;
    for (const auto* r : emitted_records(rep, include_nonphysical)) {
        json roots = json::array();
        for (const auto& z : r->roots.roots())
            roots.push_back(cplx_json(z));
        json strings = json::array();
        for (const auto& s : r->strings.strings)
            strings.push_back({{"length", s.length}, {"center", round12(s.center)}});
        json rec{{"index", ++idx},
                 {"class", to_string(r->cls)},
                 {"starred", r->cls == SolutionClass::SingularPhysical},
                 {"roots", roots},
                 {"energy", r->energy ? cplx_json(*r->energy) : json(nullptr)},
                 {"rc", r->matched_rc ? rc_json(*r->matched_rc) : json(nullptr)},
                 {"residual", round_sig(r->residual, 3)},
                 {"strings", strings},
                 {"ambiguous_match", r->ambiguous_match}};
        if (!r->note.empty())
            rec["note"] = r->note;
        records.push_back(std::move(rec));
    }
    return json{{"manifest", manifest_json(m)}, {"summary", summary}, {"records", records}};
}

std::string root_plane_svg(const BetheRoots& roots, const std::string& title)
{
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"300\" height=\"300\" viewBox=\"-1.5 -1.5 3 3\">\n";
    s << "<title>" << title << "</title>\n";
    s << "<rect x=\"-1.5\" y=\"-1.5\" width=\"3\" height=\"3\" fill=\"white\"/>\n";
    s << "<g transform=\"scale(1,-1)\">\n";
    for (int g = -2; g <= 2; ++g) {
        if (g == 0)
            continue;
        const double v = 0.5 * g;
        s << "<line x1=\"" << v << "\" y1=\"-1.5\" x2=\"" << v
          << "\" y2=\"1.5\" stroke=\"gray\" stroke-width=\"0.008\" stroke-dasharray=\"0.01 0.03\"/>\n";
        s << "<line x1=\"-1.5\" y1=\"" << v << "\" x2=\"1.5\" y2=\"" << v
          << "\" stroke=\"gray\" stroke-width=\"0.008\" stroke-dasharray=\"0.01 0.03\"/>\n";
    }
    s << "<line x1=\"-1.5\" y1=\"0\" x2=\"1.5\" y2=\"0\" stroke=\"black\" stroke-width=\"0.01\"/>\n";
    s << "<line x1=\"0\" y1=\"-1.5\" x2=\"0\" y2=\"1.5\" stroke=\"black\" stroke-width=\"0.01\"/>\n";
    for (const auto& z : roots.roots()) {
        const cplx r = round12(z);
        s << "<circle cx=\"" << format12(r.real()) << "\" cy=\"" << format12(r.imag())
          << "\" r=\"0.045\" fill=\"black\"/>\n";
    }
    s << "</g>\n";
    s << "<text x=\"-1.42\" y=\"-1.3\" font-size=\"0.16\" font-family=\"serif\">" << title << "</text>\n";
    s << "</svg>\n";
    return s.str();
}

std::vector<std::pair<std::string, std::string>> solution_plots(const SolveReport& rep, bool include_nonphysical)
{
    std::vector<std::pair<std::string, std::string>> out;
    int idx = 0;
    for (const auto* r : emitted_records(rep, include_nonphysical)) {
        ++idx;
        const bool star = r->cls == SolutionClass::SingularPhysical;
        char name[64];
        std::snprintf(name, sizeof name, "N%d_l%d_%03d%s.svg", rep.n, rep.ell, idx, star ? "_star" : "");
        std::string title = std::to_string(idx) + (star ? "*" : "");
        out.emplace_back(name, root_plane_svg(r->roots, title));
    }
    return out;
}

VerifyResult verify_report(const SolveReport& rep, const RunManifest& m, const VerifyTolerances& tol)
{
    VerifyResult res;
    json sols = json::array();
    std::vector<StateVector> vectors;
    int idx = 0;
    for (const auto* r : emitted_records(rep, false)) {
        json sj{{"index", ++idx}, {"class", to_string(r->cls)}};
        try {
            if (r->cls == SolutionClass::Regular) {
                StateVector v = bethe_vector(r->roots, rep.n);
                const auto er = eigen_residual(v);
                const double hw = highest_weight_residual(v);
                const cplx e_formula = energy(r->roots);
                const double de = std::abs(er.energy - e_formula) / std::max(1.0, std::abs(e_formula));
                const bool ok = er.residual < tol.eigen && hw < tol.highest_weight && de < tol.eigen;
                sj["eigen_residual"] = round_sig(er.residual, 3);
                sj["highest_weight_residual"] = round_sig(hw, 3);
                sj["energy"] = cplx_json(er.energy);
                sj["energy_mismatch"] = round_sig(de, 3);
                sj["ok"] = ok;
                res.ok = res.ok && ok;
                vectors.push_back(std::move(v));
            } else {
                const auto reg = regularized_singular_vector(r->roots, rep.n, rep.config);
                const auto er = eigen_residual(reg.vector);
                const double hw = highest_weight_residual(reg.vector);
                const bool ok = er.residual < tol.regularized && hw < tol.regularized;
                json ladder = json::array();
                for (std::size_t i = 0; i < reg.ladder.size(); ++i)
                    ladder.push_back({{"eps", round_sig(reg.ladder[i], 4)},
                                      {"difference", round_sig(reg.ladder_differences[i], 3)}});
                sj["c"] = cplx_json(reg.c);
                sj["eigen_residual"] = round_sig(er.residual, 3);
                sj["highest_weight_residual"] = round_sig(hw, 3);
                sj["energy"] = cplx_json(er.energy);
                sj["regularization"] = {{"ladder", ladder},
                                        {"leading_order", rep.n},
                                        {"max_lower_order_norm",
                                         round_sig(*std::max_element(reg.order_norms.begin(),
                                                                     reg.order_norms.begin() + rep.n), 3)}};
                sj["ok"] = ok;
                res.ok = res.ok && ok;
                vectors.push_back(reg.vector);
            }
        } catch (const Error& e) {
            sj["ok"] = false;
            sj["error"] = e.what();
            res.ok = false;
        }
        sols.push_back(std::move(sj));
    }
    const auto comp = completeness_check(rep.n, rep.ell, vectors);
    json cj{{"rank", comp.rank},
            {"target", comp.target},
            {"kernel_dim", comp.kernel_dim},
            {"vectors", vectors.size()},
            {"complete", comp.rank == comp.target}};
    res.report = json{{"manifest", manifest_json(m)},
                      {"tolerances",
                       {{"eigen", tol.eigen}, {"highest_weight", tol.highest_weight}, {"regularized", tol.regularized}}},
                      {"census_complete", rep.complete()},
                      {"solutions", sols},
                      {"completeness", cj},
                      {"ok", res.ok}};
    return res;
}

std::vector<CensusRow> census_rows(int n_min, int n_max)
{
    if (n_min < 2 || n_max < n_min)
        throw InvalidArgument("census table needs 2 <= N_min <= N_max");
    std::vector<CensusRow> rows;
    for (int n = n_min; n <= n_max; ++n)
        for (int ell = 0; 2 * ell <= n; ++ell) {
            CensusRow row;
            row.n = n;
            row.ell = ell;
            row.n_highest_weight = binomial(n, ell) - binomial(n, ell - 1);
            row.identity_total = binomial(n - 1, ell);
            try {
                row.n_sp = count_physical_singular({n, 1, ell}).n_sp_enumerated;
                row.n_sp_source = "enumeration";
            } catch (const OutOfScope&) {
            }
            for (const auto& num : kNumerical)
                if (num.n == n && num.ell == ell) {
                    row.note = num.note;
                    if (num.n_sp >= 0 && !row.n_sp) {
                        row.n_sp = num.n_sp;
                        row.n_sp_source = "numerical";
                    }
                }
            row.n_sp_closed_form = closed_form_nsp(n, ell);
            try {
                const auto pc = predicted_solution_counts(n, ell);
                row.rule = pc.rule;
                row.n_distinct_pred = pc.n_distinct;
                row.identity_sp_term = pc.identity_sp_term;
                row.n_singular_pred = pc.n_singular;
                if (!row.identity_sp_term && n % 2 == 1 && ell % 2 == 1)
                    row.identity_sp_term = row.n_sp;
                if (!row.n_distinct_pred && row.identity_sp_term)
                    row.n_distinct_pred = row.identity_total - *row.identity_sp_term;
            } catch (const OutOfScope&) {
                row.rule = "none";
                row.anomalous = true;
                if (row.note.empty())
                    row.note = "no count identity for N = 0 mod 4 with odd ell";
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

json census_table_json(const std::vector<CensusRow>& rows, const RunManifest& m)
{
    json arr = json::array();
    for (const auto& r : rows) {
        json j{{"N", r.n},
               {"ell", r.ell},
               {"n_highest_weight", bigint_json(r.n_highest_weight)},
               {"n_sp", optional_bigint(r.n_sp)},
               {"n_sp_source", r.n_sp_source.empty() ? json(nullptr) : json(r.n_sp_source)},
               {"n_sp_closed_form", optional_bigint(r.n_sp_closed_form)},
               {"n_total_pred", bigint_json(r.identity_total)},
               {"n_distinct_pred", optional_bigint(r.n_distinct_pred)},
               {"identity_sp_term", optional_bigint(r.identity_sp_term)},
               {"n_s_pred", optional_bigint(r.n_singular_pred)},
               {"rule", r.rule},
               {"anomalous", r.anomalous}};
        if (!r.note.empty())
            j["note"] = r.note;
        arr.push_back(std::move(j));
    }
    return json{{"manifest", manifest_json(m)}, {"rows", arr}};
}

std::string census_table_text(const std::vector<CensusRow>& rows)
{
    std::ostringstream s;
    s << std::left << std::setw(4) << "N" << std::setw(5) << "ell" << std::right << std::setw(10) << "hw"
      << std::setw(8) << "n_sp" << std::setw(8) << "closed" << std::setw(10) << "C(N-1,l)" << std::setw(10)
      << "N_pred" << std::setw(8) << "sp_term" << std::setw(10) << "N_s_pred" << "  flag\n";
    for (const auto& r : rows) {
        s << std::left << std::setw(4) << r.n << std::setw(5) << r.ell << std::right << std::setw(10)
          << r.n_highest_weight.str() << std::setw(8) << opt_text(r.n_sp) << std::setw(8)
          << opt_text(r.n_sp_closed_form) << std::setw(10) << r.identity_total.str() << std::setw(10)
          << opt_text(r.n_distinct_pred) << std::setw(8) << opt_text(r.identity_sp_term) << std::setw(10)
          << opt_text(r.n_singular_pred) << "  " << (r.anomalous ? "ANOMALY" : "");
        if (!r.note.empty())
            s << (r.anomalous ? " " : "") << "(" << r.note << ")";
        s << "\n";
    }
    return s.str();
}

}  // namespace rcbethe
