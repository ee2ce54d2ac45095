/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bethe_roots.hpp"
#include "census.hpp"
#include "rigged_configuration.hpp"
#include "solver.hpp"

namespace rcbethe {

using json = nlohmann::ordered_json;

const char* version_string();

// Provenance block embedded in every artifact. Wall time is only written
// when requested, so that equal manifests give byte-identical output.
struct RunManifest {
    std::string command;
    int n = 0;
    int ell = 0;
    int two_s = 1;
    std::optional<SolverConfig> config;
    std::optional<double> wall_time_s;
};

json manifest_json(const RunManifest& m);

// Value rounded to 12 significant digits; -0 becomes 0.
double round12(double v);
// Same rounding, printed exactly as it appears in JSON.
std::string format12(double v);
// Complex value with components below 1e-12 of its modulus set to zero,
// then each component rounded as round12.
cplx round12(cplx z);

json bigint_json(const BigInt& v);  // number when it fits in 64 bits, else string
json rc_json(const RiggedConfiguration& rc);
json partition_json(const Partition& nu);

// rc enumerate|count payload.
struct RcQuery {
    int n = 0;
    int two_s = 1;
    int ell = 0;
    bool enumerate = false;
    bool census_physical_singular = false;
};
json rc_report_json(const RcQuery& q, const RunManifest& m);

// Records that solve emits: regular and physical singular, plus the non
// physical singular ones when include_nonphysical is set.
std::vector<const SolutionRecord*> emitted_records(const SolveReport& rep, bool include_nonphysical);
json solve_report_json(const SolveReport& rep, const RunManifest& m, bool include_nonphysical);

// One root-plane plot per emitted record: (file name, SVG text). Physical
// singular records get a "_star" suffix.
std::vector<std::pair<std::string, std::string>> solution_plots(const SolveReport& rep, bool include_nonphysical);
std::string root_plane_svg(const BetheRoots& roots, const std::string& title);

// Eigenvector, highest weight and completeness checks on the physical
// records of a solve. ok is false when a residual exceeds its tolerance.
struct VerifyTolerances {
    double eigen = 1e-8;
    double highest_weight = 1e-9;
    double regularized = 1e-6;
};
struct VerifyResult {
    json report;
    bool ok = true;
};
VerifyResult verify_report(const SolveReport& rep, const RunManifest& m, const VerifyTolerances& tol);

// Solution count table over a grid of chain lengths.
struct CensusRow {
    int n = 0;
    int ell = 0;
    BigInt n_highest_weight;
    std::optional<BigInt> n_sp;
    std::string n_sp_source;  // "enumeration", "numerical" or empty
    std::optional<BigInt> n_sp_closed_form;
    BigInt identity_total;  // C(N-1, ell)
    std::optional<BigInt> n_distinct_pred;
    std::optional<BigInt> identity_sp_term;
    std::optional<BigInt> n_singular_pred;
    std::string rule;
    bool anomalous = false;
    std::string note;
};
std::vector<CensusRow> census_rows(int n_min, int n_max);
json census_table_json(const std::vector<CensusRow>& rows, const RunManifest& m);
std::string census_table_text(const std::vector<CensusRow>& rows);

}  // namespace rcbethe
