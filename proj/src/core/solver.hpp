/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "bethe_roots.hpp"
#include "rigged_configuration.hpp"
#include "strings.hpp"

namespace rcbethe {

struct SolutionRecord {
    BetheRoots roots;
    SolutionClass cls = SolutionClass::Unconverged;
    std::optional<cplx> energy;  // regular solutions only
    std::optional<RiggedConfiguration> matched_rc;
    double residual = 0.0;
    StringDecomposition strings;
    bool ambiguous_match = false;
    std::string note;
};

struct ClassCounts {
    std::size_t regular = 0;
    std::size_t singular_physical = 0;
    std::size_t singular_nonphysical = 0;
    std::size_t non_distinct = 0;

    std::size_t distinct() const { return regular + singular_physical + singular_nonphysical; }
    std::size_t singular() const { return singular_physical + singular_nonphysical; }
};

struct SolveReport {
    int n = 0;
    int ell = 0;
    SolverConfig config;
    std::vector<SolutionRecord> records;  // deterministic order
    std::size_t rc_count = 0;
    std::vector<RiggedConfiguration> unmatched_rcs;
    ClassCounts counts;
    std::size_t seeds_tried = 0;
    bool ambiguous = false;

    // Regular plus physical singular equals the number of rigged configurations.
    bool complete() const { return counts.regular + counts.singular_physical == rc_count; }
};

// Largest chain length accepted by solve_all.
inline constexpr int kMaxSolveSites = 12;

// Multistart search for all solutions with ell roots on a chain of n sites,
// followed by classification, string decomposition and rigging assignment.
// An incomplete census is reported through SolveReport::complete().
SolveReport solve_all(int n, int ell, const SolverConfig& cfg);

// Rigged configurations pinned to specific physical singular solutions
// where no general rule is known (n = 9, ell = 3).
struct PinnedSingular {
    bool rest_positive;  // sign of the real part of the remaining root
    RiggedConfiguration rc;
};
std::vector<PinnedSingular> pinned_singular_table(int n, int ell);

}  // namespace rcbethe
