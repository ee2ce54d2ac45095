/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bethe_roots.hpp"
#include "rigged_configuration.hpp"

namespace rcbethe {

struct BetheString {
    int length = 0;
    double center = 0.0;
    std::vector<std::size_t> members;  // indices into BetheRoots::roots()
};

struct StringDecomposition {
    std::vector<BetheString> strings;  // longest first, then by center
    bool ok = false;
    std::string failure;               // set when ok is false

    Partition nu() const;
    // Centers of the strings of length k, ascending.
    std::vector<double> centers(int k) const;
};

// Maximal real and imaginary deviation of a member from its ladder slot.
inline constexpr double kStringTolerance = 0.35;

// Takahashi quantum number of the alpha-th (0-based) string of length k.
double quantum_number(const RiggedConfiguration& rc, int k, std::size_t alpha);

// String centers solving the logarithmic string-center equations
//   N theta_k(x) - sum Theta_km(x - y) = 2 pi I,   theta_n(x) = 2 atan(2x/n),
// with quantum numbers I from the riggings, ordered as the strings of rc
// (longest first, then by rigging). Empty when Newton does not converge.
std::optional<std::vector<double>> string_centers(const RiggedConfiguration& rc, int n);

// Seed built from the strings of rc: each string (k, J) contributes
// x + i(k+1-2j)/2, j = 1..k. The centers solve the string-center equations,
// falling back to x = (k/2) tan(pi I / (P_k + m_k + 1)); `linear` switches
// to x = delta * I.
BetheRoots string_seed(const RiggedConfiguration& rc, int n, std::optional<double> linear = std::nullopt);

// delta = 0.3 / (1 + max P) over the admissible configurations of (n, ell).
double linear_spread(int n, int ell);

// Greedy ladder clustering starting from the root with the largest
// imaginary part.
StringDecomposition decompose_strings(const BetheRoots& roots, double tol = kStringTolerance);

// Assignment of one class of solutions (same nu) to the rigged
// configurations of that nu.
struct MatchResult {
    // rc index (into the candidate list) per solution, -1 when unassigned.
    std::vector<int> assignment;
    bool ambiguous = false;
    std::string note;
};

// Solutions and rcs must have the same size; the matching respects the
// negation/flip symmetry and the rank order of string centers.
MatchResult match_rc(const std::vector<BetheRoots>& solutions,
                     const std::vector<StringDecomposition>& strings,
                     const std::vector<RiggedConfiguration>& rcs, double dedup_tol);

// Minimal-cost perfect matching on a square cost matrix (rows to columns).
std::vector<int> hungarian(const std::vector<std::vector<double>>& cost);

}  // namespace rcbethe
