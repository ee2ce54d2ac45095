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

#include "bigint.hpp"
#include "partition.hpp"
#include "rigged_configuration.hpp"

namespace rcbethe {

// Chain of N sites of spin s (two_s = 2s), ell magnons / boxes.
struct CensusQuery {
    int n = 0;
    int two_s = 1;
    int ell = 0;
};

// Which partition condition selects the physical singular solutions.
enum class CensusRegime { Ba, Bb, C };

const char* to_string(CensusRegime r);

// Odd number of even parts >= 2s+1 (used with 2s odd).
bool condition_Ba(const Partition& nu, int two_s);
// Odd number of odd parts >= 2s+1 (used with 2s even).
bool condition_Bb(const Partition& nu, int two_s);
// Spin-1/2, ell odd: odd number of even parts (all even parts are >= 2).
bool condition_C_partition(const Partition& nu);

// True iff some k has m_k >= 3 odd, P_k > 0, P_k = 0 mod 4 and every
// rigging of length k equal to P_k / 2.
bool forbidden_rigging(const RiggedConfiguration& rc);

// Number of flip invariant rigging assignments of nu, by pairing J with
// P_k - J (fixed point P_k/2 needed when m_k is odd).
BigInt count_flip_invariant(const SpinProfile& mu, const Partition& nu);

// Number of k with chi_k(nu) = 1: m_k >= 3 odd, P_k > 0, P_k = 0 mod 4.
int chi(const VacancyTable& vac, const Partition& nu, int k);

struct PartitionCensus {
    Partition nu;
    VacancyTable vacancy;
    BigInt flip_invariant;  // before the forbidden-rigging rule
    BigInt contribution;    // what this nu adds to n_sp
};

struct AlternativeReading {
    std::string label;
    std::vector<Partition> partitions;
    BigInt total;
};

struct CensusResult {
    CensusQuery query;
    CensusRegime regime = CensusRegime::Ba;
    BigInt n_sp_enumerated;
    std::optional<BigInt> n_sp_formula;
    BigInt n_rc_total;
    std::optional<BigInt> predicted_n_total;
    std::vector<PartitionCensus> details;
    std::vector<AlternativeReading> alternatives;
};

// Regime for a query; throws OutOfScope where no rule is stated.
CensusRegime census_regime(const CensusQuery& q);

// Sum over qualifying nu of prod_k (flip invariant factor - chi_k).
CensusResult count_physical_singular(const CensusQuery& q);

// Same count obtained by enumerating every rigged configuration and
// filtering by is_flip_invariant / forbidden_rigging. Independent route.
BigInt count_physical_singular_by_enumeration(const CensusQuery& q);

// Spin-1/2 closed forms: C((N-2)/2, (ell-2)/2) for N, ell even and
// C((N-2)/2, (ell-3)/2) for N = 2 mod 4 and ell odd.
std::optional<BigInt> closed_form_nsp(int n, int ell);

// Closed forms for the families (2s, ell) in {(1,5), (3,10), (3,12), (2,7), (2,9)},
// evaluated in exact rationals. Absent outside those families or below
// their stated minimum N.
std::optional<BigInt> family_closed_form(int two_s, int ell, int n);

// Spin-1/2, N even, ell odd: condition (C) count where, for the affected k
// (m_k >= 3 odd, P_k > 0, P_k = 0 mod 4), the flip invariant riggings must
// have strictly increasing values up to P_k/2.
BigInt strict_rigging_count(int n, int ell);
// The displayed ell = 7 expressions: strict variant and condition (C).
BigInt strict_rigging_formula_l7(int n);
BigInt condition_C_formula_l7(int n);

// Spin-1/2 solution counts. n_distinct is the number of solutions with
// pairwise distinct roots (singular ones included); n_sp the physical
// singular ones; n_singular all singular ones.
struct PredictedCounts {
    std::optional<BigInt> n_distinct_plus_sp;
    std::optional<BigInt> n_distinct;
    std::optional<BigInt> n_singular;
    std::optional<BigInt> n_sp;
    BigInt n_highest_weight;  // C(N, ell) - C(N, ell - 1)
    // The identity n_distinct + sp_term = C(N-1, ell). For odd N and even
    // ell the sp term is n_sp(N-1, ell-2) rather than n_sp(N, ell).
    BigInt identity_total;
    std::optional<BigInt> identity_sp_term;
    std::string rule;
};

// Throws OutOfScope for N = 0 mod 4 with ell odd and for uncovered parities.
PredictedCounts predicted_solution_counts(int n, int ell);

}  // namespace rcbethe
