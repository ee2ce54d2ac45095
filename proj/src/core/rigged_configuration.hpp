/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "partition.hpp"

namespace rcbethe {

// Riggings per row length k, each list sorted weakly increasing. The order
// of strings inside one row length carries no information, so equality is
// multiset equality per k.
using Riggings = std::map<int, std::vector<int>>;

class RiggedConfiguration {
public:
    RiggedConfiguration() = default;
    // Validates admissibility of nu and the bounds 0 <= J <= P_k. Riggings
    // are sorted on construction.
    RiggedConfiguration(const SpinProfile& mu, Partition nu, Riggings riggings);

    const Partition& nu() const noexcept { return nu_; }
    const Riggings& riggings() const noexcept { return riggings_; }
    const VacancyTable& vacancy() const noexcept { return vacancy_; }
    const std::vector<int>& riggings_for(int k) const;

    // Riggings concatenated in row order (longest rows first).
    std::vector<int> flat_riggings() const;
    std::string to_string() const;

    friend bool operator==(const RiggedConfiguration& a, const RiggedConfiguration& b)
    {
        return a.nu_ == b.nu_ && a.riggings_ == b.riggings_;
    }
    // Deterministic order: nu reverse-lexicographic, then riggings lexicographic.
    friend bool operator<(const RiggedConfiguration& a, const RiggedConfiguration& b);

private:
    friend RiggedConfiguration flip(const RiggedConfiguration&);
    Partition nu_;
    Riggings riggings_;
    VacancyTable vacancy_;
};

// Visits every rigging assignment of an admissible nu in lexicographic order
// of the concatenated riggings. Returns early if the visitor returns false.
void for_each_rigging(const SpinProfile& mu, const Partition& nu,
                      const std::function<bool(const Riggings&)>& visit);

std::vector<RiggedConfiguration> enumerate_rigged_configurations(const SpinProfile& mu, int ell);
std::vector<RiggedConfiguration> rigged_configurations_for(const SpinProfile& mu, const Partition& nu);

// J -> P_k - J, re-sorted. Involution.
RiggedConfiguration flip(const RiggedConfiguration& rc);
bool is_flip_invariant(const RiggedConfiguration& rc);

// prod_k binomial(P_k + m_k, m_k); zero for an inadmissible nu.
BigInt count_riggings(const SpinProfile& mu, const Partition& nu);
BigInt count_rigged_configurations(const SpinProfile& mu, int ell);

}  // namespace rcbethe
