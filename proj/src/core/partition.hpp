/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace rcbethe {

// A partition stored as weakly decreasing positive parts. Used both for the
// configuration nu (string content) and as a generic Young diagram.
class Partition {
public:
    Partition() = default;
    // Throws InvalidArgument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    std::size_t length() const noexcept { return parts_.size(); }
    int weight() const noexcept { return weight_; }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    // m_k: number of rows of length exactly k.
    int multiplicity(int k) const noexcept;
    // Distinct row lengths, largest first.
    std::vector<int> row_lengths() const;
    // Number of boxes in the first k columns: sum_j min(k, nu_j).
    int column_weight(int k) const noexcept;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// The spins mu = (mu_1, ..., mu_N), each entry being 2s_j.
class SpinProfile {
public:
    SpinProfile() = default;
    explicit SpinProfile(std::vector<int> entries);
    static SpinProfile uniform(int n, int two_s);

    const std::vector<int>& entries() const noexcept { return entries_; }
    int sites() const noexcept { return static_cast<int>(entries_.size()); }
    int max_entry() const noexcept;
    int total() const noexcept;
    // Uniform profile helpers; two_s() is 0 for a non-uniform profile.
    bool is_uniform() const noexcept;
    int two_s() const noexcept;
    // sum_j min(k, mu_j)
    int column_weight(int k) const noexcept;

private:
    std::vector<int> entries_;
};

// Vacancy numbers P_k for k = 1..saturation(). Beyond that range both sums
// in the definition are saturated and P_k stays equal to the last entry.
class VacancyTable {
public:
    VacancyTable() = default;
    explicit VacancyTable(std::map<int, int> values) : values_(std::move(values)) {}

    int at(int k) const;
    int saturation() const noexcept { return values_.empty() ? 0 : values_.rbegin()->first; }
    const std::map<int, int>& values() const noexcept { return values_; }
    bool all_nonnegative() const noexcept;
    int max_value() const noexcept;

    friend bool operator==(const VacancyTable&, const VacancyTable&) = default;

private:
    std::map<int, int> values_;
};

// P_k = sum_j min(k, mu_j) - 2 sum_j min(k, nu_j) for k = 1..max(nu_1, max mu).
VacancyTable vacancy_numbers(const SpinProfile& mu, const Partition& nu);

bool is_admissible(const SpinProfile& mu, const Partition& nu);

// All partitions of ell in reverse-lexicographic order: (ell), (ell-1, 1), ...
std::vector<Partition> enumerate_partitions(int ell);

// Partitions of ell admissible for mu, same order as enumerate_partitions.
std::vector<Partition> admissible_configurations(const SpinProfile& mu, int ell);

}  // namespace rcbethe
