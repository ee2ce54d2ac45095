/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "partition.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace rcbethe {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw InvalidArgument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidArgument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int k) const noexcept
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::vector<int> Partition::row_lengths() const
{
    std::vector<int> out;
    for (int p : parts_)
        if (out.empty() || out.back() != p)
            out.push_back(p);
    return out;
}

int Partition::column_weight(int k) const noexcept
{
    int s = 0;
    for (int p : parts_)
        s += std::min(k, p);
    return s;
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

SpinProfile::SpinProfile(std::vector<int> entries) : entries_(std::move(entries))
{
    for (int e : entries_)
        if (e < 1)
            throw InvalidArgument("spin profile entries must be positive");
}

SpinProfile SpinProfile::uniform(int n, int two_s)
{
    if (n < 1)
        throw InvalidArgument("chain length must be at least 1");
    if (two_s < 1)
        throw InvalidArgument("2s must be at least 1");
    return SpinProfile(std::vector<int>(static_cast<std::size_t>(n), two_s));
}

int SpinProfile::max_entry() const noexcept
{
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

int SpinProfile::total() const noexcept
{
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

bool SpinProfile::is_uniform() const noexcept
{
    return !entries_.empty() &&
           std::all_of(entries_.begin(), entries_.end(), [&](int e) { return e == entries_.front(); });
}

int SpinProfile::two_s() const noexcept { return is_uniform() ? entries_.front() : 0; }

int SpinProfile::column_weight(int k) const noexcept
{
    int s = 0;
    for (int e : entries_)
        s += std::min(k, e);
    return s;
}

int VacancyTable::at(int k) const
{
    if (k < 1)
        throw InvalidArgument("vacancy numbers are indexed by k >= 1");
    if (values_.empty())
        return 0;
    if (k >= saturation())
        return values_.rbegin()->second;
    return values_.at(k);
}

bool VacancyTable::all_nonnegative() const noexcept
{
    return std::all_of(values_.begin(), values_.end(), [](const auto& kv) { return kv.second >= 0; });
}

int VacancyTable::max_value() const noexcept
{
    int m = 0;
    for (const auto& [k, v] : values_)
        m = std::max(m, v);
    return m;
}

VacancyTable vacancy_numbers(const SpinProfile& mu, const Partition& nu)
{
    const int kmax = std::max({1, nu.largest(), mu.max_entry()});
    std::map<int, int> values;
    for (int k = 1; k <= kmax; ++k)
        values[k] = mu.column_weight(k) - 2 * nu.column_weight(k);
    return VacancyTable(std::move(values));
}

bool is_admissible(const SpinProfile& mu, const Partition& nu)
{
    return vacancy_numbers(mu, nu).all_nonnegative();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int ell)
{
    if (ell < 0)
        throw InvalidArgument("ell must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(ell, ell, cur, out);
    return out;
}

std::vector<Partition> admissible_configurations(const SpinProfile& mu, int ell)
{
    std::vector<Partition> out;
    for (auto& nu : enumerate_partitions(ell))
        if (is_admissible(mu, nu))
            out.push_back(std::move(nu));
    return out;
}

}  // namespace rcbethe
