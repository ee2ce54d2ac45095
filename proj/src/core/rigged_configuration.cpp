/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "rigged_configuration.hpp"

#include <algorithm>

#include "errors.hpp"

namespace rcbethe {

RiggedConfiguration::RiggedConfiguration(const SpinProfile& mu, Partition nu, Riggings riggings)
    : nu_(std::move(nu)), riggings_(std::move(riggings)), vacancy_(vacancy_numbers(mu, nu_))
{
    if (!vacancy_.all_nonnegative())
        throw InvalidArgument("configuration " + nu_.to_string() + " is not admissible");
    for (auto it = riggings_.begin(); it != riggings_.end();) {
        if (it->second.empty() && nu_.multiplicity(it->first) == 0)
            it = riggings_.erase(it);
        else
            ++it;
    }
    for (int k : nu_.row_lengths()) {
        auto it = riggings_.find(k);
        if (it == riggings_.end() || static_cast<int>(it->second.size()) != nu_.multiplicity(k))
            throw InvalidArgument("rigging count does not match m_" + std::to_string(k));
        std::sort(it->second.begin(), it->second.end());
        const int p = vacancy_.at(k);
        if (it->second.front() < 0 || it->second.back() > p)
            throw InvalidArgument("rigging outside [0, P_" + std::to_string(k) + "]");
    }
    if (riggings_.size() != nu_.row_lengths().size())
        throw InvalidArgument("riggings given for a row length absent from nu");
}

const std::vector<int>& RiggedConfiguration::riggings_for(int k) const
{
    static const std::vector<int> none;
    auto it = riggings_.find(k);
    return it == riggings_.end() ? none : it->second;
}

std::vector<int> RiggedConfiguration::flat_riggings() const
{
    std::vector<int> out;
    for (int k : nu_.row_lengths()) {
        const auto& r = riggings_for(k);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

std::string RiggedConfiguration::to_string() const
{
    std::string s = nu_.to_string() + "{";
    bool first = true;
    for (int k : nu_.row_lengths()) {
        if (!first)
            s += ';';
        first = false;
        s += std::to_string(k) + ":[";
        const auto& r = riggings_for(k);
        for (std::size_t i = 0; i < r.size(); ++i)
            s += (i ? "," : "") + std::to_string(r[i]);
        s += "]";
    }
    return s + "}";
}

bool operator<(const RiggedConfiguration& a, const RiggedConfiguration& b)
{
    if (a.nu_ != b.nu_)
        return a.nu_ > b.nu_;
    return a.flat_riggings() < b.flat_riggings();
}

namespace {

// Weakly increasing sequences of length m in [0, p], lexicographic order.
void rigging_rows(const std::vector<int>& lengths, const VacancyTable& vac, std::size_t row,
                  const Partition& nu, Riggings& cur,
                  const std::function<bool(const Riggings&)>& visit, bool& stop)
{
    if (stop)
        return;
    if (row == lengths.size()) {
        if (!visit(cur))
            stop = true;
        return;
    }
    const int k = lengths[row];
    const int m = nu.multiplicity(k);
    const int p = vac.at(k);
    std::vector<int>& seq = cur[k];
    seq.assign(static_cast<std::size_t>(m), 0);
    // Odometer over weakly increasing sequences.
    while (true) {
        rigging_rows(lengths, vac, row + 1, nu, cur, visit, stop);
        if (stop)
            return;
        int i = m - 1;
        while (i >= 0 && seq[static_cast<std::size_t>(i)] == p)
            --i;
        if (i < 0)
            break;
        const int v = seq[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < m; ++j)
            seq[static_cast<std::size_t>(j)] = v;
    }
}

}  // namespace

void for_each_rigging(const SpinProfile& mu, const Partition& nu,
                      const std::function<bool(const Riggings&)>& visit)
{
    const VacancyTable vac = vacancy_numbers(mu, nu);
    if (!vac.all_nonnegative())
        return;
    const std::vector<int> lengths = nu.row_lengths();
    Riggings cur;
    bool stop = false;
    rigging_rows(lengths, vac, 0, nu, cur, visit, stop);
}

std::vector<RiggedConfiguration> rigged_configurations_for(const SpinProfile& mu, const Partition& nu)
{
    std::vector<RiggedConfiguration> out;
    for_each_rigging(mu, nu, [&](const Riggings& r) {
        out.emplace_back(mu, nu, r);
        return true;
    });
    return out;
}

std::vector<RiggedConfiguration> enumerate_rigged_configurations(const SpinProfile& mu, int ell)
{
    std::vector<RiggedConfiguration> out;
    for (const auto& nu : admissible_configurations(mu, ell)) {
        auto part = rigged_configurations_for(mu, nu);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

RiggedConfiguration flip(const RiggedConfiguration& rc)
{
    RiggedConfiguration out = rc;
    for (auto& [k, seq] : out.riggings_) {
        const int p = out.vacancy_.at(k);
        for (int& j : seq)
            j = p - j;
        std::sort(seq.begin(), seq.end());
    }
    return out;
}

bool is_flip_invariant(const RiggedConfiguration& rc) { return flip(rc) == rc; }

BigInt count_riggings(const SpinProfile& mu, const Partition& nu)
{
    const VacancyTable vac = vacancy_numbers(mu, nu);
    if (!vac.all_nonnegative())
        return 0;
    BigInt total = 1;
    for (int k : nu.row_lengths()) {
        const int m = nu.multiplicity(k);
        total *= binomial(vac.at(k) + m, m);
    }
    return total;
}

BigInt count_rigged_configurations(const SpinProfile& mu, int ell)
{
    if (ell < 0)
        throw InvalidArgument("ell must be non-negative");
    BigInt total = 0;
    for (const auto& nu : enumerate_partitions(ell))
        total += count_riggings(mu, nu);
    return total;
}

}  // namespace rcbethe
