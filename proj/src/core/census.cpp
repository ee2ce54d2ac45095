/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "census.hpp"

#include <algorithm>

#include "errors.hpp"

namespace rcbethe {

const char* to_string(CensusRegime r)
{
    switch (r) {
    case CensusRegime::Ba: return "B-a";
    case CensusRegime::Bb: return "B-b";
    case CensusRegime::C: return "C";
    }
    return "?";
}

namespace {

int count_parts(const Partition& nu, int min_part, int parity)
{
    return static_cast<int>(std::count_if(nu.parts().begin(), nu.parts().end(), [&](int p) {
        return p >= min_part && p % 2 == parity;
    }));
}

// Flip invariant assignments for one row length.
BigInt flip_invariant_factor(int p, int m)
{
    if (p % 2 == 0)
        return binomial(p / 2 + m / 2, m / 2);
    if (m % 2 == 1)
        return 0;
    return binomial((p - 1) / 2 + m / 2, m / 2);
}

bool satisfies(CensusRegime regime, const Partition& nu, int two_s)
{
    switch (regime) {
    case CensusRegime::Ba: return condition_Ba(nu, two_s);
    case CensusRegime::Bb: return condition_Bb(nu, two_s);
    case CensusRegime::C: return condition_C_partition(nu);
    }
    return false;
}

BigInt contribution(CensusRegime regime, const Partition& nu, const VacancyTable& vac)
{
    BigInt total = 1;
    for (int k : nu.row_lengths()) {
        BigInt f = flip_invariant_factor(vac.at(k), nu.multiplicity(k));
        if (regime == CensusRegime::C)
            f -= chi(vac, nu, k);
        total *= f;
    }
    return total;
}

void check_query(const CensusQuery& q)
{
    if (q.n < 1 || q.two_s < 1 || q.ell < 0)
        throw InvalidArgument("census query needs N >= 1, 2s >= 1, ell >= 0");
}

}  // namespace

bool condition_Ba(const Partition& nu, int two_s) { return count_parts(nu, two_s + 1, 0) % 2 == 1; }

bool condition_Bb(const Partition& nu, int two_s) { return count_parts(nu, two_s + 1, 1) % 2 == 1; }

bool condition_C_partition(const Partition& nu) { return count_parts(nu, 2, 0) % 2 == 1; }

int chi(const VacancyTable& vac, const Partition& nu, int k)
{
    const int m = nu.multiplicity(k);
    const int p = vac.at(k);
    return (m >= 3 && m % 2 == 1 && p > 0 && p % 4 == 0) ? 1 : 0;
}

bool forbidden_rigging(const RiggedConfiguration& rc)
{
    for (int k : rc.nu().row_lengths()) {
        if (!chi(rc.vacancy(), rc.nu(), k))
            continue;
        const int half = rc.vacancy().at(k) / 2;
        const auto& r = rc.riggings_for(k);
        if (std::all_of(r.begin(), r.end(), [&](int j) { return j == half; }))
            return true;
    }
    return false;
}

BigInt count_flip_invariant(const SpinProfile& mu, const Partition& nu)
{
    const VacancyTable vac = vacancy_numbers(mu, nu);
    if (!vac.all_nonnegative())
        return 0;
    BigInt total = 1;
    for (int k : nu.row_lengths())
        total *= flip_invariant_factor(vac.at(k), nu.multiplicity(k));
    return total;
}

CensusRegime census_regime(const CensusQuery& q)
{
    check_query(q);
    if (q.n % 2 == 1)
        throw OutOfScope("physical singular census is stated for even N only");
    if (q.two_s % 2 == 0)
        return CensusRegime::Bb;
    if (q.ell % 2 == 0)
        return CensusRegime::Ba;
    if (q.two_s == 1)
        return CensusRegime::C;
    throw OutOfScope("no rule for odd 2s > 1 with odd ell");
}

CensusResult count_physical_singular(const CensusQuery& q)
{
    CensusResult res;
    res.query = q;
    res.regime = census_regime(q);
    const SpinProfile mu = SpinProfile::uniform(q.n, q.two_s);
    res.n_rc_total = count_rigged_configurations(mu, q.ell);

    for (const auto& nu : admissible_configurations(mu, q.ell)) {
        if (!satisfies(res.regime, nu, q.two_s))
            continue;
        PartitionCensus pc;
        pc.nu = nu;
        pc.vacancy = vacancy_numbers(mu, nu);
        pc.flip_invariant = count_flip_invariant(mu, nu);
        pc.contribution = contribution(res.regime, nu, pc.vacancy);
        res.n_sp_enumerated += pc.contribution;
        res.details.push_back(std::move(pc));
    }

    if (q.two_s == 1)
        res.n_sp_formula = closed_form_nsp(q.n, q.ell);
    if (!res.n_sp_formula)
        res.n_sp_formula = family_closed_form(q.two_s, q.ell, q.n);

    if (q.two_s == 1) {
        try {
            res.predicted_n_total = predicted_solution_counts(q.n, q.ell).n_distinct_plus_sp;
        } catch (const OutOfScope&) {
        }
    }

    // The printed partition list for N = 12, ell = 5 names (5) where the
    // parity rule selects (4,1); keep its total next to ours.
    if (q.two_s == 1 && q.n == 12 && q.ell == 5) {
        AlternativeReading alt;
        alt.label = "printed partition list";
        alt.partitions = {Partition({5}), Partition({3, 2}), Partition({2, 1, 1, 1})};
        for (const auto& nu : alt.partitions)
            alt.total += contribution(CensusRegime::C, nu, vacancy_numbers(mu, nu));
        res.alternatives.push_back(std::move(alt));
    }
    return res;
}

BigInt count_physical_singular_by_enumeration(const CensusQuery& q)
{
    const CensusRegime regime = census_regime(q);
    const SpinProfile mu = SpinProfile::uniform(q.n, q.two_s);
    BigInt total = 0;
    for (const auto& nu : admissible_configurations(mu, q.ell)) {
        if (!satisfies(regime, nu, q.two_s))
            continue;
        for (const auto& rc : rigged_configurations_for(mu, nu)) {
            if (!is_flip_invariant(rc))
                continue;
            if (regime == CensusRegime::C && forbidden_rigging(rc))
                continue;
            ++total;
        }
    }
    return total;
}

std::optional<BigInt> closed_form_nsp(int n, int ell)
{
    if (n < 2 || ell < 0 || n % 2 != 0)
        return std::nullopt;
    if (ell % 2 == 0)
        return binomial((n - 2) / 2, (ell - 2) / 2);
    if (n % 4 == 2)
        return binomial((n - 2) / 2, (ell - 3) / 2);
    return std::nullopt;
}

namespace {

BigInt exact_integer(const Rational& r)
{
    if (boost::multiprecision::denominator(r) != 1)
        throw Error(ErrorCode::Internal, "family closed form evaluated to a non-integer");
    return boost::multiprecision::numerator(r);
}

}  // namespace

std::optional<BigInt> family_closed_form(int two_s, int ell, int n)
{
    if (n % 2 != 0)
        return std::nullopt;
    const Rational N = n;
    auto half_binom = [](int top2, int k) { return Rational(binomial(top2 / 2, k)); };

    if (two_s == 1 && ell == 5 && n >= 10)
        return BigInt(n % 4 == 2 ? (n - 2) / 2 : (n - 4) / 2);
    if (two_s == 3 && ell == 10 && n >= 8)
        return exact_integer((N - 4) / (N + 2) * half_binom(n + 6, 3) + 2);
    if (two_s == 3 && ell == 12 && n >= 8)
        return exact_integer((N - 6) / (N + 2) * half_binom(n + 8, 4) + 8);
    if (two_s == 2 && ell == 7 && n >= 8)
        return exact_integer((N - 2) * (N + 4) / 8);
    if (two_s == 2 && ell == 9 && n >= 10)
        return exact_integer((N - 4) / (N + 2) * half_binom(n + 6, 3) + 2 - (N - 2) / 2);
    return std::nullopt;
}

BigInt strict_rigging_count(int n, int ell)
{
    if (n % 2 != 0 || ell % 2 == 0)
        throw OutOfScope("strict rigging variant is stated for N even, ell odd");
    const SpinProfile mu = SpinProfile::uniform(n, 1);
    BigInt total = 0;
    for (const auto& nu : admissible_configurations(mu, ell)) {
        if (!condition_C_partition(nu))
            continue;
        const VacancyTable vac = vacancy_numbers(mu, nu);
        BigInt prod = 1;
        for (int k : nu.row_lengths()) {
            const int m = nu.multiplicity(k);
            const int p = vac.at(k);
            if (chi(vac, nu, k))
                // Lower half J_1 < ... < J_{(m-1)/2} < P/2 = J_{(m+1)/2}.
                prod *= binomial(p / 2, (m - 1) / 2);
            else
                prod *= flip_invariant_factor(p, m);
        }
        total += prod;
    }
    return total;
}

BigInt strict_rigging_formula_l7(int n)
{
    return exact_integer(Rational((n - 2) * (n - 4), 8) - n + 9);
}

BigInt condition_C_formula_l7(int n)
{
    return exact_integer(Rational((n - 2) * (n - 4), 8) - 3);
}

PredictedCounts predicted_solution_counts(int n, int ell)
{
    if (n < 1 || ell < 0 || 2 * ell > n)
        throw InvalidArgument("predicted counts need N >= 1 and 0 <= 2 ell <= N");
    PredictedCounts pc;
    pc.n_highest_weight = binomial(n, ell) - binomial(n, ell - 1);
    const BigInt total = binomial(n - 1, ell);
    pc.identity_total = total;

    auto complete = [&] {
        // n_distinct - n_singular + n_sp = number of highest weight states.
        if (pc.n_distinct && pc.n_singular && !pc.n_sp)
            pc.n_sp = pc.n_highest_weight - *pc.n_distinct + *pc.n_singular;
        if (pc.n_distinct && pc.n_sp && !pc.n_distinct_plus_sp)
            pc.n_distinct_plus_sp = *pc.n_distinct + *pc.n_sp;
    };

    if (ell <= 2) {
        pc.rule = "elementary (ell <= 2)";
        pc.n_singular = ell == 2 ? 1 : 0;
        pc.n_sp = (ell == 2 && n % 2 == 0) ? 1 : 0;
        pc.n_distinct_plus_sp = total;
        pc.n_distinct = total - *pc.n_sp;
        pc.identity_sp_term = pc.n_sp;
        return pc;
    }
    if (n % 2 == 0 && ell % 2 == 0) {
        pc.rule = "N even, ell even";
        pc.n_sp = binomial((n - 2) / 2, (ell - 2) / 2);
        pc.n_distinct_plus_sp = total;
        pc.n_distinct = total - *pc.n_sp;
        pc.n_singular = binomial(n - 1, ell - 2);
        pc.identity_sp_term = pc.n_sp;
        return pc;
    }
    if (n % 2 == 0) {
        if (n % 4 == 0)
            throw OutOfScope("N = 0 mod 4 with odd ell has no count identity (N = 12, ell = 5 fails it)");
        pc.rule = "N = 2 mod 4, ell odd";
        pc.n_sp = binomial((n - 2) / 2, (ell - 3) / 2);
        pc.n_distinct_plus_sp = total;
        pc.n_distinct = total - *pc.n_sp;
        pc.n_singular = binomial(n - 1, ell - 2);
        pc.identity_sp_term = pc.n_sp;
        return pc;
    }
    if (ell % 2 == 0) {
        pc.rule = "N odd, ell even";
        const BigInt shift = binomial((n - 3) / 2, (ell - 4) / 2);
        pc.n_distinct = total - shift;
        pc.n_singular = binomial(n - 1, ell - 2) - shift;
        pc.identity_sp_term = shift;
        complete();
        return pc;
    }
    pc.rule = "N odd, ell odd";
    pc.n_distinct_plus_sp = total;
    pc.n_singular = binomial(n - 1, ell - 2);
    return pc;
}

}  // namespace rcbethe
