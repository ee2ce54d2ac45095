/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "bethe_roots.hpp"
#include "rigged_configuration.hpp"
#include "solver.hpp"
#include "strings.hpp"

using namespace rcbethe;

namespace {

const cplx I{0.0, 1.0};

const SolveReport& cached(int n, int ell)
{
    static std::map<std::pair<int, int>, SolveReport> cache;
    auto it = cache.find({n, ell});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(n, ell), solve_all(n, ell, SolverConfig{})).first;
    return it->second;
}

const SolutionRecord* find_record(const SolveReport& rep, const BetheRoots& r, double tol)
{
    for (const auto& rec : rep.records)
        if (same_root_set(rec.roots, r, tol))
            return &rec;
    return nullptr;
}

BetheRoots roots_of(std::initializer_list<cplx> z) { return BetheRoots(std::vector<cplx>(z)); }

}  // namespace

TEST_CASE("string seeds")
{
    const auto mu = SpinProfile::uniform(6, 1);
    const RiggedConfiguration three(mu, Partition({3}), {{3, {0}}});
    const auto s = string_seed(three, 6);
    REQUIRE(s.size() == 3);
    CHECK(std::abs(s[0] - (-I)) < 1e-12);
    CHECK(std::abs(s[1]) < 1e-12);
    CHECK(std::abs(s[2] - I) < 1e-12);
    auto r = newton_solve(s, 6, SolverConfig{});
    REQUIRE(r);
    // Row 1 of the table, {0, +-i}, to two decimals.
    CHECK(std::abs((*r)[1]) < 1e-9);
    CHECK(std::abs((*r)[2] - I) < 0.01);
    CHECK(std::abs((*r)[2] - I) > 1e-4);

    const RiggedConfiguration ones(mu, Partition({1, 1, 1}), {{1, {0, 0, 0}}});
    auto t = newton_solve(string_seed(ones, 6), 6, SolverConfig{});
    REQUIRE(t);
    CHECK(std::abs((*t)[0] + 0.43) < 0.005);
    CHECK(std::abs((*t)[1]) < 1e-9);
    CHECK(std::abs((*t)[2] - 0.43) < 0.005);

    // Flip-invariant (2,1) configuration: P_1 = 2, J = 1.
    const RiggedConfiguration mid(mu, Partition({2, 1}), {{2, {0}}, {1, {1}}});
    const auto m = string_seed(mid, 6, linear_spread(6, 3));
    const auto d = decompose_strings(m);
    REQUIRE(d.ok);
    CHECK(std::abs(d.centers(2)[0]) < 1e-12);
    CHECK(std::abs(d.centers(1)[0]) < 1e-12);
}

TEST_CASE("string decomposition")
{
    auto a = decompose_strings(roots_of({0.0, I, -I}));
    REQUIRE(a.ok);
    REQUIRE(a.strings.size() == 1);
    CHECK(a.strings[0].length == 3);
    CHECK(a.strings[0].center == doctest::Approx(0.0));

    auto b = decompose_strings(roots_of({-0.47, cplx(0.24, 0.5), cplx(0.24, -0.5)}));
    REQUIRE(b.ok);
    REQUIRE(b.strings.size() == 2);
    CHECK(b.strings[0].length == 2);
    CHECK(b.strings[0].center == doctest::Approx(0.24));
    CHECK(b.strings[1].length == 1);
    CHECK(b.strings[1].center == doctest::Approx(-0.47));
    CHECK(b.nu() == Partition({2, 1}));

    auto c = decompose_strings(roots_of({-0.53, -0.13, 0.13, 0.53}));
    REQUIRE(c.ok);
    CHECK(c.strings.size() == 4);
    CHECK(c.nu() == Partition({1, 1, 1, 1}));

    CHECK_FALSE(decompose_strings(roots_of({cplx(0.0, 0.7)})).ok);
}

TEST_CASE("hungarian assignment")
{
    const std::vector<std::vector<double>> cost{{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
    CHECK(hungarian(cost) == std::vector<int>{1, 0, 2});
}

TEST_CASE("N = 6, ell = 3 census and matching")
{
    const auto& rep = cached(6, 3);
    CHECK(rep.complete());
    CHECK(rep.rc_count == 5);
    CHECK(rep.counts.regular == 4);
    CHECK(rep.counts.singular_physical == 1);
    CHECK(rep.unmatched_rcs.empty());

    const auto* sp = find_record(rep, roots_of({0.0, 0.5 * I, -0.5 * I}), 1e-9);
    REQUIRE(sp);
    CHECK(sp->cls == SolutionClass::SingularPhysical);
    CHECK_FALSE(sp->energy.has_value());

    // Length-1 string centers -0.47 < 0 < 0.47 carry riggings 0, 1, 2.
    std::vector<std::pair<double, int>> ranked;
    for (const auto& rec : rep.records)
        if (rec.matched_rc && rec.matched_rc->nu() == Partition({2, 1}))
            ranked.emplace_back(rec.strings.centers(1)[0], rec.matched_rc->riggings_for(1)[0]);
    std::sort(ranked.begin(), ranked.end());
    REQUIRE(ranked.size() == 3);
    CHECK(ranked[0].first == doctest::Approx(-0.47).epsilon(0.02));
    CHECK(ranked[1].first == doctest::Approx(0.0));
    CHECK(ranked[2].first == doctest::Approx(0.47).epsilon(0.02));
    CHECK(ranked[0].second == 0);
    CHECK(ranked[1].second == 1);
    CHECK(ranked[2].second == 2);
}

TEST_CASE("N = 8, ell = 4 singular physical solutions and rank order")
{
    const auto& rep = cached(8, 4);
    CHECK(rep.complete());
    CHECK(rep.counts.regular == 11);
    CHECK(rep.counts.singular_physical == 3);

    std::vector<std::pair<double, int>> family;
    for (const auto& rec : rep.records)
        if (rec.matched_rc && rec.matched_rc->nu() == Partition({3, 1}))
            family.emplace_back(rec.strings.centers(1)[0], rec.matched_rc->riggings_for(1)[0]);
    std::sort(family.begin(), family.end());
    REQUIRE(family.size() == 5);
    for (int r = 0; r < 5; ++r)
        CHECK(family[r].second == r);

    const auto* s9 = find_record(rep, roots_of({-0.56, -0.14, cplx(0.35, 0.5), cplx(0.35, -0.5)}), 0.01);
    REQUIRE(s9);
    REQUIRE(s9->matched_rc);
    CHECK(s9->matched_rc->riggings_for(1) == std::vector<int>{0, 0});
    const auto* s14 = find_record(rep, negate(s9->roots), 1e-9);
    REQUIRE(s14);
    CHECK(*s14->matched_rc == flip(*s9->matched_rc));
}

TEST_CASE("census, residual, dedup and negation closure for small chains")
{
    SolverConfig cfg;
    for (int n = 2; n <= 10; ++n)
        for (int ell = 1; ell <= std::min(4, n / 2); ++ell) {
            CAPTURE(n);
            CAPTURE(ell);
            const auto& rep = cached(n, ell);
            CHECK(rep.complete());
            CHECK(rep.rc_count == enumerate_rigged_configurations(SpinProfile::uniform(n, 1), ell).size());
            for (std::size_t a = 0; a < rep.records.size(); ++a) {
                const auto& rec = rep.records[a];
                CHECK(rec.residual < cfg.newton_tol);
                for (std::size_t b = a + 1; b < rep.records.size(); ++b)
                    CHECK_FALSE(same_root_set(rec.roots, rep.records[b].roots, cfg.dedup_tol));
                const auto* image = find_record(rep, negate(rec.roots), cfg.dedup_tol);
                REQUIRE(image);
                if (rec.matched_rc && image->matched_rc) {
                    CHECK(*image->matched_rc == flip(*rec.matched_rc));
                    CHECK((image == &rec) == is_flip_invariant(*rec.matched_rc));
                }
            }
        }
}

TEST_CASE("N = 9, ell = 3 census")
{
    const auto& rep = cached(9, 3);
    CHECK(rep.complete());
    CHECK(rep.counts.singular_physical == 2);
    CHECK(rep.counts.distinct() + rep.counts.singular_physical == 56);
    CHECK(rep.counts.regular + rep.counts.singular_physical == rep.rc_count);
    CHECK(pinned_singular_table(9, 3).size() == 2);
}

TEST_CASE("solve_all is independent of the thread count")
{
    SolverConfig one;
    SolverConfig four;
    four.threads = 4;
    const auto a = solve_all(6, 3, one);
    const auto b = solve_all(6, 3, four);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].roots.roots() == b.records[i].roots.roots());
        CHECK(a.records[i].cls == b.records[i].cls);
    }
}

TEST_CASE("solve_all validates its arguments")
{
    CHECK_THROWS(solve_all(6, 4, SolverConfig{}));
    CHECK_THROWS(solve_all(kMaxSolveSites + 2, 2, SolverConfig{}));
}
