/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "solver.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <thread>

#include "errors.hpp"

namespace rcbethe {

std::vector<PinnedSingular> pinned_singular_table(int n, int ell)
{
    if (n == 9 && ell == 3) {
        const auto mu = SpinProfile::uniform(9, 1);
        return {{true, RiggedConfiguration(mu, Partition({2, 1}), {{2, {2}}, {1, {5}}})},
                {false, RiggedConfiguration(mu, Partition({2, 1}), {{2, {1}}, {1, {0}}})}};
    }
    return {};
}

namespace {

// Radius around +-i/2 inside which a full-system iterate is handed to the
// reduced singular system.
constexpr double kHandoffRadius = 0.05;

// Newton converges only linearly to repeated roots, leaving clusters of
// nearly equal roots; clusters tighter than this are merged and re-checked.
constexpr double kClusterRadius = 1e-4;

BetheRoots collapse_clusters(const BetheRoots& r, double radius)
{
    std::vector<cplx> x = r.roots();
    std::vector<int> group(x.size(), -1);
    int groups = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (group[i] >= 0)
            continue;
        group[i] = groups;
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (group[j] < 0 && std::abs(x[i] - x[j]) < radius)
                group[j] = groups;
        ++groups;
    }
    for (int g = 0; g < groups; ++g) {
        cplx sum{};
        int cnt = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (group[i] == g) {
                sum += x[i];
                ++cnt;
            }
        for (std::size_t i = 0; i < x.size(); ++i)
            if (group[i] == g)
                x[i] = sum / double(cnt);
    }
    return BetheRoots(std::move(x));
}

struct Found {
    BetheRoots roots;
    SolutionClass cls;
};

class Collector {
public:
    Collector(int n, const SolverConfig& cfg) : n_(n), cfg_(cfg) {}

    // Adds roots and their images under negation and conjugation; true when
    // something new was stored.
    bool offer(const BetheRoots& candidate)
    {
        bool added = false;
        std::vector<cplx> conj;
        for (const auto& z : candidate.roots())
            conj.push_back(std::conj(z));
        const BetheRoots c(std::move(conj));
        for (const auto& r : {candidate, negate(candidate), c, negate(c)})
            added = add(r) || added;
        return added;
    }

    const std::vector<Found>& found() const { return found_; }

    std::size_t census() const
    {
        return static_cast<std::size_t>(std::count_if(found_.begin(), found_.end(), [](const Found& f) {
            return f.cls == SolutionClass::Regular || f.cls == SolutionClass::SingularPhysical;
        }));
    }

private:
    bool add(const BetheRoots& raw)
    {
        if (!raw.all_finite())
            return false;
        BetheRoots r = snap_singular(raw, cfg_.singular_tol);
        if (solution_residual(r, n_, cfg_.singular_tol) > 100 * cfg_.newton_tol)
            return false;
        if (r.size() > 1 && r.min_separation() < kClusterRadius)
            r = collapse_clusters(r, kClusterRadius);
        for (const auto& f : found_)
            if (same_root_set(f.roots, r, cfg_.dedup_tol))
                return false;
        found_.push_back({r, classify(r, n_, cfg_)});
        return true;
    }

    int n_;
    SolverConfig cfg_;
    std::vector<Found> found_;
};

std::optional<std::pair<std::size_t, std::size_t>> near_pair(const std::vector<cplx>& x, double radius)
{
    std::optional<std::size_t> up, down;
    double du = radius, dd = radius;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double a = std::abs(x[i] - kHalfI);
        const double b = std::abs(x[i] + kHalfI);
        if (a < du) {
            du = a;
            up = i;
        }
        if (b < dd) {
            dd = b;
            down = i;
        }
    }
    if (up && down && *up != *down)
        return std::make_pair(*up, *down);
    return std::nullopt;
}

// Pairs of an iterate that are close to exact 2-strings away from the
// singular pair.
constexpr double kNearStringRadius = 1e-2;

// Strings whose deviation from exactness is below this are kept exact.
constexpr double kExactDeviation = 1e-13;

// Re-solves with near-exact 2-strings taken as exact. Strings whose implied
// deviation is representable are released into ordinary roots and the
// system is solved again, until the exact set is consistent.
std::optional<BetheRoots> try_exact_strings(const std::vector<cplx>& iterate, int n, const SolverConfig& cfg)
{
    const BetheRoots it(iterate);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& pr : exact_string_pairs(it, kNearStringRadius)) {
        // Pairs centred at 0 are the singular pair, handled separately.
        if (std::abs(0.5 * (it[pr.first] + it[pr.second])) > 1e-6)
            pairs.push_back(pr);
    }
    if (pairs.empty())
        return std::nullopt;
    CollapsedRoots cur = collapse_strings(it, pairs);
    while (!cur.centers.empty()) {
        auto sol = newton_solve_collapsed(cur, n, cfg);
        if (!sol)
            return std::nullopt;
        const auto dev = string_deviations(*sol, n);
        CollapsedRoots next;
        next.free = sol->free;
        for (std::size_t s = 0; s < dev.size(); ++s) {
            if (!std::isfinite(dev[s].real()) || !std::isfinite(dev[s].imag()))
                return std::nullopt;
            if (std::abs(dev[s]) < kExactDeviation) {
                next.centers.push_back(sol->centers[s]);
            } else {
                next.free.push_back(sol->centers[s] + kHalfI + 0.5 * dev[s]);
                next.free.push_back(sol->centers[s] - kHalfI - 0.5 * dev[s]);
            }
        }
        if (next.centers.size() == sol->centers.size())
            return sol->expand();
        cur = std::move(next);
    }
    auto r = newton_iterate(BetheRoots(cur.free), n, cfg);
    if (r.converged)
        return BetheRoots(std::move(r.roots));
    return std::nullopt;
}

// Newton from one seed. An iterate close to the singular pair is also handed
// to the reduced system; both outcomes are kept.
std::vector<BetheRoots> run_seed(const BetheRoots& seed, int n, const SolverConfig& cfg)
{
    std::vector<BetheRoots> out;
    NewtonResult r;
    try {
        r = newton_iterate(seed, n, cfg);
    } catch (const Error&) {
        return out;
    }
    if (auto pair = near_pair(r.roots, kHandoffRadius)) {
        std::vector<cplx> rest;
        for (std::size_t i = 0; i < r.roots.size(); ++i)
            if (i != pair->first && i != pair->second)
                rest.push_back(r.roots[i]);
        if (auto s = newton_solve_singular(rest, n, cfg))
            out.push_back(std::move(*s));
    }
    if (auto c = try_exact_strings(r.roots, n, cfg))
        out.push_back(std::move(*c));
    if (r.converged)
        out.emplace_back(std::move(r.roots));
    return out;
}

std::vector<BetheRoots> run_reduced_seed(const std::vector<cplx>& rest, int n, const SolverConfig& cfg)
{
    std::vector<BetheRoots> out;
    if (auto s = newton_solve_singular(rest, n, cfg))
        out.push_back(std::move(*s));
    return out;
}

// Solves a batch of seeds, in parallel when configured, returning results in
// seed order so that the outcome does not depend on the thread count.
template <class Fn>
std::vector<std::vector<BetheRoots>> solve_batch(const std::vector<std::vector<cplx>>& seeds, int threads, Fn fn)
{
    std::vector<std::vector<BetheRoots>> out(seeds.size());
    const auto t = static_cast<std::size_t>(std::max(1, threads));
    if (t == 1 || seeds.size() < 2) {
        for (std::size_t i = 0; i < seeds.size(); ++i)
            out[i] = fn(seeds[i]);
        return out;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < t; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < seeds.size(); i += t)
                out[i] = fn(seeds[i]);
        });
    for (auto& th : pool)
        th.join();
    return out;
}

class SeedFactory {
public:
    SeedFactory(int n, int ell, const std::vector<RiggedConfiguration>& rcs, unsigned long long seed)
        : n_(n), ell_(ell), rcs_(rcs), rng_(seed)
    {
    }

    std::vector<cplx> jitter(std::vector<cplx> x, double sigma)
    {
        std::normal_distribution<double> g(0.0, sigma);
        for (auto& z : x)
            z += cplx(g(rng_), g(rng_));
        return x;
    }

    // Half structured (a random rc seed, stretched and jittered), half
    // uniform in a box with conjugation-symmetric pairs.
    std::vector<cplx> random_seed()
    {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        if (!rcs_.empty() && u(rng_) < 0.5) {
            const auto& rc = rcs_[static_cast<std::size_t>(u(rng_) * double(rcs_.size())) % rcs_.size()];
            const double stretch = 0.5 + u(rng_);
            std::vector<cplx> x = string_seed(rc, n_).roots();
            for (auto& z : x)
                z = cplx(z.real() * stretch, z.imag());
            return jitter(std::move(x), 0.15);
        }
        return box_seed(ell_, 1.5);
    }

    std::vector<cplx> box_seed(int m, double half)
    {
        std::uniform_real_distribution<double> re(-half, half), im(-half, half), coin(0.0, 1.0);
        std::vector<cplx> x;
        while (static_cast<int>(x.size()) < m) {
            const cplx z(re(rng_), im(rng_));
            if (static_cast<int>(x.size()) + 2 <= m && coin(rng_) < 0.5) {
                x.push_back(z);
                x.push_back(std::conj(z));
            } else {
                x.emplace_back(z.real(), 0.0);
            }
        }
        return x;
    }

private:
    int n_;
    int ell_;
    const std::vector<RiggedConfiguration>& rcs_;
    std::mt19937_64 rng_;
};

void search_singular(int n, int ell, const SolverConfig& cfg, Collector& col, std::size_t& tried)
{
    if (ell < 2 || n < 2)
        return;
    if (ell == 2) {
        col.offer(BetheRoots({kHalfI, -kHalfI}));
        return;
    }
    if (ell == 3) {
        for (const auto& s : singular_solutions_ell3(n, cfg))
            col.offer(s);
        return;
    }
    // Remaining ell - 2 roots: string seeds of the smaller problem, then random restarts.
    const auto rest_rcs = enumerate_rigged_configurations(SpinProfile::uniform(n, 1), ell - 2);
    SeedFactory fac(n, ell - 2, rest_rcs, cfg.rng_seed ^ 0x5bd1e995ULL);
    std::vector<std::vector<cplx>> seeds;
    for (const auto& rc : rest_rcs) {
        const auto base = string_seed(rc, n).roots();
        seeds.push_back(base);
        for (int i = 0; i < cfg.random_seeds_per_rc; ++i)
            seeds.push_back(fac.jitter(base, 0.2));
    }
    auto reduced = [&](const std::vector<cplx>& x) { return run_reduced_seed(x, n, cfg); };
    for (const auto& rs : solve_batch(seeds, cfg.threads, reduced))
        for (const auto& r : rs)
            col.offer(r);
    tried += seeds.size();
    int stall = 0;
    const int limit = std::max(1, cfg.stall_limit / 4);
    while (stall < limit && static_cast<int>(tried) < cfg.max_random_seeds) {
        seeds.clear();
        for (int i = 0; i < 64; ++i)
            seeds.push_back(i % 2 ? fac.random_seed() : fac.box_seed(ell - 2, 2.5));
        tried += seeds.size();
        bool any = false;
        for (const auto& rs : solve_batch(seeds, cfg.threads, reduced))
            for (const auto& r : rs)
                any = col.offer(r) || any;
        stall = any ? 0 : stall + static_cast<int>(seeds.size());
    }
}

bool roots_less(const BetheRoots& a, const BetheRoots& b)
{
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        const auto ka = std::make_pair(std::llround(a[i].real() * 1e9), std::llround(a[i].imag() * 1e9));
        const auto kb = std::make_pair(std::llround(b[i].real() * 1e9), std::llround(b[i].imag() * 1e9));
        if (ka != kb)
            return ka < kb;
    }
    return a.size() < b.size();
}

int class_rank(SolutionClass c)
{
    switch (c) {
    case SolutionClass::Regular:
    case SolutionClass::SingularPhysical: return 0;
    case SolutionClass::SingularNonPhysical: return 1;
    case SolutionClass::NonDistinct: return 2;
    case SolutionClass::Unconverged: return 3;
    }
    return 4;
}

void assign_riggings(SolveReport& rep, const std::vector<RiggedConfiguration>& rcs)
{
    std::vector<bool> rc_used(rcs.size(), false);
    std::vector<std::size_t> census;
    for (std::size_t i = 0; i < rep.records.size(); ++i) {
        const auto c = rep.records[i].cls;
        if (c == SolutionClass::Regular || c == SolutionClass::SingularPhysical)
            census.push_back(i);
    }
    auto rc_index = [&](const RiggedConfiguration& rc) {
        for (std::size_t j = 0; j < rcs.size(); ++j)
            if (rcs[j] == rc)
                return j;
        throw Error(ErrorCode::Internal, "pinned rigged configuration not enumerated");
    };

    // Pinned physical singular solutions first.
    for (const auto& pin : pinned_singular_table(rep.n, rep.ell)) {
        for (auto it = census.begin(); it != census.end(); ++it) {
            auto& rec = rep.records[*it];
            if (rec.cls != SolutionClass::SingularPhysical)
                continue;
            auto pair = singular_pair(rec.roots, rep.config.singular_tol);
            double s = 0.0;
            for (std::size_t k = 0; k < rec.roots.size(); ++k)
                if (k != pair->first && k != pair->second)
                    s += rec.roots[k].real();
            if ((s > 0) != pin.rest_positive)
                continue;
            const std::size_t j = rc_index(pin.rc);
            rec.matched_rc = rcs[j];
            rec.note = "pinned";
            rc_used[j] = true;
            census.erase(it);
            break;
        }
    }

    std::map<Partition, std::vector<std::size_t>> sol_by_nu;
    for (std::size_t i : census) {
        auto& rec = rep.records[i];
        if (!rec.strings.ok) {
            rec.note = "string decomposition failed: " + rec.strings.failure;
            continue;
        }
        sol_by_nu[rec.strings.nu()].push_back(i);
    }
    std::map<Partition, std::vector<std::size_t>> rc_by_nu;
    for (std::size_t j = 0; j < rcs.size(); ++j)
        if (!rc_used[j])
            rc_by_nu[rcs[j].nu()].push_back(j);

    for (auto& [nu, sols] : sol_by_nu) {
        auto it = rc_by_nu.find(nu);
        const std::size_t available = it == rc_by_nu.end() ? 0 : it->second.size();
        if (available != sols.size()) {
            for (std::size_t i : sols)
                rep.records[i].note = "configuration " + nu.to_string() + ": " + std::to_string(sols.size()) +
                                      " solutions for " + std::to_string(available) + " rigged configurations";
            continue;
        }
        std::vector<BetheRoots> roots;
        std::vector<StringDecomposition> decs;
        std::vector<RiggedConfiguration> cands;
        for (std::size_t i : sols) {
            roots.push_back(rep.records[i].roots);
            decs.push_back(rep.records[i].strings);
        }
        for (std::size_t j : it->second)
            cands.push_back(rcs[j]);
        const MatchResult m = match_rc(roots, decs, cands, rep.config.dedup_tol);
        for (std::size_t a = 0; a < sols.size(); ++a) {
            auto& rec = rep.records[sols[a]];
            const std::size_t j = it->second[static_cast<std::size_t>(m.assignment[a])];
            rec.matched_rc = rcs[j];
            rec.ambiguous_match = m.ambiguous;
            if (!m.note.empty())
                rec.note = m.note;
            rc_used[j] = true;
        }
        rep.ambiguous = rep.ambiguous || m.ambiguous;
    }
    for (std::size_t j = 0; j < rcs.size(); ++j)
        if (!rc_used[j])
            rep.unmatched_rcs.push_back(rcs[j]);
}

}  // namespace

SolveReport solve_all(int n, int ell, const SolverConfig& cfg)
{
    cfg.validate();
    if (n < 1 || n > kMaxSolveSites)
        throw InvalidArgument("solver supports 1 <= N <= " + std::to_string(kMaxSolveSites));
    if (ell < 0 || 2 * ell > n)
        throw InvalidArgument("solver requires 0 <= 2 ell <= N");

    SolveReport rep;
    rep.n = n;
    rep.ell = ell;
    rep.config = cfg;
    const auto rcs = enumerate_rigged_configurations(SpinProfile::uniform(n, 1), ell);
    rep.rc_count = rcs.size();

    Collector col(n, cfg);
    if (ell == 0) {
        col.offer(BetheRoots{});
    } else {
        SeedFactory fac(n, ell, rcs, cfg.rng_seed);
        const double delta = linear_spread(n, ell);
        std::vector<std::vector<cplx>> seeds;
        for (const auto& rc : rcs) {
            const auto base = string_seed(rc, n).roots();
            seeds.push_back(base);
            seeds.push_back(string_seed(rc, n, delta).roots());
            for (int i = 0; i < cfg.random_seeds_per_rc; ++i)
                seeds.push_back(fac.jitter(base, 0.1));
        }
        auto full = [&](const std::vector<cplx>& x) { return run_seed(BetheRoots(x), n, cfg); };
        for (const auto& rs : solve_batch(seeds, cfg.threads, full))
            for (const auto& r : rs)
                col.offer(r);
        rep.seeds_tried += seeds.size();

        search_singular(n, ell, cfg, col, rep.seeds_tried);

        int stall = 0;
        while (col.census() < rep.rc_count && stall < cfg.stall_limit &&
               rep.seeds_tried < static_cast<std::size_t>(cfg.max_random_seeds)) {
            seeds.clear();
            for (int i = 0; i < 64; ++i)
                seeds.push_back(fac.random_seed());
            rep.seeds_tried += seeds.size();
            bool any = false;
            for (const auto& rs : solve_batch(seeds, cfg.threads, full))
                for (const auto& r : rs)
                    any = col.offer(r) || any;
            stall = any ? 0 : stall + static_cast<int>(seeds.size());
        }
    }

    for (const auto& f : col.found()) {
        SolutionRecord rec;
        rec.roots = f.roots;
        rec.cls = f.cls;
        rec.residual = solution_residual(f.roots, n, cfg.singular_tol);
        if (f.cls == SolutionClass::Regular)
            rec.energy = energy(f.roots, cfg.singular_tol);
        if (f.cls == SolutionClass::Regular || f.cls == SolutionClass::SingularPhysical)
            rec.strings = decompose_strings(f.roots);
        switch (f.cls) {
        case SolutionClass::Regular: ++rep.counts.regular; break;
        case SolutionClass::SingularPhysical: ++rep.counts.singular_physical; break;
        case SolutionClass::SingularNonPhysical: ++rep.counts.singular_nonphysical; break;
        case SolutionClass::NonDistinct: ++rep.counts.non_distinct; break;
        case SolutionClass::Unconverged: break;
        }
        rep.records.push_back(std::move(rec));
    }
    assign_riggings(rep, rcs);

    std::sort(rep.records.begin(), rep.records.end(), [](const SolutionRecord& a, const SolutionRecord& b) {
        const int ra = class_rank(a.cls), rb = class_rank(b.cls);
        if (ra != rb)
            return ra < rb;
        if (a.matched_rc.has_value() != b.matched_rc.has_value())
            return a.matched_rc.has_value();
        if (a.matched_rc && b.matched_rc && !(*a.matched_rc == *b.matched_rc))
            return *a.matched_rc < *b.matched_rc;
        return roots_less(a.roots, b.roots);
    });
    return rep;
}

}  // namespace rcbethe
