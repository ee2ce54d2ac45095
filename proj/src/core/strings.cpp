/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "strings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "errors.hpp"

namespace rcbethe {

Partition StringDecomposition::nu() const
{
    std::vector<int> parts;
    for (const auto& s : strings)
        parts.push_back(s.length);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

std::vector<double> StringDecomposition::centers(int k) const
{
    std::vector<double> c;
    for (const auto& s : strings)
        if (s.length == k)
            c.push_back(s.center);
    std::sort(c.begin(), c.end());
    return c;
}

double quantum_number(const RiggedConfiguration& rc, int k, std::size_t alpha)
{
    const auto& js = rc.riggings_for(k);
    const int p = rc.vacancy().at(k);
    const int m = static_cast<int>(js.size());
    return js.at(alpha) - 0.5 * (p + m + 1) + static_cast<double>(alpha + 1);
}

double linear_spread(int n, int ell)
{
    int max_p = 0;
    const auto mu = SpinProfile::uniform(n, 1);
    for (const auto& nu : admissible_configurations(mu, ell))
        for (int k : nu.row_lengths())
            max_p = std::max(max_p, vacancy_numbers(mu, nu).at(k));
    return 0.3 / (1.0 + max_p);
}

namespace {

struct StringSlot {
    int k;
    double q;
};

std::vector<StringSlot> slots_of(const RiggedConfiguration& rc)
{
    std::vector<StringSlot> out;
    for (int k : rc.nu().row_lengths())
        for (std::size_t a = 0; a < rc.riggings_for(k).size(); ++a)
            out.push_back({k, quantum_number(rc, k, a)});
    return out;
}

double theta(double x, int n) { return n == 0 ? 0.0 : 2.0 * std::atan(2.0 * x / n); }
double dtheta(double x, int n) { return n == 0 ? 0.0 : (4.0 / n) / (1.0 + 4.0 * x * x / (double(n) * n)); }

// Scattering phase between strings of lengths k and m and its derivative.
std::pair<double, double> big_theta(double x, int k, int m)
{
    double v = 0.0, d = 0.0;
    if (k != m) {
        v += theta(x, std::abs(k - m));
        d += dtheta(x, std::abs(k - m));
    }
    for (int t = std::abs(k - m) + 2; t <= k + m - 2; t += 2) {
        v += 2.0 * theta(x, t);
        d += 2.0 * dtheta(x, t);
    }
    v += theta(x, k + m);
    d += dtheta(x, k + m);
    return {v, d};
}

std::vector<double> tan_centers(const RiggedConfiguration& rc)
{
    std::vector<double> x;
    for (int k : rc.nu().row_lengths()) {
        const int p = rc.vacancy().at(k);
        const int m = static_cast<int>(rc.riggings_for(k).size());
        for (std::size_t a = 0; a < rc.riggings_for(k).size(); ++a)
            x.push_back(0.5 * k * std::tan(std::numbers::pi * quantum_number(rc, k, a) / (p + m + 1)));
    }
    return x;
}

}  // namespace

std::optional<std::vector<double>> string_centers(const RiggedConfiguration& rc, int n)
{
    const auto slots = slots_of(rc);
    const std::size_t s = slots.size();
    std::vector<double> x = tan_centers(rc);
    if (s == 0)
        return x;
    auto residual = [&](const std::vector<double>& y, Eigen::VectorXd& f, Eigen::MatrixXd* jac) {
        f.resize(static_cast<Eigen::Index>(s));
        if (jac)
            *jac = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s));
        for (std::size_t a = 0; a < s; ++a) {
            const auto ia = static_cast<Eigen::Index>(a);
            double v = n * theta(y[a], slots[a].k) - 2.0 * std::numbers::pi * slots[a].q;
            double diag = n * dtheta(y[a], slots[a].k);
            for (std::size_t b = 0; b < s; ++b) {
                if (b == a)
                    continue;
                const auto [t, dt] = big_theta(y[a] - y[b], slots[a].k, slots[b].k);
                v -= t;
                diag -= dt;
                if (jac)
                    (*jac)(ia, static_cast<Eigen::Index>(b)) = dt;
            }
            f[ia] = v;
            if (jac)
                (*jac)(ia, ia) = diag;
        }
    };
    Eigen::VectorXd f;
    Eigen::MatrixXd jac;
    residual(x, f, &jac);
    for (int it = 0; it < 100 && f.norm() > 1e-12; ++it) {
        const Eigen::VectorXd step = jac.fullPivLu().solve(f);
        if (!step.allFinite())
            return std::nullopt;
        double t = 1.0;
        std::vector<double> trial(s);
        Eigen::VectorXd ft;
        bool improved = false;
        for (int h = 0; h < 30; ++h) {
            for (std::size_t a = 0; a < s; ++a)
                trial[a] = x[a] - t * step[static_cast<Eigen::Index>(a)];
            residual(trial, ft, nullptr);
            if (ft.allFinite() && ft.norm() < f.norm()) {
                improved = true;
                break;
            }
            t *= 0.5;
        }
        if (!improved)
            return std::nullopt;
        x = trial;
        residual(x, f, &jac);
    }
    if (!(f.norm() <= 1e-9))
        return std::nullopt;
    return x;
}

BetheRoots string_seed(const RiggedConfiguration& rc, int n, std::optional<double> linear)
{
    if (n < 1)
        throw InvalidArgument("chain length must be positive");
    const auto slots = slots_of(rc);
    std::vector<double> x;
    if (linear) {
        for (const auto& sl : slots)
            x.push_back(*linear * sl.q);
    } else if (auto c = string_centers(rc, n)) {
        x = std::move(*c);
    } else {
        x = tan_centers(rc);
    }
    std::vector<cplx> roots;
    for (std::size_t a = 0; a < slots.size(); ++a)
        for (int j = 1; j <= slots[a].k; ++j)
            roots.emplace_back(x[a], 0.5 * (slots[a].k + 1 - 2 * j));
    return BetheRoots(std::move(roots));
}

StringDecomposition decompose_strings(const BetheRoots& roots, double tol)
{
    StringDecomposition out;
    std::vector<bool> used(roots.size(), false);
    std::size_t left = roots.size();
    while (left > 0) {
        std::size_t top = roots.size();
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (used[i])
                continue;
            if (top == roots.size() || roots[i].imag() > roots[top].imag() + 1e-9 ||
                (std::abs(roots[i].imag() - roots[top].imag()) <= 1e-9 && roots[i].real() < roots[top].real()))
                top = i;
        }
        const cplx z = roots[top];
        const long k = std::lround(2.0 * z.imag() + 1.0);
        if (k < 1 || std::abs(z.imag() - 0.5 * double(k - 1)) > tol) {
            out.failure = "root " + BetheRoots({z}).to_string() + " does not start a ladder";
            return out;
        }
        BetheString s;
        s.length = static_cast<int>(k);
        s.members.push_back(top);
        used[top] = true;
        double sum = z.real();
        for (long j = 1; j < k; ++j) {
            const cplx target(z.real(), 0.5 * double(k - 1) - double(j));
            std::size_t best = roots.size();
            double bestd = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < roots.size(); ++i) {
                if (used[i])
                    continue;
                const cplx d = roots[i] - target;
                if (std::abs(d.real()) > tol || std::abs(d.imag()) > tol)
                    continue;
                if (std::abs(d) < bestd) {
                    bestd = std::abs(d);
                    best = i;
                }
            }
            if (best == roots.size()) {
                out.failure = "incomplete ladder of length " + std::to_string(k) + " at " + BetheRoots({z}).to_string();
                return out;
            }
            used[best] = true;
            s.members.push_back(best);
            sum += roots[best].real();
        }
        s.center = sum / double(k);
        left -= s.members.size();
        out.strings.push_back(std::move(s));
    }
    std::sort(out.strings.begin(), out.strings.end(), [](const BetheString& a, const BetheString& b) {
        return a.length != b.length ? a.length > b.length : a.center < b.center;
    });
    out.ok = true;
    return out;
}

std::vector<int> hungarian(const std::vector<std::vector<double>>& cost)
{
    const std::size_t n = cost.size();
    if (n == 0)
        return {};
    const double inf = std::numeric_limits<double>::infinity();
    // Potentials formulation, 1-based with a virtual column 0.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j])
                    continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            if (j1 == 0)
                throw Error(ErrorCode::Internal, "assignment problem has no finite solution");
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> row_to_col(n, -1);
    for (std::size_t j = 1; j <= n; ++j)
        row_to_col[p[j] - 1] = static_cast<int>(j - 1);
    return row_to_col;
}

namespace {

constexpr double kBlocked = 1e12;

double assignment_cost(const std::vector<std::vector<double>>& cost, const std::vector<int>& a)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += cost[i][static_cast<std::size_t>(a[i])];
    return s;
}

// True when another perfect matching reaches the optimal cost.
bool has_tied_optimum(std::vector<std::vector<double>> cost, const std::vector<int>& best)
{
    const double opt = assignment_cost(cost, best);
    const double eps = 1e-9 * (1.0 + std::abs(opt));
    for (std::size_t i = 0; i < best.size(); ++i) {
        const auto j = static_cast<std::size_t>(best[i]);
        const double saved = cost[i][j];
        cost[i][j] = kBlocked;
        const auto alt = hungarian(cost);
        const double c = assignment_cost(cost, alt);
        cost[i][j] = saved;
        if (c < kBlocked / 2 && c <= opt + eps)
            return true;
    }
    return false;
}

// Feature vectors: string centers normalised per length over the class, and
// riggings mapped to [-1, 1] by (J - P/2) / (P/2).
struct Features {
    std::vector<int> lengths;
    std::vector<std::vector<double>> sol;
    std::vector<std::vector<double>> rc;
};

Features build_features(const std::vector<StringDecomposition>& strings, const std::vector<RiggedConfiguration>& rcs)
{
    Features f;
    f.lengths = rcs.front().nu().row_lengths();
    f.sol.resize(strings.size());
    f.rc.resize(rcs.size());
    for (int k : f.lengths) {
        double scale = 0.0;
        for (const auto& d : strings)
            for (double c : d.centers(k))
                scale = std::max(scale, std::abs(c));
        if (scale == 0.0)
            scale = 1.0;
        for (std::size_t s = 0; s < strings.size(); ++s)
            for (double c : strings[s].centers(k))
                f.sol[s].push_back(c / scale);
        const int p = rcs.front().vacancy().at(k);
        for (std::size_t r = 0; r < rcs.size(); ++r)
            for (int j : rcs[r].riggings_for(k))
                f.rc[r].push_back(p > 0 ? (j - 0.5 * p) / (0.5 * p) : 0.0);
    }
    return f;
}

double feature_cost(const std::vector<double>& a, const std::vector<double>& b)
{
    double c = 0.0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        c += (a[i] - b[i]) * (a[i] - b[i]);
    return c;
}

}  // namespace

MatchResult match_rc(const std::vector<BetheRoots>& solutions, const std::vector<StringDecomposition>& strings,
                     const std::vector<RiggedConfiguration>& rcs, double dedup_tol)
{
    const std::size_t n = solutions.size();
    if (strings.size() != n || rcs.size() != n)
        throw InvalidArgument("match_rc needs equally many solutions, decompositions and rigged configurations");
    MatchResult out;
    out.assignment.assign(n, -1);
    if (n == 0)
        return out;
    for (const auto& d : strings)
        if (!d.ok || !(d.nu() == rcs.front().nu()))
            throw InvalidArgument("match_rc needs successful decompositions sharing one configuration");

    const Features f = build_features(strings, rcs);
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = 0; r < n; ++r)
            cost[s][r] = feature_cost(f.sol[s], f.rc[r]);

    // Orbits under negation (solutions) and the flip map (rigged configurations).
    auto orbits_of = [n](auto partner_of) {
        std::vector<std::size_t> fixed;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        std::vector<bool> seen(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[i])
                continue;
            const std::size_t j = partner_of(i);
            seen[i] = true;
            if (j == i || j >= n) {
                fixed.push_back(i);
            } else {
                seen[j] = true;
                pairs.emplace_back(i, j);
            }
        }
        return std::make_pair(fixed, pairs);
    };
    const auto sol_orbits = orbits_of([&](std::size_t i) {
        const BetheRoots neg = negate(solutions[i]);
        for (std::size_t j = 0; j < n; ++j)
            if (same_root_set(neg, solutions[j], dedup_tol))
                return j;
        return n;
    });
    const auto rc_orbits = orbits_of([&](std::size_t i) {
        const RiggedConfiguration fl = flip(rcs[i]);
        for (std::size_t j = 0; j < n; ++j)
            if (rcs[j] == fl)
                return j;
        return n;
    });

    const bool symmetric = sol_orbits.first.size() == rc_orbits.first.size() &&
                           sol_orbits.second.size() == rc_orbits.second.size();
    if (!symmetric) {
        out.note = "negation orbits do not match flip orbits; unconstrained assignment";
        out.assignment = hungarian(cost);
        out.ambiguous = has_tied_optimum(cost, out.assignment);
        return out;
    }

    const auto& sfix = sol_orbits.first;
    const auto& rfix = rc_orbits.first;
    if (!sfix.empty()) {
        std::vector<std::vector<double>> c(sfix.size(), std::vector<double>(rfix.size()));
        for (std::size_t a = 0; a < sfix.size(); ++a)
            for (std::size_t b = 0; b < rfix.size(); ++b)
                c[a][b] = cost[sfix[a]][rfix[b]];
        const auto best = hungarian(c);
        out.ambiguous = out.ambiguous || has_tied_optimum(c, best);
        for (std::size_t a = 0; a < sfix.size(); ++a)
            out.assignment[sfix[a]] = static_cast<int>(rfix[static_cast<std::size_t>(best[a])]);
    }

    const auto& spair = sol_orbits.second;
    const auto& rpair = rc_orbits.second;
    if (!spair.empty()) {
        const std::size_t m = spair.size();
        std::vector<std::vector<double>> c(m, std::vector<double>(m));
        std::vector<std::vector<int>> orient(m, std::vector<int>(m));
        bool orientation_tie = false;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                const auto [s1, s2] = spair[a];
                const auto [r1, r2] = rpair[b];
                const double straight = cost[s1][r1] + cost[s2][r2];
                const double crossed = cost[s1][r2] + cost[s2][r1];
                orient[a][b] = crossed < straight ? 1 : 0;
                c[a][b] = std::min(straight, crossed);
                if (std::abs(straight - crossed) <= 1e-9 * (1.0 + c[a][b]))
                    orient[a][b] = -1;
            }
        const auto best = hungarian(c);
        out.ambiguous = out.ambiguous || has_tied_optimum(c, best);
        for (std::size_t a = 0; a < m; ++a) {
            const auto b = static_cast<std::size_t>(best[a]);
            const auto [s1, s2] = spair[a];
            const auto [r1, r2] = rpair[b];
            if (orient[a][b] < 0)
                orientation_tie = true;
            const bool crossed = orient[a][b] == 1;
            out.assignment[s1] = static_cast<int>(crossed ? r2 : r1);
            out.assignment[s2] = static_cast<int>(crossed ? r1 : r2);
        }
        out.ambiguous = out.ambiguous || orientation_tie;
    }
    if (out.ambiguous)
        out.note = "tied optimal assignments";
    return out;
}

}  // namespace rcbethe
