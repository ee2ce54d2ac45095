/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "bethe_roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "errors.hpp"

namespace rcbethe {

void SolverConfig::validate() const
{
    if (!(newton_tol > 0 && dedup_tol > 0 && singular_tol > 0 && distinct_tol > 0))
        throw InvalidArgument("solver tolerances must be positive");
    if (!(dedup_tol > newton_tol))
        throw InvalidArgument("dedup_tol must exceed newton_tol");
    if (max_iters < 1 || random_seeds_per_rc < 0 || max_random_seeds < 0 || stall_limit < 1 || threads < 1)
        throw InvalidArgument("solver iteration limits must be positive");
}

namespace {

long long grid(double v) { return std::llround(v * 1e9); }

bool canonical_less(const cplx& a, const cplx& b)
{
    const auto ka = std::make_pair(grid(a.real()), grid(a.imag()));
    const auto kb = std::make_pair(grid(b.real()), grid(b.imag()));
    return ka < kb;
}

}  // namespace

BetheRoots::BetheRoots(std::vector<cplx> roots) : roots_(std::move(roots))
{
    std::sort(roots_.begin(), roots_.end(), canonical_less);
}

double BetheRoots::min_separation() const
{
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots_.size(); ++i)
        for (std::size_t j = i + 1; j < roots_.size(); ++j)
            m = std::min(m, std::abs(roots_[i] - roots_[j]));
    return m;
}

bool BetheRoots::all_finite() const
{
    return std::all_of(roots_.begin(), roots_.end(),
                       [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

std::string BetheRoots::to_string(int digits) const
{
    std::string s = "{";
    char buf[96];
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s%.*f%+.*fi", i ? ", " : "", digits, roots_[i].real(), digits,
                      roots_[i].imag());
        s += buf;
    }
    return s + "}";
}

bool same_root_set(const BetheRoots& a, const BetheRoots& b, double tol)
{
    if (a.size() != b.size())
        return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& z : a.roots()) {
        std::size_t best = b.size();
        double bestd = tol;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j])
                continue;
            const double d = std::abs(z - b[j]);
            if (d < bestd) {
                bestd = d;
                best = j;
            }
        }
        if (best == b.size())
            return false;
        used[best] = true;
    }
    return true;
}

namespace {

// Integer powers via repeated multiplication keep exact zeros exact.
cplx ipow(cplx z, int p)
{
    cplx r{1.0, 0.0};
    for (int i = 0; i < p; ++i)
        r *= z;
    return r;
}

// a(l) = (l + i/2)^p (l - 3i/2) and b(l) = (l - i/2)^p (l + 3i/2); the
// linear factor is dropped when `linear` is false.
struct Prefactors {
    int power;
    bool linear;

    struct Value {
        cplx a, da, b, db;
    };

    Value operator()(cplx l) const
    {
        const cplx u = l + kHalfI;
        const cplx v = l - kHalfI;
        const cplx up = ipow(u, power);
        const cplx vp = ipow(v, power);
        const cplx dup = power == 0 ? cplx{} : double(power) * ipow(u, power - 1);
        const cplx dvp = power == 0 ? cplx{} : double(power) * ipow(v, power - 1);
        if (!linear)
            return {up, dup, vp, dvp};
        const cplx wa = l - cplx(0, 1.5);
        const cplx wb = l + cplx(0, 1.5);
        return {up * wa, dup * wa + up, vp * wb, dvp * wb + vp};
    }
};

struct System {
    Eigen::VectorXcd f;
    Eigen::MatrixXcd jac;
    std::vector<double> scale;  // |first term| + |second term|
    std::vector<double> cond;   // sensitivity of log(first/second) to relative root changes
};

// Residual F_k = a(l_k) prod_j (l_k - l_j - i) - b(l_k) prod_j (l_k - l_j + i)
// and its Jacobian. Leave-one-out products avoid divisions by vanishing factors.
System evaluate(std::span<const cplx> x, const Prefactors& pre, bool want_jacobian)
{
    const std::size_t m = x.size();
    System s;
    s.f.resize(static_cast<Eigen::Index>(m));
    s.scale.assign(m, 0.0);
    s.cond.assign(m, 1.0);
    if (want_jacobian)
        s.jac = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    const cplx I{0.0, 1.0};
    std::vector<cplx> fa, fb, pa(m + 1), sa(m + 1), pb(m + 1), sb(m + 1);
    for (std::size_t k = 0; k < m; ++k) {
        fa.clear();
        fb.clear();
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == k)
                continue;
            fa.push_back(x[k] - x[j] - I);
            fb.push_back(x[k] - x[j] + I);
            idx.push_back(j);
        }
        const std::size_t q = fa.size();
        pa[0] = pb[0] = 1.0;
        for (std::size_t t = 0; t < q; ++t) {
            pa[t + 1] = pa[t] * fa[t];
            pb[t + 1] = pb[t] * fb[t];
        }
        sa[q] = sb[q] = 1.0;
        for (std::size_t t = q; t-- > 0;) {
            sa[t] = sa[t + 1] * fa[t];
            sb[t] = sb[t + 1] * fb[t];
        }
        const auto pv = pre(x[k]);
        const cplx A = pv.a * pa[q];
        const cplx B = pv.b * pb[q];
        const auto ki = static_cast<Eigen::Index>(k);
        s.f[ki] = A - B;
        s.scale[k] = std::abs(A) + std::abs(B);
        if (pv.a != 0.0 && pv.b != 0.0) {
            double c = std::abs(pv.da / pv.a) + std::abs(pv.db / pv.b);
            for (std::size_t t = 0; t < q; ++t)
                c += 2.0 * (1.0 / std::abs(fa[t]) + 1.0 / std::abs(fb[t]));
            if (std::isfinite(c))
                s.cond[k] = std::max(1.0, c * std::max(1.0, std::abs(x[k])));
        }
        if (!want_jacobian)
            continue;
        cplx diag = pv.da * pa[q] - pv.db * pb[q];
        for (std::size_t t = 0; t < q; ++t) {
            const cplx loa = pa[t] * sa[t + 1];
            const cplx lob = pb[t] * sb[t + 1];
            diag += pv.a * loa - pv.b * lob;
            s.jac(ki, static_cast<Eigen::Index>(idx[t])) = -pv.a * loa + pv.b * lob;
        }
        s.jac(ki, ki) = diag;
    }
    return s;
}

double scaled_max(const System& s, bool backward)
{
    double r = 0.0;
    for (Eigen::Index k = 0; k < s.f.size(); ++k) {
        const auto uk = static_cast<std::size_t>(k);
        const double sc = s.scale[uk];
        const double fk = std::abs(s.f[k]);
        if (sc > 0)
            r = std::max(r, fk / sc / (backward ? s.cond[uk] : 1.0));
        else if (fk > 0)
            r = std::numeric_limits<double>::infinity();
    }
    return r;
}

double backward_max(const System& s) { return scaled_max(s, true); }

// Relative size of the next Newton step; infinity when the Jacobian is singular.
double next_step(const System& s, const std::vector<cplx>& x)
{
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(s.jac);
    if (lu.rank() < s.jac.rows())
        return std::numeric_limits<double>::infinity();
    const Eigen::VectorXcd step = lu.solve(s.f);
    double r = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        r = std::max(r, std::abs(step[static_cast<Eigen::Index>(i)]) / std::max(1.0, std::abs(x[i])));
    return std::isfinite(r) ? r : std::numeric_limits<double>::infinity();
}

// Converged when the backward error is below newton_tol and the next
// Newton step is negligible; the second test rejects points where a nearly
// exact string makes the backward error small without a nearby root.
constexpr double kStepTol = 1e-8;

using Evaluator = std::function<System(std::span<const cplx>, bool)>;

NewtonResult newton(std::vector<cplx> x, const Evaluator& eval, const SolverConfig& cfg)
{
    System s = eval(x, true);
    double res = backward_max(s);
    int polish = 0;
    for (int it = 0; it < cfg.max_iters; ++it) {
        if (res < cfg.newton_tol) {
            if (++polish > 2)
                break;
        }
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(s.jac);
        if (lu.rank() < s.jac.rows())
            break;
        const Eigen::VectorXcd step = lu.solve(s.f);
        if (!step.allFinite())
            return {std::move(x), false, res};
        const double fnorm = s.f.norm();
        double t = 1.0;
        std::vector<cplx> trial(x.size());
        System ts;
        bool improved = false;
        for (int h = 0; h < 14; ++h) {
            for (std::size_t i = 0; i < x.size(); ++i)
                trial[i] = x[i] - t * step[static_cast<Eigen::Index>(i)];
            ts = eval(trial, true);
            if (ts.f.allFinite() && ts.f.norm() < fnorm) {
                improved = true;
                break;
            }
            t *= 0.5;
        }
        if (!improved) {
            if (res < cfg.newton_tol)
                break;
            // Stuck in a shallow region: accept the smallest step and continue.
            if (!ts.f.allFinite())
                return {std::move(x), false, res};
        }
        x = trial;
        s = std::move(ts);
        res = backward_max(s);
        for (const auto& z : x)
            if (!(std::abs(z) < 1e4))
                return {std::move(x), false, res};
    }
    const bool ok = res < cfg.newton_tol && next_step(s, x) < kStepTol;
    return {std::move(x), ok, res};
}

const Prefactors full_prefactors(int n) { return {n, false}; }
const Prefactors reduced_prefactors(int n) { return {n - 1, true}; }

Evaluator prefactor_evaluator(const Prefactors& pre)
{
    return [pre](std::span<const cplx> x, bool jac) { return evaluate(x, pre, jac); };
}

// Generic products of linear factors (x_p - x_q + k)^m, used for systems in
// which some 2-strings are exact: variables are the string centers followed
// by the remaining roots.
struct Factor {
    int p;
    int q;  // -1 for none
    cplx k;
    int m;
};

struct Equation {
    int var;  // variable the equation belongs to
    std::vector<Factor> a, b;
};

std::vector<Equation> collapsed_equations(std::size_t strings, std::size_t free, int n)
{
    const cplx I{0.0, 1.0};
    std::vector<Equation> eqs;
    const int s = static_cast<int>(strings);
    const int total = s + static_cast<int>(free);
    for (int c = 0; c < s; ++c) {
        Equation e{c, {{c, -1, I, n}}, {{c, -1, -I, n}}};
        for (int j = s; j < total; ++j) {
            e.a.push_back({c, j, -0.5 * I, 1});
            e.a.push_back({c, j, -1.5 * I, 1});
            e.b.push_back({c, j, 1.5 * I, 1});
            e.b.push_back({c, j, 0.5 * I, 1});
        }
        for (int t = 0; t < s; ++t) {
            if (t == c)
                continue;
            e.a.push_back({c, t, -I, 2});
            e.a.push_back({c, t, -2.0 * I, 1});
            e.b.push_back({c, t, I, 2});
            e.b.push_back({c, t, 2.0 * I, 1});
        }
        eqs.push_back(std::move(e));
    }
    for (int j = s; j < total; ++j) {
        Equation e{j, {{j, -1, 0.5 * I, n}}, {{j, -1, -0.5 * I, n}}};
        for (int k = s; k < total; ++k) {
            if (k == j)
                continue;
            e.a.push_back({j, k, -I, 1});
            e.b.push_back({j, k, I, 1});
        }
        for (int c = 0; c < s; ++c) {
            e.a.push_back({j, c, -1.5 * I, 1});
            e.a.push_back({j, c, -0.5 * I, 1});
            e.b.push_back({j, c, 0.5 * I, 1});
            e.b.push_back({j, c, 1.5 * I, 1});
        }
        eqs.push_back(std::move(e));
    }
    return eqs;
}

System evaluate_factors(std::span<const cplx> x, const std::vector<Equation>& eqs, bool want_jacobian)
{
    const auto m = static_cast<Eigen::Index>(x.size());
    System s;
    s.f.resize(m);
    s.scale.assign(x.size(), 0.0);
    s.cond.assign(x.size(), 1.0);
    if (want_jacobian)
        s.jac = Eigen::MatrixXcd::Zero(m, m);
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        const auto ie = static_cast<Eigen::Index>(e);
        cplx terms[2];
        double cond = 0.0;
        for (int side = 0; side < 2; ++side) {
            const auto& fs = side == 0 ? eqs[e].a : eqs[e].b;
            std::vector<cplx> v(fs.size()), pw(fs.size());
            for (std::size_t i = 0; i < fs.size(); ++i) {
                v[i] = x[static_cast<std::size_t>(fs[i].p)] + fs[i].k;
                if (fs[i].q >= 0)
                    v[i] -= x[static_cast<std::size_t>(fs[i].q)];
                pw[i] = ipow(v[i], fs[i].m);
                cond += fs[i].m / std::abs(v[i]);
            }
            std::vector<cplx> pre(fs.size() + 1, 1.0), suf(fs.size() + 1, 1.0);
            for (std::size_t i = 0; i < fs.size(); ++i)
                pre[i + 1] = pre[i] * pw[i];
            for (std::size_t i = fs.size(); i-- > 0;)
                suf[i] = suf[i + 1] * pw[i];
            terms[side] = pre[fs.size()];
            if (!want_jacobian)
                continue;
            const double sign = side == 0 ? 1.0 : -1.0;
            for (std::size_t i = 0; i < fs.size(); ++i) {
                const cplx d = sign * double(fs[i].m) * ipow(v[i], fs[i].m - 1) * pre[i] * suf[i + 1];
                s.jac(ie, fs[i].p) += d;
                if (fs[i].q >= 0)
                    s.jac(ie, fs[i].q) -= d;
            }
        }
        s.f[ie] = terms[0] - terms[1];
        s.scale[e] = std::abs(terms[0]) + std::abs(terms[1]);
        const double c = cond * std::max(1.0, std::abs(x[static_cast<std::size_t>(eqs[e].var)]));
        if (std::isfinite(c))
            s.cond[e] = std::max(1.0, c);
    }
    return s;
}

Evaluator collapsed_evaluator(std::size_t strings, std::size_t free, int n)
{
    auto eqs = std::make_shared<const std::vector<Equation>>(collapsed_equations(strings, free, n));
    return [eqs](std::span<const cplx> x, bool jac) { return evaluate_factors(x, *eqs, jac); };
}

}  // namespace

std::vector<cplx> bae_residual(std::span<const cplx> roots, int n)
{
    // Exact integer powers for the golden checks.
    const cplx I{0.0, 1.0};
    std::vector<cplx> out;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        cplx A = ipow(roots[k] + kHalfI, n);
        cplx B = ipow(roots[k] - kHalfI, n);
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j == k)
                continue;
            A *= roots[k] - roots[j] - I;
            B *= roots[k] - roots[j] + I;
        }
        out.push_back(A - B);
    }
    return out;
}

double bae_scaled_residual(std::span<const cplx> roots, int n)
{
    return scaled_max(evaluate(roots, full_prefactors(n), false), false);
}

double bae_backward_error(std::span<const cplx> roots, int n)
{
    return backward_max(evaluate(roots, full_prefactors(n), false));
}

std::vector<cplx> singular_reduced_residual(std::span<const cplx> rest, int n)
{
    const System s = evaluate(rest, reduced_prefactors(n), false);
    return {s.f.data(), s.f.data() + s.f.size()};
}

double singular_reduced_scaled_residual(std::span<const cplx> rest, int n)
{
    return scaled_max(evaluate(rest, reduced_prefactors(n), false), false);
}

double singular_reduced_backward_error(std::span<const cplx> rest, int n)
{
    return backward_max(evaluate(rest, reduced_prefactors(n), false));
}

std::optional<std::pair<std::size_t, std::size_t>> singular_pair(const BetheRoots& roots, double tol)
{
    std::optional<std::size_t> up, down;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (!up && std::abs(roots[i] - kHalfI) < tol)
            up = i;
        else if (!down && std::abs(roots[i] + kHalfI) < tol)
            down = i;
    }
    if (up && down)
        return std::make_pair(*up, *down);
    return std::nullopt;
}

BetheRoots snap_singular(const BetheRoots& roots, double tol)
{
    auto pair = singular_pair(roots, tol);
    if (!pair)
        return roots;
    std::vector<cplx> r = roots.roots();
    r[pair->first] = kHalfI;
    r[pair->second] = -kHalfI;
    return BetheRoots(std::move(r));
}

namespace {

std::vector<cplx> rest_of(const BetheRoots& roots, std::pair<std::size_t, std::size_t> pair)
{
    std::vector<cplx> rest;
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (i != pair.first && i != pair.second)
            rest.push_back(roots[i]);
    return rest;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> exact_string_pairs(const BetheRoots& roots, double tol)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t a = 0; a < roots.size(); ++a) {
        if (used[a])
            continue;
        for (std::size_t b = 0; b < roots.size(); ++b) {
            if (b == a || used[b])
                continue;
            if (std::abs(roots[a] - roots[b] - cplx(0.0, 1.0)) <= tol) {
                out.emplace_back(a, b);
                used[a] = used[b] = true;
                break;
            }
        }
    }
    return out;
}

CollapsedRoots collapse_strings(const BetheRoots& roots, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
{
    CollapsedRoots c;
    std::vector<bool> used(roots.size(), false);
    for (const auto& [a, b] : pairs) {
        c.centers.push_back(0.5 * (roots[a] + roots[b]));
        used[a] = used[b] = true;
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (!used[i])
            c.free.push_back(roots[i]);
    return c;
}

BetheRoots CollapsedRoots::expand() const
{
    std::vector<cplx> r = free;
    for (const auto& c : centers) {
        r.push_back(c + kHalfI);
        r.push_back(c - kHalfI);
    }
    return BetheRoots(std::move(r));
}

namespace {

std::vector<cplx> variables(const CollapsedRoots& c)
{
    std::vector<cplx> x = c.centers;
    x.insert(x.end(), c.free.begin(), c.free.end());
    return x;
}

}  // namespace

double collapsed_backward_error(const CollapsedRoots& c, int n)
{
    const auto x = variables(c);
    return backward_max(collapsed_evaluator(c.centers.size(), c.free.size(), n)(x, false));
}

std::vector<cplx> string_deviations(const CollapsedRoots& c, int n)
{
    const BetheRoots all = c.expand();
    std::vector<cplx> out;
    const cplx I{0.0, 1.0};
    for (const auto& center : c.centers) {
        const cplx u = center + kHalfI;
        const cplx v = center - kHalfI;
        cplx num = 2.0 * I * ipow(u - kHalfI, n);
        cplx den = ipow(u + kHalfI, n);
        bool skipped_u = false, skipped_v = false;
        for (const auto& w : all.roots()) {
            if (!skipped_u && w == u) {
                skipped_u = true;
                continue;
            }
            if (!skipped_v && w == v) {
                skipped_v = true;
                continue;
            }
            num *= u - w + I;
            den *= u - w - I;
        }
        out.push_back(num / den);
    }
    return out;
}

NewtonResult newton_iterate_collapsed(const CollapsedRoots& seed, int n, const SolverConfig& cfg)
{
    return newton(variables(seed), collapsed_evaluator(seed.centers.size(), seed.free.size(), n), cfg);
}

std::optional<CollapsedRoots> newton_solve_collapsed(const CollapsedRoots& seed, int n, const SolverConfig& cfg)
{
    auto r = newton_iterate_collapsed(seed, n, cfg);
    if (!r.converged)
        return std::nullopt;
    CollapsedRoots out;
    out.centers.assign(r.roots.begin(), r.roots.begin() + static_cast<std::ptrdiff_t>(seed.centers.size()));
    out.free.assign(r.roots.begin() + static_cast<std::ptrdiff_t>(seed.centers.size()), r.roots.end());
    return out;
}

double solution_residual(const BetheRoots& roots, int n, double singular_tol)
{
    if (auto pair = singular_pair(roots, singular_tol)) {
        const auto rest = rest_of(roots, *pair);
        return rest.empty() ? 0.0 : singular_reduced_backward_error(rest, n);
    }
    const auto pairs = exact_string_pairs(roots, kExactStringTol);
    if (!pairs.empty())
        return collapsed_backward_error(collapse_strings(roots, pairs), n);
    return bae_backward_error(roots.roots(), n);
}

NewtonResult newton_iterate(const BetheRoots& seed, int n, const SolverConfig& cfg)
{
    if (!seed.all_finite())
        throw InvalidArgument("Newton seed must be finite");
    if (seed.empty())
        return {{}, true, 0.0};
    return newton(seed.roots(), prefactor_evaluator(full_prefactors(n)), cfg);
}

NewtonResult newton_iterate_singular(std::span<const cplx> rest_seed, int n, const SolverConfig& cfg)
{
    if (rest_seed.empty())
        return {{}, true, 0.0};
    return newton({rest_seed.begin(), rest_seed.end()}, prefactor_evaluator(reduced_prefactors(n)), cfg);
}

std::optional<BetheRoots> newton_solve(const BetheRoots& seed, int n, const SolverConfig& cfg)
{
    auto r = newton_iterate(seed, n, cfg);
    if (!r.converged)
        return std::nullopt;
    return BetheRoots(std::move(r.roots));
}

std::optional<BetheRoots> newton_solve_singular(std::span<const cplx> rest_seed, int n, const SolverConfig& cfg)
{
    auto r = newton_iterate_singular(rest_seed, n, cfg);
    if (!r.converged)
        return std::nullopt;
    std::vector<cplx> full{kHalfI, -kHalfI};
    full.insert(full.end(), r.roots.begin(), r.roots.end());
    return BetheRoots(std::move(full));
}

std::vector<BetheRoots> singular_solutions_ell3(int n, const SolverConfig& cfg)
{
    // Coefficients (ascending) of (x + a)^p (x + c).
    auto expand = [](cplx a, int p, cplx c) {
        std::vector<cplx> poly{1.0};
        auto mul = [&](cplx root_shift) {
            std::vector<cplx> out(poly.size() + 1, 0.0);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                out[i] += poly[i] * root_shift;
                out[i + 1] += poly[i];
            }
            poly = std::move(out);
        };
        for (int i = 0; i < p; ++i)
            mul(a);
        mul(c);
        return poly;
    };
    const auto pa = expand(kHalfI, n - 1, cplx(0, -1.5));
    const auto pb = expand(-kHalfI, n - 1, cplx(0, 1.5));
    std::vector<cplx> g(pa.size());
    double gmax = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        g[i] = pa[i] - pb[i];
        gmax = std::max(gmax, std::abs(g[i]));
    }
    while (!g.empty() && std::abs(g.back()) <= 1e-12 * gmax)
        g.pop_back();
    std::vector<BetheRoots> out;
    const auto deg = static_cast<Eigen::Index>(g.size()) - 1;
    if (deg < 1)
        return out;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (Eigen::Index i = 1; i < deg; ++i)
        companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < deg; ++i)
        companion(i, deg - 1) = -g[static_cast<std::size_t>(i)] / g.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
    for (Eigen::Index i = 0; i < deg; ++i) {
        const cplx z = es.eigenvalues()[i];
        const cplx seed[1] = {z};
        if (auto sol = newton_solve_singular(seed, n, cfg)) {
            const bool dup = std::any_of(out.begin(), out.end(),
                                         [&](const BetheRoots& o) { return same_root_set(o, *sol, cfg.dedup_tol); });
            if (!dup)
                out.push_back(std::move(*sol));
        }
    }
    return out;
}

const char* to_string(SolutionClass c)
{
    switch (c) {
    case SolutionClass::Regular: return "regular";
    case SolutionClass::SingularPhysical: return "singular_physical";
    case SolutionClass::SingularNonPhysical: return "singular_nonphysical";
    case SolutionClass::NonDistinct: return "non_distinct";
    case SolutionClass::Unconverged: return "unconverged";
    }
    return "?";
}

SolutionClass classify(const BetheRoots& roots, int n, const SolverConfig& cfg)
{
    if (roots.size() > 1 && roots.min_separation() <= cfg.distinct_tol)
        return SolutionClass::NonDistinct;
    auto pair = singular_pair(roots, cfg.singular_tol);
    if (!pair)
        return SolutionClass::Regular;
    cplx prod{1.0, 0.0};
    for (const auto& z : rest_of(roots, *pair))
        prod *= (z + kHalfI) / (z - kHalfI);
    const cplx crit = ipow(-prod, n);
    return std::abs(crit - 1.0) < cfg.singular_tol ? SolutionClass::SingularPhysical
                                                   : SolutionClass::SingularNonPhysical;
}

cplx energy(const BetheRoots& roots, double tol)
{
    cplx e{0.0, 0.0};
    for (const auto& z : roots.roots()) {
        if (std::abs(z - kHalfI) < tol || std::abs(z + kHalfI) < tol)
            throw Error(ErrorCode::DivergentEnergy, "energy diverges at a root +-i/2");
        e += 1.0 / (z * z + 0.25);
    }
    return -0.5 * e;
}

BetheRoots negate(const BetheRoots& roots)
{
    std::vector<cplx> r;
    r.reserve(roots.size());
    for (const auto& z : roots.roots())
        r.push_back(-z);
    return BetheRoots(std::move(r));
}

}  // namespace rcbethe
