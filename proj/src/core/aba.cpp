/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "aba.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <Eigen/Dense>

#include "bigint.hpp"
#include "errors.hpp"

namespace rcbethe {

namespace {

void check_sites(int n)
{
    if (n < 1 || n > kMaxStateSites)
        throw InvalidArgument("state vectors support 1 <= N <= " + std::to_string(kMaxStateSites));
}

// Truncated power series in eps with state-vector coefficients.
struct SeriesState {
    int n;
    std::vector<std::vector<cplx>> coef;  // coef[d][index]

    SeriesState(int sites, std::size_t orders)
        : n(sites), coef(orders, std::vector<cplx>(std::size_t{1} << sites, cplx{}))
    {
    }
};

// B(lambda(eps)) on a series state; lambda given by its series coefficients.
SeriesState apply_B_series(const std::vector<cplx>& lambda, const SeriesState& psi)
{
    const int n = psi.n;
    const std::size_t orders = psi.coef.size();
    const std::size_t dim = std::size_t{1} << n;
    const cplx half_i{0.0, 0.5};
    SeriesState top(n, orders), bottom = psi;
    SeriesState nt(n, orders), nb(n, orders);
    for (int k = 1; k <= n; ++k) {
        const std::size_t mask = std::size_t{1} << (n - k);
        for (std::size_t d = 0; d < orders; ++d) {
            auto& t = nt.coef[d];
            auto& b = nb.coef[d];
            const auto& t0 = top.coef[d];
            const auto& b0 = bottom.coef[d];
            for (std::size_t idx = 0; idx < dim; ++idx) {
                const bool down = idx & mask;
                const double sz = down ? -1.0 : 1.0;
                // (i/2) s-: + -> 2 (-);  (i/2) s+: - -> 2 (+)
                const cplx lower = down ? 2.0 * b0[idx ^ mask] : cplx{};
                const cplx raise = down ? cplx{} : 2.0 * t0[idx | mask];
                t[idx] = half_i * (sz * t0[idx] + lower);
                b[idx] = half_i * (raise - sz * b0[idx]);
            }
        }
        // lambda * top and lambda * bottom as truncated convolutions.
        for (std::size_t d = 0; d < orders; ++d)
            for (std::size_t e = 0; e + d < orders && e < lambda.size(); ++e) {
                if (lambda[e] == cplx{})
                    continue;
                auto& t = nt.coef[d + e];
                auto& b = nb.coef[d + e];
                const auto& t0 = top.coef[d];
                const auto& b0 = bottom.coef[d];
                for (std::size_t idx = 0; idx < dim; ++idx) {
                    t[idx] += lambda[e] * t0[idx];
                    b[idx] += lambda[e] * b0[idx];
                }
            }
        std::swap(top, nt);
        std::swap(bottom, nb);
    }
    return top;
}

SeriesState to_series(const StateVector& v, std::size_t orders)
{
    SeriesState s(v.sites(), orders);
    s.coef[0] = v.amplitudes();
    return s;
}

}  // namespace

StateVector::StateVector(int n) : n_(n)
{
    check_sites(n);
    amp_.assign(std::size_t{1} << n, cplx{});
}

StateVector::StateVector(int n, std::vector<cplx> amplitudes) : n_(n), amp_(std::move(amplitudes))
{
    check_sites(n);
    if (amp_.size() != (std::size_t{1} << n))
        throw InvalidArgument("state vector length must be 2^N");
}

double StateVector::norm() const
{
    double s = 0.0;
    for (const auto& a : amp_)
        s += std::norm(a);
    return std::sqrt(s);
}

cplx StateVector::dot(const StateVector& other) const
{
    cplx s{};
    for (std::size_t i = 0; i < amp_.size(); ++i)
        s += std::conj(amp_[i]) * other.amp_[i];
    return s;
}

StateVector& StateVector::operator*=(cplx s)
{
    for (auto& a : amp_)
        a *= s;
    return *this;
}

StateVector& StateVector::operator+=(const StateVector& o)
{
    for (std::size_t i = 0; i < amp_.size(); ++i)
        amp_[i] += o.amp_[i];
    return *this;
}

StateVector& StateVector::operator-=(const StateVector& o)
{
    for (std::size_t i = 0; i < amp_.size(); ++i)
        amp_[i] -= o.amp_[i];
    return *this;
}

StateVector operator*(cplx s, StateVector v)
{
    v *= s;
    return v;
}

StateVector operator-(StateVector a, const StateVector& b)
{
    a -= b;
    return a;
}

StateVector vacuum(int n)
{
    StateVector v(n);
    v[0] = 1.0;
    return v;
}

StateVector apply_B(cplx lambda, const StateVector& state)
{
    const auto out = apply_B_series({lambda}, to_series(state, 1));
    return StateVector(state.sites(), out.coef[0]);
}

StateVector bethe_vector(const BetheRoots& roots, int n)
{
    if (static_cast<int>(roots.size()) > n)
        throw InvalidArgument("more roots than sites");
    StateVector v = vacuum(n);
    for (std::size_t j = roots.size(); j-- > 0;)
        v = apply_B(roots[j], v);
    return v;
}

StateVector apply_hamiltonian(const StateVector& state)
{
    const int n = state.sites();
    StateVector out(n);
    const std::size_t dim = state.size();
    for (int k = 1; k <= n; ++k) {
        const int k2 = k % n + 1;
        const std::size_t m1 = std::size_t{1} << (n - k);
        const std::size_t m2 = std::size_t{1} << (n - k2);
        for (std::size_t idx = 0; idx < dim; ++idx) {
            const bool b1 = idx & m1;
            const bool b2 = idx & m2;
            if (b1 == b2)
                continue;  // swap acts trivially
            const std::size_t swapped = idx ^ m1 ^ m2;
            out[swapped] += 0.5 * state[idx];
            out[idx] -= 0.5 * state[idx];
        }
    }
    return out;
}

StateVector apply_s_plus(const StateVector& state)
{
    const int n = state.sites();
    StateVector out(n);
    for (std::size_t idx = 0; idx < state.size(); ++idx) {
        if (state[idx] == cplx{})
            continue;
        for (int k = 1; k <= n; ++k) {
            const std::size_t mask = std::size_t{1} << (n - k);
            if (idx & mask)
                out[idx ^ mask] += state[idx];
        }
    }
    return out;
}

std::optional<double> s_z_eigenvalue(const StateVector& state, double tol)
{
    double mx = 0.0;
    for (const auto& a : state.amplitudes())
        mx = std::max(mx, std::abs(a));
    if (mx == 0.0)
        return std::nullopt;
    int sector = -1;
    for (std::size_t idx = 0; idx < state.size(); ++idx) {
        if (std::abs(state[idx]) <= tol * mx)
            continue;
        const int downs = std::popcount(idx);
        if (sector >= 0 && downs != sector)
            return std::nullopt;
        sector = downs;
    }
    return 0.5 * state.sites() - sector;
}

EigenResidual eigen_residual(const StateVector& state, double tol)
{
    const double nv = state.norm();
    if (!(nv > tol))
        throw Error(ErrorCode::ZeroVector, "state vector has (numerically) zero norm");
    const StateVector hv = apply_hamiltonian(state);
    const cplx e = state.dot(hv) / (nv * nv);
    return {e, (hv - e * state).norm() / nv};
}

std::optional<cplx> check_eigenvector(const StateVector& state, double tol)
{
    const auto r = eigen_residual(state, tol);
    if (r.residual < tol)
        return r.energy;
    return std::nullopt;
}

double highest_weight_residual(const StateVector& state)
{
    const double nv = state.norm();
    if (nv == 0.0)
        throw Error(ErrorCode::ZeroVector, "state vector is zero");
    return apply_s_plus(state).norm() / nv;
}

cplx nw_constant(const BetheRoots& roots, int n, double tol)
{
    const auto pair = singular_pair(roots, tol);
    if (!pair)
        throw InvalidArgument("constant c requires the singular pair +-i/2");
    cplx c = 2.0;
    const cplx I{0.0, 1.0};
    for (int i = 0; i < n + 1; ++i)
        c *= I;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        if (j == pair->first || j == pair->second)
            continue;
        if (std::abs(roots[j] - kHalfI) < tol)
            throw Error(ErrorCode::PoleInC, "a remaining root sits at i/2");
        c *= (roots[j] + cplx(0.0, 1.5)) / (roots[j] - kHalfI);
    }
    return c;
}

RegularizationReport regularized_singular_vector(const BetheRoots& roots, int n, const SolverConfig& cfg)
{
    const auto pair = singular_pair(roots, cfg.singular_tol);
    if (!pair)
        throw InvalidArgument("regularization requires a singular solution");
    const cplx c = nw_constant(roots, n, cfg.singular_tol);
    const std::size_t orders = static_cast<std::size_t>(n) + 3;

    SeriesState psi = to_series(vacuum(n), orders);
    for (std::size_t j = 0; j < roots.size(); ++j)
        if (j != pair->first && j != pair->second)
            psi = apply_B_series({roots[j]}, psi);
    std::vector<cplx> lower(orders, cplx{}), upper(orders, cplx{});
    lower[0] = -kHalfI;
    lower[1] = 1.0;
    upper[0] = kHalfI;
    upper[1] = 1.0;
    upper[static_cast<std::size_t>(n)] += c;
    psi = apply_B_series(lower, psi);
    psi = apply_B_series(upper, psi);

    RegularizationReport rep;
    rep.c = c;
    for (const auto& co : psi.coef) {
        double s = 0.0;
        for (const auto& a : co)
            s += std::norm(a);
        rep.order_norms.push_back(std::sqrt(s));
    }
    const auto un = static_cast<std::size_t>(n);
    const double lead = rep.order_norms[un];
    double scale = 0.0;
    for (double v : rep.order_norms)
        scale = std::max(scale, v);
    if (!(lead > 1e-10 * scale))
        throw Error(ErrorCode::NoConvergence, "regularized limit vanishes");
    for (std::size_t d = 0; d < un; ++d)
        if (rep.order_norms[d] > 1e-8 * scale)
            throw Error(ErrorCode::NoConvergence, "eps^-N Psi diverges: order " + std::to_string(d) + " survives");

    // eps^-N Psi(eps) on a geometric ladder, from the retained orders.
    std::vector<StateVector> ladder_vecs;
    for (double ex : {-2.0, -2.5, -3.0}) {
        const double eps = std::pow(10.0, ex);
        std::vector<cplx> amp(psi.coef[0].size(), cplx{});
        double p = 1.0;
        for (std::size_t d = un; d < orders; ++d, p *= eps)
            for (std::size_t i = 0; i < amp.size(); ++i)
                amp[i] += p * psi.coef[d][i];
        StateVector v(n, std::move(amp));
        v *= 1.0 / v.norm();
        rep.ladder.push_back(eps);
        ladder_vecs.push_back(std::move(v));
    }
    StateVector limit(n, psi.coef[un]);
    limit *= 1.0 / limit.norm();
    for (const auto& v : ladder_vecs) {
        // Compare up to phase.
        const cplx ov = limit.dot(v);
        const cplx ph = std::abs(ov) > 0 ? ov / std::abs(ov) : cplx{1.0};
        rep.ladder_differences.push_back((v - ph * limit).norm());
    }
    for (std::size_t i = 1; i < rep.ladder_differences.size(); ++i)
        if (rep.ladder_differences[i] > rep.ladder_differences[i - 1] && rep.ladder_differences[i] > 1e-12)
            throw Error(ErrorCode::NoConvergence, "eps ladder does not contract");
    rep.vector = std::move(limit);
    return rep;
}

CompletenessReport completeness_check(int n, int ell, const std::vector<StateVector>& vectors)
{
    check_sites(n);
    if (ell < 0 || ell > n)
        throw InvalidArgument("magnon number out of range");
    CompletenessReport rep;
    const std::size_t dim = std::size_t{1} << n;
    std::vector<std::size_t> sector, lower_sector;
    for (std::size_t idx = 0; idx < dim; ++idx) {
        const int downs = std::popcount(idx);
        if (downs == ell)
            sector.push_back(idx);
        else if (downs == ell - 1)
            lower_sector.push_back(idx);
    }
    rep.target = static_cast<long>(binomial(n, ell) - binomial(n, ell - 1));

    // Kernel of S+ restricted to the sector.
    if (lower_sector.empty()) {
        rep.kernel_dim = static_cast<long>(sector.size());
    } else {
        std::vector<long> pos(dim, -1);
        for (std::size_t i = 0; i < lower_sector.size(); ++i)
            pos[lower_sector[i]] = static_cast<long>(i);
        Eigen::MatrixXd sp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(lower_sector.size()),
                                                   static_cast<Eigen::Index>(sector.size()));
        for (std::size_t j = 0; j < sector.size(); ++j)
            for (int k = 1; k <= n; ++k) {
                const std::size_t mask = std::size_t{1} << (n - k);
                if (sector[j] & mask)
                    sp(pos[sector[j] ^ mask], static_cast<Eigen::Index>(j)) = 1.0;
            }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sp);
        qr.setThreshold(1e-10);
        rep.kernel_dim = static_cast<long>(sector.size()) - static_cast<long>(qr.rank());
    }

    if (!vectors.empty()) {
        Eigen::MatrixXcd m(static_cast<Eigen::Index>(sector.size()), static_cast<Eigen::Index>(vectors.size()));
        for (std::size_t j = 0; j < vectors.size(); ++j) {
            if (vectors[j].sites() != n)
                throw InvalidArgument("vector has the wrong number of sites");
            const double nv = vectors[j].norm();
            if (nv == 0.0)
                throw Error(ErrorCode::ZeroVector, "completeness input contains a zero vector");
            for (std::size_t i = 0; i < sector.size(); ++i)
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = vectors[j][sector[i]] / nv;
            rep.eigen_residuals.push_back(eigen_residual(vectors[j]).residual);
            rep.highest_weight_residuals.push_back(highest_weight_residual(vectors[j]));
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
        const auto& sv = svd.singularValues();
        const double tol = 1e-8 * std::max(1.0, sv.size() ? sv[0] : 0.0);
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv[i] > tol)
                ++rep.rank;
    }
    return rep;
}

}  // namespace rcbethe
