/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <random>

#include "aba.hpp"
#include "bethe_roots.hpp"
#include "errors.hpp"
#include "solver.hpp"

using namespace rcbethe;

namespace {

const cplx I{0.0, 1.0};
using Mat = Eigen::MatrixXcd;

// Operator acting on site k of n (site 1 is the most significant factor).
Mat site_op(const Mat& op, int k, int n)
{
    Mat out = Mat::Identity(1, 1);
    for (int s = 1; s <= n; ++s) {
        const Mat f = (s == k) ? op : Mat::Identity(2, 2);
        Mat next(out.rows() * 2, out.cols() * 2);
        for (int a = 0; a < out.rows(); ++a)
            for (int b = 0; b < out.cols(); ++b)
                next.block(2 * a, 2 * b, 2, 2) = out(a, b) * f;
        out = next;
    }
    return out;
}

// B(lambda) as the upper-right block of the dense monodromy L_N ... L_1.
Mat dense_B(cplx lambda, int n)
{
    Mat sz(2, 2), sp(2, 2), sm(2, 2);
    sz << 1, 0, 0, -1;
    sp << 0, 2, 0, 0;
    sm << 0, 0, 2, 0;
    const long d = 1L << n;
    const Mat id = Mat::Identity(d, d);
    Mat t00 = id, t01 = Mat::Zero(d, d), t10 = Mat::Zero(d, d), t11 = id;
    for (int k = 1; k <= n; ++k) {
        const Mat a = lambda * id + 0.5 * I * site_op(sz, k, n);
        const Mat b = 0.5 * I * site_op(sm, k, n);
        const Mat c = 0.5 * I * site_op(sp, k, n);
        const Mat e = lambda * id - 0.5 * I * site_op(sz, k, n);
        const Mat n00 = a * t00 + b * t10, n01 = a * t01 + b * t11;
        const Mat n10 = c * t00 + e * t10, n11 = c * t01 + e * t11;
        t00 = n00;
        t01 = n01;
        t10 = n10;
        t11 = n11;
    }
    return t01;
}

double distance(const StateVector& v, const std::vector<cplx>& expected)
{
    double d = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i)
        d = std::max(d, std::abs(v[i] - expected[i]));
    return d;
}

Eigen::VectorXcd to_eigen(const StateVector& v)
{
    Eigen::VectorXcd out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out(static_cast<long>(i)) = v[i];
    return out;
}

// Hamiltonian restricted to the sector with ell down spins, built densely.
Eigen::MatrixXd sector_hamiltonian(int n, int ell, std::vector<std::size_t>& basis)
{
    basis.clear();
    for (std::size_t idx = 0; idx < (std::size_t{1} << n); ++idx)
        if (std::popcount(idx) == ell)
            basis.push_back(idx);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(basis.size(), basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (int k = 0; k < n; ++k) {
            const int j = (k + 1) % n;
            const std::size_t x = basis[a];
            const bool bk = (x >> k) & 1U, bj = (x >> j) & 1U;
            if (bk == bj)
                continue;
            h(a, a) -= 0.5;
            const std::size_t y = x ^ (std::size_t{1} << k) ^ (std::size_t{1} << j);
            const auto b = std::lower_bound(basis.begin(), basis.end(), y) - basis.begin();
            h(b, a) += 0.5;
        }
    return h;
}

}  // namespace

TEST_CASE("apply_B agrees with the dense monodromy matrix")
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n = 1; n <= 4; ++n) {
        StateVector v(n);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = cplx(u(rng), u(rng));
        const cplx lambda(u(rng), u(rng));
        const Eigen::VectorXcd expected = dense_B(lambda, n) * to_eigen(v);
        const auto got = to_eigen(apply_B(lambda, v));
        CHECK((got - expected).norm() < 1e-12);
    }
}

TEST_CASE("golden vectors on four sites")
{
    std::vector<cplx> zero(16, 0.0);
    auto v0 = zero;
    v0[1] = -1.0;
    v0[2] = 1.0;
    v0[4] = -1.0;
    v0[8] = 1.0;
    CHECK(distance(8.0 * apply_B(0.0, vacuum(4)), v0) < 1e-12);

    auto vp = zero;
    vp[1] = 1.0;
    vp[2] = I;
    vp[4] = -1.0;
    vp[8] = -I;
    CHECK(distance((4.0 / cplx(1.0, -1.0)) * apply_B(0.5, vacuum(4)), vp) < 1e-12);

    auto vm = zero;
    vm[1] = 1.0;
    vm[2] = -I;
    vm[4] = -1.0;
    vm[8] = I;
    CHECK(distance((4.0 / cplx(1.0, 1.0)) * apply_B(-0.5, vacuum(4)), vm) < 1e-12);

    const double x = 1.0 / std::sqrt(12.0);
    const std::vector<cplx> psi{0, 0, 0, 1, 0, -2, 1, 0, 0, 1, -2, 0, 1, 0, 0, 0};
    CHECK(distance(13.5 * bethe_vector(BetheRoots({cplx(x), cplx(-x)}), 4), psi) < 1e-12);
}

TEST_CASE("B operators commute")
{
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n = 2; n <= 6; ++n)
        for (int t = 0; t < 50; ++t) {
            const cplx a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng));
            const auto abc = apply_B(a, apply_B(b, apply_B(c, vacuum(n))));
            const auto cab = apply_B(c, apply_B(a, apply_B(b, vacuum(n))));
            const auto bca = apply_B(b, apply_B(c, apply_B(a, vacuum(n))));
            const double scale = std::max(1.0, abc.norm());
            CHECK((abc - cab).norm() < 1e-11 * scale);
            CHECK((abc - bca).norm() < 1e-11 * scale);
        }
}

TEST_CASE("bare singular pair gives the zero vector")
{
    for (int n = 2; n <= 8; ++n)
        CHECK(bethe_vector(BetheRoots({0.5 * I, -0.5 * I}), n).norm() < 1e-10);
    CHECK_THROWS_AS(eigen_residual(bethe_vector(BetheRoots({0.5 * I, -0.5 * I}), 4)), Error);
}

TEST_CASE("spin operators")
{
    CHECK(s_z_eigenvalue(vacuum(5)) == 2.5);
    CHECK(apply_s_plus(vacuum(5)).norm() == 0.0);
    const auto one = apply_B(0.3, vacuum(5));
    CHECK(s_z_eigenvalue(one) == 1.5);
    StateVector mixed = vacuum(3);
    mixed[1] = 1.0;
    CHECK_FALSE(s_z_eigenvalue(mixed).has_value());
    CHECK(highest_weight_residual(apply_B(0.5, vacuum(4))) < 1e-12);
    CHECK(highest_weight_residual(apply_B(0.3, vacuum(4))) > 1e-3);
}

TEST_CASE("Hamiltonian on the vacuum and on one magnon")
{
    CHECK(apply_hamiltonian(vacuum(6)).norm() == 0.0);
    const auto er = eigen_residual(bethe_vector(BetheRoots({cplx(0.5)}), 4));
    CHECK(er.residual < 1e-12);
    CHECK(std::abs(er.energy - energy(BetheRoots({cplx(0.5)}))) < 1e-12);
    CHECK_FALSE(check_eigenvector(apply_B(0.3, vacuum(4)), 1e-8).has_value());
}

TEST_CASE("Bethe energies agree with exact diagonalization")
{
    SolverConfig cfg;
    for (auto [n, ell] : {std::pair{6, 3}, std::pair{8, 2}, std::pair{8, 3}}) {
        std::vector<std::size_t> basis;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sector_hamiltonian(n, ell, basis));
        const auto spectrum = es.eigenvalues();
        for (const auto& rec : solve_all(n, ell, cfg).records) {
            if (rec.cls != SolutionClass::Regular)
                continue;
            const auto v = bethe_vector(rec.roots, n);
            const auto er = eigen_residual(v);
            CHECK(er.residual < 1e-8);
            CHECK(std::abs(er.energy - *rec.energy) < 1e-8);
            double best = 1e9;
            for (long i = 0; i < spectrum.size(); ++i)
                best = std::min(best, std::abs(spectrum(i) - rec.energy->real()));
            CHECK(best < 1e-8);
            CHECK(std::abs(rec.energy->imag()) < 1e-8);
        }
    }
}

TEST_CASE("constant c")
{
    CHECK(std::abs(nw_constant(BetheRoots({0.5 * I, -0.5 * I}), 4) - 2.0 * I) < 1e-15);
    CHECK(std::abs(nw_constant(BetheRoots({0.5 * I, -0.5 * I, cplx(0.0)}), 6) - 6.0 * I) < 1e-14);
    CHECK_THROWS_AS(nw_constant(BetheRoots({cplx(0.1)}), 4), InvalidArgument);
    try {
        nw_constant(BetheRoots({0.5 * I, -0.5 * I, 0.5 * I}), 6);
        FAIL("expected PoleInC");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PoleInC);
    }
}

TEST_CASE("regularized singular vectors are highest weight eigenvectors")
{
    SolverConfig cfg;
    const auto r4 = regularized_singular_vector(BetheRoots({0.5 * I, -0.5 * I}), 4, cfg);
    CHECK(r4.vector.norm() == doctest::Approx(1.0));
    CHECK(std::abs(r4.c - 2.0 * I) < 1e-14);
    // Proportional to |++--> - |+--+> - |-++-> + |--++>.
    const double h = 0.5;
    const cplx phase = r4.vector[3] / std::abs(r4.vector[3]);
    std::vector<cplx> expected(16, 0.0);
    expected[3] = h * phase;
    expected[6] = -h * phase;
    expected[9] = -h * phase;
    expected[12] = h * phase;
    CHECK(distance(r4.vector, expected) < 1e-10);
    CHECK(eigen_residual(r4.vector).residual < 1e-10);
    CHECK(std::abs(eigen_residual(r4.vector).energy - (-1.0)) < 1e-10);

    const auto r6 = regularized_singular_vector(BetheRoots({0.5 * I, -0.5 * I, cplx(0.0)}), 6, cfg);
    CHECK(eigen_residual(r6.vector).residual < 1e-8);
    CHECK(highest_weight_residual(r6.vector) < 1e-9);
    for (std::size_t d = 0; d + 1 < r6.order_norms.size() && d < 6; ++d)
        CHECK(r6.order_norms[d] < 1e-8 * r6.order_norms[6]);
}

TEST_CASE("completeness on four sites")
{
    SolverConfig cfg;
    const double x = 1.0 / std::sqrt(12.0);
    const auto reg = bethe_vector(BetheRoots({cplx(x), cplx(-x)}), 4);
    const auto sing = regularized_singular_vector(BetheRoots({0.5 * I, -0.5 * I}), 4, cfg).vector;
    const auto full = completeness_check(4, 2, {reg, sing});
    CHECK(full.rank == 2);
    CHECK(full.target == 2);
    CHECK(full.kernel_dim == 2);
    CHECK(completeness_check(4, 2, {reg}).rank == 1);
    CHECK(completeness_check(6, 0, {vacuum(6)}).rank == 1);
    CHECK_THROWS_AS(completeness_check(4, 5, {}), InvalidArgument);
}
