/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <vector>

#include "bethe_roots.hpp"

namespace rcbethe {

// Largest chain length for dense state vectors.
inline constexpr int kMaxStateSites = 16;

// Dense amplitudes over the 2^N spin basis. Site k (1-based) is bit N-k of
// the index and a set bit means spin down, so the order is lexicographic
// with + before -: |++..+> is index 0, |++..+-> index 1.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(int n);  // zero vector
    StateVector(int n, std::vector<cplx> amplitudes);

    int sites() const noexcept { return n_; }
    std::size_t size() const noexcept { return amp_.size(); }
    const std::vector<cplx>& amplitudes() const noexcept { return amp_; }
    cplx& operator[](std::size_t i) { return amp_[i]; }
    const cplx& operator[](std::size_t i) const { return amp_[i]; }

    double norm() const;
    cplx dot(const StateVector& other) const;  // <this|other>
    StateVector& operator*=(cplx s);
    StateVector& operator+=(const StateVector& o);
    StateVector& operator-=(const StateVector& o);

private:
    int n_ = 0;
    std::vector<cplx> amp_;
};

StateVector operator*(cplx s, StateVector v);
StateVector operator-(StateVector a, const StateVector& b);

StateVector vacuum(int n);

// B(lambda)|state> from T = L_N ... L_1, with
// L_k = [[lambda + (i/2) sz_k, (i/2) s-_k], [(i/2) s+_k, lambda - (i/2) sz_k]],
// s+- = sx +- i sy. The column (0, state) is threaded through L_1 first.
StateVector apply_B(cplx lambda, const StateVector& state);

// B(l_1) ... B(l_ell)|0>.
StateVector bethe_vector(const BetheRoots& roots, int n);

// H = sum_k (1/2)(P_{k,k+1} - 1) with periodic boundary, J = 1.
StateVector apply_hamiltonian(const StateVector& state);

// S+ = sum_k s+_k / 2, raising one down spin with unit coefficient.
StateVector apply_s_plus(const StateVector& state);

// N/2 - ell when the state lives in the single sector with ell down spins.
std::optional<double> s_z_eigenvalue(const StateVector& state, double tol = 1e-12);

struct EigenResidual {
    cplx energy;      // Rayleigh quotient
    double residual;  // |H v - E v| / |v|
};

// Throws ZeroVector when |state| <= tol.
EigenResidual eigen_residual(const StateVector& state, double tol = 1e-12);

// The Rayleigh quotient when the relative residual is below tol.
std::optional<cplx> check_eigenvector(const StateVector& state, double tol);

// |S+ v| / |v|.
double highest_weight_residual(const StateVector& state);

// c = 2 i^(N+1) prod_{j>=3} (l_j + 3i/2) / (l_j - i/2) for a singular
// solution; throws PoleInC when a remaining root sits at i/2.
cplx nw_constant(const BetheRoots& roots, int n, double tol = 1e-7);

struct RegularizationReport {
    StateVector vector;                    // unit vector
    cplx c;
    std::vector<double> order_norms;       // |coefficient of eps^d|, d = 0..N+2
    std::vector<double> ladder;            // eps values
    std::vector<double> ladder_differences;  // successive normalised differences
};

// Limit of eps^-N B(i/2 + eps + c eps^N) B(-i/2 + eps) B(l_3) ... |0>, taken
// as the exact eps^N coefficient of the truncated power series in eps. The
// lower coefficients must vanish and the ladder differences must contract;
// otherwise NoConvergence.
RegularizationReport regularized_singular_vector(const BetheRoots& roots, int n, const SolverConfig& cfg);

struct CompletenessReport {
    int rank = 0;
    long target = 0;      // binomial(N, ell) - binomial(N, ell - 1)
    long kernel_dim = 0;  // dim ker S+ in the ell-magnon sector
    std::vector<double> eigen_residuals;
    std::vector<double> highest_weight_residuals;
};

CompletenessReport completeness_check(int n, int ell, const std::vector<StateVector>& vectors);

}  // namespace rcbethe
