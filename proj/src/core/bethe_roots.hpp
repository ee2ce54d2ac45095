/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rcbethe {

using cplx = std::complex<double>;

inline constexpr cplx kHalfI{0.0, 0.5};

// Numerical knobs for the multistart Newton solver.
struct SolverConfig {
    double newton_tol = 1e-11;   // scaled residual required for convergence
    int max_iters = 120;
    double dedup_tol = 1e-6;
    double singular_tol = 1e-7;
    double distinct_tol = 1e-8;
    int random_seeds_per_rc = 4;
    unsigned long long rng_seed = 20140101ULL;
    // Adaptive phase: extra random seeds, stopped after stall_limit seeds
    // in a row produce nothing new.
    int max_random_seeds = 60000;
    int stall_limit = 4000;
    int threads = 1;

    // Throws InvalidArgument when a tolerance is not positive or
    // dedup_tol <= newton_tol.
    void validate() const;
};

// Candidate solution {lambda_1, ..., lambda_ell}; stored in canonical order
// (real part, then imaginary part, compared on a 1e-9 grid).
class BetheRoots {
public:
    BetheRoots() = default;
    explicit BetheRoots(std::vector<cplx> roots);

    const std::vector<cplx>& roots() const noexcept { return roots_; }
    std::size_t size() const noexcept { return roots_.size(); }
    bool empty() const noexcept { return roots_.empty(); }
    const cplx& operator[](std::size_t i) const { return roots_[i]; }

    double min_separation() const;
    bool all_finite() const;
    std::string to_string(int digits = 4) const;

private:
    std::vector<cplx> roots_;
};

// Permutation-invariant comparison: a greedy nearest match within tol.
bool same_root_set(const BetheRoots& a, const BetheRoots& b, double tol);

// F_k = (l_k + i/2)^N prod_{j!=k} (l_k - l_j - i) - (l_k - i/2)^N prod_{j!=k} (l_k - l_j + i).
std::vector<cplx> bae_residual(std::span<const cplx> roots, int n);

// max_k |F_k| / (|first term| + |second term|); 0 when both terms vanish.
double bae_scaled_residual(std::span<const cplx> roots, int n);

// Scaled residual divided by the sensitivity of each equation to relative
// changes of the roots, i.e. a first-order backward error. It stays
// meaningful for strings whose members differ by i up to a tiny deviation,
// where cancellation bounds the plain scaled residual from below.
double bae_backward_error(std::span<const cplx> roots, int n);

// With l_1 = i/2 and l_2 = -i/2 pinned, F_k (k >= 3) carries the factor
// (l_k^2 + 1/4); this is the quotient
// G_k = (l+i/2)^(N-1)(l-3i/2) prod (l-l_j-i) - (l-i/2)^(N-1)(l+3i/2) prod (l-l_j+i).
std::vector<cplx> singular_reduced_residual(std::span<const cplx> rest, int n);
double singular_reduced_scaled_residual(std::span<const cplx> rest, int n);
double singular_reduced_backward_error(std::span<const cplx> rest, int n);

// Solutions in which some 2-strings {c + i/2, c - i/2} are exact to double
// precision. The two member equations of such a string are replaced by their
// product, in which the vanishing factor cancels:
//   (c+i)^N prod_j (c-l_j-i/2)(c-l_j-3i/2) prod_t (d_t-i)^2 (d_t-2i)
//     = (c-i)^N prod_j (c-l_j+3i/2)(c-l_j+i/2) prod_t (d_t+i)^2 (d_t+2i),
// d_t = c - c_t running over the other exact strings.
struct CollapsedRoots {
    std::vector<cplx> centers;
    std::vector<cplx> free;

    BetheRoots expand() const;
};

// Largest |l_a - l_b - i| for which a pair counts as an exact string.
inline constexpr double kExactStringTol = 1e-12;

// Disjoint pairs (upper, lower) with l_upper - l_lower = i within tol.
std::vector<std::pair<std::size_t, std::size_t>> exact_string_pairs(const BetheRoots& roots, double tol);
CollapsedRoots collapse_strings(const BetheRoots& roots,
                                const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

double collapsed_backward_error(const CollapsedRoots& c, int n);

// First-order estimate of l_upper - l_lower - i implied by the upper member's
// own equation, per string; exactness is justified when it is below double
// resolution.
std::vector<cplx> string_deviations(const CollapsedRoots& c, int n);

// Backward error used for convergence and reporting: reduced form when the
// exact pair +-i/2 is present, collapsed form for exact strings, full form
// otherwise.
double solution_residual(const BetheRoots& roots, int n, double singular_tol);

struct NewtonResult {
    std::vector<cplx> roots;  // last iterate, in iteration order
    bool converged = false;
    double residual = 0.0;    // backward error of the last iterate
};

// Damped Newton on the cleared equations with an analytic Jacobian;
// converged when the backward error is below newton_tol and the next step is
// negligible.
NewtonResult newton_iterate(const BetheRoots& seed, int n, const SolverConfig& cfg);
NewtonResult newton_iterate_singular(std::span<const cplx> rest_seed, int n, const SolverConfig& cfg);

NewtonResult newton_iterate_collapsed(const CollapsedRoots& seed, int n, const SolverConfig& cfg);
std::optional<CollapsedRoots> newton_solve_collapsed(const CollapsedRoots& seed, int n, const SolverConfig& cfg);

// Converged roots or nothing.
std::optional<BetheRoots> newton_solve(const BetheRoots& seed, int n, const SolverConfig& cfg);

// Newton on the reduced system; returns {i/2, -i/2, rest...} on success.
std::optional<BetheRoots> newton_solve_singular(std::span<const cplx> rest_seed, int n,
                                                const SolverConfig& cfg);

// All roots of the ell = 3 reduced equation (a single polynomial in one
// unknown), polished by Newton. Returns full solutions {i/2, -i/2, x}.
std::vector<BetheRoots> singular_solutions_ell3(int n, const SolverConfig& cfg);

enum class SolutionClass { Regular, SingularPhysical, SingularNonPhysical, NonDistinct, Unconverged };

const char* to_string(SolutionClass c);

// Indices of the roots sitting at +i/2 and -i/2 (within tol), if both exist.
std::optional<std::pair<std::size_t, std::size_t>> singular_pair(const BetheRoots& roots, double tol);

// Replace the members of the singular pair by exactly +-i/2.
BetheRoots snap_singular(const BetheRoots& roots, double tol);

// Regular / physical singular / non-physical singular / non-distinct.
// Physical iff |(-prod_{j>=3} (l_j + i/2)/(l_j - i/2))^N - 1| < singular_tol.
SolutionClass classify(const BetheRoots& roots, int n, const SolverConfig& cfg);

// E = -(1/2) sum_j 1/(l_j^2 + 1/4), J = 1. Throws DivergentEnergy when a root
// is within tol of +-i/2.
cplx energy(const BetheRoots& roots, double tol = 1e-7);

BetheRoots negate(const BetheRoots& roots);

}  // namespace rcbethe
