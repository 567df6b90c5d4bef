#ifndef SCHOTTKY_SPECTRAL_HPP
#define SCHOTTKY_SPECTRAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "schottky/markov.hpp"

// The eigenvalue algorithm: the dimension estimate at a given refinement
// depth is the alpha solving rho(T^alpha) = 1, where T^alpha is the
// entrywise power of the transition matrix and rho the Perron-Frobenius
// spectral radius.  rho(T^alpha) is strictly decreasing in alpha whenever
// every positive entry is < 1, so the root is bracketed by
// rho(T^0) >= 1 (the support indicator) and rho(T^4) < 1 (4 = homogeneous
// dimension of the Heisenberg boundary).

namespace schottky {

// Entrywise power with the 0^0 := 0 convention: the support is preserved
// for every alpha >= 0.  Throws std::domain_error for negative alpha.
TransitionMatrix entrywise_power(const TransitionMatrix& T, double alpha);

struct SpectralResult {
    double rho = 0.0;
    std::vector<double> eigenvector; // positive, L1-normalized
    std::size_t iterations = 0;
};

// Perron root and positive eigenvector by damped power iteration (the
// iteration matrix rho I + T stays convergent on periodic supports, e.g.
// two generators).  Requires strongly connected support (structural_error)
// and a strictly positive start vector (std::domain_error); gives up after
// 1e5 iterations (convergence_error).
SpectralResult spectral_radius(const TransitionMatrix& T, std::span<const double> start);
SpectralResult spectral_radius(const TransitionMatrix& T); // uniform start

enum class SolveMethod { newton, bisection };

struct AlphaSolve {
    double alpha = 0.0;
    double rho_at_alpha = 0.0;
    int iterations = 0;
    SolveMethod method = SolveMethod::newton;
    bool converged = false;
};

// Solve rho(T^alpha) = 1 for alpha in [0, 4] to |rho - 1| <= tol.
// Newton iteration on g(alpha) = rho(T^alpha) - 1 with a finite-difference
// derivative (step 1e-4), each spectral radius warm-started from the
// previous eigenvector; any Newton step leaving the current sign bracket is
// replaced by a bisection step, and a full bisection pass takes over if 350
// iterations pass without convergence.  Throws structural_error when the
// bracket cannot be certified.
AlphaSolve solve_alpha(const TransitionMatrix& T, double alpha0, double tol);

// Pure bisection on [0, 4]; same certification and convergence criterion.
AlphaSolve solve_alpha_bisection(const TransitionMatrix& T, double tol);

// End-to-end dimension estimate: transition matrix at the given depth, then
// solve_alpha started from 1.
AlphaSolve dimension(const SchottkyConfig& cfg, int depth, double tol,
    Convention convention = Convention::det);

struct SweepRow {
    double theta = 0.0;
    double alpha = 0.0;
    double residual = 0.0; // |rho(T^alpha) - 1|
    std::size_t matrix_dim = 0;
    bool converged = false;
};

// Dimension estimates of a built-in family over an even theta grid
// (endpoints included), rows in ascending theta.  Grid points are computed
// in parallel; the result does not depend on scheduling.
std::vector<SweepRow> theta_sweep(Family family, double theta_min, double theta_max,
    int steps, int depth, double tol, Convention convention = Convention::det);

} // namespace schottky

#endif
