#include "schottky/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <thread>

namespace schottky {

namespace {

    constexpr std::size_t max_power_iterations = 100'000;
    constexpr double power_tol = 1e-12;
    constexpr int max_newton_iterations = 350;
    constexpr double alpha_lo = 0.0;
    constexpr double alpha_hi = 4.0;
    constexpr double fd_step = 1e-4;

    double l1_norm(std::span<const double> x)
    {
        return std::accumulate(x.begin(), x.end(), 0.0);
    }

} // namespace

TransitionMatrix entrywise_power(const TransitionMatrix& T, double alpha)
{
    if (alpha < 0.0)
        throw std::domain_error("entrywise_power: alpha must be nonnegative");
    if (alpha == 1.0)
        return T;
    if (alpha == 0.0)
        return T.mapped([](double) { return 1.0; });
    return T.mapped([alpha](double x) { return std::pow(x, alpha); });
}

SpectralResult spectral_radius(const TransitionMatrix& T, std::span<const double> start)
{
    const std::size_t n = T.dim();
    if (start.size() != n)
        throw std::domain_error("spectral_radius: start vector has wrong dimension");
    for (double x : start)
        if (!(x > 0.0))
            throw std::domain_error("spectral_radius: start vector must be strictly positive");
    if (!T.strongly_connected())
        throw structural_error("spectral_radius: support is not strongly connected");

    std::vector<double> x(start.begin(), start.end());
    const double s0 = l1_norm(x);
    for (double& xi : x)
        xi /= s0;

    std::vector<double> y(n, 0.0);
    double rho = -1.0;
    for (std::size_t it = 1; it <= max_power_iterations; ++it) {
        T.mat_vec(x, y);
        // For L1-normalized positive x and nonnegative T, ||Tx||_1 is the
        // Perron-root estimate.  The update iterates (rho I + T)x: the
        // damping keeps the iteration convergent on periodic supports and,
        // unlike a fixed +I shift, does not wash out the spectral gap when
        // rho is tiny.
        const double rho_next = l1_norm(y);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = (rho_next * x[i] + y[i]) / (2.0 * rho_next);
        if (std::abs(rho_next - rho) <= power_tol * std::max(1.0, std::abs(rho_next)))
            return { rho_next, std::move(x), it };
        rho = rho_next;
    }
    throw convergence_error("spectral_radius: power iteration did not settle within the cap");
}

SpectralResult spectral_radius(const TransitionMatrix& T)
{
    std::vector<double> start(T.dim(), 1.0 / static_cast<double>(T.dim()));
    return spectral_radius(T, start);
}

namespace {

    // rho(T^alpha) with the eigenvector carried from call to call.
    class RhoEvaluator {
    public:
        explicit RhoEvaluator(const TransitionMatrix& T)
            : T_(T)
            , warm_(T.dim(), 1.0 / static_cast<double>(T.dim()))
        {
        }

        double operator()(double alpha)
        {
            SpectralResult r = spectral_radius(entrywise_power(T_, alpha), warm_);
            warm_ = std::move(r.eigenvector);
            return r.rho;
        }

    private:
        const TransitionMatrix& T_;
        std::vector<double> warm_;
    };

    // rho(T^0) >= 1 and rho(T^4) < 1 make [0,4] a sign bracket for
    // g(alpha) = rho(T^alpha) - 1.
    void certify_bracket(RhoEvaluator& rho)
    {
        const double rho0 = rho(alpha_lo);
        if (rho0 < 1.0 - 1e-9)
            throw structural_error("solve_alpha: rho of the support indicator is below 1");
        const double rho4 = rho(alpha_hi);
        if (!(rho4 < 1.0))
            throw structural_error("solve_alpha: rho(T^4) is not below 1; entries are not contractions");
    }

} // namespace

AlphaSolve solve_alpha_bisection(const TransitionMatrix& T, double tol)
{
    if (!(tol > 0.0))
        throw std::domain_error("solve_alpha_bisection: tol must be positive");
    RhoEvaluator rho(T);
    certify_bracket(rho);

    double lo = alpha_lo;
    double hi = alpha_hi;
    AlphaSolve out;
    out.method = SolveMethod::bisection;

    // g(lo) >= 0 >= g(hi) throughout.
    double alpha = 0.5 * (lo + hi);
    double r = rho(alpha);
    out.iterations = 1;
    while (std::abs(r - 1.0) > tol && hi - lo > 4.0 * std::numeric_limits<double>::epsilon()) {
        if (r > 1.0)
            lo = alpha;
        else
            hi = alpha;
        alpha = 0.5 * (lo + hi);
        r = rho(alpha);
        ++out.iterations;
    }
    // The bracket may collapse onto a root at the boundary (alpha = 0 when
    // rho(T^0) = 1 exactly); report the endpoint in that case.
    if (std::abs(r - 1.0) > tol) {
        const double r_lo = rho(lo);
        if (std::abs(r_lo - 1.0) <= std::abs(r - 1.0)) {
            alpha = lo;
            r = r_lo;
        }
    }
    out.alpha = alpha;
    out.rho_at_alpha = r;
    out.converged = std::abs(r - 1.0) <= tol;
    return out;
}

AlphaSolve solve_alpha(const TransitionMatrix& T, double alpha0, double tol)
{
    if (!(tol > 0.0))
        throw std::domain_error("solve_alpha: tol must be positive");
    RhoEvaluator rho(T);
    certify_bracket(rho);

    double lo = alpha_lo;
    double hi = alpha_hi;
    double alpha = std::clamp(alpha0, lo, hi);
    double g = rho(alpha) - 1.0;
    bool newton_used = false;

    AlphaSolve out;
    for (int it = 0; it < max_newton_iterations && std::abs(g) > tol; ++it) {
        ++out.iterations;
        if (g > 0.0)
            lo = alpha;
        else
            hi = alpha;

        // Finite-difference derivative; one-sided when alpha - h would
        // leave the domain of the entrywise power.
        double der;
        if (alpha - fd_step >= 0.0)
            der = (rho(alpha + fd_step) - rho(alpha - fd_step)) / (2.0 * fd_step);
        else
            der = (rho(alpha + fd_step) - (g + 1.0)) / fd_step;

        double next = alpha - g / der;
        if (!std::isfinite(next) || next < lo || next > hi)
            next = 0.5 * (lo + hi); // Newton left the bracket: bisect instead
        else
            newton_used = true;

        alpha = next;
        g = rho(alpha) - 1.0;
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon())
            break;
    }

    if (std::abs(g) > tol)
        return solve_alpha_bisection(T, tol); // Newton budget exhausted

    out.alpha = alpha;
    out.rho_at_alpha = g + 1.0;
    out.method = newton_used ? SolveMethod::newton : SolveMethod::bisection;
    out.converged = true;
    return out;
}

AlphaSolve dimension(const SchottkyConfig& cfg, int depth, double tol, Convention convention)
{
    const TransitionMatrix T = transition_matrix(cfg, depth, convention);
    return solve_alpha(T, 1.0, tol);
}

std::vector<SweepRow> theta_sweep(Family family, double theta_min, double theta_max,
    int steps, int depth, double tol, Convention convention)
{
    if (steps < 2)
        throw std::domain_error("theta_sweep: steps must be >= 2");
    const auto [lo, hi] = theta_interval(family);
    if (!(theta_min > lo && theta_max < hi && theta_min < theta_max))
        throw std::domain_error("theta_sweep: theta range must lie inside the family interval");

    std::vector<SweepRow> rows(static_cast<std::size_t>(steps));
    const auto compute = [&](std::size_t i) {
        const double theta = theta_min
            + (theta_max - theta_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
        const SchottkyConfig cfg = make_family(family, theta);
        const TransitionMatrix T = transition_matrix(cfg, depth, convention);
        const AlphaSolve solve = solve_alpha(T, 1.0, tol);
        rows[i] = SweepRow { theta, solve.alpha, std::abs(solve.rho_at_alpha - 1.0), T.dim(),
            solve.converged };
    };

    const std::size_t workers = std::min<std::size_t>(
        std::max(1u, std::thread::hardware_concurrency()), rows.size());
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < rows.size(); i += workers)
                compute(i);
        }));
    for (auto& f : futures)
        f.get();
    return rows;
}

} // namespace schottky
