#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "schottky/spectral.hpp"

using namespace schottky;

namespace {

const double pi = std::numbers::pi;

TransitionMatrix matrix_from(const std::vector<std::vector<double>>& dense)
{
    const std::size_t n = dense.size();
    std::vector<Word> words;
    std::vector<std::vector<std::pair<std::size_t, double>>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        words.push_back(Word { static_cast<int>(i) });
        for (std::size_t j = 0; j < n; ++j)
            if (dense[i][j] != 0.0)
                rows[i].emplace_back(j, dense[i][j]);
    }
    return TransitionMatrix(std::move(words), std::move(rows));
}

// m x m, zero diagonal, constant off-diagonal entries
TransitionMatrix constant_offdiag(std::size_t m, double t)
{
    std::vector<std::vector<double>> dense(m, std::vector<double>(m, t));
    for (std::size_t i = 0; i < m; ++i)
        dense[i][i] = 0.0;
    return matrix_from(dense);
}

} // namespace

TEST_CASE("entrywise power")
{
    const TransitionMatrix T = matrix_from({ { 0.0, 4.0 }, { 9.0, 0.0 } });

    const TransitionMatrix same = entrywise_power(T, 1.0);
    CHECK(same.entry(0, 1) == 4.0);
    CHECK(same.entry(1, 0) == 9.0);

    const TransitionMatrix roots = entrywise_power(T, 0.5);
    CHECK(roots.entry(0, 1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(roots.entry(1, 0) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(roots.entry(0, 0) == 0.0);

    const TransitionMatrix indicator = entrywise_power(T, 0.0);
    CHECK(indicator.entry(0, 1) == 1.0);
    CHECK(indicator.entry(1, 0) == 1.0);
    CHECK(indicator.entry(1, 1) == 0.0); // 0^0 := 0 keeps the support

    CHECK_THROWS_AS(entrywise_power(T, -0.1), std::domain_error);
}

TEST_CASE("spectral radius by power iteration")
{
    SUBCASE("antidiagonal (periodic support)")
    {
        const SpectralResult r = spectral_radius(matrix_from({ { 0.0, 0.37 }, { 0.37, 0.0 } }));
        CHECK(r.rho == doctest::Approx(0.37).epsilon(1e-12));
    }

    SUBCASE("circulant")
    {
        const SpectralResult r = spectral_radius(constant_offdiag(3, 0.21));
        CHECK(r.rho == doctest::Approx(0.42).epsilon(1e-12));
    }

    SUBCASE("constant row sums with known eigenvector")
    {
        const SpectralResult r = spectral_radius(matrix_from({ { 2.0, 1.0 }, { 1.0, 2.0 } }));
        CHECK(r.rho == doctest::Approx(3.0).epsilon(1e-12));
        REQUIRE(r.eigenvector.size() == 2);
        CHECK(r.eigenvector[0] == doctest::Approx(r.eigenvector[1]).epsilon(1e-10));
        CHECK(r.eigenvector[0] > 0.0);
    }

    SUBCASE("unsymmetric antidiagonal: rho = sqrt(ab)")
    {
        const SpectralResult r = spectral_radius(matrix_from({ { 0.0, 0.9 }, { 0.1, 0.0 } }));
        CHECK(r.rho == doctest::Approx(0.3).epsilon(1e-11));
    }

    SUBCASE("warm start agrees with the uniform start")
    {
        const TransitionMatrix T = transition_matrix(symmetric_family(0.8), 2);
        const SpectralResult a = spectral_radius(T);
        std::vector<double> start(T.dim());
        for (std::size_t i = 0; i < T.dim(); ++i)
            start[i] = 0.1 + static_cast<double>(i % 5);
        const SpectralResult b = spectral_radius(T, start);
        CHECK(a.rho == doctest::Approx(b.rho).epsilon(1e-11));
    }

    SUBCASE("error paths")
    {
        const TransitionMatrix reducible = matrix_from({ { 0.5, 0.5 }, { 0.0, 0.5 } });
        CHECK_THROWS_AS(spectral_radius(reducible), structural_error);

        const TransitionMatrix T = matrix_from({ { 0.0, 1.0 }, { 1.0, 0.0 } });
        const std::vector<double> bad { 1.0, 0.0 };
        CHECK_THROWS_AS(spectral_radius(T, bad), std::domain_error);
        const std::vector<double> wrong_size { 1.0, 1.0, 1.0 };
        CHECK_THROWS_AS(spectral_radius(T, wrong_size), std::domain_error);
    }
}

TEST_CASE("rho(T^alpha) decreases in alpha when entries are below one")
{
    const TransitionMatrix T = transition_matrix(symmetric_family(pi / 5), 2);
    double previous = std::numeric_limits<double>::infinity();
    for (double alpha = 0.0; alpha <= 4.0; alpha += 0.25) {
        const double rho = spectral_radius(entrywise_power(T, alpha)).rho;
        CHECK(rho < previous);
        previous = rho;
    }
}

TEST_CASE("solve_alpha")
{
    SUBCASE("closed form for the 1/192 circulant")
    {
        const AlphaSolve s = solve_alpha(constant_offdiag(3, 1.0 / 192.0), 1.0, 1e-12);
        CHECK(s.converged);
        CHECK(s.method == SolveMethod::newton);
        CHECK(s.alpha == doctest::Approx(std::log(2.0) / std::log(192.0)).epsilon(1e-10));
        CHECK(std::abs(s.rho_at_alpha - 1.0) <= 1e-12);
    }

    SUBCASE("two generators force alpha = 0")
    {
        for (double t : { 0.1, 0.01, 0.7 }) {
            const AlphaSolve s = solve_alpha(constant_offdiag(2, t), 1.0, 1e-12);
            CHECK(s.converged);
            CHECK(std::abs(s.alpha) <= 1e-10);
        }
    }

    SUBCASE("constant-entry closed form log(m-1)/(-log t)")
    {
        for (std::size_t m : { 2u, 3u, 4u })
            for (double t : { 0.1, 0.01 }) {
                const double expected = std::log(static_cast<double>(m - 1)) / (-std::log(t));
                const AlphaSolve s = solve_alpha(constant_offdiag(m, t), 1.0, 1e-13);
                CHECK(s.converged);
                CHECK(std::abs(s.alpha - expected) <= 1e-10);
            }
    }

    SUBCASE("newton and bisection agree")
    {
        for (double theta : { pi / 8, pi / 6, pi / 4 }) {
            const TransitionMatrix T = transition_matrix(symmetric_family(theta), 2);
            const AlphaSolve newton = solve_alpha(T, 1.0, 1e-11);
            const AlphaSolve bisect = solve_alpha_bisection(T, 1e-11);
            CHECK(newton.converged);
            CHECK(bisect.converged);
            CHECK(bisect.method == SolveMethod::bisection);
            CHECK(std::abs(newton.alpha - bisect.alpha) <= 1e-8);
        }
    }

    SUBCASE("uncertifiable bracket")
    {
        CHECK_THROWS_AS(solve_alpha(constant_offdiag(2, 2.0), 1.0, 1e-10), structural_error);
    }

    SUBCASE("bad tolerance")
    {
        CHECK_THROWS_AS(solve_alpha(constant_offdiag(3, 0.1), 1.0, 0.0), std::domain_error);
    }
}

TEST_CASE("dimension pipeline")
{
    SUBCASE("symmetric family at depth 1 meets the closed form")
    {
        const AlphaSolve s = dimension(symmetric_family(pi / 6), 1, 1e-10, Convention::det);
        CHECK(s.converged);
        CHECK(std::abs(s.alpha - std::log(2.0) / std::log(192.0)) < 1e-3);
    }

    SUBCASE("cygan dimension is exactly twice the det dimension")
    {
        for (int depth : { 1, 3 }) {
            const AlphaSolve det = dimension(symmetric_family(pi / 6), depth, 1e-12, Convention::det);
            const AlphaSolve cyg = dimension(symmetric_family(pi / 6), depth, 1e-12, Convention::cygan);
            CHECK(cyg.alpha == doctest::Approx(2.0 * det.alpha).epsilon(1e-6));
        }
    }

    SUBCASE("invariance under translation and unit-dilation conjugation")
    {
        testsupport::Sampler rnd(31);
        for (const SchottkyConfig& cfg : { symmetric_family(pi / 6), rcircle_family(pi / 8) }) {
            const double base = dimension(cfg, 3, 1e-12).alpha;
            const BoundaryPoint shift = rnd.point(2.0, 3.0);
            const Complex unit = rnd.unit_complex();
            const double moved = dimension(conjugate(cfg, shift, unit), 3, 1e-12).alpha;
            CHECK(std::abs(moved - base) < 1e-9);
        }
    }
}

TEST_CASE("theta sweep")
{
    SUBCASE("symmetric curve increases")
    {
        const std::vector<SweepRow> rows
            = theta_sweep(Family::symmetric, 0.1, 1.0, 10, 1, 1e-10);
        REQUIRE(rows.size() == 10);
        CHECK(rows.front().theta == doctest::Approx(0.1).epsilon(1e-15));
        CHECK(rows.back().theta == doctest::Approx(1.0).epsilon(1e-15));
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(rows[i].alpha > rows[i - 1].alpha);
            CHECK(rows[i].converged);
        }
    }

    SUBCASE("two steps hit exactly the endpoints")
    {
        const std::vector<SweepRow> rows = theta_sweep(Family::rcircle, 0.2, 0.5, 2, 2, 1e-10);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].theta == 0.2);
        CHECK(rows[1].theta == 0.5);
        CHECK(rows[0].matrix_dim == 6);
    }

    SUBCASE("range and step guards")
    {
        CHECK_THROWS_AS(theta_sweep(Family::rcircle, 0.1, 0.8, 10, 1, 1e-10), std::domain_error);
        CHECK_THROWS_AS(theta_sweep(Family::symmetric, 0.0, 0.5, 10, 1, 1e-10), std::domain_error);
        CHECK_THROWS_AS(theta_sweep(Family::symmetric, 0.1, 0.5, 1, 1, 1e-10), std::domain_error);
    }
}
