#ifndef SCHOTTKY_TESTS_SUPPORT_HPP
#define SCHOTTKY_TESTS_SUPPORT_HPP

#include <cmath>
#include <numbers>
#include <random>

#include "schottky/heisenberg.hpp"

// Shared helpers for the test suites.  The finite-difference Jacobian here
// is the independent oracle for the closed-form determinant; it must stay
// free of any call to jacobian_det/distortion_factor.

namespace testsupport {

using schottky::BoundaryPoint;
using schottky::Complex;
using schottky::ReflectionGenerator;

// Coordinate distance max(|zeta1 - zeta2|, |v1 - v2|).  Point-agreement
// tolerances live on coordinates: the Cygan metric scales like the square
// root of small vertical displacements, so machine-level coordinate noise
// would read as ~1e-8 in Cygan distance.
inline double coord_dist(const BoundaryPoint& a, const BoundaryPoint& b)
{
    if (!a.finite() || !b.finite())
        return a.finite() == b.finite() ? 0.0 : std::numeric_limits<double>::infinity();
    return std::max(std::abs(a.zeta() - b.zeta()), std::abs(a.v() - b.v()));
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed)
        : rng_(seed)
    {
    }

    double uniform(double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    Complex unit_complex() { return std::polar(1.0, uniform(-std::numbers::pi, std::numbers::pi)); }

    BoundaryPoint point(double zeta_box, double v_box)
    {
        return { Complex { uniform(-zeta_box, zeta_box), uniform(-zeta_box, zeta_box) },
            uniform(-v_box, v_box) };
    }

    // Point of Heisenberg norm 1: |zeta|^4 + v^2 = 1.
    BoundaryPoint unit_sphere_point()
    {
        const double a = uniform(0.0, 1.0); // |zeta|^2
        const double v = (uniform(-1.0, 1.0) > 0 ? 1.0 : -1.0) * std::sqrt(1.0 - a * a);
        return { std::polar(std::sqrt(a), uniform(-std::numbers::pi, std::numbers::pi)), v };
    }

    // Point at exact Cygan distance dist from the center of g.
    BoundaryPoint at_distance(const ReflectionGenerator& g, double dist)
    {
        return schottky::translate(g.center(),
            schottky::dilate(Complex { dist, 0.0 }, unit_sphere_point()));
    }

    // Point with d(p, center) / radius log-uniform in [0.1, 10].
    BoundaryPoint near_generator(const ReflectionGenerator& g)
    {
        return at_distance(g, g.radius() * std::pow(10.0, uniform(-1.0, 1.0)));
    }

    ReflectionGenerator generator(double zeta_box, double v_box, double r_lo, double r_hi)
    {
        return { point(zeta_box, v_box),
            std::polar(uniform(r_lo, r_hi), uniform(-std::numbers::pi, std::numbers::pi)) };
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// |det| of the central finite-difference Jacobian of apply_reflection as a
// map of three real variables.  The step is snapped to the representable
// difference of the perturbed coordinates.
inline double fd_jacobian_det(const ReflectionGenerator& g, const BoundaryPoint& p, double h)
{
    const double base[3] = { p.zeta().real(), p.zeta().imag(), p.v() };
    double J[3][3];
    for (int k = 0; k < 3; ++k) {
        double hi[3] = { base[0], base[1], base[2] };
        double lo[3] = { base[0], base[1], base[2] };
        hi[k] += h;
        lo[k] -= h;
        const double span = hi[k] - lo[k];
        const BoundaryPoint fp = apply_reflection(g, { Complex { hi[0], hi[1] }, hi[2] });
        const BoundaryPoint fm = apply_reflection(g, { Complex { lo[0], lo[1] }, lo[2] });
        J[0][k] = (fp.zeta().real() - fm.zeta().real()) / span;
        J[1][k] = (fp.zeta().imag() - fm.zeta().imag()) / span;
        J[2][k] = (fp.v() - fm.v()) / span;
    }
    return std::abs(J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1])
        - J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0])
        + J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]));
}

} // namespace testsupport

#endif
