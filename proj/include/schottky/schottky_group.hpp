#ifndef SCHOTTKY_SCHOTTKY_GROUP_HPP
#define SCHOTTKY_SCHOTTKY_GROUP_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "schottky/heisenberg.hpp"

// Schottky configurations: ordered lists of complex reflections whose
// isometric Cygan balls are pairwise disjoint, plus the two built-in
// one-parameter families used throughout the tests and the CLI.

namespace schottky {

struct PairSeparation {
    std::size_t i = 0;
    std::size_t j = 0;
    double distance = 0.0; // Cygan distance between the centers
    double radius_sum = 0.0;
    double margin = 0.0; // distance - radius_sum
};

struct ValidityReport {
    bool valid = false;
    double min_margin = 0.0;
    std::vector<PairSeparation> pairs; // all i < j, lexicographic order
};

struct SchottkyConfig {
    std::vector<ReflectionGenerator> generators;
    std::optional<ValidityReport> validity;

    std::size_t size() const noexcept { return generators.size(); }
};

// Isometric sphere of g: (center, |lambda|).
std::pair<BoundaryPoint, double> isometric_sphere(const ReflectionGenerator& g);

// Point of the chain fixed by g, at parameter t:
// T_center D_lambda (e^{it}, 0).
BoundaryPoint chain_point(const ReflectionGenerator& g, double t);

// Disjointness test: valid iff every pair of centers is further apart than
// the sum of the isometric-sphere radii.  Sufficient (by the triangle
// inequality) for the ping-pong property; conservative near tangency.
// Throws configuration_error for fewer than two generators.
ValidityReport validate(const SchottkyConfig& cfg);

// Convenience: attach validate's report to the config.
SchottkyConfig with_validity(std::vector<ReflectionGenerator> generators);

// Three chains with centers sec(theta) * {1, w1, w2} (cube roots of unity)
// on the v = 0 plane and radius tan(theta); valid for all theta in
// (0, pi/3).  Throws std::domain_error outside that interval.
SchottkyConfig symmetric_family(double theta);

// Three chains with centers (0, sec^2 theta), (0, -sec^2 theta),
// (-i sec theta, 0) near the standard R-circle and radius tan(theta);
// theta in (0, 9 pi / 40).  Throws std::domain_error outside that interval.
SchottkyConfig rcircle_family(double theta);

enum class Family { symmetric, rcircle };

// Open interval of legal theta for a family builder.
std::pair<double, double> theta_interval(Family family);

SchottkyConfig make_family(Family family, double theta);

// The configuration conjugated by T_translation o d_unit, |unit| = 1:
// centers map to translation * d_unit(center), multipliers to unit * lambda.
// Hausdorff dimension is invariant under this.  Throws std::domain_error if
// |unit| differs from 1 beyond roundoff.
SchottkyConfig conjugate(const SchottkyConfig& cfg, const BoundaryPoint& translation,
    Complex unit);

} // namespace schottky

#endif
