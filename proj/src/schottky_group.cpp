#include "schottky/schottky_group.hpp"

#include <cmath>
#include <numbers>

namespace schottky {

std::pair<BoundaryPoint, double> isometric_sphere(const ReflectionGenerator& g)
{
    return { g.center(), g.radius() };
}

BoundaryPoint chain_point(const ReflectionGenerator& g, double t)
{
    const BoundaryPoint on_unit_chain { Complex { std::cos(t), std::sin(t) }, 0.0 };
    return translate(g.center(), dilate(g.lambda(), on_unit_chain));
}

ValidityReport validate(const SchottkyConfig& cfg)
{
    const std::size_t m = cfg.size();
    if (m < 2)
        throw configuration_error("validate: at least 2 chains required");

    ValidityReport report;
    report.valid = true;
    bool first = true;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            PairSeparation sep;
            sep.i = i;
            sep.j = j;
            sep.distance = cygan_distance(cfg.generators[i].center(), cfg.generators[j].center());
            sep.radius_sum = cfg.generators[i].radius() + cfg.generators[j].radius();
            sep.margin = sep.distance - sep.radius_sum;
            if (first || sep.margin < report.min_margin)
                report.min_margin = sep.margin;
            first = false;
            if (sep.margin <= 0.0)
                report.valid = false;
            report.pairs.push_back(sep);
        }
    }
    return report;
}

SchottkyConfig with_validity(std::vector<ReflectionGenerator> generators)
{
    SchottkyConfig cfg { std::move(generators), std::nullopt };
    cfg.validity = validate(cfg);
    return cfg;
}

SchottkyConfig symmetric_family(double theta)
{
    if (!(theta > 0.0 && theta < std::numbers::pi / 3.0))
        throw std::domain_error("symmetric_family: theta must lie in (0, pi/3)");

    const double sec = 1.0 / std::cos(theta);
    const double tan = std::tan(theta);
    const Complex w1 = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const Complex w2 = std::polar(1.0, 4.0 * std::numbers::pi / 3.0);

    std::vector<ReflectionGenerator> gens;
    gens.reserve(3);
    for (const Complex& root : { Complex { 1.0, 0.0 }, w1, w2 })
        gens.emplace_back(BoundaryPoint { sec * root, 0.0 }, Complex { tan, 0.0 });
    return with_validity(std::move(gens));
}

SchottkyConfig rcircle_family(double theta)
{
    if (!(theta > 0.0 && theta < 9.0 * std::numbers::pi / 40.0))
        throw std::domain_error("rcircle_family: theta must lie in (0, 9*pi/40)");

    const double sec = 1.0 / std::cos(theta);
    const double tan = std::tan(theta);
    const Complex lambda { tan, 0.0 };

    std::vector<ReflectionGenerator> gens;
    gens.reserve(3);
    gens.emplace_back(BoundaryPoint { Complex { 0.0, 0.0 }, sec * sec }, lambda);
    gens.emplace_back(BoundaryPoint { Complex { 0.0, 0.0 }, -sec * sec }, lambda);
    gens.emplace_back(BoundaryPoint { Complex { 0.0, -sec }, 0.0 }, lambda);
    return with_validity(std::move(gens));
}

std::pair<double, double> theta_interval(Family family)
{
    switch (family) {
    case Family::symmetric:
        return { 0.0, std::numbers::pi / 3.0 };
    case Family::rcircle:
        return { 0.0, 9.0 * std::numbers::pi / 40.0 };
    }
    throw std::domain_error("theta_interval: unknown family");
}

SchottkyConfig make_family(Family family, double theta)
{
    return family == Family::symmetric ? symmetric_family(theta) : rcircle_family(theta);
}

SchottkyConfig conjugate(const SchottkyConfig& cfg, const BoundaryPoint& translation,
    Complex unit)
{
    if (std::abs(std::abs(unit) - 1.0) > 1e-12)
        throw std::domain_error("conjugate: dilation factor must have unit modulus");

    std::vector<ReflectionGenerator> gens;
    gens.reserve(cfg.size());
    for (const ReflectionGenerator& g : cfg.generators)
        gens.emplace_back(translate(translation, dilate(unit, g.center())), unit * g.lambda());

    SchottkyConfig out { std::move(gens), std::nullopt };
    if (cfg.size() >= 2)
        out.validity = validate(out);
    return out;
}

} // namespace schottky
