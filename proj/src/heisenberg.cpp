#include "schottky/heisenberg.hpp"

#include <cmath>
#include <limits>

namespace schottky {

namespace {

    bool all_finite(Complex zeta, double v)
    {
        return std::isfinite(zeta.real()) && std::isfinite(zeta.imag()) && std::isfinite(v);
    }

} // namespace

BoundaryPoint::BoundaryPoint(Complex zeta, double v)
    : zeta_(zeta)
    , v_(v)
{
    if (!all_finite(zeta, v))
        throw std::domain_error("BoundaryPoint: coordinates must be finite");
}

void BoundaryPoint::require_finite() const
{
    if (!finite_)
        throw std::logic_error("BoundaryPoint: coordinate access on the point at infinity");
}

ReflectionGenerator::ReflectionGenerator(BoundaryPoint center, Complex lambda)
    : center_(center)
    , lambda_(lambda)
    , radius_(std::abs(lambda))
{
    if (!center.finite())
        throw std::domain_error("ReflectionGenerator: center must be finite");
    if (!all_finite(lambda, 0.0))
        throw std::domain_error("ReflectionGenerator: lambda must be finite");
    if (radius_ == 0.0)
        throw std::domain_error("ReflectionGenerator: lambda must be nonzero");
}

BoundaryPoint group_mul(const BoundaryPoint& p, const BoundaryPoint& q)
{
    if (!p.finite() || !q.finite())
        throw std::domain_error("group_mul: the Heisenberg product is defined on finite points");
    const Complex zeta = p.zeta() + q.zeta();
    const double v = p.v() + q.v() + 2.0 * std::imag(std::conj(p.zeta()) * q.zeta());
    return { zeta, v };
}

BoundaryPoint group_inverse(const BoundaryPoint& p)
{
    if (!p.finite())
        throw std::domain_error("group_inverse: defined on finite points");
    return { -p.zeta(), -p.v() };
}

double cygan_norm(const BoundaryPoint& p)
{
    if (!p.finite())
        throw std::domain_error("cygan_norm: defined on finite points");
    // (|zeta|^4 + v^2)^(1/4), via hypot to dodge overflow in |zeta|^4.
    return std::sqrt(std::hypot(std::norm(p.zeta()), p.v()));
}

double cygan_distance(const BoundaryPoint& p, const BoundaryPoint& q)
{
    if (!p.finite() || !q.finite())
        throw std::domain_error("cygan_distance: the Cygan metric is defined on finite points");
    // |p^{-1} * q|_0.  The conjugation must sit on the first point for the
    // metric to be left-invariant under the group law used here.
    const Complex dz = p.zeta() - q.zeta();
    const double cross = -p.v() + q.v() - 2.0 * std::imag(std::conj(p.zeta()) * q.zeta());
    return std::sqrt(std::hypot(std::norm(dz), cross));
}

BoundaryPoint translate(const BoundaryPoint& by, const BoundaryPoint& p)
{
    if (!by.finite())
        throw std::domain_error("translate: translation parameter must be finite");
    if (!p.finite())
        return BoundaryPoint::infinity();
    return group_mul(by, p);
}

BoundaryPoint dilate(Complex lambda, const BoundaryPoint& p)
{
    if (lambda == Complex { 0.0, 0.0 })
        throw std::domain_error("dilate: lambda must be nonzero");
    if (!p.finite())
        return BoundaryPoint::infinity();
    return { lambda * p.zeta(), std::norm(lambda) * p.v() };
}

BoundaryPoint koranyi_inversion(const BoundaryPoint& p)
{
    if (!p.finite())
        return {};
    const double n2 = std::norm(p.zeta()); // |zeta|^2
    const double den = n2 * n2 + p.v() * p.v();
    if (den < std::numeric_limits<double>::min())
        return BoundaryPoint::infinity();
    // zeta / (|zeta|^2 + i v) with a real denominator.
    const Complex zeta = p.zeta() * Complex { n2, -p.v() } / den;
    return { zeta, -p.v() / den };
}

BoundaryPoint apply_reflection(const ReflectionGenerator& g, const BoundaryPoint& p)
{
    const BoundaryPoint& c = g.center();
    if (!p.finite())
        return c;

    // Offset of p from the center in the group: (Q, S) = T_{-c}(p).
    const Complex q = p.zeta() - c.zeta();
    const double s = p.v() - c.v() - 2.0 * std::imag(std::conj(c.zeta()) * p.zeta());

    const double q2 = std::norm(q);
    const double den = q2 * q2 + s * s; // d(p, center)^4
    if (den < std::numeric_limits<double>::min())
        return BoundaryPoint::infinity();

    // Conjugated Koranyi inversion of the offset: the inner T D iota D T
    // chain collapses to a single rational expression in (Q, S).
    const double r2 = std::norm(g.lambda()); // |lambda|^2
    const Complex zeta_img = r2 * q * Complex { q2, -s } / den;
    const double v_img = -(r2 * r2) * s / den;

    const Complex zeta = c.zeta() + zeta_img;
    const double v = c.v() + v_img + 2.0 * std::imag(std::conj(c.zeta()) * zeta_img);
    return { zeta, v };
}

double jacobian_det(const ReflectionGenerator& g, const BoundaryPoint& p)
{
    const double f = distortion_factor(g, p);
    return (f * f) * (f * f);
}

double distortion_factor(const ReflectionGenerator& g, const BoundaryPoint& p)
{
    if (!p.finite())
        throw singularity_error("distortion_factor: singular at infinity");
    const double d = cygan_distance(p, g.center());
    if (d < 1e-12 * g.radius())
        throw singularity_error("distortion_factor: evaluation point at the reflection center");
    const double d2 = d * d;
    const double r2 = std::norm(g.lambda());
    return r2 / d2;
}

} // namespace schottky
