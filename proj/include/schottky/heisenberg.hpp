#ifndef SCHOTTKY_HEISENBERG_HPP
#define SCHOTTKY_HEISENBERG_HPP

#include <complex>

#include "schottky/errors.hpp"

// Boundary arithmetic of the complex hyperbolic plane in Heisenberg
// coordinates: the one-point compactification of C x R with the twisted
// product
//
//     (zeta, v) * (xi, t) = (zeta + xi, v + t + 2 Im(conj(zeta) xi)),
//
// the Cygan metric induced by the norm |(zeta, v)|_0 = ||zeta|^2 + i v|^(1/2),
// and the boundary actions that generate complex Schottky groups:
// Heisenberg translations, complex dilatations, the Koranyi inversion and
// its conjugates (complex reflections in finite chains).

namespace schottky {

using Complex = std::complex<double>;

// A point of the Heisenberg boundary: either a finite point (zeta, v) or the
// distinguished point at infinity, which carries no coordinates.
class BoundaryPoint {
public:
    BoundaryPoint() = default; // the origin (0, 0)

    // Finite point.  Rejects NaN/infinite coordinates.
    BoundaryPoint(Complex zeta, double v);

    static BoundaryPoint infinity() noexcept
    {
        BoundaryPoint p;
        p.finite_ = false;
        return p;
    }

    bool finite() const noexcept { return finite_; }

    Complex zeta() const
    {
        require_finite();
        return zeta_;
    }

    double v() const
    {
        require_finite();
        return v_;
    }

    friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) noexcept
    {
        if (a.finite_ != b.finite_)
            return false;
        if (!a.finite_)
            return true;
        return a.zeta_ == b.zeta_ && a.v_ == b.v_;
    }

private:
    void require_finite() const;

    Complex zeta_ { 0.0, 0.0 };
    double v_ = 0.0;
    bool finite_ = true;
};

// Generating data of a complex reflection: the reflection in the finite
// chain T_center D_lambda (S^1 x {0}).  Its isometric sphere is the Cygan
// sphere of the given center and radius |lambda|, and the reflection swaps
// the center with infinity.
class ReflectionGenerator {
public:
    // center must be finite, lambda nonzero; throws std::domain_error
    // otherwise.
    ReflectionGenerator(BoundaryPoint center, Complex lambda);

    const BoundaryPoint& center() const noexcept { return center_; }
    Complex lambda() const noexcept { return lambda_; }
    double radius() const noexcept { return radius_; } // |lambda|

private:
    BoundaryPoint center_;
    Complex lambda_;
    double radius_;
};

// Heisenberg product p * q.  Throws std::domain_error on an infinite operand.
BoundaryPoint group_mul(const BoundaryPoint& p, const BoundaryPoint& q);

// Group inverse (-zeta, -v).
BoundaryPoint group_inverse(const BoundaryPoint& p);

// Heisenberg norm |(zeta, v)|_0 = (|zeta|^4 + v^2)^(1/4).
double cygan_norm(const BoundaryPoint& p);

// Cygan distance d(p, q) = |(zeta1 - zeta2, -v1 + v2 - 2 Im(conj(zeta2) zeta1))|_0.
// Throws std::domain_error on an infinite operand.
double cygan_distance(const BoundaryPoint& p, const BoundaryPoint& q);

// Heisenberg translation T_by(p) = by * p; fixes infinity.  A Cygan isometry.
BoundaryPoint translate(const BoundaryPoint& by, const BoundaryPoint& p);

// Complex dilatation d_lambda(zeta, v) = (lambda zeta, |lambda|^2 v); fixes
// infinity, scales Cygan distances from the origin by |lambda|.  Throws
// std::domain_error for lambda = 0.
BoundaryPoint dilate(Complex lambda, const BoundaryPoint& p);

// Koranyi inversion, the complex reflection in the unit chain S^1 x {0}:
//
//     iota(zeta, v) = ( zeta / (|zeta|^2 + i v),  -v / (|zeta|^4 + v^2) ),
//
// with iota(0) = infinity and iota(infinity) = 0.  An involution; fixes the
// unit chain pointwise and satisfies d(iota p, iota q) = d(p, q) / (|p|_0 |q|_0).
BoundaryPoint koranyi_inversion(const BoundaryPoint& p);

// The complex reflection induced by g: the Koranyi inversion conjugated by
// T_center D_lambda.  Swaps center(g) and infinity, fixes the chain of g
// pointwise, involutive.  Total on the compactified boundary.
BoundaryPoint apply_reflection(const ReflectionGenerator& g, const BoundaryPoint& p);

// |det| of the Jacobian of apply_reflection(g, .) as a map of three real
// variables, in closed form:
//
//     |det J| = (|lambda|^2 / d(p, center)^2)^4,
//
// the fourth power of the Cygan scaling factor: the reflection contracts the
// two horizontal directions by the scaling factor and the vertical direction
// by its square, so the Euclidean volume element picks up the factor to the
// homogeneous dimension 4.  Cross-checked against central finite differences
// in the tests.  Throws singularity_error at infinity or within
// 1e-12 * radius of the center.
double jacobian_det(const ReflectionGenerator& g, const BoundaryPoint& p);

// Local Cygan scaling factor |det J|^(1/4) = |lambda|^2 / d(p, center)^2,
// consistent with d(gz, gw) = r^2 d(z, w) / (d(z, c) d(w, c)).
double distortion_factor(const ReflectionGenerator& g, const BoundaryPoint& p);

} // namespace schottky

#endif
