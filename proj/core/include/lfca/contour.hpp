#pragma once

// Circle-contour calculus. The normalized integral
//   J_k = (1 / Gamma(1 + a)) \oint (z - z0)^{k a} (dz)^a
// is defined by the orthogonality table J_{-1} = (2 pi)^a i^a, J_k = 0
// otherwise; every formula below (Cauchy point value, coefficient
// extraction, derivatives, residue sums) is evaluated through it. The
// quadrature diagnostic measures how far a discrete Stieltjes sum on the
// parametrized circle lands from that table.

#include <optional>
#include <vector>

#include "lfca/fractal_algebra.hpp"
#include "lfca/series.hpp"

namespace lfca {

/// Relative tolerance for on-contour and same-center tests.
inline constexpr double kGeometryTolerance = 1e-9;

struct CircleContour {
    Point center;
    double radius;
    int orientation;

    CircleContour(Point c, double r, int orient = 1);

    [[nodiscard]] CircleContour reversed() const { return {center, radius, -orientation}; }
};

struct PolePart {
    Point location;
    FractalSeries principal;
};

/// Finitely many poles with principal parts plus one Taylor part.
class MultiPoleFunction {
public:
    MultiPoleFunction(Alpha alpha, std::vector<PolePart> poles, FractalSeries entire);

    [[nodiscard]] Alpha alpha() const noexcept { return alpha_; }
    [[nodiscard]] const std::vector<PolePart>& poles() const noexcept { return poles_; }
    [[nodiscard]] const FractalSeries& entire() const noexcept { return entire_; }

    /// Pointwise value in the ambient plane. Only defined at a = 1, where
    /// (z - p)^a is single valued.
    [[nodiscard]] FractalComplex eval_classical(Point z) const;

private:
    Alpha alpha_;
    std::vector<PolePart> poles_;
    FractalSeries entire_;
};

/// Strictly inside, with the on-circle band excluded. Throws
/// ErrorKind::PoleOnContour when p lies within tolerance of the circle.
[[nodiscard]] bool encloses(const CircleContour& c, Point p, double tolerance = kGeometryTolerance);

[[nodiscard]] FractalComplex monomial_circle_integral(int k, Alpha alpha);

/// orientation (2 pi)^a i^a sum of enclosed a_{-1}.
[[nodiscard]] FractalComplex contour_integral(const MultiPoleFunction& f, const CircleContour& c,
                                              double tolerance = kGeometryTolerance);
/// A single series read as a function with its only singularity at its center.
[[nodiscard]] FractalComplex contour_integral(const FractalSeries& f, const CircleContour& c,
                                              double tolerance = kGeometryTolerance);

/// F(z(theta2)) - F(z(theta1)) with F the primitive, on the circle of radius
/// c.radius about f's center; negated for negative orientation.
[[nodiscard]] FractalComplex arc_integral(const FractalSeries& f, const CircleContour& c, double theta1,
                                          double theta2, DerivativeConvention conv);

// The Cauchy-type formulas below follow the contour's orientation literally:
// a negatively oriented circle flips their sign.

/// f(z0) = a_0 for a Taylor series; c must be centered at f's center.
[[nodiscard]] FractalComplex cauchy_point_value(const FractalSeries& f, const CircleContour& c);

/// a_k, extracted by shifting w^k onto the J_{-1} slot.
[[nodiscard]] FractalComplex cauchy_coefficient(const FractalSeries& f, const CircleContour& c, int k);

/// Canonical: Gamma(1 + n a) a_n. ScaledClassical: n! Gamma(1 + a)^n a_n.
[[nodiscard]] FractalComplex derivative_via_contour(const FractalSeries& f, const CircleContour& c, int n,
                                                    DerivativeConvention conv = DerivativeConvention::Canonical);

/// Circle mean about omega of radius R; equals a_0.
[[nodiscard]] FractalComplex gauss_mean_value(const FractalSeries& f, Point omega, double R);

struct MlBound {
    double bound;
    double witness;
};

[[nodiscard]] MlBound ml_bound(const FractalSeries& f, const CircleContour& c, int samples);
/// Only at a = 1.
[[nodiscard]] MlBound ml_bound(const MultiPoleFunction& f, const CircleContour& c, int samples);

/// Uniform nodes theta_j = 2 pi j / N on a circle, with the parametrized
/// points w_j = R^a E_a(i^a theta_j^a) and the measure factors
/// dz_j = i^a w_j (theta_{j+1}^a - theta_j^a). Reusable across series that
/// share the order and radius.
class CircleNodes {
public:
    CircleNodes(Alpha alpha, double radius, int n);

    [[nodiscard]] Alpha alpha() const noexcept { return alpha_; }
    [[nodiscard]] double radius() const noexcept { return radius_; }
    [[nodiscard]] std::size_t size() const noexcept { return theta_.size(); }
    [[nodiscard]] double theta(std::size_t j) const { return theta_[j]; }
    [[nodiscard]] const FractalComplex& point(std::size_t j) const { return w_[j]; }
    [[nodiscard]] const FractalComplex& measure(std::size_t j) const { return dz_[j]; }
    /// theta_{j+1}^a - theta_j^a
    [[nodiscard]] double increment(std::size_t j) const { return dtheta_[j]; }

private:
    Alpha alpha_;
    double radius_;
    std::vector<double> theta_;
    std::vector<double> dtheta_;
    std::vector<FractalComplex> w_;
    std::vector<FractalComplex> dz_;
};

struct QuadratureResult {
    FractalComplex value;
    FractalComplex contour_value;
    double gap;
};

/// Discrete Stieltjes sum of f (dz)^a over the nodes (orientation applied)
/// against the orthogonality value; gap is their distance.
[[nodiscard]] QuadratureResult quadrature_diagnostic(const FractalSeries& f, const CircleContour& c, int n);
[[nodiscard]] FractalComplex quadrature_sum(const FractalSeries& f, const CircleNodes& nodes);

struct QuadratureSweepRow {
    double theta;
    FractalComplex partial;
    double gap;
};

/// Running sums node by node; the last row carries the full sum and gap.
[[nodiscard]] std::vector<QuadratureSweepRow> quadrature_sweep(const FractalSeries& f, const CircleContour& c,
                                                               int n);

}  // namespace lfca
