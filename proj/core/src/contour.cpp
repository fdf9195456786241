#include "lfca/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lfca/error.hpp"

namespace lfca {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_centered(const FractalSeries& f, Point center, double radius) {
    if (distance(f.center(), center) > kGeometryTolerance * radius) {
        throw Error(ErrorKind::Mismatch, "contour is not centered at the expansion center");
    }
}

// (1 / ((2 pi)^a i^a)) of the normalized integral of f w^-(k+1): the
// orthogonality table leaves orientation * a_k.
FractalComplex extract(const FractalSeries& f, const CircleContour& c, int k) {
    require_centered(f, c.center, c.radius);
    return f.coeff(k) * static_cast<double>(c.orientation);
}

}  // namespace

CircleContour::CircleContour(Point c, double r, int orient) : center(c), radius(r), orientation(orient) {
    if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorKind::Domain, "contour radius must be positive");
    if (orient != 1 && orient != -1) throw Error(ErrorKind::Domain, "orientation must be +1 or -1");
}

MultiPoleFunction::MultiPoleFunction(Alpha alpha, std::vector<PolePart> poles, FractalSeries entire)
    : alpha_(alpha), poles_(std::move(poles)), entire_(std::move(entire)) {
    if (entire_.alpha() != alpha_) throw Error(ErrorKind::Mismatch, "entire part has a different alpha");
    if (entire_.kmin() < 0) throw Error(ErrorKind::Domain, "entire part has negative powers");
    for (std::size_t i = 0; i < poles_.size(); ++i) {
        const auto& p = poles_[i];
        if (p.principal.alpha() != alpha_) throw Error(ErrorKind::Mismatch, "principal part has a different alpha");
        if (p.principal.center() != p.location) {
            throw Error(ErrorKind::Mismatch, "principal part is not centered at its pole");
        }
        if (p.principal.is_zero() || p.principal.kmax() > -1) {
            throw Error(ErrorKind::Domain, "principal part must be nonzero with only negative powers");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (poles_[j].location == p.location) throw Error(ErrorKind::Domain, "duplicate pole location");
        }
    }
}

FractalComplex MultiPoleFunction::eval_classical(Point z) const {
    if (alpha_.value() != 1.0) {
        throw Error(ErrorKind::Domain, "pointwise evaluation of a multi-pole function requires alpha = 1");
    }
    FractalComplex sum = series_eval_at(entire_, {z.x - entire_.center().x, z.y - entire_.center().y});
    for (const auto& p : poles_) {
        sum += series_eval_at(p.principal, {z.x - p.location.x, z.y - p.location.y});
    }
    return sum;
}

bool encloses(const CircleContour& c, Point p, double tolerance) {
    const double d = distance(c.center, p);
    if (std::abs(d - c.radius) <= tolerance * c.radius) {
        throw Error(ErrorKind::PoleOnContour, "pole lies on the contour");
    }
    return d < c.radius;
}

FractalComplex monomial_circle_integral(int k, Alpha alpha) {
    return k == -1 ? two_pi_i(alpha) : FractalComplex{};
}

FractalComplex contour_integral(const MultiPoleFunction& f, const CircleContour& c, double tolerance) {
    FractalComplex residues;
    for (const auto& p : f.poles()) {
        if (encloses(c, p.location, tolerance)) residues += p.principal.coeff(-1);
    }
    return two_pi_i(f.alpha()) * residues * static_cast<double>(c.orientation);
}

FractalComplex contour_integral(const FractalSeries& f, const CircleContour& c, double tolerance) {
    if (f.kmin() >= 0) return {};
    if (!encloses(c, f.center(), tolerance)) return {};
    return two_pi_i(f.alpha()) * f.coeff(-1) * static_cast<double>(c.orientation);
}

FractalComplex arc_integral(const FractalSeries& f, const CircleContour& c, double theta1, double theta2,
                            DerivativeConvention conv) {
    require_centered(f, c.center, c.radius);
    if (theta1 == theta2) {
        // still reject integrands without a primitive
        (void)series_primitive(f, conv);
        return {};
    }
    const FractalSeries F = series_primitive(f, conv);
    const FractalComplex end = series_eval(F, FractalPolar(c.radius, theta2));
    const FractalComplex start = series_eval(F, FractalPolar(c.radius, theta1));
    return (end - start) * static_cast<double>(c.orientation);
}

FractalComplex cauchy_point_value(const FractalSeries& f, const CircleContour& c) {
    if (f.kmin() < 0) throw Error(ErrorKind::Domain, "Cauchy point value needs a Taylor series");
    return extract(f, c, 0);
}

FractalComplex cauchy_coefficient(const FractalSeries& f, const CircleContour& c, int k) {
    return extract(f, c, k);
}

FractalComplex derivative_via_contour(const FractalSeries& f, const CircleContour& c, int n,
                                      DerivativeConvention conv) {
    if (n < 0) throw Error(ErrorKind::Domain, "derivative order must be non-negative");
    const FractalComplex a = extract(f, c, n);
    const double alpha = f.alpha().value();
    switch (conv) {
        case DerivativeConvention::Canonical: return a * gamma(1.0 + n * alpha);
        case DerivativeConvention::ScaledClassical: {
            double factor = 1.0;
            const double g = gamma(1.0 + alpha);
            for (int j = 1; j <= n; ++j) factor *= j * g;
            return a * factor;
        }
    }
    return a;
}

FractalComplex gauss_mean_value(const FractalSeries& f, Point omega, double R) {
    if (!(R > 0.0)) throw Error(ErrorKind::Domain, "mean-value radius must be positive");
    if (f.kmin() < 0) throw Error(ErrorKind::Domain, "mean value needs a Taylor series");
    require_centered(f, omega, R);
    return f.coeff(0);
}

MlBound ml_bound(const FractalSeries& f, const CircleContour& c, int samples) {
    if (samples < 1) throw Error(ErrorKind::Domain, "ml_bound needs at least one sample");
    require_centered(f, c.center, c.radius);
    const MittagLefflerKernel kernel(f.alpha());
    double m = 0.0;
    for (int j = 0; j < samples; ++j) {
        const FractalPolar p(c.radius, kTwoPi * j / samples);
        m = std::max(m, series_eval(f, p, kernel).abs());
    }
    const double a = f.alpha().value();
    const double length = std::pow(kTwoPi, a) * std::pow(c.radius, a);
    return {m * length, contour_integral(f, c).abs()};
}

MlBound ml_bound(const MultiPoleFunction& f, const CircleContour& c, int samples) {
    if (samples < 1) throw Error(ErrorKind::Domain, "ml_bound needs at least one sample");
    double m = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double t = kTwoPi * j / samples;
        const Point z{c.center.x + c.radius * std::cos(t), c.center.y + c.radius * std::sin(t)};
        m = std::max(m, f.eval_classical(z).abs());
    }
    return {m * kTwoPi * c.radius, contour_integral(f, c).abs()};
}

CircleNodes::CircleNodes(Alpha alpha, double radius, int n) : alpha_(alpha), radius_(radius) {
    if (n < 8) throw Error(ErrorKind::Domain, "quadrature needs at least 8 nodes");
    if (!(radius > 0.0)) throw Error(ErrorKind::Domain, "quadrature radius must be positive");
    const double a = alpha.value();
    const MittagLefflerKernel kernel(alpha);
    const FractalComplex unit = FractalComplex::unit();
    theta_.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double t = kTwoPi * j / n;
        const double next = kTwoPi * (j + 1) / n;
        const FractalComplex w = frac_polar(FractalPolar(radius, t), kernel);
        const double d = std::pow(next, a) - std::pow(t, a);
        theta_.push_back(t);
        dtheta_.push_back(d);
        w_.push_back(w);
        dz_.push_back(unit * w * d);
    }
}

FractalComplex quadrature_sum(const FractalSeries& f, const CircleNodes& nodes) {
    FractalComplex sum;
    for (std::size_t j = 0; j < nodes.size(); ++j) sum += series_eval_at(f, nodes.point(j)) * nodes.measure(j);
    return sum;
}

QuadratureResult quadrature_diagnostic(const FractalSeries& f, const CircleContour& c, int n) {
    require_centered(f, c.center, c.radius);
    const CircleNodes nodes(f.alpha(), c.radius, n);
    const FractalComplex value = quadrature_sum(f, nodes) * static_cast<double>(c.orientation);
    const FractalComplex exact = contour_integral(f, c);
    return {value, exact, (value - exact).abs()};
}

std::vector<QuadratureSweepRow> quadrature_sweep(const FractalSeries& f, const CircleContour& c, int n) {
    require_centered(f, c.center, c.radius);
    const CircleNodes nodes(f.alpha(), c.radius, n);
    const FractalComplex exact = contour_integral(f, c);
    const double sign = static_cast<double>(c.orientation);
    std::vector<QuadratureSweepRow> rows;
    rows.reserve(nodes.size());
    FractalComplex sum;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        sum += series_eval_at(f, nodes.point(j)) * nodes.measure(j);
        const FractalComplex partial = sum * sign;
        rows.push_back({nodes.theta(j), partial, (partial - exact).abs()});
    }
    return rows;
}

}  // namespace lfca
