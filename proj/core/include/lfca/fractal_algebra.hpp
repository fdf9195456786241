#pragma once

// Scalar layer of the fractal plane: the order parameter, the field of
// values a + i^a b with (i^a)^2 = -1, Euler gamma, Gamma-ratio with pole
// limits, and the Mittag-Leffler kernel used by the circle parametrization
// (z - z0)^a = r^a E_a(i^a theta^a).

#include <cmath>
#include <numbers>
#include <vector>

namespace lfca {

/// Fractal order 0 < a <= 1.
class Alpha {
public:
    explicit Alpha(double value);

    [[nodiscard]] double value() const noexcept { return value_; }

    friend bool operator==(Alpha, Alpha) = default;

private:
    double value_;
};

/// A point of the ambient plane (expansion centers, pole locations).
struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

[[nodiscard]] inline double distance(Point a, Point b) noexcept {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// re + i^a im. The unit squares to -1, so the arithmetic is that of the
/// complex field whatever the order; at a = 1 it is ordinary complex.
struct FractalComplex {
    double re = 0.0;
    double im = 0.0;

    constexpr FractalComplex() = default;
    constexpr FractalComplex(double r, double i = 0.0) : re(r), im(i) {}

    [[nodiscard]] static constexpr FractalComplex unit() { return {0.0, 1.0}; }

    [[nodiscard]] double abs() const noexcept { return std::hypot(re, im); }
    [[nodiscard]] constexpr FractalComplex conj() const noexcept { return {re, -im}; }
    [[nodiscard]] constexpr bool is_zero() const noexcept { return re == 0.0 && im == 0.0; }

    constexpr FractalComplex& operator+=(const FractalComplex& o) noexcept {
        re += o.re;
        im += o.im;
        return *this;
    }
    constexpr FractalComplex& operator-=(const FractalComplex& o) noexcept {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    constexpr FractalComplex& operator*=(const FractalComplex& o) noexcept {
        const double r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    constexpr FractalComplex& operator*=(double s) noexcept {
        re *= s;
        im *= s;
        return *this;
    }

    friend constexpr FractalComplex operator+(FractalComplex a, const FractalComplex& b) noexcept { return a += b; }
    friend constexpr FractalComplex operator-(FractalComplex a, const FractalComplex& b) noexcept { return a -= b; }
    friend constexpr FractalComplex operator*(FractalComplex a, const FractalComplex& b) noexcept { return a *= b; }
    friend constexpr FractalComplex operator*(FractalComplex a, double s) noexcept { return a *= s; }
    friend constexpr FractalComplex operator*(double s, FractalComplex a) noexcept { return a *= s; }
    friend constexpr FractalComplex operator-(const FractalComplex& a) noexcept { return {-a.re, -a.im}; }
    friend constexpr bool operator==(const FractalComplex&, const FractalComplex&) = default;
};

[[nodiscard]] FractalComplex fc_mul(const FractalComplex& a, const FractalComplex& b) noexcept;

/// Throws ErrorKind::DivisionByZero when b is (0, 0).
[[nodiscard]] FractalComplex fc_div(const FractalComplex& a, const FractalComplex& b);

/// Integer power in the field; negative exponents go through fc_div.
[[nodiscard]] FractalComplex fc_pow(FractalComplex base, int exponent);

inline FractalComplex operator/(const FractalComplex& a, const FractalComplex& b) { return fc_div(a, b); }

/// Radius and angle. Angles are reduced into [0, 2pi]; the closed endpoint
/// 2pi is kept because E_a(i^a theta^a) is not periodic for a < 1.
struct FractalPolar {
    double r;
    double theta;

    FractalPolar(double radius, double angle);
};

/// Euler gamma for x > 0 (Lanczos, g = 7, with reflection below 1/2).
[[nodiscard]] double gamma(double x);

/// Gamma(1 + k a) / Gamma(1 + (k - 1) a). When both arguments sit on poles
/// the ratio is the limit under a common shift of both arguments; a pole in
/// the denominator only gives 0 and a pole in the numerator only throws
/// ErrorKind::GammaPole.
[[nodiscard]] double gamma_ratio(int k, Alpha alpha);

struct MittagLefflerOptions {
    double tolerance = 1e-15;
    int max_terms = 1000;
};

/// E_a(w) = sum_k w^k / Gamma(1 + k a) by direct summation.
[[nodiscard]] FractalComplex mittag_leffler(Alpha alpha, const FractalComplex& w,
                                            const MittagLefflerOptions& options = {});

/// Same sum with the reciprocal gammas cached, for repeated evaluation at
/// one order.
class MittagLefflerKernel {
public:
    explicit MittagLefflerKernel(Alpha alpha, MittagLefflerOptions options = {});

    [[nodiscard]] FractalComplex operator()(const FractalComplex& w) const;
    [[nodiscard]] Alpha alpha() const noexcept { return alpha_; }

private:
    Alpha alpha_;
    MittagLefflerOptions options_;
    std::vector<double> inv_gamma_;
};

/// r^a E_a(i^a theta^a).
[[nodiscard]] FractalComplex frac_polar(const FractalPolar& p, Alpha alpha);
[[nodiscard]] FractalComplex frac_polar(const FractalPolar& p, const MittagLefflerKernel& kernel);

/// (2 pi)^a i^a, the normalized contour integral of (z - z0)^{-a}.
[[nodiscard]] inline FractalComplex two_pi_i(Alpha alpha) {
    return {0.0, std::pow(2.0 * std::numbers::pi, alpha.value())};
}

}  // namespace lfca
