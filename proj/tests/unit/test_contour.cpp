#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "lfca/contour.hpp"
#include "lfca/error.hpp"
#include "lfca/sampling.hpp"
#include "test_support.hpp"

using namespace lfca;
using lfca::test::close;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr auto kCanonical = DerivativeConvention::Canonical;
constexpr auto kScaled = DerivativeConvention::ScaledClassical;
const Point kOrigin{};

FractalComplex j_minus_one(double a) { return {0.0, std::pow(2.0 * kPi, a)}; }

FractalSeries mono(double a, int k, FractalComplex c = 1.0, Point at = kOrigin) {
    return FractalSeries::monomial(Alpha(a), at, k, c);
}

MultiPoleFunction two_poles(double a, FractalComplex r1, FractalComplex r2) {
    const Point p1{0.2, 0.0};
    const Point p2{-0.1, 0.3};
    return {Alpha(a),
            {{p1, mono(a, -1, r1, p1)}, {p2, mono(a, -1, r2, p2) + mono(a, -2, 4.0, p2)}},
            FractalSeries::constant(Alpha(a), kOrigin, 7.0)};
}

}  // namespace

TEST_CASE("monomial_circle_integral table") {
    CHECK(close(monomial_circle_integral(-1, Alpha(0.5)), j_minus_one(0.5), 1e-15));
    CHECK(close(monomial_circle_integral(-1, Alpha(1.0)), {0.0, 2.0 * kPi}, 1e-15));
    for (double a : lfca::test::kTestAlphas) {
        for (int k = -8; k <= 8; ++k) {
            if (k != -1) CHECK(monomial_circle_integral(k, Alpha(a)) == FractalComplex{});
        }
    }
}

TEST_CASE("contour_integral examples") {
    for (double a : lfca::test::kTestAlphas) {
        const MultiPoleFunction one({Alpha(a)}, {{kOrigin, mono(a, -1)}}, FractalSeries::zero(Alpha(a)));
        CHECK(close(contour_integral(one, CircleContour(kOrigin, 1.0)), j_minus_one(a), 1e-15));
        CHECK(contour_integral(one, CircleContour(Point{3.0, 0.0}, 1.0)) == FractalComplex{});

        const MultiPoleFunction two = two_poles(a, 2.0, 3.0);
        CHECK(close(contour_integral(two, CircleContour(kOrigin, 1.0)), j_minus_one(a) * 5.0, 1e-14));
        // only the pole at (0.2, 0) inside
        CHECK(close(contour_integral(two, CircleContour(Point{0.3, 0.0}, 0.15)), j_minus_one(a) * 2.0, 1e-14));
    }
}

TEST_CASE("contour_integral rejects a pole on the circle") {
    const MultiPoleFunction f(Alpha(0.5), {{Point{1.0, 0.0}, mono(0.5, -1, 1.0, Point{1.0, 0.0})}},
                              FractalSeries::zero(Alpha(0.5)));
    try {
        (void)contour_integral(f, CircleContour(kOrigin, 1.0));
        FAIL("expected pole on contour");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PoleOnContour);
    }
}

TEST_CASE("MultiPoleFunction validation") {
    const Alpha half(0.5);
    const Point p{0.5, 0.5};
    // principal part not centered at its pole
    CHECK_THROWS_AS(MultiPoleFunction(half, {{p, mono(0.5, -1)}}, FractalSeries::zero(half)), Error);
    // principal part containing a regular term
    CHECK_THROWS_AS(MultiPoleFunction(half, {{p, mono(0.5, -1, 1.0, p) + mono(0.5, 0, 1.0, p)}},
                                      FractalSeries::zero(half)),
                    Error);
    // duplicate locations
    CHECK_THROWS_AS(MultiPoleFunction(half, {{p, mono(0.5, -1, 1.0, p)}, {p, mono(0.5, -2, 1.0, p)}},
                                      FractalSeries::zero(half)),
                    Error);
    // mixed orders
    CHECK_THROWS_AS(MultiPoleFunction(half, {{p, mono(0.7, -1, 1.0, p)}}, FractalSeries::zero(half)), Error);
}

TEST_CASE("arc_integral examples") {
    Rng rng(31);
    for (double a : lfca::test::kTestAlphas) {
        const FractalSeries f = random_series(rng, Alpha(a), kOrigin, 0, 6);
        const CircleContour c(kOrigin, 0.8);
        CHECK(arc_integral(f, c, 1.3, 1.3, kCanonical) == FractalComplex{});
    }
    const CircleContour unit(kOrigin, 1.0);
    const FractalSeries one = FractalSeries::constant(Alpha(1.0), kOrigin, 1.0);
    CHECK(close(arc_integral(one, unit, 0.0, kPi, kCanonical), {-2.0, 0.0}, 1e-14));

    // full turn at the classical order closes up
    const FractalSeries g = random_series(rng, Alpha(1.0), kOrigin, 0, 6);
    CHECK(arc_integral(g, unit, 0.0, 2.0 * kPi, kCanonical).abs() <= 1e-13);

    try {
        (void)arc_integral(mono(0.5, -1), unit, 0.0, 1.0, kCanonical);
        FAIL("expected no primitive");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoPrimitive);
    }
}

TEST_CASE("arc concatenation and orientation reversal") {
    Rng rng(32);
    for (double a : lfca::test::kTestAlphas) {
        for (int i = 0; i < 30; ++i) {
            const FractalSeries f = random_series(rng, Alpha(a), kOrigin, 0, 6);
            const CircleContour c(kOrigin, rng.uniform(0.3, 1.0));
            const double t1 = rng.uniform(0.0, 2.0);
            const double t2 = rng.uniform(2.0, 4.0);
            const double t3 = rng.uniform(4.0, 6.2);
            for (auto conv : {kCanonical, kScaled}) {
                const FractalComplex joined =
                    arc_integral(f, c, t1, t2, conv) + arc_integral(f, c, t2, t3, conv);
                CHECK(close(joined, arc_integral(f, c, t1, t3, conv), 1e-12));
                CHECK(arc_integral(f, c.reversed(), t1, t3, conv) == -arc_integral(f, c, t1, t3, conv));
            }
            const MultiPoleFunction m = two_poles(a, rng.complex(), rng.complex());
            const CircleContour big(kOrigin, 2.0);
            CHECK(contour_integral(m, big.reversed()) == -contour_integral(m, big));
        }
    }
}

TEST_CASE("deformation invariance") {
    Rng rng(33);
    for (double a : lfca::test::kTestAlphas) {
        const MultiPoleFunction m = two_poles(a, rng.complex(), rng.complex());
        for (int i = 0; i < 50; ++i) {
            const double r1 = rng.uniform(0.5, 10.0);
            const double r2 = rng.uniform(0.5, 10.0);
            CHECK(contour_integral(m, CircleContour(kOrigin, r1)) == contour_integral(m, CircleContour(kOrigin, r2)));
        }
    }
}

TEST_CASE("contour_integral linearity") {
    Rng rng(34);
    for (double a : lfca::test::kTestAlphas) {
        for (int i = 0; i < 50; ++i) {
            const FractalSeries f = random_series(rng, Alpha(a), kOrigin, -3, 5);
            const FractalSeries g = random_series(rng, Alpha(a), kOrigin, -3, 5);
            const FractalComplex s = rng.complex(3.0);
            const CircleContour c(kOrigin, 1.0);
            CHECK(close(contour_integral(f + g, c), contour_integral(f, c) + contour_integral(g, c), 1e-12));
            CHECK(close(contour_integral(scale(f, s), c), s * contour_integral(f, c), 1e-12));
        }
    }
}

TEST_CASE("cauchy_point_value and cauchy_coefficient") {
    Rng rng(35);
    for (double a : lfca::test::kTestAlphas) {
        const Alpha alpha(a);
        const CircleContour c(kOrigin, 0.9);
        CHECK(cauchy_point_value(FractalSeries::constant(alpha, kOrigin, {2.0, -1.0}), c) == FractalComplex{2.0, -1.0});
        CHECK(cauchy_point_value(FractalSeries::truncated_mittag_leffler(alpha, kOrigin, 12), c) == FractalComplex{1.0});
        CHECK(cauchy_coefficient(mono(a, -1), c, -1) == FractalComplex{1.0});

        for (int i = 0; i < 20; ++i) {
            const FractalSeries t = random_series(rng, alpha, kOrigin, 0, 8);
            CHECK(cauchy_point_value(t, c) == series_eval(t, FractalPolar(0.0, 0.0)));
            CHECK(cauchy_coefficient(t, c, 0) == cauchy_point_value(t, c));
            const FractalSeries l = random_series(rng, alpha, kOrigin, -5, 5);
            for (int k = -5; k <= 5; ++k) CHECK(cauchy_coefficient(l, c, k) == l.coeff(k));
        }
    }
    CHECK_THROWS_AS((void)cauchy_point_value(mono(0.5, 1), CircleContour(Point{1.0, 0.0}, 1.0)), Error);
    CHECK_THROWS_AS((void)cauchy_coefficient(mono(0.5, 1), CircleContour(Point{0.0, 1.0}, 1.0), 1), Error);
}

TEST_CASE("derivative_via_contour") {
    const CircleContour c(kOrigin, 1.0);
    CHECK(derivative_via_contour(mono(1.0, 3), c, 3) == FractalComplex{6.0});
    for (double a : lfca::test::kTestAlphas) {
        const FractalSeries e = FractalSeries::truncated_mittag_leffler(Alpha(a), kOrigin, 8);
        for (int n = 0; n <= 8; ++n) CHECK(close(derivative_via_contour(e, c, n), {1.0}, 1e-14));
    }
    Rng rng(36);
    for (double a : lfca::test::kTestAlphas) {
        for (int i = 0; i < 30; ++i) {
            const FractalSeries f = random_series(rng, Alpha(a), kOrigin, 0, 8);
            CHECK(derivative_via_contour(f, c, 0) == series_eval(f, FractalPolar(0.0, 0.0)));
            for (int n = 1; n <= 4; ++n) {
                for (auto conv : {kCanonical, kScaled}) {
                    const FractalComplex direct =
                        series_eval(series_derivative(f, conv, n), FractalPolar(0.0, 0.0));
                    CHECK(close(derivative_via_contour(f, c, n, conv), direct, 1e-13));
                }
            }
        }
    }
}

TEST_CASE("gauss_mean_value") {
    Rng rng(37);
    for (double a : lfca::test::kTestAlphas) {
        CHECK(gauss_mean_value(FractalSeries::constant(Alpha(a), kOrigin, 4.0), kOrigin, 3.0) == FractalComplex{4.0});
    }
    // classical trapezoid average of 1 + w^2 over |w| = 1/2
    const FractalSeries f = FractalSeries::constant(Alpha(1.0), kOrigin, 1.0) + mono(1.0, 2);
    std::complex<double> mean{};
    const int n = 4096;
    for (int j = 0; j < n; ++j) {
        const std::complex<double> z = std::polar(0.5, 2.0 * kPi * j / n);
        mean += 1.0 + z * z;
    }
    mean /= static_cast<double>(n);
    const FractalComplex g = gauss_mean_value(f, kOrigin, 0.5);
    CHECK(std::abs(g.re - mean.real()) <= 1e-10);
    CHECK(std::abs(g.im - mean.imag()) <= 1e-10);
    CHECK_THROWS_AS((void)gauss_mean_value(f, Point{0.1, 0.0}, 0.5), Error);
    CHECK_THROWS_AS((void)gauss_mean_value(f, kOrigin, 0.0), Error);
}

TEST_CASE("consistency triangle") {
    Rng rng(38);
    for (int i = 0; i < 500; ++i) {
        const double a = lfca::test::kTestAlphas[i % 5];
        const FractalSeries f = random_series(rng, Alpha(a), kOrigin, 0, rng.uniform_int(0, 8));
        const double r = rng.uniform(0.1, 2.0);
        const FractalComplex a0 = f.coeff(0);
        CHECK(cauchy_point_value(f, CircleContour(kOrigin, r)) == a0);
        CHECK(gauss_mean_value(f, kOrigin, r) == a0);
        CHECK(close(series_eval(f, FractalPolar(0.0, 0.0)), a0, 1e-12));
    }
}

TEST_CASE("ml_bound") {
    const CircleContour unit(kOrigin, 1.0);
    const MlBound one = ml_bound(mono(1.0, -1), unit, 64);
    CHECK(close(one.bound, 2.0 * kPi, 1e-14));
    CHECK(close(one.witness, 2.0 * kPi, 1e-14));

    for (double a : lfca::test::kTestAlphas) {
        const MlBound z = ml_bound(FractalSeries::zero(Alpha(a)), unit, 64);
        CHECK(z.bound == 0.0);
        CHECK(z.witness == 0.0);
        // 1/w: witness is the orthogonality value and the theta = 0 sample alone reaches it
        const MlBound b = ml_bound(mono(a, -1), unit, 64);
        CHECK(close(b.witness, std::pow(2.0 * kPi, a), 1e-14));
        CHECK(b.bound >= b.witness * (1.0 - 1e-14));
    }

    const MlBound strict = ml_bound(mono(1.0, -2), unit, 64);
    CHECK(close(strict.bound, 2.0 * kPi, 1e-13));
    CHECK(strict.witness == 0.0);

    const MultiPoleFunction m(Alpha(1.0), {{kOrigin, mono(1.0, -1)}}, FractalSeries::zero(Alpha(1.0)));
    const MlBound mb = ml_bound(m, CircleContour(kOrigin, 2.0), 64);
    CHECK(close(mb.bound, 2.0 * kPi, 1e-14));
    CHECK(close(mb.witness, 2.0 * kPi, 1e-14));
    CHECK_THROWS_AS((void)ml_bound(two_poles(0.5, 1.0, 1.0), unit, 64), Error);
}

TEST_CASE("quadrature_diagnostic examples") {
    const CircleContour unit(kOrigin, 1.0);
    const QuadratureResult classical = quadrature_diagnostic(mono(1.0, -1), unit, 256);
    CHECK(classical.gap <= 1e-6);
    CHECK((classical.value - FractalComplex{0.0, 2.0 * kPi}).abs() <= 1e-6);

    for (double a : lfca::test::kTestAlphas) {
        for (int n : {8, 64, 1000}) {
            const QuadratureResult q = quadrature_diagnostic(mono(a, -1), CircleContour(kOrigin, 0.7), n);
            CHECK(close(q.value, j_minus_one(a), 1e-12));
            CHECK(q.gap <= 1e-12);
        }
    }

    const QuadratureResult constant = quadrature_diagnostic(FractalSeries::constant(Alpha(1.0), kOrigin, 1.0), unit, 256);
    CHECK(constant.value.abs() <= 1e-6);
    CHECK_THROWS_AS((void)quadrature_diagnostic(mono(0.5, -1), unit, 7), Error);
}

TEST_CASE("quadrature gap vanishes at alpha = 1") {
    Rng rng(39);
    const FractalSeries f = random_series(rng, Alpha(1.0), kOrigin, -3, 4);
    const CircleContour unit(kOrigin, 1.0);
    // the trapezoid rule is exact for w^k with |k| < N, so only rounding is left
    for (int n : {8, 64, 512, 4096}) CHECK(quadrature_diagnostic(f, unit, n).gap <= 1e-12);
    const FractalSeries e = FractalSeries::truncated_mittag_leffler(Alpha(1.0), kOrigin, 20) * mono(1.0, -6);
    CHECK(quadrature_diagnostic(e, unit, 4096).gap <= quadrature_diagnostic(e, unit, 8).gap);
}

TEST_CASE("quadrature sums are independent of node reuse and sweep order") {
    Rng rng(40);
    const Alpha alpha(0.6);
    const FractalSeries f = random_series(rng, alpha, kOrigin, -2, 5);
    const CircleContour c(kOrigin, 0.8);
    const CircleNodes nodes(alpha, 0.8, 512);
    const QuadratureResult direct = quadrature_diagnostic(f, c, 512);
    CHECK(close(quadrature_sum(f, nodes), direct.value, 1e-12));
    const auto sweep = quadrature_sweep(f, c, 512);
    REQUIRE(sweep.size() == 512);
    CHECK(close(sweep.back().partial, direct.value, 1e-12));
    CHECK(std::abs(sweep.back().gap - direct.gap) <= 1e-12);
    // split the sum in two halves
    FractalComplex lo;
    FractalComplex hi;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const FractalComplex term = series_eval_at(f, nodes.point(j)) * nodes.measure(j);
        (j < 256 ? lo : hi) += term;
    }
    CHECK(close(lo + hi, direct.value, 1e-12));
}
