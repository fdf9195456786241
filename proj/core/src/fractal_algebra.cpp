#include "lfca/fractal_algebra.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lfca/error.hpp"

namespace lfca {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// n! for n <= 170; exact up to 22!.
const std::array<double, 171>& factorials() {
    static const std::array<double, 171> table = [] {
        std::array<double, 171> t{};
        t[0] = 1.0;
        for (std::size_t n = 1; n < t.size(); ++n) t[n] = t[n - 1] * static_cast<double>(n);
        return t;
    }();
    return table;
}

double lanczos(double x) {
    x -= 1.0;
    double a = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
    const double t = x + kLanczosG + 0.5;
    // split the power so t^(x+1/2) does not overflow before e^-t is applied
    const double half = std::pow(t, 0.5 * (x + 0.5));
    return std::sqrt(kTwoPi) * half * (half * std::exp(-t)) * a;
}

bool is_integer(double x) { return std::nearbyint(x) == x; }

// Gamma at any non-pole real argument.
double gamma_any(double x) {
    if (is_integer(x) && x >= 1.0 && x <= 171.0) return factorials()[static_cast<std::size_t>(x) - 1];
    if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma_any(1.0 - x));
    return lanczos(x);
}

// Non-positive integer within relative rounding of x, or -1 when x is regular.
long pole_index(double x) {
    const double n = std::nearbyint(x);
    if (n > 0.0) return -1;
    if (std::abs(x - n) > 1e-12 * std::max(1.0, std::abs(x))) return -1;
    return static_cast<long>(-n);
}

}  // namespace

Alpha::Alpha(double value) : value_(value) {
    if (!(value > 0.0 && value <= 1.0)) {
        throw Error(ErrorKind::Domain, "alpha must lie in (0, 1], got " + std::to_string(value));
    }
}

FractalComplex fc_mul(const FractalComplex& a, const FractalComplex& b) noexcept { return a * b; }

FractalComplex fc_div(const FractalComplex& a, const FractalComplex& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "fractal complex divisor is zero");
    // Smith's algorithm
    if (std::abs(b.re) >= std::abs(b.im)) {
        const double r = b.im / b.re;
        const double d = b.re + b.im * r;
        return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
    }
    const double r = b.re / b.im;
    const double d = b.re * r + b.im;
    return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}

FractalComplex fc_pow(FractalComplex base, int exponent) {
    if (exponent < 0) return fc_div(FractalComplex{1.0}, fc_pow(base, -exponent));
    FractalComplex result{1.0};
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

FractalPolar::FractalPolar(double radius, double angle) : r(radius), theta(angle) {
    if (!(radius >= 0.0) || !std::isfinite(radius)) {
        throw Error(ErrorKind::Domain, "polar radius must be finite and non-negative");
    }
    if (!std::isfinite(angle)) throw Error(ErrorKind::Domain, "polar angle must be finite");
    if (angle < 0.0 || angle > kTwoPi) {
        theta = std::fmod(angle, kTwoPi);
        if (theta < 0.0) theta += kTwoPi;
        if (theta >= kTwoPi) theta = 0.0;
    }
}

double gamma(double x) {
    if (!(x > 0.0)) throw Error(ErrorKind::Domain, "gamma requires a positive argument");
    return gamma_any(x);
}

double gamma_ratio(int k, Alpha alpha) {
    const double a = 1.0 + k * alpha.value();
    const double b = 1.0 + (k - 1) * alpha.value();
    const long na = pole_index(a);
    const long nb = pole_index(b);
    if (na >= 0 && nb >= 0) {
        // Gamma(-n + d) ~ (-1)^n / (n! d)
        double ratio = 1.0;
        if (nb >= na) {
            for (long j = na + 1; j <= nb; ++j) ratio *= static_cast<double>(j);
        } else {
            for (long j = nb + 1; j <= na; ++j) ratio /= static_cast<double>(j);
        }
        return ((na + nb) % 2 == 0) ? ratio : -ratio;
    }
    if (nb >= 0) return 0.0;
    if (na >= 0) {
        throw Error(ErrorKind::GammaPole,
                    "Gamma(1 + k alpha) has an isolated pole at k = " + std::to_string(k));
    }
    if (a > 150.0 || b > 150.0) return std::exp(std::lgamma(a) - std::lgamma(b));
    return gamma_any(a) / gamma_any(b);
}

namespace {

FractalComplex sum_mittag_leffler(const FractalComplex& w, Alpha alpha,
                                  const MittagLefflerOptions& options,
                                  const std::vector<double>* inv_gamma) {
    if (w.is_zero()) return FractalComplex{1.0};
    FractalComplex sum{1.0};
    FractalComplex power{1.0};
    double previous = 1.0;
    for (int k = 1; k < options.max_terms; ++k) {
        power *= w;
        const double arg = 1.0 + k * alpha.value();
        FractalComplex term;
        if (arg > 170.0) {
            const double mag = power.abs();
            if (!std::isfinite(mag)) break;
            term = power * (std::exp(std::log(mag) - std::lgamma(arg)) / mag);
        } else if (inv_gamma != nullptr && static_cast<std::size_t>(k) < inv_gamma->size()) {
            term = power * (*inv_gamma)[static_cast<std::size_t>(k)];
        } else {
            term = power * (1.0 / gamma_any(arg));
        }
        sum += term;
        const double size = term.abs();
        if (size < options.tolerance && size <= previous) return sum;
        previous = size;
    }
    throw Error(ErrorKind::NoConvergence, "Mittag-Leffler series did not converge within " +
                                              std::to_string(options.max_terms) + " terms");
}

}  // namespace

FractalComplex mittag_leffler(Alpha alpha, const FractalComplex& w, const MittagLefflerOptions& options) {
    return sum_mittag_leffler(w, alpha, options, nullptr);
}

MittagLefflerKernel::MittagLefflerKernel(Alpha alpha, MittagLefflerOptions options)
    : alpha_(alpha), options_(options) {
    for (int k = 0; k < options_.max_terms; ++k) {
        const double arg = 1.0 + k * alpha_.value();
        if (arg > 170.0) break;
        inv_gamma_.push_back(1.0 / gamma_any(arg));
    }
}

FractalComplex MittagLefflerKernel::operator()(const FractalComplex& w) const {
    return sum_mittag_leffler(w, alpha_, options_, &inv_gamma_);
}

FractalComplex frac_polar(const FractalPolar& p, const MittagLefflerKernel& kernel) {
    const double a = kernel.alpha().value();
    const FractalComplex e = kernel(FractalComplex{0.0, std::pow(p.theta, a)});
    return e * std::pow(p.r, a);
}

FractalComplex frac_polar(const FractalPolar& p, Alpha alpha) {
    const double a = alpha.value();
    const FractalComplex e = mittag_leffler(alpha, FractalComplex{0.0, std::pow(p.theta, a)});
    return e * std::pow(p.r, a);
}

}  // namespace lfca
