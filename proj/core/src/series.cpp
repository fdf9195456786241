#include "lfca/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lfca/error.hpp"

namespace lfca {

namespace {

void require_compatible(const FractalSeries& f, const FractalSeries& g) {
    if (f.alpha() != g.alpha()) throw Error(ErrorKind::Mismatch, "series have different alpha");
    if (f.center() != g.center()) throw Error(ErrorKind::Mismatch, "series have different centers");
}

}  // namespace

FractalSeries::FractalSeries(Alpha alpha, Point center, int kmin, std::vector<FractalComplex> coeffs)
    : alpha_(alpha), center_(center), kmin_(kmin), coeffs_(std::move(coeffs)) {
    normalize();
}

void FractalSeries::normalize() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return !c.is_zero(); });
    if (first == coeffs_.end()) {
        kmin_ = 0;
        coeffs_.assign(1, FractalComplex{});
        return;
    }
    auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const auto& c) { return !c.is_zero(); });
    coeffs_.erase(last.base(), coeffs_.end());
    kmin_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
}

FractalSeries FractalSeries::zero(Alpha alpha, Point center) { return {alpha, center, 0, {}}; }

FractalSeries FractalSeries::constant(Alpha alpha, Point center, FractalComplex c) {
    return {alpha, center, 0, {c}};
}

FractalSeries FractalSeries::monomial(Alpha alpha, Point center, int k, FractalComplex c) {
    return {alpha, center, k, {c}};
}

FractalSeries FractalSeries::truncated_mittag_leffler(Alpha alpha, Point center, int n) {
    std::vector<FractalComplex> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c.emplace_back(1.0 / gamma(1.0 + k * alpha.value()));
    return {alpha, center, 0, std::move(c)};
}

FractalComplex FractalSeries::coeff(int k) const noexcept {
    if (k < kmin_ || k > kmax()) return {};
    return coeffs_[static_cast<std::size_t>(k - kmin_)];
}

FractalSeries add(const FractalSeries& f, const FractalSeries& g) {
    require_compatible(f, g);
    const int lo = std::min(f.kmin(), g.kmin());
    const int hi = std::max(f.kmax(), g.kmax());
    std::vector<FractalComplex> c;
    c.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int k = lo; k <= hi; ++k) c.push_back(f.coeff(k) + g.coeff(k));
    return {f.alpha(), f.center(), lo, std::move(c)};
}

FractalSeries subtract(const FractalSeries& f, const FractalSeries& g) {
    return add(f, scale(g, FractalComplex{-1.0}));
}

FractalSeries multiply(const FractalSeries& f, const FractalSeries& g) {
    require_compatible(f, g);
    const auto a = f.coeffs();
    const auto b = g.coeffs();
    std::vector<FractalComplex> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return {f.alpha(), f.center(), f.kmin() + g.kmin(), std::move(c)};
}

FractalSeries scale(const FractalSeries& f, const FractalComplex& s) {
    std::vector<FractalComplex> c(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : c) x *= s;
    return {f.alpha(), f.center(), f.kmin(), std::move(c)};
}

FractalSeries shift(const FractalSeries& f, int n) {
    if (f.is_zero()) return f;
    return {f.alpha(), f.center(), f.kmin() + n, {f.coeffs().begin(), f.coeffs().end()}};
}

FractalSeries reciprocal(const FractalSeries& g, int terms) {
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "reciprocal of the zero series");
    if (terms <= 0) terms = g.kmax() - g.kmin() + 1;
    const auto b = g.coeffs();
    std::vector<FractalComplex> c(static_cast<std::size_t>(terms));
    c[0] = fc_div(FractalComplex{1.0}, b[0]);
    for (std::size_t j = 1; j < c.size(); ++j) {
        FractalComplex acc;
        for (std::size_t i = 1; i <= j && i < b.size(); ++i) acc += b[i] * c[j - i];
        c[j] = -(acc * c[0]);
    }
    return {g.alpha(), g.center(), -g.kmin(), std::move(c)};
}

FractalSeries divide(const FractalSeries& f, const FractalSeries& g, int terms) {
    require_compatible(f, g);
    return multiply(f, reciprocal(g, terms));
}

double monomial_derivative_factor(int k, Alpha alpha, DerivativeConvention conv) {
    if (k == 0) return 0.0;
    switch (conv) {
        case DerivativeConvention::Canonical: return gamma_ratio(k, alpha);
        case DerivativeConvention::ScaledClassical: return k * gamma(1.0 + alpha.value());
    }
    return 0.0;
}

FractalSeries series_derivative(const FractalSeries& f, DerivativeConvention conv) {
    std::vector<FractalComplex> c;
    c.reserve(f.coeffs().size());
    for (int k = f.kmin(); k <= f.kmax(); ++k) {
        const FractalComplex a = f.coeff(k);
        c.push_back(a.is_zero() || k == 0 ? FractalComplex{} : a * monomial_derivative_factor(k, f.alpha(), conv));
    }
    return {f.alpha(), f.center(), f.kmin() - 1, std::move(c)};
}

FractalSeries series_derivative(const FractalSeries& f, DerivativeConvention conv, int times) {
    if (times < 0) throw Error(ErrorKind::Domain, "derivative order must be non-negative");
    FractalSeries out = f;
    for (int i = 0; i < times; ++i) out = series_derivative(out, conv);
    return out;
}

FractalSeries series_primitive(const FractalSeries& f, DerivativeConvention conv) {
    if (!f.coeff(-1).is_zero()) {
        throw Error(ErrorKind::NoPrimitive, "coefficient of w^-1 is nonzero");
    }
    std::vector<FractalComplex> c;
    c.reserve(f.coeffs().size());
    for (int k = f.kmin(); k <= f.kmax(); ++k) {
        const FractalComplex a = f.coeff(k);
        if (a.is_zero()) {
            c.emplace_back();
            continue;
        }
        const double factor = monomial_derivative_factor(k + 1, f.alpha(), conv);
        if (factor == 0.0) {
            throw Error(ErrorKind::NoPrimitive,
                        "w^" + std::to_string(k) + " is not the derivative of any monomial at this alpha");
        }
        c.push_back(a * (1.0 / factor));
    }
    return {f.alpha(), f.center(), f.kmin() + 1, std::move(c)};
}

FractalComplex series_eval_at(const FractalSeries& f, const FractalComplex& w) {
    if (w.is_zero()) {
        if (f.kmin() < 0) throw Error(ErrorKind::PoleEvaluation, "series with a principal part evaluated at its center");
        return f.coeff(0);
    }
    const auto a = f.coeffs();
    FractalComplex acc;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * w + *it;
    if (f.kmin() == 0) return acc;
    return acc * fc_pow(w, f.kmin());
}

FractalComplex series_eval(const FractalSeries& f, const FractalPolar& p) {
    if (p.r == 0.0) return series_eval_at(f, FractalComplex{});
    return series_eval_at(f, frac_polar(p, f.alpha()));
}

FractalComplex series_eval(const FractalSeries& f, const FractalPolar& p, const MittagLefflerKernel& kernel) {
    if (p.r == 0.0) return series_eval_at(f, FractalComplex{});
    return series_eval_at(f, frac_polar(p, kernel));
}

double tail_bound(double M, double R, double q, int N, Alpha alpha) {
    if (!(q >= 0.0 && q < 1.0)) throw Error(ErrorKind::Domain, "tail bound needs 0 <= q < 1");
    if (!(M >= 0.0)) throw Error(ErrorKind::Domain, "tail bound needs M >= 0");
    if (!(R > 0.0)) throw Error(ErrorKind::Domain, "tail bound needs R > 0");
    if (N < 0) throw Error(ErrorKind::Domain, "tail bound needs N >= 0");
    const double a = alpha.value();
    const double qa = std::pow(q, a);
    return M * std::pow(R, a) * std::pow(q, N * a) / (gamma(1.0 + a) * (1.0 - qa));
}

Singularity classify_singularity(const FractalSeries& f) {
    if (f.kmin() >= 0) return Singularity::regular();
    return Singularity::pole(-f.kmin());
}

FractalSeries chain_rule_affine(const FractalSeries& f, double a, DerivativeConvention conv) {
    if (!(a > 0.0)) throw Error(ErrorKind::Domain, "affine chain rule needs a positive slope");
    return scale(series_derivative(f, conv), FractalComplex{std::pow(a, f.alpha().value())});
}

}  // namespace lfca
