#pragma once

// Finite Laurent expansions sum_k a_k w^k in the fractal coordinate
// w = (z - z0)^a, with the term-wise calculus under two monomial rules.

#include <span>
#include <vector>

#include "lfca/fractal_algebra.hpp"

namespace lfca {

/// Monomial rule used for the local fractional derivative.
///   Canonical:        a_k w^k -> a_k Gamma(1+ka)/Gamma(1+(k-1)a) w^(k-1)
///   ScaledClassical:  a_k w^k -> a_k k Gamma(1+a) w^(k-1)
/// The two agree at a = 1.
enum class DerivativeConvention { Canonical, ScaledClassical };

class FractalSeries {
public:
    /// Coefficients for k = kmin, kmin + 1, ...; zero boundary terms are stripped.
    FractalSeries(Alpha alpha, Point center, int kmin, std::vector<FractalComplex> coeffs);

    [[nodiscard]] static FractalSeries zero(Alpha alpha, Point center = {});
    [[nodiscard]] static FractalSeries constant(Alpha alpha, Point center, FractalComplex c);
    [[nodiscard]] static FractalSeries monomial(Alpha alpha, Point center, int k, FractalComplex c = 1.0);
    /// sum_{k=0}^{n} w^k / Gamma(1 + k a)
    [[nodiscard]] static FractalSeries truncated_mittag_leffler(Alpha alpha, Point center, int n);

    [[nodiscard]] Alpha alpha() const noexcept { return alpha_; }
    [[nodiscard]] Point center() const noexcept { return center_; }
    [[nodiscard]] int kmin() const noexcept { return kmin_; }
    [[nodiscard]] int kmax() const noexcept { return kmin_ + static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] std::span<const FractalComplex> coeffs() const noexcept { return coeffs_; }
    /// a_k, zero outside [kmin, kmax].
    [[nodiscard]] FractalComplex coeff(int k) const noexcept;
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_.front().is_zero(); }

    friend bool operator==(const FractalSeries&, const FractalSeries&) = default;

private:
    void normalize();

    Alpha alpha_;
    Point center_;
    int kmin_;
    std::vector<FractalComplex> coeffs_;
};

// Arithmetic. Binary operations require equal alpha and center and throw
// ErrorKind::Mismatch otherwise.
[[nodiscard]] FractalSeries add(const FractalSeries& f, const FractalSeries& g);
[[nodiscard]] FractalSeries subtract(const FractalSeries& f, const FractalSeries& g);
[[nodiscard]] FractalSeries multiply(const FractalSeries& f, const FractalSeries& g);
[[nodiscard]] FractalSeries scale(const FractalSeries& f, const FractalComplex& s);
/// w^n f
[[nodiscard]] FractalSeries shift(const FractalSeries& f, int n);

/// Truncated 1/g = w^(-kmin) (c_0 + ... + c_(terms-1) w^(terms-1)). The
/// default keeps as many terms as g has, so g (1/g) = 1 + O(w^(kmax+1)) when
/// g(z0) != 0.
[[nodiscard]] FractalSeries reciprocal(const FractalSeries& g, int terms = 0);
[[nodiscard]] FractalSeries divide(const FractalSeries& f, const FractalSeries& g, int terms = 0);

inline FractalSeries operator+(const FractalSeries& f, const FractalSeries& g) { return add(f, g); }
inline FractalSeries operator-(const FractalSeries& f, const FractalSeries& g) { return subtract(f, g); }
inline FractalSeries operator*(const FractalSeries& f, const FractalSeries& g) { return multiply(f, g); }
inline FractalSeries operator*(const FractalComplex& s, const FractalSeries& f) { return scale(f, s); }

/// Factor multiplying a_k when w^k is differentiated; 0 for k = 0.
[[nodiscard]] double monomial_derivative_factor(int k, Alpha alpha, DerivativeConvention conv);

[[nodiscard]] FractalSeries series_derivative(const FractalSeries& f, DerivativeConvention conv);
[[nodiscard]] FractalSeries series_derivative(const FractalSeries& f, DerivativeConvention conv, int times);

/// Term-wise inverse of series_derivative with zero constant. Throws
/// ErrorKind::NoPrimitive when a_{-1} != 0 or a term has no preimage under
/// the chosen rule.
[[nodiscard]] FractalSeries series_primitive(const FractalSeries& f, DerivativeConvention conv);

/// sum_k a_k w^k for a value w of the fractal coordinate.
[[nodiscard]] FractalComplex series_eval_at(const FractalSeries& f, const FractalComplex& w);
/// Evaluation at the displacement (r, theta) from the center, w = frac_polar(p).
[[nodiscard]] FractalComplex series_eval(const FractalSeries& f, const FractalPolar& p);
[[nodiscard]] FractalComplex series_eval(const FractalSeries& f, const FractalPolar& p,
                                         const MittagLefflerKernel& kernel);

/// Remainder majorant M R^a q^(N a) / (Gamma(1 + a) (1 - q^a)) for a series
/// bounded by M on radius R and evaluated at radius q R.
[[nodiscard]] double tail_bound(double M, double R, double q, int N, Alpha alpha);

struct Singularity {
    enum class Kind { Regular, Pole };
    Kind kind = Kind::Regular;
    int order = 0;

    [[nodiscard]] static Singularity regular() { return {}; }
    [[nodiscard]] static Singularity pole(int n) { return {Kind::Pole, n}; }
    friend bool operator==(const Singularity&, const Singularity&) = default;
};

[[nodiscard]] Singularity classify_singularity(const FractalSeries& f);

/// Derivative of f(a z + b) in the inner coordinate: a^alpha f^(alpha).
[[nodiscard]] FractalSeries chain_rule_affine(const FractalSeries& f, double a, DerivativeConvention conv);

}  // namespace lfca
