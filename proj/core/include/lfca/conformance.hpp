#pragma once

// Two-variable partial calculus over the fractal plane and the
// theorem-conformance matrix.
//
// A Taylor series in w is split into u + i^a v by substituting
// w = x^a + i^a y^a; u and v are polynomials in x^a, y^a (PartialField) on
// which the partial derivatives act term-wise under either convention. The
// matrix then runs one check per theorem, order and convention and records
// whether the residual stays under the pass threshold.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "lfca/series.hpp"

namespace lfca {

/// sum c_mn x^(m a) y^(n a), m, n >= 0, zero coefficients pruned.
///
/// Each coefficient is kept as an integer multiplier times a floating base.
/// Binomials and the integer factors of the scaled rule go into the
/// multiplier, so terms whose bases agree up to sign combine exactly.
class PartialField {
public:
    using Key = std::pair<int, int>;

    struct Term {
        double multiplier;  ///< exact integer
        double base;

        [[nodiscard]] double value() const noexcept { return multiplier * base; }
    };

    explicit PartialField(Alpha alpha) : alpha_(alpha) {}

    void add_term(int m, int n, double c) { add_term(m, n, Term{1.0, c}); }
    void add_term(int m, int n, Term t);

    [[nodiscard]] Alpha alpha() const noexcept { return alpha_; }
    [[nodiscard]] const std::map<Key, Term>& raw_terms() const noexcept { return terms_; }
    /// Coefficient values by exponent pair.
    [[nodiscard]] std::map<Key, double> terms() const;
    [[nodiscard]] double coeff(int m, int n) const;
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] double max_abs_coeff() const;
    /// x, y >= 0.
    [[nodiscard]] double evaluate(double x, double y) const;

    friend PartialField operator+(const PartialField& a, const PartialField& b);
    friend PartialField operator-(const PartialField& a, const PartialField& b);

private:
    Alpha alpha_;
    std::map<Key, Term> terms_;
};

enum class Axis { X, Y };

struct UvPair {
    PartialField u;
    PartialField v;
};

/// Throws for principal parts, off-origin centers and degree above the cap.
[[nodiscard]] UvPair expand_uv(const FractalSeries& f, int degree_cap = 12);

[[nodiscard]] PartialField partial_alpha(const PartialField& u, Axis axis, DerivativeConvention conv);

/// Square sample grid on [0, extent]^2.
struct SampleGrid {
    int points = 5;
    double extent = 1.0;
};

struct CrResidual {
    PartialField res1;  ///< d_x u - d_y v
    PartialField res2;  ///< d_y u + d_x v
    double maxabs;      ///< largest |res1|, |res2| on the grid
};

[[nodiscard]] CrResidual cr_residual(const FractalSeries& f, DerivativeConvention conv, SampleGrid grid = {});

[[nodiscard]] PartialField laplacian_alpha(const PartialField& u, DerivativeConvention conv);

enum class TheoremId {
    CauchyRiemann,
    FundamentalTheorem,
    ClosedContour,
    Deformation,
    CauchyFormula,
    DerivativeFormula,
    Orthogonality,
    TaylorSeries,
    LaurentSeries,
    ResidueTheorem,
    GaussMean,
    LaplaceHarmonic,
    ProductRule,
};

inline constexpr std::array<TheoremId, 13> kAllTheorems = {
    TheoremId::CauchyRiemann, TheoremId::FundamentalTheorem, TheoremId::ClosedContour,
    TheoremId::Deformation,   TheoremId::CauchyFormula,      TheoremId::DerivativeFormula,
    TheoremId::Orthogonality, TheoremId::TaylorSeries,       TheoremId::LaurentSeries,
    TheoremId::ResidueTheorem, TheoremId::GaussMean,         TheoremId::LaplaceHarmonic,
    TheoremId::ProductRule,
};

[[nodiscard]] std::string_view theorem_name(TheoremId id) noexcept;
[[nodiscard]] std::string_view convention_name(DerivativeConvention conv) noexcept;

struct ConformanceEntry {
    double alpha;
    TheoremId theorem;
    DerivativeConvention convention;
    bool pass;
    double max_residual;
    /// Residual of the theorem's fixed fixture, where one is defined. For
    /// T1-CR it is the x^a coefficient of d_x u - d_y v for f = w^2.
    std::optional<double> probe;

    friend bool operator==(const ConformanceEntry&, const ConformanceEntry&) = default;
};

struct ConformanceReport {
    std::vector<double> alphas;
    std::vector<ConformanceEntry> entries;  ///< alpha-major, then convention, then theorem

    friend bool operator==(const ConformanceReport&, const ConformanceReport&) = default;
};

struct ConformanceOptions {
    int degree = 8;
    int seeds = 100;
    double tolerance = 1e-9;
    int quadrature_nodes = 1024;
    std::uint64_t base_seed = 0x6c666361;
    bool parallel = true;
};

/// Residual of one theorem check at one order and convention; `seeds`
/// random inputs, deterministic in (base_seed, alpha, theorem).
[[nodiscard]] double theorem_residual(TheoremId id, Alpha alpha, DerivativeConvention conv,
                                      const ConformanceOptions& options);

[[nodiscard]] ConformanceReport conformance_matrix(const std::vector<double>& alphas,
                                                   const ConformanceOptions& options = {});
[[nodiscard]] ConformanceReport conformance_matrix(const std::vector<double>& alphas, int degree, int seeds);

}  // namespace lfca
