#include "lfca/conformance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <string>

#include "lfca/contour.hpp"
#include "lfca/error.hpp"
#include "lfca/residues.hpp"
#include "lfca/sampling.hpp"

namespace lfca {

// ---------------------------------------------------------------------------
// PartialField

void PartialField::add_term(int m, int n, Term t) {
    if (m < 0 || n < 0) throw Error(ErrorKind::Domain, "partial field exponents must be non-negative");
    if (t.value() == 0.0) return;
    const Key key{m, n};
    const auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, t);
        return;
    }
    Term& cur = it->second;
    if (cur.base == t.base) {
        cur.multiplier += t.multiplier;
    } else if (cur.base == -t.base) {
        cur.multiplier -= t.multiplier;
    } else {
        cur = Term{1.0, cur.value() + t.value()};
    }
    if (cur.value() == 0.0) terms_.erase(it);
}

std::map<PartialField::Key, double> PartialField::terms() const {
    std::map<Key, double> out;
    for (const auto& [key, t] : terms_) out.emplace(key, t.value());
    return out;
}

double PartialField::coeff(int m, int n) const {
    const auto it = terms_.find({m, n});
    return it == terms_.end() ? 0.0 : it->second.value();
}

double PartialField::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [key, t] : terms_) m = std::max(m, std::abs(t.value()));
    return m;
}

double PartialField::evaluate(double x, double y) const {
    if (x < 0.0 || y < 0.0) throw Error(ErrorKind::Domain, "partial fields are evaluated on x, y >= 0");
    const double a = alpha_.value();
    const double xa = std::pow(x, a);
    const double ya = std::pow(y, a);
    double sum = 0.0;
    for (const auto& [key, t] : terms_) sum += t.value() * std::pow(xa, key.first) * std::pow(ya, key.second);
    return sum;
}

PartialField operator+(const PartialField& a, const PartialField& b) {
    if (a.alpha() != b.alpha()) throw Error(ErrorKind::Mismatch, "partial fields have different alpha");
    PartialField out = a;
    for (const auto& [key, t] : b.raw_terms()) out.add_term(key.first, key.second, t);
    return out;
}

PartialField operator-(const PartialField& a, const PartialField& b) {
    if (a.alpha() != b.alpha()) throw Error(ErrorKind::Mismatch, "partial fields have different alpha");
    PartialField out = a;
    for (const auto& [key, t] : b.raw_terms()) {
        out.add_term(key.first, key.second, PartialField::Term{-t.multiplier, t.base});
    }
    return out;
}

// ---------------------------------------------------------------------------
// u + i^a v

UvPair expand_uv(const FractalSeries& f, int degree_cap) {
    if (f.kmin() < 0) throw Error(ErrorKind::Domain, "expand_uv excludes principal parts");
    if (f.center() != Point{}) throw Error(ErrorKind::Mismatch, "expand_uv needs a series centered at the origin");
    if (f.kmax() > degree_cap) {
        throw Error(ErrorKind::Domain, "series degree " + std::to_string(f.kmax()) + " exceeds the cap " +
                                           std::to_string(degree_cap));
    }
    UvPair out{PartialField(f.alpha()), PartialField(f.alpha())};
    // powers of the unit: 1, i, -1, -i
    constexpr std::array<FractalComplex, 4> unit_powers = {
        FractalComplex{1.0, 0.0}, FractalComplex{0.0, 1.0}, FractalComplex{-1.0, 0.0}, FractalComplex{0.0, -1.0}};
    for (int k = f.kmin(); k <= f.kmax(); ++k) {
        const FractalComplex a = f.coeff(k);
        if (a.is_zero()) continue;
        double binom = 1.0;
        for (int j = 0; j <= k; ++j) {
            const FractalComplex term = a * unit_powers[static_cast<std::size_t>(j % 4)];
            out.u.add_term(k - j, j, PartialField::Term{binom, term.re});
            out.v.add_term(k - j, j, PartialField::Term{binom, term.im});
            binom = binom * (k - j) / (j + 1);
        }
    }
    return out;
}

namespace {

// d/dx^a of t x^(p a): the scaled rule puts p into the multiplier and
// Gamma(1 + a) into the base; the Gamma-ratio rule scales the base only.
PartialField::Term differentiate(PartialField::Term t, int p, Alpha alpha, DerivativeConvention conv) {
    if (conv == DerivativeConvention::ScaledClassical) return {t.multiplier * p, t.base * gamma(1.0 + alpha.value())};
    return {t.multiplier, t.base * gamma_ratio(p, alpha)};
}

}  // namespace

PartialField partial_alpha(const PartialField& u, Axis axis, DerivativeConvention conv) {
    PartialField out(u.alpha());
    for (const auto& [key, t] : u.raw_terms()) {
        const auto [m, n] = key;
        if (axis == Axis::X) {
            if (m > 0) out.add_term(m - 1, n, differentiate(t, m, u.alpha(), conv));
        } else {
            if (n > 0) out.add_term(m, n - 1, differentiate(t, n, u.alpha(), conv));
        }
    }
    return out;
}

CrResidual cr_residual(const FractalSeries& f, DerivativeConvention conv, SampleGrid grid) {
    const UvPair uv = expand_uv(f);
    PartialField res1 = partial_alpha(uv.u, Axis::X, conv) - partial_alpha(uv.v, Axis::Y, conv);
    PartialField res2 = partial_alpha(uv.u, Axis::Y, conv) + partial_alpha(uv.v, Axis::X, conv);
    double maxabs = 0.0;
    const int n = std::max(grid.points, 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double x = n == 1 ? 0.0 : grid.extent * i / (n - 1);
            const double y = n == 1 ? 0.0 : grid.extent * j / (n - 1);
            maxabs = std::max({maxabs, std::abs(res1.evaluate(x, y)), std::abs(res2.evaluate(x, y))});
        }
    }
    return {std::move(res1), std::move(res2), maxabs};
}

PartialField laplacian_alpha(const PartialField& u, DerivativeConvention conv) {
    const PartialField xx = partial_alpha(partial_alpha(u, Axis::X, conv), Axis::X, conv);
    const PartialField yy = partial_alpha(partial_alpha(u, Axis::Y, conv), Axis::Y, conv);
    return xx + yy;
}

// ---------------------------------------------------------------------------
// conformance matrix

std::string_view theorem_name(TheoremId id) noexcept {
    switch (id) {
        case TheoremId::CauchyRiemann: return "T1-CR";
        case TheoremId::FundamentalTheorem: return "T2-FTC";
        case TheoremId::ClosedContour: return "T3-closed";
        case TheoremId::Deformation: return "T5-deform";
        case TheoremId::CauchyFormula: return "T6-Cauchy";
        case TheoremId::DerivativeFormula: return "C7-deriv";
        case TheoremId::Orthogonality: return "T8/T9-orthogonality";
        case TheoremId::TaylorSeries: return "T10-Taylor";
        case TheoremId::LaurentSeries: return "T11-Laurent";
        case TheoremId::ResidueTheorem: return "C12/13-residue";
        case TheoremId::GaussMean: return "T14-Gauss";
        case TheoremId::LaplaceHarmonic: return "Laplace-harmonic";
        case TheoremId::ProductRule: return "rule-2.8-product";
    }
    return "?";
}

std::string_view convention_name(DerivativeConvention conv) noexcept {
    return conv == DerivativeConvention::Canonical ? "canonical" : "scaled";
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Point kOrigin{};

// max_k |a_k - b_k| / max(1, max_k |b_k|)
double relative_gap(const FractalSeries& a, const FractalSeries& b) {
    const int lo = std::min(a.kmin(), b.kmin());
    const int hi = std::max(a.kmax(), b.kmax());
    double diff = 0.0;
    double scale = 1.0;
    for (int k = lo; k <= hi; ++k) {
        diff = std::max(diff, (a.coeff(k) - b.coeff(k)).abs());
        scale = std::max(scale, b.coeff(k).abs());
    }
    return diff / scale;
}

double max_coeff(const FractalSeries& f) {
    double m = 0.0;
    for (const auto& c : f.coeffs()) m = std::max(m, c.abs());
    return m;
}

FractalSeries random_taylor(Rng& rng, Alpha alpha, int degree) {
    return random_series(rng, alpha, kOrigin, 0, rng.uniform_int(1, degree));
}

Point random_point_in_annulus(Rng& rng, double r_lo, double r_hi) {
    const double r = rng.uniform(r_lo, r_hi);
    const double t = rng.uniform(0.0, kTwoPi);
    return {r * std::cos(t), r * std::sin(t)};
}

struct CheckContext {
    Alpha alpha;
    DerivativeConvention conv;
    const ConformanceOptions& options;
    Rng& rng;
};

double check_cauchy_riemann(const CheckContext& ctx) {
    double worst = 0.0;
    for (int s = 0; s < ctx.options.seeds; ++s) {
        const FractalSeries f = random_taylor(ctx.rng, ctx.alpha, ctx.options.degree);
        const UvPair uv = expand_uv(f);
        const CrResidual cr = cr_residual(f, ctx.conv);
        const double scale = std::max({1.0, uv.u.max_abs_coeff(), uv.v.max_abs_coeff()});
        worst = std::max(worst, std::max(cr.res1.max_abs_coeff(), cr.res2.max_abs_coeff()) / scale);
    }
    return worst;
}

double check_fundamental(const CheckContext& ctx) {
    double worst = 0.0;
    const CircleContour circle(kOrigin, 1.0);
    for (int s = 0; s < ctx.options.seeds; ++s) {
        const FractalSeries f = random_taylor(ctx.rng, ctx.alpha, ctx.options.degree);
        worst = std::max(worst, relative_gap(series_derivative(series_primitive(f, ctx.conv), ctx.conv), f));
        std::array<double, 3> t = {ctx.rng.uniform(0.0, kTwoPi), ctx.rng.uniform(0.0, kTwoPi),
                                   ctx.rng.uniform(0.0, kTwoPi)};
        std::sort(t.begin(), t.end());
        const FractalComplex a12 = arc_integral(f, circle, t[0], t[1], ctx.conv);
        const FractalComplex a23 = arc_integral(f, circle, t[1], t[2], ctx.conv);
        const FractalComplex a13 = arc_integral(f, circle, t[0], t[2], ctx.conv);
        const double scale = std::max({1.0, a12.abs(), a23.abs(), a13.abs()});
        worst = std::max(worst, (a12 + a23 - a13).abs() / scale);
    }
    return worst;
}

double check_closed_contour(const CheckContext& ctx) {
    double worst = 0.0;
    const CircleContour circle(kOrigin, 1.0);
    for (int s = 0; s < ctx.options.seeds; ++s) {
        const FractalSeries f = random_taylor(ctx.rng, ctx.alpha, ctx.options.degree);
        const FractalComplex start = series_eval(series_primitive(f, ctx.conv), FractalPolar(1.0, 0.0));
        const FractalComplex loop = arc_integral(f, circle, 0.0, kTwoPi, ctx.conv);
        worst = std::max({worst, loop.abs() / std::max(1.0, start.abs()), contour_integral(f, circle).abs()});
    }
    return worst;
}

MultiPoleFunction random_multipole(Rng& rng, Alpha alpha, int degree, const std::vector<Point>& locations) {
    std::vector<PolePart> poles;
    poles.reserve(locations.size());
    for (const Point& p : locations) poles.push_back({p, random_principal_part(rng, alpha, p, rng.uniform_int(1, 4))});
    return {alpha, std::move(poles), random_taylor(rng, alpha, degree)};
}

double check_deformation(const CheckContext& ctx) {
    double worst = 0.0;
    for (int s = 0; s < ctx.options.seeds; ++s) {
        const int count = ctx.rng.uniform_int(1, 4);
        std::vector<Point> locations;
        for (int i = 0; i < count; ++i) locations.push_back(random_point_in_annulus(ctx.rng, 0.0, 0.5));
        const MultiPoleFunction f = random_multipole(ctx.rng, ctx.alpha, ctx.options.degree, locations);
        const double r1 = ctx.rng.uniform(0.6, 2.0);
        const double r2 = ctx.rng.uniform(0.6, 2.0);
        const FractalComplex i1 = contour_integral(f, CircleContour(kOrigin, r1));
        const FractalComplex i2 = contour_integral(f, CircleContour(kOrigin, r2));
        worst = std::max(worst, (i1 - i2).abs() / std::max(1.0, i1.abs()));
    }
    return worst;
}

double check_cauchy_formula(const CheckContext& ctx, const CircleNodes& nodes) {
    double worst = 0.0;
    const CircleContour circle(kOrigin, 1.0);
    const FractalComplex j = two_pi_i(ctx.alpha);
    for (int s = 0; s < ctx.options.seeds; ++s) {
        const FractalSeries f = random_taylor(ctx.rng, ctx.alpha, ctx.options.degree);
        const FractalComplex value = cauchy_point_value(f, circle);
        const FractalComplex quadrature = quadrature_sum(shift(f, -1), nodes) / j;
        const FractalComplex at_center = series_eval(f, FractalPolar(0.0, 0.0));
        const double scale = std::max(1.0, value.abs());
        worst = std::max({worst, (quadrature - value).abs() / scale, (at_center - value).abs() / scale});
    }
    return worst;
}

double check_derivative_formula(const CheckContext& ctx) {
    double worst = 0.0;
    const CircleContour circle(kOrigin, 1.0);
    for (int s = 0; s < ctx.options.seeds; ++s) {
        const FractalSeries f = random_taylor(ctx.rng, ctx.alpha, ctx.options.degree);
        const int n = ctx.rng.uniform_int(0, f.kmax());
        const FractalComplex contour = derivative_via_contour(f, circle, n, ctx.conv);
        const FractalComplex direct = series_eval_at(series_derivative(f, ctx.conv, n), FractalComplex{});
        worst = std::max(worst, (contour - direct).abs() / std::max(1.0, direct.abs()));
    }
    return worst;
}

double check_orthogonality(const CheckContext& ctx, const CircleNodes& nodes) {
    double worst = 0.0;
    const double scale = std::pow(kTwoPi, ctx.alpha.value());
    for (int k = -6; k <= 6; ++k) {
        const FractalComplex q = quadrature_sum(FractalSeries::monomial(ctx.alpha, kOrigin, k), nodes);
        worst = std::max(worst, (q - monomial_circle_integral(k, ctx.alpha)).abs() / scale);
    }
    return worst;
}

double check_taylor(const CheckContext& ctx) {
    double worst = 0.0;
    const CircleContour circle(kOrigin, 1.0);
    for (int s = 0; s < ctx.options.seeds; ++s) {
        const FractalSeries f = random_taylor(ctx.rng, ctx.alpha, ctx.options.degree);
        const double scale = std::max(1.0, max_coeff(f));
        FractalSeries d = f;
        for (int k = 0; k <= f.kmax(); ++k) {
            const FractalComplex from_derivative =
                series_eval_at(d, FractalComplex{}) * (1.0 / gamma(1.0 + k * ctx.alpha.value()));
            worst = std::max(worst, (from_derivative - cauchy_coefficient(f, circle, k)).abs() / scale);
            d = series_derivative(d, ctx.conv);
        }
    }
    return worst;
}

double check_laurent(const CheckContext& ctx) {
    double worst = 0.0;
    const CircleContour circle(kOrigin, 1.0);
    for (int s = 0; s < ctx.options.seeds; ++s) {
        const int kmin = ctx.rng.uniform_int(-5, -1);
        const int kmax = ctx.rng.uniform_int(0, ctx.options.degree);
        const FractalSeries f = random_series(ctx.rng, ctx.alpha, kOrigin, kmin, kmax);
        const double scale = std::max(1.0, max_coeff(f));
        for (int k = kmin; k <= kmax; ++k) {
            worst = std::max(worst, (cauchy_coefficient(f, circle, k) - f.coeff(k)).abs() / scale);
        }
    }
    return worst;
}

double check_residue_theorem(const CheckContext& ctx) {
    double worst = 0.0;
    const CircleContour circle(kOrigin, 1.0);
    const FractalComplex j = two_pi_i(ctx.alpha);
    for (int s = 0; s < ctx.options.seeds; ++s) {
        const int count = ctx.rng.uniform_int(1, 4);
        std::vector<Point> locations;
        std::vector<bool> inside;
        for (int i = 0; i < count; ++i) {
            const bool in = ctx.rng.uniform_int(0, 1) == 1;
            locations.push_back(in ? random_point_in_annulus(ctx.rng, 0.0, 0.8)
                                   : random_point_in_annulus(ctx.rng, 1.2, 2.0));
            inside.push_back(in);
        }
        const MultiPoleFunction f = random_multipole(ctx.rng, ctx.alpha, ctx.options.degree, locations);
        FractalComplex sum;
        for (std::size_t i = 0; i < f.poles().size(); ++i) {
            if (!inside[i]) continue;
            const auto& p = f.poles()[i];
            sum += residue_via_derivative(p.principal, p.location, -p.principal.kmin(), ctx.conv);
        }
        const FractalComplex expected = j * sum;
        const FractalComplex actual = contour_integral(f, circle);
        worst = std::max(worst, (actual - expected).abs() / std::max(1.0, actual.abs()));
    }
    return worst;
}

double check_gauss_mean(const CheckContext& ctx, const CircleNodes& nodes) {
    double worst = 0.0;
    const double a = ctx.alpha.value();
    const double norm = std::pow(kTwoPi, a);
    for (int s = 0; s < ctx.options.seeds; ++s) {
        const FractalSeries f = random_taylor(ctx.rng, ctx.alpha, ctx.options.degree);
        const double R = ctx.rng.uniform(0.5, 1.5);
        const double ra = std::pow(R, a);
        FractalComplex sum;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            sum += series_eval_at(f, nodes.point(i) * ra) * nodes.increment(i);
        }
        const FractalComplex mean = sum * (1.0 / norm);
        const FractalComplex value = gauss_mean_value(f, kOrigin, R);
        worst = std::max(worst, (mean - value).abs() / std::max(1.0, value.abs()));
    }
    return worst;
}

double check_laplace(const CheckContext& ctx) {
    double worst = 0.0;
    for (int s = 0; s < ctx.options.seeds; ++s) {
        const FractalSeries f = random_taylor(ctx.rng, ctx.alpha, ctx.options.degree);
        const UvPair uv = expand_uv(f);
        const double scale = std::max({1.0, uv.u.max_abs_coeff(), uv.v.max_abs_coeff()});
        const double lu = laplacian_alpha(uv.u, ctx.conv).max_abs_coeff();
        const double lv = laplacian_alpha(uv.v, ctx.conv).max_abs_coeff();
        worst = std::max(worst, std::max(lu, lv) / scale);
    }
    return worst;
}

double check_product(const CheckContext& ctx) {
    double worst = 0.0;
    const int half = std::max(1, ctx.options.degree / 2);
    for (int s = 0; s < ctx.options.seeds; ++s) {
        const FractalSeries f = random_taylor(ctx.rng, ctx.alpha, half);
        const FractalSeries g = random_taylor(ctx.rng, ctx.alpha, half);
        const FractalSeries lhs = series_derivative(f * g, ctx.conv);
        const FractalSeries rhs = f * series_derivative(g, ctx.conv) + g * series_derivative(f, ctx.conv);
        worst = std::max(worst, relative_gap(lhs, rhs));
    }
    return worst;
}

std::uint64_t check_seed(std::uint64_t base, double alpha, TheoremId id) {
    const auto bits = std::bit_cast<std::uint64_t>(alpha);
    return mix_seed(base ^ mix_seed(bits) ^ mix_seed(static_cast<std::uint64_t>(id) + 1));
}

double run_check(TheoremId id, const CheckContext& ctx, const CircleNodes& nodes) {
    switch (id) {
        case TheoremId::CauchyRiemann: return check_cauchy_riemann(ctx);
        case TheoremId::FundamentalTheorem: return check_fundamental(ctx);
        case TheoremId::ClosedContour: return check_closed_contour(ctx);
        case TheoremId::Deformation: return check_deformation(ctx);
        case TheoremId::CauchyFormula: return check_cauchy_formula(ctx, nodes);
        case TheoremId::DerivativeFormula: return check_derivative_formula(ctx);
        case TheoremId::Orthogonality: return check_orthogonality(ctx, nodes);
        case TheoremId::TaylorSeries: return check_taylor(ctx);
        case TheoremId::LaurentSeries: return check_laurent(ctx);
        case TheoremId::ResidueTheorem: return check_residue_theorem(ctx);
        case TheoremId::GaussMean: return check_gauss_mean(ctx, nodes);
        case TheoremId::LaplaceHarmonic: return check_laplace(ctx);
        case TheoremId::ProductRule: return check_product(ctx);
    }
    return std::numeric_limits<double>::infinity();
}

double residual_or_inf(TheoremId id, Alpha alpha, DerivativeConvention conv, const ConformanceOptions& options,
                       const CircleNodes& nodes) {
    Rng rng(check_seed(options.base_seed, alpha.value(), id));
    const CheckContext ctx{alpha, conv, options, rng};
    try {
        return run_check(id, ctx, nodes);
    } catch (const Error&) {
        return std::numeric_limits<double>::infinity();
    }
}

std::optional<double> probe(TheoremId id, Alpha alpha, DerivativeConvention conv) {
    if (id != TheoremId::CauchyRiemann) return std::nullopt;
    const CrResidual cr = cr_residual(FractalSeries::monomial(alpha, kOrigin, 2), conv);
    return cr.res1.coeff(1, 0);
}

std::vector<ConformanceEntry> run_row(Alpha alpha, DerivativeConvention conv, const ConformanceOptions& options) {
    const CircleNodes nodes(alpha, 1.0, options.quadrature_nodes);
    std::vector<ConformanceEntry> row;
    row.reserve(kAllTheorems.size());
    for (TheoremId id : kAllTheorems) {
        const double r = residual_or_inf(id, alpha, conv, options, nodes);
        row.push_back({alpha.value(), id, conv, r <= options.tolerance, r, probe(id, alpha, conv)});
    }
    return row;
}

}  // namespace

double theorem_residual(TheoremId id, Alpha alpha, DerivativeConvention conv, const ConformanceOptions& options) {
    const CircleNodes nodes(alpha, 1.0, options.quadrature_nodes);
    return residual_or_inf(id, alpha, conv, options, nodes);
}

ConformanceReport conformance_matrix(const std::vector<double>& alphas, const ConformanceOptions& options) {
    if (options.degree < 1 || options.degree > 12) throw Error(ErrorKind::Domain, "degree must lie in [1, 12]");
    if (options.seeds < 1) throw Error(ErrorKind::Domain, "seeds must be positive");
    std::vector<Alpha> orders;
    orders.reserve(alphas.size());
    for (double a : alphas) orders.emplace_back(a);

    constexpr std::array<DerivativeConvention, 2> conventions = {DerivativeConvention::Canonical,
                                                                 DerivativeConvention::ScaledClassical};
    std::vector<std::function<std::vector<ConformanceEntry>()>> jobs;
    for (Alpha a : orders) {
        for (DerivativeConvention c : conventions) jobs.emplace_back([a, c, &options] { return run_row(a, c, options); });
    }

    ConformanceReport report;
    report.alphas = alphas;
    if (options.parallel) {
        std::vector<std::future<std::vector<ConformanceEntry>>> futures;
        futures.reserve(jobs.size());
        for (auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
        for (auto& f : futures) {
            auto row = f.get();
            report.entries.insert(report.entries.end(), row.begin(), row.end());
        }
    } else {
        for (auto& job : jobs) {
            auto row = job();
            report.entries.insert(report.entries.end(), row.begin(), row.end());
        }
    }
    return report;
}

ConformanceReport conformance_matrix(const std::vector<double>& alphas, int degree, int seeds) {
    ConformanceOptions options;
    options.degree = degree;
    options.seeds = seeds;
    return conformance_matrix(alphas, options);
}

}  // namespace lfca
