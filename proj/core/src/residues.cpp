#include "lfca/residues.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lfca/error.hpp"

namespace lfca {

namespace {

bool same_point(Point a, Point b) {
    const double scale = std::max({1.0, std::abs(a.x), std::abs(a.y)});
    return distance(a, b) <= kGeometryTolerance * scale;
}

int pole_order(const FractalSeries& f) {
    const Singularity s = classify_singularity(f);
    return s.kind == Singularity::Kind::Pole ? s.order : 0;
}

}  // namespace

FractalComplex residue(const FractalSeries& f, Point pole) {
    if (!same_point(f.center(), pole)) throw Error(ErrorKind::UnknownPole, "point is not the series center");
    return f.coeff(-1);
}

FractalComplex residue(const MultiPoleFunction& f, Point pole) {
    for (const auto& p : f.poles()) {
        if (same_point(p.location, pole)) return p.principal.coeff(-1);
    }
    throw Error(ErrorKind::UnknownPole, "no listed pole at the given point");
}

FractalComplex residue_via_derivative(const FractalSeries& f, Point pole, int n, DerivativeConvention conv) {
    if (!same_point(f.center(), pole)) throw Error(ErrorKind::UnknownPole, "point is not the series center");
    if (n < 1) throw Error(ErrorKind::Domain, "residue formula needs n >= 1");
    const int order = pole_order(f);
    if (order > n) {
        throw Error(ErrorKind::Domain,
                    "pole of order " + std::to_string(order) + " exceeds n = " + std::to_string(n));
    }
    const FractalSeries phi = shift(f, n);
    const FractalSeries d = series_derivative(phi, conv, n - 1);
    const FractalComplex at_center = series_eval_at(d, FractalComplex{});
    return at_center * (1.0 / gamma(1.0 + (n - 1) * f.alpha().value()));
}

ResidueReport residue_report(const FractalSeries& f, Point pole, ResidueMethod method) {
    const int order = pole_order(f);
    const FractalComplex r = method == ResidueMethod::Direct
                                 ? residue(f, pole)
                                 : residue_via_derivative(f, pole, std::max(order, 1));
    return {pole, order, r, method};
}

std::vector<ResidueReport> residue_reports(const MultiPoleFunction& f) {
    std::vector<ResidueReport> out;
    out.reserve(f.poles().size());
    for (const auto& p : f.poles()) {
        out.push_back({p.location, pole_order(p.principal), p.principal.coeff(-1), ResidueMethod::Direct});
    }
    return out;
}

}  // namespace lfca
