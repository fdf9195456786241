#pragma once

#include <vector>

#include "lfca/contour.hpp"
#include "lfca/series.hpp"

namespace lfca {

enum class ResidueMethod { Direct, Derivative };

struct ResidueReport {
    Point pole;
    int order;
    FractalComplex residue;
    ResidueMethod method;
};

/// Coefficient a_{-1} of (z - z0)^{-a} at the series center; throws
/// ErrorKind::UnknownPole for any other point.
[[nodiscard]] FractalComplex residue(const FractalSeries& f, Point pole);
/// Residue of a listed pole; the Taylor part contributes nothing.
[[nodiscard]] FractalComplex residue(const MultiPoleFunction& f, Point pole);

/// Residue from phi = w^n f: the (n-1)-fold derivative of phi at the center
/// divided by Gamma(1 + (n-1) a). Only the Canonical rule reproduces a_{-1};
/// the convention parameter exists so the conformance matrix can measure the
/// other one.
[[nodiscard]] FractalComplex residue_via_derivative(const FractalSeries& f, Point pole, int n,
                                                    DerivativeConvention conv = DerivativeConvention::Canonical);

[[nodiscard]] ResidueReport residue_report(const FractalSeries& f, Point pole,
                                           ResidueMethod method = ResidueMethod::Direct);
/// One direct report per pole, in listing order.
[[nodiscard]] std::vector<ResidueReport> residue_reports(const MultiPoleFunction& f);

}  // namespace lfca
