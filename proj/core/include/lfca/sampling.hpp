#pragma once

// Deterministic random inputs for property checks. The bit stream and the
// mapping to doubles are fixed here rather than left to the standard
// library's distributions, so a seed reproduces the same series everywhere.

#include <cstdint>
#include <random>

#include "lfca/contour.hpp"
#include "lfca/series.hpp"

namespace lfca {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);
    /// Uniform on [lo, hi].
    int uniform_int(int lo, int hi);
    FractalComplex complex(double bound = 1.0);

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, for deriving independent stream seeds.
[[nodiscard]] std::uint64_t mix_seed(std::uint64_t x) noexcept;

/// Coefficients uniform in [-bound, bound]^2 for k = kmin..kmax, with the
/// boundary coefficients forced nonzero.
[[nodiscard]] FractalSeries random_series(Rng& rng, Alpha alpha, Point center, int kmin, int kmax,
                                          double bound = 1.0);

/// Principal part sum_{k=-order}^{-1} a_k w^k about location.
[[nodiscard]] FractalSeries random_principal_part(Rng& rng, Alpha alpha, Point location, int order,
                                                  double bound = 1.0);

}  // namespace lfca
