#include "lfca/sampling.hpp"

#include <vector>

namespace lfca {

double Rng::uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

int Rng::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

FractalComplex Rng::complex(double bound) {
    const double re = uniform(-bound, bound);
    return {re, uniform(-bound, bound)};
}

std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

FractalSeries random_series(Rng& rng, Alpha alpha, Point center, int kmin, int kmax, double bound) {
    std::vector<FractalComplex> c;
    c.reserve(static_cast<std::size_t>(kmax - kmin + 1));
    for (int k = kmin; k <= kmax; ++k) c.push_back(rng.complex(bound));
    // keep the exponent range exact
    if (c.front().is_zero()) c.front() = FractalComplex{bound};
    if (c.back().is_zero()) c.back() = FractalComplex{bound};
    return {alpha, center, kmin, std::move(c)};
}

FractalSeries random_principal_part(Rng& rng, Alpha alpha, Point location, int order, double bound) {
    return random_series(rng, alpha, location, -order, -1, bound);
}

}  // namespace lfca
