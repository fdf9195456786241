#pragma once

// JSON series documents:
//   {"alpha": a, "center": [x, y], "terms": [{"k": int, "re": r, "im": i}, ...],
//    "poles": [{"location": [x, y], "terms": [...]}, ...]}
// Without "poles" the document is a single FractalSeries; with it, the
// top-level terms are the Taylor part of a MultiPoleFunction.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "lfca/contour.hpp"
#include "lfca/series.hpp"

namespace lfca::cli {

class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using ParsedFunction = std::variant<FractalSeries, MultiPoleFunction>;

/// Throws DocumentError with a line (syntax) or field path (schema) in the
/// message; range errors from the library surface as lfca::Error.
[[nodiscard]] ParsedFunction parse_series(std::string_view text, std::optional<double> alpha_override = {});

/// Canonical form: keys in schema order, terms sorted by k, zero terms omitted.
[[nodiscard]] std::string serialize_series(const FractalSeries& f);
[[nodiscard]] std::string serialize_series(const MultiPoleFunction& f);
[[nodiscard]] std::string serialize_series(const ParsedFunction& f);

}  // namespace lfca::cli
