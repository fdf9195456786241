#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lfca {

enum class ErrorKind {
    Domain,
    DivisionByZero,
    GammaPole,
    NoConvergence,
    NoPrimitive,
    PoleEvaluation,
    Mismatch,
    PoleOnContour,
    UnknownPole,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The CLI maps these to exit status 2.
class Error : public std::domain_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::domain_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace lfca
