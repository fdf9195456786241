#include "lfca/error.hpp"

namespace lfca {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Domain: return "domain error";
        case ErrorKind::DivisionByZero: return "division by zero";
        case ErrorKind::GammaPole: return "gamma pole";
        case ErrorKind::NoConvergence: return "no convergence";
        case ErrorKind::NoPrimitive: return "no primitive";
        case ErrorKind::PoleEvaluation: return "pole evaluation";
        case ErrorKind::Mismatch: return "mismatch";
        case ErrorKind::PoleOnContour: return "pole on contour";
        case ErrorKind::UnknownPole: return "unknown pole";
    }
    return "error";
}

}  // namespace lfca
