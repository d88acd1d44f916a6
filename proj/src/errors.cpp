#include "bhlink/errors.hpp"

namespace bhlink {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::NonIntegralExpansion: return "NonIntegralExpansion";
        case ErrorKind::NonIntegralOrder: return "NonIntegralOrder";
        case ErrorKind::NonIntegralMilnor: return "NonIntegralMilnor";
        case ErrorKind::NonIntegralC: return "NonIntegralC";
        case ErrorKind::PoleAtT: return "PoleAtT";
        case ErrorKind::NotInvertibleShape: return "NotInvertibleShape";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::NonPositiveWeights: return "NonPositiveWeights";
        case ErrorKind::NoSplit: return "NoSplit";
        case ErrorKind::NoRepresentation: return "NoRepresentation";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::CrossCheckFailed: return "CrossCheckFailed";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace bhlink
