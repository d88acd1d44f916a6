#pragma once
#include <stdexcept>
#include <string>
#include <string_view>

namespace bhlink {

enum class ErrorKind {
    InvalidInput,
    NonIntegralExpansion,
    NonIntegralOrder,
    NonIntegralMilnor,
    NonIntegralC,
    PoleAtT,
    NotInvertibleShape,
    SingularSystem,
    NonPositiveWeights,
    NoSplit,
    NoRepresentation,
    PreconditionFailed,
    CrossCheckFailed,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace bhlink
