#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypell {

enum class ErrorCode {
    InvalidInput,
    DimensionMismatch,
    InvalidIndex,
    InvalidMultiplicity,
    OutOfRegime,
    UnsupportedType,
    UnsupportedShape,
    EmptyFeasible,
};

inline std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidInput: return "invalid_input";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::InvalidIndex: return "invalid_index";
    case ErrorCode::InvalidMultiplicity: return "invalid_multiplicity";
    case ErrorCode::OutOfRegime: return "out_of_regime";
    case ErrorCode::UnsupportedType: return "unsupported_type";
    case ErrorCode::UnsupportedShape: return "unsupported_shape";
    case ErrorCode::EmptyFeasible: return "empty_feasible";
    }
    return "unknown";
}

/// Every precondition failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code)
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace hypell
