#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccd {

enum class ErrorCode {
    // panel loading
    IoError,
    BadHeader,
    BadField,
    DuplicateId,
    MissingCell,
    DuplicateRow,
    UnknownRegionId,
    UnknownIndicatorId,
    NonFiniteValue,
    // entropy index
    EmptySubsystem,
    ZeroColumn,
    DegenerateLog,
    AllColumnsUninformative,
    DimensionMismatch,
    // coupling
    InvalidConfig,
    OutOfRange,
    EmptyInput,
    EmptyRegion,
    // spatial statistics
    ZeroVariance,
    EmptyWeights,
    TooFewRegions,
    // ellipse geometry
    ZeroTotalWeight,
    DegenerateCloud,
    DuplicateYear,
    // pipeline
    ConfigError,
    ValidationFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Library-wide exception. `location` is a file:line or an entity key when known.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::string location = {});

    ErrorCode code() const noexcept { return code_; }
    const std::string& location() const noexcept { return location_; }

private:
    ErrorCode code_;
    std::string location_;
};

}  // namespace ccd
