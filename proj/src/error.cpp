#include "ccd/error.hpp"

namespace ccd {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::BadHeader: return "BadHeader";
        case ErrorCode::BadField: return "BadField";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::MissingCell: return "MissingCell";
        case ErrorCode::DuplicateRow: return "DuplicateRow";
        case ErrorCode::UnknownRegionId: return "UnknownRegionId";
        case ErrorCode::UnknownIndicatorId: return "UnknownIndicatorId";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::EmptySubsystem: return "EmptySubsystem";
        case ErrorCode::ZeroColumn: return "ZeroColumn";
        case ErrorCode::DegenerateLog: return "DegenerateLog";
        case ErrorCode::AllColumnsUninformative: return "AllColumnsUninformative";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::EmptyRegion: return "EmptyRegion";
        case ErrorCode::ZeroVariance: return "ZeroVariance";
        case ErrorCode::EmptyWeights: return "EmptyWeights";
        case ErrorCode::TooFewRegions: return "TooFewRegions";
        case ErrorCode::ZeroTotalWeight: return "ZeroTotalWeight";
        case ErrorCode::DegenerateCloud: return "DegenerateCloud";
        case ErrorCode::DuplicateYear: return "DuplicateYear";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::ValidationFailed: return "ValidationFailed";
    }
    return "Unknown";
}

static std::string compose(ErrorCode code, const std::string& message, const std::string& location) {
    std::string out(to_string(code));
    if (!location.empty()) out += " at " + location;
    out += ": " + message;
    return out;
}

Error::Error(ErrorCode code, std::string message, std::string location)
    : std::runtime_error(compose(code, message, location)), code_(code), location_(std::move(location)) {}

}  // namespace ccd
