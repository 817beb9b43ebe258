#ifndef LEANTOPO_ERRORS_HPP
#define LEANTOPO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leantopo {

// Error classes surfaced by the library. Each maps to a distinct CLI exit
// code so callers can dispatch on failures without parsing messages.
enum class ErrorCode : int {
    EmptyCloud = 10,
    ZeroVector = 11,
    DimensionMismatch = 12,
    InsufficientCandidates = 13,
    MissingNormal = 14,
    OutOfRange = 15,
    EmptyLeanSet = 16,
    MissingLnfs = 17,
    ZeroLnfs = 18,
    ComplexTooLarge = 19,
    MissingFace = 20,
    UnderSampled = 21,
    BadInput = 22,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }
    int exit_code() const { return static_cast<int>(code_); }

  private:
    ErrorCode code_;
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::EmptyCloud: return "EmptyCloud";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InsufficientCandidates: return "InsufficientCandidates";
        case ErrorCode::MissingNormal: return "MissingNormal";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::EmptyLeanSet: return "EmptyLeanSet";
        case ErrorCode::MissingLnfs: return "MissingLnfs";
        case ErrorCode::ZeroLnfs: return "ZeroLnfs";
        case ErrorCode::ComplexTooLarge: return "ComplexTooLarge";
        case ErrorCode::MissingFace: return "MissingFace";
        case ErrorCode::UnderSampled: return "UnderSampled";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "UnknownError";
}

}  // namespace leantopo

#endif
