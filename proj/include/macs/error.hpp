#pragma once

#include <stdexcept>
#include <string>

namespace macs {

enum class ErrorCode {
    InvalidArgument,
    ParseError,
    NotAntichain,
    NotStrictChain,
    WrongKind,
    NotStepMatrix,
    NonCanonicalWord,
    LengthMismatch,
    WrongOrientation,
    NonIntegerStep,
    MethodDisagreement,
    TooLarge,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotAntichain: return "NotAntichain";
    case ErrorCode::NotStrictChain: return "NotStrictChain";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::NotStepMatrix: return "NotStepMatrix";
    case ErrorCode::NonCanonicalWord: return "NonCanonicalWord";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::WrongOrientation: return "WrongOrientation";
    case ErrorCode::NonIntegerStep: return "NonIntegerStep";
    case ErrorCode::MethodDisagreement: return "MethodDisagreement";
    case ErrorCode::TooLarge: return "TooLarge";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace macs
