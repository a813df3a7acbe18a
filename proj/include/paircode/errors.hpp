#pragma once

#include <stdexcept>
#include <string>

namespace paircode {

/// Kind of failure raised by library preconditions and guards.
enum class ErrorKind {
    LengthMismatch,
    InconsistentPairVector,
    CodeTooSmall,
    DomainError,
    TooLarge,
    SizeMismatch,
    DuplicateMessage,
    ValueNotInImage,
    BadBaseCode,
    NotPairLocallyBinary,
    ParseError,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::InconsistentPairVector: return "InconsistentPairVector";
        case ErrorKind::CodeTooSmall: return "CodeTooSmall";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::DuplicateMessage: return "DuplicateMessage";
        case ErrorKind::ValueNotInImage: return "ValueNotInImage";
        case ErrorKind::BadBaseCode: return "BadBaseCode";
        case ErrorKind::NotPairLocallyBinary: return "NotPairLocallyBinary";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

}  // namespace paircode
