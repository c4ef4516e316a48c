#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tfp {

enum class ErrorCode {
    NotATournament,
    BadFavorite,
    CapacityExceeded,
    NotAcyclic,
    NotPowerOfTwo,
    InvalidSequence,
    OverlappingPlayers,
    LengthMismatch,
    InvalidExtension,
    NotWinnable,
    Not3King,
    NotKing,
    PreconditionViolated,
    NotSpecial,
    PropertyViolated,
    Unsatisfiable,
    BadSize,
    Infeasible,
    ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotATournament: return "NotATournament";
    case ErrorCode::BadFavorite: return "BadFavorite";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::OverlappingPlayers: return "OverlappingPlayers";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidExtension: return "InvalidExtension";
    case ErrorCode::NotWinnable: return "NotWinnable";
    case ErrorCode::Not3King: return "Not3King";
    case ErrorCode::NotKing: return "NotKing";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotSpecial: return "NotSpecial";
    case ErrorCode::PropertyViolated: return "PropertyViolated";
    case ErrorCode::Unsatisfiable: return "Unsatisfiable";
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure in the library is reported through this type; `code()` is
/// the stable discriminator, `what()` carries a human-readable detail.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& detail)
        : Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace tfp
