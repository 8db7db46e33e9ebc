#include "hermpsh/error.hpp"

namespace hermpsh {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::SymmetryViolation: return "SymmetryViolation";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::NotHomogeneous: return "NotHomogeneous";
        case ErrorCode::HasPluriharmonicTerms: return "HasPluriharmonicTerms";
        case ErrorCode::ProfileIncomplete: return "ProfileIncomplete";
        case ErrorCode::DegenerateCodimension: return "DegenerateCodimension";
        case ErrorCode::DependentBasis: return "DependentBasis";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::SingularMap: return "SingularMap";
        case ErrorCode::NotDecomposable: return "NotDecomposable";
        case ErrorCode::HypothesisViolation: return "HypothesisViolation";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::NotRealValued: return "NotRealValued";
        case ErrorCode::UnknownVariable: return "UnknownVariable";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(ErrorCode code, const std::string& what, int line, int column)
    : Error(code, what + " at " + std::to_string(line) + ":" + std::to_string(column)),
      line_(line),
      column_(column) {}

}  // namespace hermpsh
