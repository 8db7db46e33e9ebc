#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hermpsh {

enum class ErrorCode {
    SymmetryViolation,
    DimensionMismatch,
    ZeroPolynomial,
    NotHomogeneous,
    HasPluriharmonicTerms,
    ProfileIncomplete,
    DegenerateCodimension,
    DependentBasis,
    DimensionTooLarge,
    SingularMap,
    NotDecomposable,
    HypothesisViolation,
    SyntaxError,
    NotRealValued,
    UnknownVariable,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raised by the expression parser. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, const std::string& what, int line, int column);

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace hermpsh
