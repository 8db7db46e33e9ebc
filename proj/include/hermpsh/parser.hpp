#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hermpsh/herm_poly.hpp"

namespace hermpsh {

/// Parsed expression tree. Lowering distributes conj() syntactically and
/// expands |e|^(2m) to (e conj(e))^m.
struct ExpressionAst {
    enum class Kind { Number, Variable, Conj, Modulus, Add, Sub, Neg, Mul, Pow };

    Kind kind = Kind::Number;
    GaussianRational value;     // Number
    std::size_t variable = 0;   // Variable
    unsigned exponent = 0;      // Pow, Modulus (the full even exponent)
    std::vector<ExpressionAst> children;
    int line = 1;
    int column = 1;
};

struct ParseOptions {
    /// Accept non-real pluriharmonic parts by replacing them with their real part.
    bool allow_pluriharmonic = false;
};

/// expr   := ['+'|'-'] term (('+'|'-') term)*
/// term   := factor ('*' factor)*
/// factor := atom ('^' uint)?
/// atom   := rational | 'i' | var | 'conj(' expr ')' | '|' expr '|' '^' even-uint | '(' expr ')'
ExpressionAst parse_ast(std::string_view text, const std::vector<std::string>& variables);

MixedPoly lower(const ExpressionAst& ast, std::size_t dim);

/// Throws ParseError with SyntaxError, UnknownVariable or NotRealValued.
HermPoly parse_expression(std::string_view text, const std::vector<std::string>& variables,
                          const ParseOptions& options = {});

/// Expression that may only involve z (no conj). Throws ParseError.
HoloPoly parse_holomorphic(std::string_view text, const std::vector<std::string>& variables);

/// Constant expression such as "3/2-i". Throws ParseError.
GaussianRational parse_scalar(std::string_view text);

/// Splits "a,b;c,d" style lists on the given separator, trimming blanks.
std::vector<std::string> split_list(std::string_view text, char separator);

/// Names z1..zn.
std::vector<std::string> default_variables(std::size_t dim);

}  // namespace hermpsh
