#include "hermpsh/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace hermpsh {

namespace {

constexpr unsigned kMaxExponent = 256;

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& variables) : text_(text), vars_(variables) {}

    ExpressionAst parse() {
        ExpressionAst e = parse_expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what, ErrorCode code = ErrorCode::SyntaxError) const {
        throw ParseError(code, what, line_, col_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ < text_.size()) fail("expected '" + std::string(1, c) + "' but found '" + std::string(1, text_[pos_]) + "'");
            fail("expected '" + std::string(1, c) + "' but reached end of input");
        }
    }

    ExpressionAst node(ExpressionAst::Kind kind, int line, int col) const {
        ExpressionAst n;
        n.kind = kind;
        n.line = line;
        n.column = col;
        return n;
    }

    ExpressionAst parse_expr() {
        skip_ws();
        const int line = line_, col = col_;
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        ExpressionAst lhs = parse_term();
        if (negate) {
            ExpressionAst neg = node(ExpressionAst::Kind::Neg, line, col);
            neg.children.push_back(std::move(lhs));
            lhs = std::move(neg);
        }
        while (true) {
            skip_ws();
            const int l = line_, c = col_;
            ExpressionAst::Kind kind;
            if (accept('+')) {
                kind = ExpressionAst::Kind::Add;
            } else if (accept('-')) {
                kind = ExpressionAst::Kind::Sub;
            } else {
                break;
            }
            ExpressionAst bin = node(kind, l, c);
            bin.children.push_back(std::move(lhs));
            bin.children.push_back(parse_term());
            lhs = std::move(bin);
        }
        return lhs;
    }

    ExpressionAst parse_term() {
        ExpressionAst lhs = parse_factor();
        while (true) {
            skip_ws();
            const int l = line_, c = col_;
            if (!accept('*')) break;
            ExpressionAst bin = node(ExpressionAst::Kind::Mul, l, c);
            bin.children.push_back(std::move(lhs));
            bin.children.push_back(parse_factor());
            lhs = std::move(bin);
        }
        return lhs;
    }

    ExpressionAst parse_factor() {
        ExpressionAst base = parse_atom();
        skip_ws();
        const int l = line_, c = col_;
        if (accept('^')) {
            ExpressionAst pw = node(ExpressionAst::Kind::Pow, l, c);
            pw.exponent = parse_exponent();
            pw.children.push_back(std::move(base));
            return pw;
        }
        return base;
    }

    unsigned parse_exponent() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a nonnegative integer exponent");
        const mpz_class e = parse_digits();
        if (e > kMaxExponent) fail("exponent exceeds " + std::to_string(kMaxExponent));
        return static_cast<unsigned>(e.get_ui());
    }

    mpz_class parse_digits() {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits.push_back(text_[pos_]);
            advance();
        }
        return mpz_class(digits, 10);
    }

    std::string parse_identifier() {
        std::string id;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            id.push_back(text_[pos_]);
            advance();
        }
        return id;
    }

    ExpressionAst parse_atom() {
        skip_ws();
        const int line = line_, col = col_;
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char ch = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            mpq_class value(parse_digits());
            if (pos_ < text_.size() && text_[pos_] == '/') {
                advance();
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail("expected a denominator after '/'");
                const mpz_class den = parse_digits();
                if (den == 0) fail("zero denominator");
                value /= den;
            }
            ExpressionAst n = node(ExpressionAst::Kind::Number, line, col);
            n.value = GaussianRational(value);
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::string id = parse_identifier();
            auto it = std::find(vars_.begin(), vars_.end(), id);
            if (it != vars_.end()) {
                ExpressionAst n = node(ExpressionAst::Kind::Variable, line, col);
                n.variable = static_cast<std::size_t>(it - vars_.begin());
                return n;
            }
            if (id == "conj") {
                expect('(');
                ExpressionAst n = node(ExpressionAst::Kind::Conj, line, col);
                n.children.push_back(parse_expr());
                expect(')');
                return n;
            }
            if (id == "i") {
                ExpressionAst n = node(ExpressionAst::Kind::Number, line, col);
                n.value = GaussianRational::i();
                return n;
            }
            throw ParseError(ErrorCode::UnknownVariable, "unknown variable '" + id + "'", line, col);
        }
        if (ch == '(') {
            advance();
            ExpressionAst inner = parse_expr();
            expect(')');
            return inner;
        }
        if (ch == '|') {
            advance();
            ExpressionAst n = node(ExpressionAst::Kind::Modulus, line, col);
            n.children.push_back(parse_expr());
            expect('|');
            expect('^');
            const unsigned e = parse_exponent();
            if (e == 0 || e % 2 != 0) fail("|...| must be raised to a positive even power");
            n.exponent = e;
            return n;
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

void check_variables(const std::vector<std::string>& variables) {
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_') ||
            !std::all_of(v.begin(), v.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
            throw Error(ErrorCode::InvalidArgument, "invalid variable name '" + v + "'");
        if (v == "i" || v == "conj") throw Error(ErrorCode::InvalidArgument, "'" + v + "' is reserved");
        if (!seen.insert(v).second) throw Error(ErrorCode::InvalidArgument, "duplicate variable '" + v + "'");
    }
}

}  // namespace

ExpressionAst parse_ast(std::string_view text, const std::vector<std::string>& variables) {
    check_variables(variables);
    return Parser(text, variables).parse();
}

MixedPoly lower(const ExpressionAst& ast, std::size_t dim) {
    using Kind = ExpressionAst::Kind;
    switch (ast.kind) {
        case Kind::Number: return MixedPoly::constant(dim, ast.value);
        case Kind::Variable: return MixedPoly::monomial(MultiIndex::unit(dim, ast.variable), MultiIndex(dim));
        case Kind::Conj: return lower(ast.children[0], dim).conj();
        case Kind::Modulus: {
            const MixedPoly e = lower(ast.children[0], dim);
            return (e * e.conj()).pow(ast.exponent / 2);
        }
        case Kind::Add: return lower(ast.children[0], dim) + lower(ast.children[1], dim);
        case Kind::Sub: return lower(ast.children[0], dim) - lower(ast.children[1], dim);
        case Kind::Neg: return -lower(ast.children[0], dim);
        case Kind::Mul: return lower(ast.children[0], dim) * lower(ast.children[1], dim);
        case Kind::Pow: return lower(ast.children[0], dim).pow(ast.exponent);
    }
    throw Error(ErrorCode::InvalidArgument, "corrupt expression tree");
}

HermPoly parse_expression(std::string_view text, const std::vector<std::string>& variables, const ParseOptions& options) {
    if (variables.empty()) throw Error(ErrorCode::InvalidArgument, "at least one variable must be declared");
    MixedPoly p = lower(parse_ast(text, variables), variables.size());
    if (options.allow_pluriharmonic) {
        MixedPoly core(p.dim()), ph(p.dim());
        for (const auto& [m, c] : p) {
            if (m.holo.is_zero() || m.anti.is_zero()) {
                ph.add_term(m, c);
            } else {
                core.add_term(m, c);
            }
        }
        p = core + (ph + ph.conj()) * GaussianRational(mpq_class(1, 2));
    }
    if (!p.is_hermitian()) throw ParseError(ErrorCode::NotRealValued, "expression is not real-valued", 1, 1);
    return HermPoly(std::move(p));
}

HoloPoly parse_holomorphic(std::string_view text, const std::vector<std::string>& variables) {
    const std::size_t n = variables.size();
    const MixedPoly p = lower(parse_ast(text, variables), n);
    HoloPoly out(n);
    for (const auto& [m, c] : p) {
        if (!m.anti.is_zero()) throw ParseError(ErrorCode::SyntaxError, "expression is not holomorphic", 1, 1);
        out.add_term(m.holo, c);
    }
    return out;
}

GaussianRational parse_scalar(std::string_view text) {
    const MixedPoly p = lower(parse_ast(text, {}), 0);
    return p.coefficient({MultiIndex(0), MultiIndex(0)});
}

std::vector<std::string> split_list(std::string_view text, char separator) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = text.find(separator, start);
        std::string_view item = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        out.emplace_back(item);
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

std::vector<std::string> default_variables(std::size_t dim) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < dim; ++j) out.push_back("z" + std::to_string(j + 1));
    return out;
}

}  // namespace hermpsh
