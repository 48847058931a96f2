#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "starprod/errors.hpp"

namespace starprod {

enum class TokenKind { Integer, Decimal, Slash, Ident, Symbol, End };

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t offset;
};

/// Longest-match lexer. Whitespace is skipped; offsets are byte positions.
/// Symbols: + - @ * ( ) [ ] , ; =
std::vector<Token> tokenize(std::string_view text);

enum class BinOp { Star, Mul, Add, Sub };

struct AstNode;
using AstPtr = std::unique_ptr<AstNode>;

/// Scalar literal kept as source text; the evaluator converts it with the
/// active backend (decimals are rejected on the rational backend).
struct ScalarLiteral {
    std::string text;
    bool is_decimal = false;
    Span span;
};

struct MatrixLit {
    std::vector<std::vector<ScalarLiteral>> rows;  // all rows equal length
};

struct VectorLit {
    AstPtr e1, e2;
};

struct IdentExpr {
    std::string name;
};

struct BinaryExpr {
    BinOp op;
    AstPtr lhs, rhs;
};

struct NegExpr {
    AstPtr operand;
};

struct CallExpr {
    std::string name;
    std::vector<AstPtr> args;
};

struct AstNode {
    Span span;
    std::variant<ScalarLiteral, MatrixLit, VectorLit, IdentExpr, BinaryExpr, NegExpr, CallExpr> v;
};

/// Arity of a builtin callable in the expression language, or -1 if the
/// name is not a builtin.
int builtin_arity(std::string_view name);

/// Recursive-descent parser for the expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := unary (('@'|'*') unary)*
///   unary  := '-' unary | atom
///   atom   := matrixLit | vectorLit | scalarLit | ident | call | '(' expr ')'
/// All binary operators are left-associative; '@' is the star product.
AstPtr parse(const std::vector<Token>& tokens);

/// tokenize + parse, requiring the whole input to be consumed.
AstPtr parse_expression(std::string_view text);

}  // namespace starprod
