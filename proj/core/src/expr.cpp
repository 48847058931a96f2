#include "starprod/expr.hpp"

#include <cctype>
#include <unordered_map>

namespace starprod {

std::vector<Token> tokenize(std::string_view text) {
    static constexpr std::string_view symbols = "+-@*()[],;=";
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            // digits '.' digits makes a decimal literal
            if (i + 1 < text.size() && text[i] == '.' &&
                std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
                ++i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                out.push_back({TokenKind::Decimal, std::string(text.substr(start, i - start)), start});
            } else {
                out.push_back({TokenKind::Integer, std::string(text.substr(start, i - start)), start});
            }
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            out.push_back({TokenKind::Ident, std::string(text.substr(start, i - start)), start});
        } else if (ch == '/') {
            out.push_back({TokenKind::Slash, "/", start});
            ++i;
        } else if (symbols.find(ch) != std::string_view::npos) {
            out.push_back({TokenKind::Symbol, std::string(1, ch), start});
            ++i;
        } else {
            throw LexError(start, std::string("unexpected character '") + ch + "'");
        }
    }
    out.push_back({TokenKind::End, "", text.size()});
    return out;
}

int builtin_arity(std::string_view name) {
    static const std::unordered_map<std::string_view, int> table = {
        {"sinv", 1},   {"spow", 2},    {"zdiv", 1},   {"hsplit0", 1}, {"hsplit1", 1},
        {"had", 2},    {"hn_h", 1},    {"hn_n", 1},   {"conj", 2},    {"alpha", 1},
        {"alphapre", 1}, {"beta", 1},  {"betainv", 1}, {"gamma", 1},  {"psi", 1},
        {"psiinv", 1}, {"phimap", 1},  {"rot", 2},    {"b", 2},       {"mcompose", 2},
        {"mapply", 2}, {"minv", 1},    {"embed", 1},  {"rho", 1},     {"motion", 2},
    };
    auto it = table.find(name);
    return it == table.end() ? -1 : it->second;
}

namespace {

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

    AstPtr run() {
        AstPtr e = expr();
        expect_end();
        return e;
    }

private:
    const std::vector<Token>& toks_;
    std::size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }
    bool at_symbol(std::string_view s) const {
        return cur().kind == TokenKind::Symbol && cur().lexeme == s;
    }
    void advance() { ++pos_; }
    void expect_symbol(std::string_view s) {
        if (!at_symbol(s)) throw ParseError(cur().offset, std::string("'") + std::string(s) + "'");
        advance();
    }
    void expect_end() {
        if (cur().kind != TokenKind::End) throw ParseError(cur().offset, "end of input");
    }

    static AstPtr node(Span span, auto&& payload) {
        auto n = std::make_unique<AstNode>();
        n->span = span;
        n->v = std::forward<decltype(payload)>(payload);
        return n;
    }
    std::size_t end_offset() const { return cur().offset; }

    AstPtr expr() {
        AstPtr lhs = term();
        while (at_symbol("+") || at_symbol("-")) {
            BinOp op = at_symbol("+") ? BinOp::Add : BinOp::Sub;
            advance();
            AstPtr rhs = term();
            Span sp{lhs->span.begin, rhs->span.end};
            lhs = node(sp, BinaryExpr{op, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    AstPtr term() {
        AstPtr lhs = unary();
        while (at_symbol("@") || at_symbol("*")) {
            BinOp op = at_symbol("@") ? BinOp::Star : BinOp::Mul;
            advance();
            AstPtr rhs = unary();
            Span sp{lhs->span.begin, rhs->span.end};
            lhs = node(sp, BinaryExpr{op, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    AstPtr unary() {
        if (at_symbol("-")) {
            std::size_t begin = cur().offset;
            advance();
            AstPtr operand = unary();
            Span sp{begin, operand->span.end};
            return node(sp, NegExpr{std::move(operand)});
        }
        return atom();
    }

    AstPtr atom() {
        const Token& t = cur();
        switch (t.kind) {
            case TokenKind::Integer:
            case TokenKind::Decimal: {
                ScalarLiteral lit = scalar_literal();
                Span sp = lit.span;
                return node(sp, std::move(lit));
            }
            case TokenKind::Ident: {
                std::size_t begin = t.offset;
                std::string name = t.lexeme;
                advance();
                if (at_symbol("(")) return call(name, begin);
                return node(Span{begin, begin + name.size()}, IdentExpr{name});
            }
            case TokenKind::Symbol:
                if (t.lexeme == "[") return matrix_literal();
                if (t.lexeme == "(") return paren_or_vector();
                break;
            default:
                break;
        }
        throw ParseError(t.offset, "a matrix, vector, scalar, identifier, call, or '('");
    }

    // ['-'] integer ['/' integer] | ['-'] decimal
    ScalarLiteral scalar_literal() {
        std::size_t begin = cur().offset;
        std::string text;
        if (at_symbol("-")) {
            text = "-";
            advance();
        }
        if (cur().kind == TokenKind::Decimal) {
            text += cur().lexeme;
            std::size_t end = cur().offset + cur().lexeme.size();
            advance();
            return {text, true, Span{begin, end}};
        }
        if (cur().kind != TokenKind::Integer) throw ParseError(cur().offset, "a number");
        text += cur().lexeme;
        std::size_t end = cur().offset + cur().lexeme.size();
        advance();
        if (cur().kind == TokenKind::Slash) {
            advance();
            if (cur().kind != TokenKind::Integer)
                throw ParseError(cur().offset, "denominator digits");
            text += "/" + cur().lexeme;
            end = cur().offset + cur().lexeme.size();
            advance();
        }
        return {text, false, Span{begin, end}};
    }

    AstPtr matrix_literal() {
        std::size_t begin = cur().offset;
        expect_symbol("[");
        MatrixLit lit;
        lit.rows.push_back(row());
        while (at_symbol(";")) {
            advance();
            std::size_t row_off = cur().offset;
            lit.rows.push_back(row());
            if (lit.rows.back().size() != lit.rows.front().size())
                throw ParseError(row_off, "a row of " + std::to_string(lit.rows.front().size()) +
                                              " entries (ragged rows)");
        }
        std::size_t end = end_offset() + 1;
        expect_symbol("]");
        if (lit.rows.size() != lit.rows.front().size())
            throw ParseError(begin, "a square matrix literal");
        return node(Span{begin, end}, std::move(lit));
    }

    std::vector<ScalarLiteral> row() {
        std::vector<ScalarLiteral> r;
        r.push_back(scalar_literal());
        while (at_symbol(",")) {
            advance();
            r.push_back(scalar_literal());
        }
        return r;
    }

    // '(' expr ')' is grouping; '(' expr ',' expr ')' is a vector literal.
    AstPtr paren_or_vector() {
        std::size_t begin = cur().offset;
        expect_symbol("(");
        AstPtr first = expr();
        if (at_symbol(",")) {
            advance();
            AstPtr second = expr();
            std::size_t end = end_offset() + 1;
            expect_symbol(")");
            return node(Span{begin, end}, VectorLit{std::move(first), std::move(second)});
        }
        expect_symbol(")");
        return first;
    }

    AstPtr call(const std::string& name, std::size_t begin) {
        int arity = builtin_arity(name);
        if (arity < 0) throw ParseError(begin, "a builtin function name");
        expect_symbol("(");
        CallExpr c{name, {}};
        c.args.push_back(expr());
        while (at_symbol(",")) {
            advance();
            c.args.push_back(expr());
        }
        std::size_t end = end_offset() + 1;
        expect_symbol(")");
        if (static_cast<int>(c.args.size()) != arity)
            throw ParseError(begin, name + " takes " + std::to_string(arity) + " argument(s)");
        return node(Span{begin, end}, std::move(c));
    }
};

}  // namespace

AstPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

AstPtr parse_expression(std::string_view text) { return parse(tokenize(text)); }

}  // namespace starprod
