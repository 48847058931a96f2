#include <doctest.h>

#include "starprod/eval.hpp"
#include "starprod/float_scalar.hpp"
#include "starprod/rational.hpp"
#include "starprod/sampling.hpp"

using namespace starprod;
using R = Rational;
using M = Matrix<R>;

TEST_CASE("tokenizer") {
    auto toks = tokenize("[[1,2],[3,4]]");
    REQUIRE(toks.size() == 14);  // 13 tokens + end marker
    CHECK(toks[0].kind == TokenKind::Symbol);
    CHECK(toks[2].kind == TokenKind::Integer);
    CHECK(toks[2].lexeme == "1");
    CHECK(toks[13].kind == TokenKind::End);

    auto toks2 = tokenize("A @ inv(B)");
    CHECK(toks2[0].kind == TokenKind::Ident);
    CHECK(toks2[1].lexeme == "@");
    CHECK(toks2[2].lexeme == "inv");
    CHECK(toks2[3].lexeme == "(");
    CHECK(toks2[4].lexeme == "B");
    CHECK(toks2[5].lexeme == ")");

    // the lexer is context-free about slashes
    auto toks3 = tokenize("1/2/3");
    REQUIRE(toks3.size() == 6);
    CHECK(toks3[1].kind == TokenKind::Slash);
    CHECK(toks3[3].kind == TokenKind::Slash);

    CHECK(tokenize("1.25")[0].kind == TokenKind::Decimal);
    CHECK_THROWS_AS(tokenize("1 ? 2"), LexError);

    // offsets are strictly increasing and cover the input
    std::string input = "  [1, 2; 3,4] @ x ";
    auto toks4 = tokenize(input);
    std::size_t prev = 0;
    for (std::size_t i = 1; i < toks4.size(); ++i) {
        CHECK(toks4[i].offset > prev);
        prev = toks4[i].offset;
    }
    for (const auto& t : toks4)
        if (t.kind != TokenKind::End)
            CHECK(input.substr(t.offset, t.lexeme.size()) == t.lexeme);
}

TEST_CASE("parser structure") {
    // '@' is left-associative: A @ B @ C = (A @ B) @ C
    auto ast = parse_expression("A @ B @ C");
    const auto* outer = std::get_if<BinaryExpr>(&ast->v);
    REQUIRE(outer);
    CHECK(outer->op == BinOp::Star);
    const auto* inner = std::get_if<BinaryExpr>(&outer->lhs->v);
    REQUIRE(inner);
    CHECK(inner->op == BinOp::Star);
    CHECK(std::get_if<IdentExpr>(&outer->rhs->v)->name == "C");

    auto mat = parse_expression("[1,2;3,4]");
    const auto* lit = std::get_if<MatrixLit>(&mat->v);
    REQUIRE(lit);
    CHECK(lit->rows.size() == 2);
    CHECK(lit->rows[0].size() == 2);

    CHECK_THROWS_AS(parse_expression("[1,2;3]"), ParseError);
    CHECK_THROWS_AS(parse_expression("1/2/3"), ParseError);
    CHECK_THROWS_AS(parse_expression("spow(A)"), ParseError);   // wrong arity
    CHECK_THROWS_AS(parse_expression("frobnicate(A)"), ParseError);
    CHECK_THROWS_AS(parse_expression("(1,2,3)"), ParseError);

    // precedence: additive below multiplicative, unary minus binds tightest
    auto sum = parse_expression("A + B @ C");
    const auto* add = std::get_if<BinaryExpr>(&sum->v);
    REQUIRE(add);
    CHECK(add->op == BinOp::Add);
    CHECK(std::get_if<BinaryExpr>(&add->rhs->v)->op == BinOp::Star);
}

TEST_CASE("evaluator basics") {
    Environment<R> env;
    auto as_matrix = [&](std::string_view text) {
        return std::get<M>(eval_text<R>(text, env));
    };

    M expected{{R(5), R(22)}, {R(43), R(32)}};
    CHECK(as_matrix("[1,2;3,4] @ [5,6;7,8]") == expected);

    M inv{{R(1, 2), R(-1, 8)}, {R(0), R(1, 4)}};
    CHECK(as_matrix("sinv([2,1;0,4])") == inv);

    Vec2<R> b{R(5), R(-1)};
    CHECK(std::get<Vec2<R>>(eval_text<R>("beta([1,2;3,1])")) == b);

    CHECK(std::get<R>(eval_text<R>("1/2 + 1/3")) == R(5, 6));
    CHECK(std::get<R>(eval_text<R>("-(1/2)")) == R(-1, 2));
    CHECK(as_matrix("spow([1,1;0,1], 3)") == M{{R(1), R(3)}, {R(0), R(1)}});
    CHECK(as_matrix("2 * [1,0;0,1]") == R(2) * M::identity(2));

    // grouping parens vs vector literal
    CHECK(std::get<R>(eval_text<R>("(1 + 2) * 3")) == R(9));
    CHECK(std::get<Vec2<R>>(eval_text<R>("(1, 2)")) == Vec2<R>{R(1), R(2)});
    CHECK(std::get<R>(eval_text<R>("b((2,3),(5,7))")) == R(-11));

    // rotations and motions through builtins
    CHECK(std::get<HypRotation<R>>(eval_text<R>("psi(3)")) == HypRotation<R>(R(5, 3), R(4, 3)));
    CHECK(std::get<R>(eval_text<R>("psiinv(psi(3))")) == R(3));
    CHECK(std::get<HypRotation<R>>(eval_text<R>("rot(5/3, 4/3)")) == psi(R(3)));
    CHECK_THROWS_AS(eval_text<R>("rot(1, 1)"), InvalidArgument);
    CHECK(std::get<Motion<R>>(eval_text<R>("minv(phimap([2,1;0,1])) * phimap([2,1;0,1])")) ==
          Motion<R>::identity());
    CHECK(as_matrix("embed(phimap([2,1;0,1]))").dim() == 3);
    CHECK(as_matrix("rho([2,1;0,1])") ==
          M{{R(5, 2), R(3, 2), R(2)}, {R(3, 2), R(5, 2), R(2)}, {R(0), R(0), R(2)}});

    env["A"] = as_matrix("[1,2;3,4]");
    CHECK(as_matrix("A @ A") == star(std::get<M>(env["A"]), std::get<M>(env["A"])));
}

TEST_CASE("evaluator errors carry spans") {
    CHECK_THROWS_AS(eval_text<R>("X + 1"), UnboundIdentifier);
    CHECK_THROWS_AS(eval_text<R>("1 @ 2"), TypeError);
    CHECK_THROWS_AS(eval_text<R>("(psi(2), 1)"), TypeError);
    CHECK_THROWS_AS(eval_text<R>("1.5"), TypeError);  // decimals need the float backend
    CHECK(std::get<FloatScalar>(eval_text<FloatScalar>("1.5")) == FloatScalar(1.5));

    std::string input = "1 + sinv([0,2;3,5])";
    try {
        eval_text<R>(input);
        FAIL("expected NotInvertible");
    } catch (const NotInvertible& e) {
        REQUIRE(e.source_span.has_value());
        CHECK(e.source_span->begin >= 4);
        CHECK(e.source_span->end <= input.size());
    }

    try {
        eval_text<R>("zz + 1");
        FAIL("expected UnboundIdentifier");
    } catch (const UnboundIdentifier& e) {
        CHECK(e.span.begin == 0);
        CHECK(e.span.end == 2);
    }
}

TEST_CASE("format round-trips through the evaluator") {
    SplitMix64 rng(30);
    for (int t = 0; t < 1000; ++t) {
        Value<R> v;
        switch (rng.below(3)) {
            case 0: v = sample_scalar<R>(rng); break;
            case 1: v = sample_matrix<R>(rng, 1 + rng.below(3)); break;
            default: v = Vec2<R>{sample_scalar<R>(rng), sample_scalar<R>(rng)}; break;
        }
        CHECK(eval_text<R>(format_value(v)) == v);
    }

    // rotations and motions format as constructor calls
    Value<R> r = psi(R(3));
    CHECK(format_value(r) == "rot(5/3,4/3)");
    CHECK(eval_text<R>(format_value(r)) == r);
    Value<R> m = Motion<R>{psi(R(3)), Vec2<R>{R(1), R(-2)}};
    CHECK(format_value(m) == "motion(rot(5/3,4/3),(1,-2))");
    CHECK(eval_text<R>(format_value(m)) == m);
}

TEST_CASE("differential test against the library operations") {
    SplitMix64 rng(31);
    Environment<R> env;
    for (int t = 0; t < 500; ++t) {
        M a = sample_matrix<R>(rng, 2);
        M b = sample_matrix<R>(rng, 2);
        env["A"] = a;
        env["B"] = b;
        CHECK(std::get<M>(eval_text<R>("A @ B", env)) == star(a, b));
        CHECK(std::get<M>(eval_text<R>("A * B", env)) == a * b);
        CHECK(std::get<M>(eval_text<R>("had(A, B)", env)) == hadamard(a, b));
        CHECK(std::get<M>(eval_text<R>("hsplit0(A)", env)) == a.diag_part());
        CHECK(std::get<M>(eval_text<R>("hsplit1(A)", env)) == a.offdiag_part());

        M g = sample_invertible<R>(rng);
        env["G"] = g;
        CHECK(std::get<M>(eval_text<R>("sinv(G)", env)) == star_inverse(g));
        CHECK(std::get<M>(eval_text<R>("hn_h(G)", env)) == hn_decompose(g).h);
        CHECK(std::get<M>(eval_text<R>("hn_n(G)", env)) == hn_decompose(g).nPart);
        CHECK(std::get<Motion<R>>(eval_text<R>("phimap(G)", env)) == phi_map(g));
        CHECK(std::get<M>(eval_text<R>("rho(G)", env)) == rho(g));
    }
}
