#pragma once

#include <map>
#include <string>
#include <variant>

#include "starprod/expr.hpp"
#include "starprod/group.hpp"
#include "starprod/hyperbolic.hpp"
#include "starprod/matrix.hpp"

namespace starprod {

/// Evaluation result of an expression. Mat3 values (embed/rho results)
/// are Matrix values with dimension 3.
template <ScalarBackend S>
using Value = std::variant<S, Matrix<S>, Vec2<S>, HypRotation<S>, Motion<S>, bool>;

template <ScalarBackend S>
using Environment = std::map<std::string, Value<S>, std::less<>>;

namespace detail {

template <ScalarBackend S>
S scalar_from_literal(const ScalarLiteral& lit) {
    if (lit.is_decimal && S::is_exact)
        throw TypeError(lit.span, "decimal literals require the float backend");
    return S::parse(lit.text);
}

template <ScalarBackend S>
const char* value_type_name(const Value<S>& v) {
    switch (v.index()) {
        case 0: return "scalar";
        case 1: return "matrix";
        case 2: return "vector";
        case 3: return "rotation";
        case 4: return "motion";
        default: return "boolean";
    }
}

}  // namespace detail

template <ScalarBackend S>
Value<S> eval(const AstNode& node, const Environment<S>& env);

namespace detail {

template <ScalarBackend S>
TypeError bad_types(const AstNode& node, const char* what, const Value<S>& a) {
    return TypeError(node.span, std::string(what) + " cannot take a " + value_type_name(a));
}

template <ScalarBackend S>
TypeError bad_types(const AstNode& node, const char* what, const Value<S>& a, const Value<S>& b) {
    return TypeError(node.span, std::string(what) + " cannot take " + value_type_name(a) +
                                    " and " + value_type_name(b));
}

template <ScalarBackend S>
Value<S> eval_binary(const AstNode& node, const BinaryExpr& bin, const Environment<S>& env) {
    Value<S> a = eval(*bin.lhs, env);
    Value<S> b = eval(*bin.rhs, env);
    using M = Matrix<S>;
    switch (bin.op) {
        case BinOp::Star:
            if (auto* ma = std::get_if<M>(&a))
                if (auto* mb = std::get_if<M>(&b)) return star(*ma, *mb);
            throw bad_types(node, "'@'", a, b);
        case BinOp::Mul:
            if (auto* sa = std::get_if<S>(&a)) {
                if (auto* sb = std::get_if<S>(&b)) return *sa * *sb;
                if (auto* mb = std::get_if<M>(&b)) return *sa * *mb;
            }
            if (auto* ma = std::get_if<M>(&a)) {
                if (auto* mb = std::get_if<M>(&b)) return *ma * *mb;
                if (auto* sb = std::get_if<S>(&b)) return *sb * *ma;
            }
            if (auto* ra = std::get_if<HypRotation<S>>(&a)) {
                if (auto* rb = std::get_if<HypRotation<S>>(&b)) return rot_compose(*ra, *rb);
                if (auto* vb = std::get_if<Vec2<S>>(&b)) return rot_apply(*ra, *vb);
            }
            if (auto* ta = std::get_if<Motion<S>>(&a))
                if (auto* tb = std::get_if<Motion<S>>(&b)) return motion_compose(*ta, *tb);
            throw bad_types(node, "'*'", a, b);
        case BinOp::Add:
        case BinOp::Sub: {
            bool add = bin.op == BinOp::Add;
            if (auto* sa = std::get_if<S>(&a))
                if (auto* sb = std::get_if<S>(&b)) return add ? *sa + *sb : *sa - *sb;
            if (auto* ma = std::get_if<M>(&a))
                if (auto* mb = std::get_if<M>(&b)) return add ? *ma + *mb : *ma - *mb;
            if (auto* va = std::get_if<Vec2<S>>(&a))
                if (auto* vb = std::get_if<Vec2<S>>(&b)) return add ? *va + *vb : *va - *vb;
            throw bad_types(node, add ? "'+'" : "'-'", a, b);
        }
    }
    throw TypeError(node.span, "unknown operator");
}

template <ScalarBackend S, class T>
const T& arg_as(const AstNode& node, const char* name, const char* want, const Value<S>& v) {
    if (auto* p = std::get_if<T>(&v)) return *p;
    throw TypeError(node.span, std::string(name) + " expects a " + want + ", got a " +
                                   value_type_name(v));
}

template <ScalarBackend S>
Value<S> eval_call(const AstNode& node, const CallExpr& call, const Environment<S>& env) {
    std::vector<Value<S>> args;
    args.reserve(call.args.size());
    for (const auto& a : call.args) args.push_back(eval(*a, env));
    const std::string& f = call.name;
    using M = Matrix<S>;
    auto mat = [&](std::size_t i) -> const M& {
        return arg_as<S, M>(node, f.c_str(), "matrix", args[i]);
    };
    auto scl = [&](std::size_t i) -> const S& {
        return arg_as<S, S>(node, f.c_str(), "scalar", args[i]);
    };
    auto vec = [&](std::size_t i) -> const Vec2<S>& {
        return arg_as<S, Vec2<S>>(node, f.c_str(), "vector", args[i]);
    };
    auto rotation = [&](std::size_t i) -> const HypRotation<S>& {
        return arg_as<S, HypRotation<S>>(node, f.c_str(), "rotation", args[i]);
    };
    auto motion_arg = [&](std::size_t i) -> const Motion<S>& {
        return arg_as<S, Motion<S>>(node, f.c_str(), "motion", args[i]);
    };

    if (f == "sinv") return star_inverse(mat(0));
    if (f == "spow") {
        const S& k = scl(1);
        if constexpr (S::is_exact) {
            return star_power(mat(0), k.to_integer());
        } else {
            double kd = k.value();
            if (kd != static_cast<long long>(kd))
                throw TypeError(node.span, "spow exponent must be an integer");
            return star_power(mat(0), static_cast<long long>(kd));
        }
    }
    if (f == "zdiv") return zero_divisor_witness(mat(0));
    if (f == "hsplit0") return mat(0).diag_part();
    if (f == "hsplit1") return mat(0).offdiag_part();
    if (f == "had") return hadamard(mat(0), mat(1));
    if (f == "hn_h") return hn_decompose(mat(0)).h;
    if (f == "hn_n") return hn_decompose(mat(0)).nPart;
    if (f == "conj") return conjugate_n_part(mat(0), mat(1));
    if (f == "alpha") return alpha(mat(0));
    if (f == "alphapre") return alpha_preimage(rotation(0));
    if (f == "beta") return beta(mat(0));
    if (f == "betainv") return beta_inv(vec(0));
    if (f == "gamma") return gamma(mat(0));
    if (f == "psi") return psi(scl(0));
    if (f == "psiinv") return psi_inv(rotation(0));
    if (f == "phimap") return phi_map(mat(0));
    if (f == "rot") return HypRotation<S>(scl(0), scl(1));
    if (f == "b") return minkowski_form(vec(0), vec(1));
    if (f == "mcompose") return motion_compose(motion_arg(0), motion_arg(1));
    if (f == "mapply") return motion_apply(motion_arg(0), vec(1));
    if (f == "minv") return motion_inverse(motion_arg(0));
    if (f == "embed") return embed_affine(motion_arg(0));
    if (f == "rho") return rho(mat(0));
    if (f == "motion") return Motion<S>{rotation(0), vec(1)};
    throw TypeError(node.span, "unknown builtin '" + f + "'");
}

}  // namespace detail

template <ScalarBackend S>
Value<S> eval(const AstNode& node, const Environment<S>& env) {
    try {
        return std::visit(
            [&](const auto& n) -> Value<S> {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, ScalarLiteral>) {
                    return detail::scalar_from_literal<S>(n);
                } else if constexpr (std::is_same_v<T, MatrixLit>) {
                    Matrix<S> m(n.rows.size());
                    for (std::size_t i = 0; i < n.rows.size(); ++i)
                        for (std::size_t j = 0; j < n.rows[i].size(); ++j)
                            m.at(i, j) = detail::scalar_from_literal<S>(n.rows[i][j]);
                    return m;
                } else if constexpr (std::is_same_v<T, VectorLit>) {
                    Value<S> a = eval(*n.e1, env);
                    Value<S> b = eval(*n.e2, env);
                    auto* sa = std::get_if<S>(&a);
                    auto* sb = std::get_if<S>(&b);
                    if (!sa || !sb)
                        throw TypeError(node.span, "vector components must be scalars");
                    return Vec2<S>{*sa, *sb};
                } else if constexpr (std::is_same_v<T, IdentExpr>) {
                    auto it = env.find(n.name);
                    if (it == env.end()) throw UnboundIdentifier(node.span, n.name);
                    return it->second;
                } else if constexpr (std::is_same_v<T, BinaryExpr>) {
                    return detail::eval_binary(node, n, env);
                } else if constexpr (std::is_same_v<T, NegExpr>) {
                    Value<S> v = eval(*n.operand, env);
                    if (auto* s = std::get_if<S>(&v)) return -*s;
                    if (auto* m = std::get_if<Matrix<S>>(&v)) return -*m;
                    if (auto* u = std::get_if<Vec2<S>>(&v)) return -*u;
                    throw detail::bad_types(node, "unary '-'", v);
                } else {
                    return detail::eval_call(node, n, env);
                }
            },
            node.v);
    } catch (Error& e) {
        if (!e.source_span) e.source_span = node.span;
        throw;
    }
}

/// Canonical text rendering; matrices, vectors and scalars round-trip
/// through the parser, rotations and motions render as constructor calls.
template <ScalarBackend S>
std::string format_value(const Value<S>& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, S>) {
                return x.str();
            } else if constexpr (std::is_same_v<T, Matrix<S>>) {
                std::string out = "[";
                for (std::size_t i = 0; i < x.dim(); ++i) {
                    if (i) out += ";";
                    for (std::size_t j = 0; j < x.dim(); ++j) {
                        if (j) out += ",";
                        out += x.at(i, j).str();
                    }
                }
                return out + "]";
            } else if constexpr (std::is_same_v<T, Vec2<S>>) {
                return "(" + x.e1.str() + "," + x.e2.str() + ")";
            } else if constexpr (std::is_same_v<T, HypRotation<S>>) {
                return "rot(" + x.c().str() + "," + x.s().str() + ")";
            } else if constexpr (std::is_same_v<T, Motion<S>>) {
                return "motion(rot(" + x.rot.c().str() + "," + x.rot.s().str() + "),(" +
                       x.trans.e1.str() + "," + x.trans.e2.str() + "))";
            } else {
                return x ? "true" : "false";
            }
        },
        v);
}

/// Convenience: tokenize, parse and evaluate in one step.
template <ScalarBackend S>
Value<S> eval_text(std::string_view text, const Environment<S>& env = {}) {
    return eval<S>(*parse_expression(text), env);
}

}  // namespace starprod
