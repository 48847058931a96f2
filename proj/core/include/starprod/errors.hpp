#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace starprod {

/// Half-open byte range [begin, end) into the source text.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
};

/// Base class of every error the library throws. Domain errors raised
/// while evaluating an expression get the source span attached.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    std::optional<Span> source_span;
};

class ZeroDenominator : public Error {
public:
    ZeroDenominator() : Error("zero denominator") {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

class NotInvertible : public Error {
public:
    NotInvertible() : Error("matrix is not star-invertible (singular diagonal part)") {}
};

class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& what) : Error(what) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error(what) {}
};

/// Lexer error; `offset` is a byte position into the input text.
class LexError : public Error {
public:
    LexError(std::size_t offset, const std::string& what)
        : Error(what + " at offset " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

/// Parser error; carries the offset and a description of what was expected.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& expected)
        : Error("expected " + expected + " at offset " + std::to_string(offset)),
          offset(offset),
          expected(expected) {}
    std::size_t offset;
    std::string expected;
};

class TypeError : public Error {
public:
    TypeError(Span span, const std::string& what)
        : Error(what + " at offset " + std::to_string(span.begin)), span(span) {}
    Span span;
};

class UnboundIdentifier : public Error {
public:
    UnboundIdentifier(Span span, const std::string& name)
        : Error("unbound identifier '" + name + "' at offset " + std::to_string(span.begin)),
          span(span),
          name(name) {}
    Span span;
    std::string name;
};

/// JSON schema violation; `path` locates the offending element.
class DecodeError : public Error {
public:
    explicit DecodeError(const std::string& path, const std::string& what)
        : Error(what + " (at " + path + ")"), path(path) {}
    std::string path;
};

}  // namespace starprod
