#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypersum/ratfunc.hpp"

namespace hypersum {

/// Syntax tree of an expression in n over integer literals with + - * / and
/// nonnegative integer powers.
struct Expr {
    enum class Kind { Integer, Variable, Add, Sub, Mul, Div, Pow, Neg };

    Kind kind = Kind::Integer;
    Integer value;               // Integer
    unsigned long exponent = 0;  // Pow
    std::vector<Expr> operands;  // one for Neg/Pow, two for binary operators
    /// Byte offset of the token that produced this node.
    std::size_t offset = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Raised when evaluation divides by an expression that is identically zero.
class EvalError : public std::runtime_error {
public:
    EvalError(const std::string& message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Grammar, with implicit multiplication not supported:
///
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := base ('^' uint)?
///   base   := uint | 'n' | '(' expr ')' | '-' factor
Expr parse(std::string_view text);

RatFunc evaluate(const Expr& e);

/// parse + evaluate.
RatFunc parse_ratfunc(std::string_view text);

/// parse + evaluate, rejecting results with a nonconstant denominator.
Poly parse_poly(std::string_view text);

}  // namespace hypersum
