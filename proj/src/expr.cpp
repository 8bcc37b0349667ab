#include "hypersum/expr.hpp"

#include <cctype>
#include <utility>

namespace hypersum {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

EvalError::EvalError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

constexpr unsigned long kMaxExponent = 10000;

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expr parse_all() {
        Expr e = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == src_.size();
    }

    char peek() { return at_end() ? '\0' : src_[pos_]; }

    static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, std::size_t offset) {
        Expr e;
        e.kind = kind;
        e.offset = offset;
        e.operands.push_back(std::move(lhs));
        e.operands.push_back(std::move(rhs));
        return e;
    }

    Expr parse_expr() {
        Expr lhs = parse_term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            const std::size_t at = pos_++;
            lhs = binary(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, std::move(lhs), parse_term(), at);
        }
        return lhs;
    }

    Expr parse_term() {
        Expr lhs = parse_factor();
        for (char c = peek(); c == '*' || c == '/'; c = peek()) {
            const std::size_t at = pos_++;
            lhs = binary(c == '*' ? Expr::Kind::Mul : Expr::Kind::Div, std::move(lhs), parse_factor(), at);
        }
        return lhs;
    }

    Expr parse_factor() {
        Expr base = parse_base();
        if (peek() != '^') return base;
        const std::size_t at = pos_++;
        skip_ws();
        const std::size_t digits_at = pos_;
        if (pos_ == src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("exponent must be a nonnegative integer literal", digits_at);
        const Integer value = read_uint();
        if (value > kMaxExponent) throw ParseError("exponent too large", digits_at);
        Expr e;
        e.kind = Expr::Kind::Pow;
        e.offset = at;
        e.exponent = value.get_ui();
        e.operands.push_back(std::move(base));
        return e;
    }

    Expr parse_base() {
        if (at_end()) throw ParseError("unexpected end of input", pos_);
        const char c = src_[pos_];
        const std::size_t at = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expr e;
            e.kind = Expr::Kind::Integer;
            e.offset = at;
            e.value = read_uint();
            return e;
        }
        if (c == 'n') {
            ++pos_;
            Expr e;
            e.kind = Expr::Kind::Variable;
            e.offset = at;
            return e;
        }
        if (c == '(') {
            ++pos_;
            Expr inner = parse_expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            Expr e;
            e.kind = Expr::Kind::Neg;
            e.offset = at;
            e.operands.push_back(parse_factor());
            return e;
        }
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }

    Integer read_uint() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return Integer(std::string(src_.substr(start, pos_ - start)), 10);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

RatFunc evaluate(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Integer:
            return RatFunc(Poly::constant(Rational(e.value)));
        case Expr::Kind::Variable:
            return RatFunc(Poly::variable());
        case Expr::Kind::Neg:
            return -evaluate(e.operands[0]);
        case Expr::Kind::Add:
            return evaluate(e.operands[0]) + evaluate(e.operands[1]);
        case Expr::Kind::Sub:
            return evaluate(e.operands[0]) - evaluate(e.operands[1]);
        case Expr::Kind::Mul:
            return evaluate(e.operands[0]) * evaluate(e.operands[1]);
        case Expr::Kind::Div: {
            RatFunc den = evaluate(e.operands[1]);
            if (den.is_zero()) throw EvalError("division by zero", e.offset);
            return evaluate(e.operands[0]) / den;
        }
        case Expr::Kind::Pow: {
            const RatFunc base = evaluate(e.operands[0]);
            const auto k = static_cast<unsigned>(e.exponent);
            return RatFunc::reduce(pow(base.num(), k), pow(base.den(), k));
        }
    }
    throw std::logic_error("unknown expression kind");
}

RatFunc parse_ratfunc(std::string_view text) { return evaluate(parse(text)); }

Poly parse_poly(std::string_view text) {
    RatFunc r = parse_ratfunc(text);
    if (!r.is_polynomial()) throw EvalError("expected a polynomial, got a rational function", 0);
    return r.num();
}

}  // namespace hypersum
