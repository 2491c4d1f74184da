#include "ordfield/expr.hpp"

#include <cctype>

namespace ordfield {

namespace {

struct Parser {
    const std::string& text;
    bool rational_exponents;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "' " + what, pos);
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    static ExprPtr make(Expr::Op op, std::size_t offset, Rational value = {},
                        ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
        auto e = std::make_shared<Expr>();
        e->op = op;
        e->value = std::move(value);
        e->lhs = std::move(lhs);
        e->rhs = std::move(rhs);
        e->offset = offset;
        return e;
    }

    mpz_class integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) throw ParseError("expected digits", pos);
        return mpz_class(text.substr(start, pos - start), 10);
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               std::isalpha(static_cast<unsigned char>(text[pos])))
            ++pos;
        return text.substr(start, pos - start);
    }

    Rational exponent() {
        skip_ws();
        std::size_t start = pos;
        if (eat('(')) {
            bool neg = eat('-');
            mpz_class num = integer();
            mpz_class den = 1;
            if (eat('/')) {
                den = integer();
                if (den == 0) throw ParseError("zero exponent denominator", pos);
            }
            expect(')', "to close the exponent");
            Rational r{Rational(neg ? mpz_class(-num) : num, den)};
            if (!r.is_integer() && !rational_exponents)
                throw ParseError(
                    "rational exponent in integer-exponent mode", start);
            return r;
        }
        bool neg = eat('-');
        mpz_class n = integer();
        return Rational(neg ? mpz_class(-n) : n);
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        while (true) {
            std::size_t at = pos;
            if (eat('+'))
                lhs = make(Expr::Op::Add, at, {}, lhs, parse_term());
            else if (eat('-'))
                lhs = make(Expr::Op::Sub, at, {}, lhs, parse_term());
            else
                return lhs;
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (true) {
            std::size_t at = pos;
            if (eat('*'))
                lhs = make(Expr::Op::Mul, at, {}, lhs, parse_factor());
            else if (eat('/'))
                lhs = make(Expr::Op::Div, at, {}, lhs, parse_factor());
            else
                return lhs;
        }
    }

    ExprPtr parse_factor() {
        skip_ws();
        std::size_t at = pos;
        // negation binds looser than the power: -2^2 is -(2^2)
        if (eat('-')) return make(Expr::Op::Neg, at, {}, parse_factor());
        ExprPtr base = parse_base();
        at = pos;
        if (eat('^')) return make(Expr::Op::Pow, at, exponent(), base);
        return base;
    }

    ExprPtr parse_base() {
        skip_ws();
        std::size_t at = pos;
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            ExprPtr e = parse_expr();
            expect(')', "to close the group");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return make(Expr::Op::Literal, at, Rational(integer()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id = identifier();
            if (id == "t" || id == "x") return make(Expr::Op::Indeterminate, at);
            if (id == "O") {
                expect('(', "after O");
                skip_ws();
                std::size_t tat = pos;
                std::string tid = identifier();
                if (tid != "t" && tid != "x")
                    throw ParseError("O(.) takes a power of the indeterminate",
                                     tat);
                Rational e(1);
                if (eat('^')) e = exponent();
                expect(')', "to close O(.)");
                return make(Expr::Op::OrderMark, at, e);
            }
            Expr::Op op;
            if (id == "sqrt") op = Expr::Op::Sqrt;
            else if (id == "std") op = Expr::Op::Std;
            else if (id == "abs") op = Expr::Op::Abs;
            else if (id == "val") op = Expr::Op::Val;
            else throw ParseError("unknown name '" + id + "'", at);
            expect('(', "after function name");
            ExprPtr arg = parse_expr();
            expect(')', "to close the call");
            return make(op, at, {}, arg);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
};

}  // namespace

ExprPtr parse_expression(const std::string& text,
                         bool allow_rational_exponents) {
    Parser p{text, allow_rational_exponents};
    ExprPtr e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("trailing input after expression", p.pos);
    return e;
}

}  // namespace ordfield
