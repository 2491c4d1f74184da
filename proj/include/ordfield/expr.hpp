#pragma once

#include <memory>
#include <string>

#include "ordfield/rational.hpp"

namespace ordfield {

// Expression grammar (whitespace between tokens is ignored):
//
//   expr     := term (('+' | '-') term)*
//   term     := factor (('*' | '/') factor)*
//   factor   := '-' factor | base ('^' exponent)?
//   base     := integer | 't' | 'x' | '(' expr ')'
//             | ('sqrt' | 'std' | 'abs' | 'val') '(' expr ')'
//             | 'O' '(' 't' ('^' exponent)? ')'
//   exponent := '-'? integer | '(' '-'? integer ('/' integer)? ')'
//
// 't' and 'x' name the same indeterminate. Fractional exponents parse only
// when allow_rational_exponents is set (Levi-Civita sessions); elsewhere
// they are a parse error. Errors carry the byte offset of the problem.
struct Expr {
    enum class Op {
        Literal,        // value
        Indeterminate,  // t / x
        Add, Sub, Mul, Div,  // lhs, rhs
        Neg,            // lhs
        Pow,            // lhs ^ value
        Sqrt, Std, Abs, Val,  // lhs
        OrderMark       // O(t^value)
    };
    Op op;
    Rational value;
    std::shared_ptr<const Expr> lhs, rhs;
    std::size_t offset = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expression(const std::string& text,
                         bool allow_rational_exponents);

}  // namespace ordfield
