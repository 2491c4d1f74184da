#include "ordfield/eval.hpp"

namespace ordfield {

FieldTag parse_field_tag(const std::string& s) {
    if (s == "q") return FieldTag::Q;
    if (s == "laurent") return FieldTag::Laurent;
    if (s == "lc") return FieldTag::LeviCivita;
    if (s == "ratfunc-inf") return FieldTag::RatfuncInf;
    if (s == "ratfunc-zero") return FieldTag::RatfuncZero;
    throw ParseError("unknown field '" + s +
                         "' (expected q, laurent, lc, ratfunc-inf, ratfunc-zero)",
                     0);
}

std::string to_string(FieldTag f) {
    switch (f) {
        case FieldTag::Q: return "q";
        case FieldTag::Laurent: return "laurent";
        case FieldTag::LeviCivita: return "lc";
        case FieldTag::RatfuncInf: return "ratfunc-inf";
        case FieldTag::RatfuncZero: return "ratfunc-zero";
    }
    return "?";
}

namespace {

long integer_exponent(const Rational& r) {
    if (!r.is_integer()) throw DomainError("expected an integer exponent");
    if (!r.num().fits_slong_p()) throw DomainError("exponent out of range");
    return r.num().get_si();
}

Rational eval_q(const ExprPtr& e) {
    switch (e->op) {
        case Expr::Op::Literal: return e->value;
        case Expr::Op::Indeterminate:
            throw DomainError("the indeterminate is not available in field q");
        case Expr::Op::Add: return eval_q(e->lhs) + eval_q(e->rhs);
        case Expr::Op::Sub: return eval_q(e->lhs) - eval_q(e->rhs);
        case Expr::Op::Mul: return eval_q(e->lhs) * eval_q(e->rhs);
        case Expr::Op::Div: return eval_q(e->lhs) / eval_q(e->rhs);
        case Expr::Op::Neg: return -eval_q(e->lhs);
        case Expr::Op::Pow:
            return eval_q(e->lhs).pow(integer_exponent(e->value));
        case Expr::Op::Sqrt: {
            auto r = eval_q(e->lhs).sqrt_exact();
            if (!r) throw DomainError("no exact rational square root");
            return *r;
        }
        case Expr::Op::Std: return eval_q(e->lhs);
        case Expr::Op::Abs: return eval_q(e->lhs).abs();
        case Expr::Op::Val:
            throw DomainError("val is not available in field q");
        case Expr::Op::OrderMark:
            throw DomainError("O(.) requires a series field");
    }
    throw Error("unhandled expression node");
}

GeneralizedSeries eval_series(const ExprPtr& e, SeriesMode mode, long trunc) {
    auto exp_of = [mode](const Rational& v) {
        return mode == SeriesMode::Laurent ? Exponent::integer(v)
                                           : Exponent::ratio(v);
    };
    switch (e->op) {
        case Expr::Op::Literal:
            return GeneralizedSeries::constant(e->value, mode);
        case Expr::Op::Indeterminate:
            return GeneralizedSeries::monomial(Rational(1),
                                               exp_of(Rational(1)), mode);
        case Expr::Op::Add:
            return eval_series(e->lhs, mode, trunc) +
                   eval_series(e->rhs, mode, trunc);
        case Expr::Op::Sub:
            return eval_series(e->lhs, mode, trunc) -
                   eval_series(e->rhs, mode, trunc);
        case Expr::Op::Mul:
            return eval_series(e->lhs, mode, trunc) *
                   eval_series(e->rhs, mode, trunc);
        case Expr::Op::Div:
            return eval_series(e->lhs, mode, trunc) *
                   eval_series(e->rhs, mode, trunc).inverse(trunc);
        case Expr::Op::Neg: return -eval_series(e->lhs, mode, trunc);
        case Expr::Op::Pow: {
            GeneralizedSeries base = eval_series(e->lhs, mode, trunc);
            if (e->value.is_integer())
                return base.pow(integer_exponent(e->value), trunc);
            if (mode != SeriesMode::LeviCivita)
                throw ModeError("fractional exponents need rational-exponent mode");
            // fractional power of an exact monomial: root the coefficient,
            // scale the exponent
            if (!base.is_exact() || base.terms().size() != 1)
                throw DomainError("fractional powers need an exact monomial base");
            const auto& [me, mc] = base.terms().front();
            const Rational& r = e->value;
            if (!r.den().fits_ulong_p())
                throw DomainError("exponent denominator out of range");
            auto root = mc.root_exact(r.den().get_ui());
            if (!root)
                throw DomainError("coefficient " + mc.to_string() +
                                  " has no exact rational root of that order");
            if (!r.num().fits_slong_p())
                throw DomainError("exponent out of range");
            Rational coeff = root->pow(r.num().get_si());
            return GeneralizedSeries::monomial(
                coeff, Exponent::ratio(me.value() * r), mode);
        }
        case Expr::Op::Sqrt: return eval_series(e->lhs, mode, trunc).sqrt(trunc);
        case Expr::Op::Std:
            return GeneralizedSeries::constant(
                eval_series(e->lhs, mode, trunc).decompose().first, mode);
        case Expr::Op::Abs: return eval_series(e->lhs, mode, trunc).abs();
        case Expr::Op::Val: {
            ValuationValue v = eval_series(e->lhs, mode, trunc).valuation();
            if (v.is_infinite())
                throw DomainError(
                    "valuation of zero is infinite: not a field element");
            return GeneralizedSeries::constant(v.exponent().value(), mode);
        }
        case Expr::Op::OrderMark:
            return GeneralizedSeries::from_terms({}, mode, exp_of(e->value));
    }
    throw Error("unhandled expression node");
}

RationalFunction eval_rf(const ExprPtr& e, RfOrdering ord) {
    switch (e->op) {
        case Expr::Op::Literal: return RationalFunction::constant(e->value, ord);
        case Expr::Op::Indeterminate: return RationalFunction::x(ord);
        case Expr::Op::Add: return eval_rf(e->lhs, ord) + eval_rf(e->rhs, ord);
        case Expr::Op::Sub: return eval_rf(e->lhs, ord) - eval_rf(e->rhs, ord);
        case Expr::Op::Mul: return eval_rf(e->lhs, ord) * eval_rf(e->rhs, ord);
        case Expr::Op::Div: return eval_rf(e->lhs, ord) / eval_rf(e->rhs, ord);
        case Expr::Op::Neg: return -eval_rf(e->lhs, ord);
        case Expr::Op::Pow:
            return eval_rf(e->lhs, ord).pow(integer_exponent(e->value));
        case Expr::Op::Sqrt: {
            RationalFunction arg = eval_rf(e->lhs, ord);
            if (arg.den().degree() == 0 && arg.num().degree() <= 0) {
                Rational c = arg.num().coeff(0) / arg.den().coeff(0);
                auto r = c.sqrt_exact();
                if (!r) throw DomainError("no exact rational square root");
                return RationalFunction::constant(*r, ord);
            }
            throw DomainError(
                "sqrt of a nonconstant rational function is not supported");
        }
        case Expr::Op::Std:
            return RationalFunction::constant(
                eval_rf(e->lhs, ord).standard_part(), ord);
        case Expr::Op::Abs: return eval_rf(e->lhs, ord).abs();
        case Expr::Op::Val: {
            RationalFunction arg = eval_rf(e->lhs, ord);
            return RationalFunction::constant(arg.order_valuation(), ord);
        }
        case Expr::Op::OrderMark:
            throw DomainError("O(.) requires a series field");
    }
    throw Error("unhandled expression node");
}

}  // namespace

FieldValue evaluate(const ExprPtr& e, const SessionConfig& cfg) {
    switch (cfg.field) {
        case FieldTag::Q: return eval_q(e);
        case FieldTag::Laurent:
            return eval_series(e, SeriesMode::Laurent, cfg.trunc);
        case FieldTag::LeviCivita:
            return eval_series(e, SeriesMode::LeviCivita, cfg.trunc);
        case FieldTag::RatfuncInf: return eval_rf(e, RfOrdering::AtInfinity);
        case FieldTag::RatfuncZero: return eval_rf(e, RfOrdering::AtZero);
    }
    throw Error("unhandled field tag");
}

FieldValue evaluate_text(const std::string& text, const SessionConfig& cfg) {
    return evaluate(
        parse_expression(text, cfg.field == FieldTag::LeviCivita), cfg);
}

std::string value_to_string(const FieldValue& v) {
    return std::visit([](const auto& x) { return x.to_string(); }, v);
}

}  // namespace ordfield
