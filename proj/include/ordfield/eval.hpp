#pragma once

#include <variant>

#include "ordfield/expr.hpp"
#include "ordfield/rational_function.hpp"
#include "ordfield/series.hpp"
#include "ordfield/session.hpp"

namespace ordfield {

using FieldValue = std::variant<Rational, GeneralizedSeries, RationalFunction>;

// Evaluates the expression in the session's field. Expansion-producing
// operations (inverse, sqrt, non-monomial division) use cfg.trunc as depth.
FieldValue evaluate(const ExprPtr& e, const SessionConfig& cfg);

// Convenience: parse in the session's exponent mode, then evaluate.
FieldValue evaluate_text(const std::string& text, const SessionConfig& cfg);

std::string value_to_string(const FieldValue& v);

}  // namespace ordfield
