#pragma once

#include <vector>

#include "ordfield/series.hpp"

namespace ordfield {

// Valuation metric d(x,y) = e^{-v(x-y)}. The level v(x-y) is the exact
// object; the float is display only and never feeds back into decisions.
struct MetricDistance {
    ValuationValue level;  // +infinity when x = y (distance 0)
    double display;
};

MetricDistance metric_distance(const GeneralizedSeries& x,
                               const GeneralizedSeries& y);

// Closed ball {x : v(x - center) >= level}.
struct ClosedBall {
    GeneralizedSeries center;
    Exponent level;
};

// Exact membership. A difference with empty support decides true when its
// known_order already reaches the level; otherwise the data cannot answer
// and TruncationError is raised.
bool ball_contains(const ClosedBall& ball, const GeneralizedSeries& x);

// Validates that the chain is nested (levels nondecreasing, each ball
// containing the next center; violations are reported with the offending
// index pair) and returns a point of the intersection. The returned point
// is re-checked against every ball, never trusted from construction.
GeneralizedSeries nested_ball_point(const std::vector<ClosedBall>& chain);

}  // namespace ordfield
