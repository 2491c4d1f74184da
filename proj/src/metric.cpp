#include "ordfield/metric.hpp"

#include <cmath>
#include <string>

namespace ordfield {

MetricDistance metric_distance(const GeneralizedSeries& x,
                               const GeneralizedSeries& y) {
    GeneralizedSeries d = x - y;
    if (!d.has_support() && !d.is_exact())
        throw TruncationError(
            "distance undetermined: difference has no support below known_order t^" +
            d.known_order()->to_string());
    ValuationValue level = d.valuation();
    double display =
        level.is_infinite() ? 0.0 : std::exp(-level.exponent().value().to_double());
    return {level, display};
}

bool ball_contains(const ClosedBall& ball, const GeneralizedSeries& x) {
    GeneralizedSeries d = x - ball.center;
    if (d.has_support()) return d.terms().front().first >= ball.level;
    if (d.is_exact()) return true;  // x coincides with the center
    if (*d.known_order() >= ball.level) return true;
    throw TruncationError(
        "membership undetermined: difference known only below t^" +
        d.known_order()->to_string() + ", ball level is " +
        ball.level.to_string());
}

GeneralizedSeries nested_ball_point(const std::vector<ClosedBall>& chain) {
    if (chain.empty()) throw DomainError("empty ball chain");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (chain[i + 1].level < chain[i].level)
            throw DomainError("levels decrease between balls " +
                              std::to_string(i) + " and " + std::to_string(i + 1));
        if (!ball_contains(chain[i], chain[i + 1].center))
            throw DomainError("ball " + std::to_string(i) +
                              " does not contain the center of ball " +
                              std::to_string(i + 1) + ": chain is not nested");
    }
    const GeneralizedSeries& point = chain.back().center;
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (!ball_contains(chain[i], point))
            throw Error("constructed point escapes ball " + std::to_string(i));
    return point;
}

}  // namespace ordfield
