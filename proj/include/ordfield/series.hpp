#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordfield/exponent.hpp"
#include "ordfield/rational.hpp"

namespace ordfield {

enum class SeriesMode { Laurent, LeviCivita };

enum class Ordering { Less, Equal, Greater };

// Independent order-theoretic predicates of one element. Zero counts as
// infinitesimal and finite; an infinitesimal is always finite.
struct Classification {
    bool is_zero = false;
    bool infinitesimal = false;
    bool finite = false;
    bool infinite = false;
};

// An exponent level or +infinity (the valuation of zero).
class ValuationValue {
public:
    ValuationValue(Exponent e) : v_(std::move(e)) {}
    static ValuationValue infinite() { return ValuationValue(); }

    bool is_infinite() const { return !v_.has_value(); }
    const Exponent& exponent() const;

    bool operator==(const ValuationValue& o) const;
    bool operator<(const ValuationValue& o) const;   // +inf compares greatest
    bool operator>=(const ValuationValue& o) const { return !(*this < o); }

    static ValuationValue min(const ValuationValue& a, const ValuationValue& b);
    ValuationValue operator+(const ValuationValue& o) const;

    std::string to_string() const;  // "inf" when infinite

private:
    ValuationValue() = default;
    std::optional<Exponent> v_;
};

// Truncated generalized power series over Q: a finite sum of c*t^e terms
// plus an optional exactness bound.
//
// Invariants:
//   - terms are sorted by strictly increasing exponent, no zero coefficients
//   - all exponent kinds match the mode (Laurent integer, Levi-Civita ratio)
//   - when known_order is present, every stored exponent is below it; the
//     element is undetermined from that bound upward
//   - absent known_order means the stored sum is the whole element
//
// Ordering is by the sign of the lowest-exponent coefficient: positive
// powers of t are infinitesimal, negative powers infinitely large.
class GeneralizedSeries {
public:
    using Term = std::pair<Exponent, Rational>;

    static GeneralizedSeries zero(SeriesMode mode);
    static GeneralizedSeries constant(const Rational& c, SeriesMode mode);
    static GeneralizedSeries monomial(const Rational& coeff, const Exponent& e,
                                      SeriesMode mode);
    // Normalizes: sorts, merges duplicate exponents, drops zeros and any
    // term at or above known_order.
    static GeneralizedSeries from_terms(std::vector<Term> terms, SeriesMode mode,
                                        std::optional<Exponent> known_order = {});

    SeriesMode mode() const { return mode_; }
    const std::vector<Term>& terms() const { return terms_; }
    const std::optional<Exponent>& known_order() const { return known_order_; }
    bool is_exact() const { return !known_order_.has_value(); }
    bool has_support() const { return !terms_.empty(); }

    // Minimum support exponent; +infinity for (exact) zero. Empty support
    // under a finite bound is undetermined and raises TruncationError.
    ValuationValue valuation() const;

    Rational coeff_at(const Exponent& e) const;

    GeneralizedSeries operator-() const;
    GeneralizedSeries operator+(const GeneralizedSeries& o) const;
    GeneralizedSeries operator-(const GeneralizedSeries& o) const;
    GeneralizedSeries operator*(const GeneralizedSeries& o) const;

    // Multiplicative inverse. Monomials invert exactly. Otherwise the result
    // is truncated: an exact operand is expanded `depth` exponent steps past
    // its leading term, a truncated one to the precision its data determines.
    GeneralizedSeries inverse(long depth = 16) const;

    GeneralizedSeries operator/(const GeneralizedSeries& o) const {
        return *this * o.inverse();
    }

    // Square root of a nonnegative element (sign read off the leading
    // coefficient, which must have an exact rational root). Perfect-square
    // monomials stay exact; depth as in inverse().
    GeneralizedSeries sqrt(long depth = 16) const;

    GeneralizedSeries pow(long e, long depth = 16) const;

    // Lowers known_order to new_order, discarding data. Raising it is an
    // error: precision cannot be invented.
    GeneralizedSeries truncate(const Exponent& new_order) const;

    GeneralizedSeries abs() const;

    Classification classify() const;

    // finite element -> (standard rational part, infinitesimal remainder);
    // the two add back to the input exactly.
    std::pair<Rational, GeneralizedSeries> decompose() const;

    // Sign of a - b read off the leading coefficient of the difference.
    // Equal requires an exact empty difference; an empty difference under a
    // finite bound raises TruncationError ("unknown below known_order").
    static Ordering sign_cmp(const GeneralizedSeries& a,
                             const GeneralizedSeries& b);
    Ordering compare(const GeneralizedSeries& o) const {
        return sign_cmp(*this, o);
    }
    // Sign vs zero: -1, 0, +1, same exactness contract as sign_cmp.
    int sign() const;

    // Structural identity of the stored data (terms, bound, mode).
    bool same_data(const GeneralizedSeries& o) const;

    // Canonical text: terms ascending, "t^-1 + 1 + t + 3/2*t^2", with a
    // trailing "O(t^e)" marker carrying known_order. Exact zero is "0".
    std::string to_string() const;

private:
    GeneralizedSeries(SeriesMode mode) : mode_(mode) {}
    SeriesMode mode_;
    std::vector<Term> terms_;
    std::optional<Exponent> known_order_;

    Exponent exp_of(const Rational& v) const;
    void drop_above_bound();
    static std::vector<Term> mul_capped(const std::vector<Term>& a,
                                        const std::vector<Term>& b,
                                        const std::optional<Exponent>& cap);
};

GeneralizedSeries q_embed(const Rational& q, SeriesMode mode);

std::string to_string(Ordering o);

}  // namespace ordfield
