#pragma once

#include <string>

#include "ordfield/polynomial.hpp"
#include "ordfield/series.hpp"

namespace ordfield {

// Which order structure a rational-function value carries.
//   AtInfinity: the indeterminate is infinitely large (f < g iff g - f is
//     eventually positive; sign = product of leading coefficient signs).
//   AtZero: the indeterminate is a positive infinitesimal (sign = product
//     of lowest nonzero coefficient signs; matches the expansion at 0).
enum class RfOrdering { AtInfinity, AtZero };

// Field of rational functions Q(t), elements in canonical form:
// gcd(num, den) = 1, den monic. The ordering tag travels with the value and
// must agree between operands.
class RationalFunction {
public:
    RationalFunction(Polynomial num, Polynomial den, RfOrdering ord);
    static RationalFunction constant(const Rational& c, RfOrdering ord);
    static RationalFunction x(RfOrdering ord);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    RfOrdering ordering() const { return ord_; }

    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction inverse() const;
    RationalFunction pow(long e) const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    // Exact sign under the carried ordering; always decidable.
    int sign() const;
    static Ordering sign_cmp(const RationalFunction& a,
                             const RationalFunction& b);
    Ordering compare(const RationalFunction& o) const {
        return sign_cmp(*this, o);
    }
    RationalFunction abs() const;

    Classification classify() const;
    Rational standard_part() const;  // finite elements only

    // Valuation in the carried order: ord0 difference at zero, degree
    // difference at infinity. Positive = infinitesimal. Zero input throws.
    Rational order_valuation() const;

    // Formal Laurent expansion around t = 0 (`depth` terms past the leading
    // exponent; exact when the denominator is a monomial).
    GeneralizedSeries laurent_at_zero(long depth = 16) const;

    // Order embedding f(t) -> f(t^2) (image: rational functions in t^2).
    RationalFunction sigma_square() const;

    // f(t) -> f(1/t), with the ordering tag flipped: comparisons at
    // infinity agree with comparisons of the images at zero.
    RationalFunction reciprocal_argument() const;

    std::string to_string() const;  // "(num)/(den)", bare num when den = 1

private:
    Polynomial num_, den_;
    RfOrdering ord_;
    void normalize();
    void check_mode(const RationalFunction& o) const;
};

RationalFunction q_embed(const Rational& q, RfOrdering ord);

}  // namespace ordfield
