#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ordfield/rational.hpp"

namespace ordfield {

// Univariate polynomial over Q, coefficients ascending, no trailing zeros.
// The zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial x();
    static Polynomial monomial(const Rational& c, std::size_t e);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    const Rational& lead() const;        // throws DomainError on zero
    std::size_t ord0() const;            // index of lowest nonzero coeff

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    // Euclidean division, returns (quotient, remainder).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

    static Polynomial gcd(Polynomial a, Polynomial b);  // monic (or zero)
    Polynomial monic() const;

    Rational eval(const Rational& v) const;

    Polynomial substitute_square() const;  // p(t) -> p(t^2)
    // Coefficient reversal: t^degree * p(1/t). Zero maps to zero.
    Polynomial reversed() const;

    std::string to_string() const;  // ascending powers, "0" for zero

private:
    std::vector<Rational> coeffs_;
    void normalize();
};

}  // namespace ordfield
