#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "ordfield/errors.hpp"

namespace ordfield {

// Exact rational number with arbitrary-precision integer parts.
//
// Canonical form invariants, restored after every operation:
//   - denominator > 0
//   - gcd(|num|, den) == 1
//   - zero is stored as 0/1
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(const mpz_class& n) : num_(n), den_(1) {}
    Rational(mpz_class num, mpz_class den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    // Parses "p/q" or "p", optional leading sign. Whole input must match.
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    int sign() const { return sgn(num_); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws DomainError on /0
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const;  // throws DomainError on zero
    Rational abs() const;
    Rational pow(long e) const;  // negative e inverts; 0^negative throws

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    std::strong_ordering operator<=>(const Rational& o) const;

    mpz_class floor() const;
    mpz_class ceil() const;

    // Exact square root if the value is a perfect square of a rational,
    // nullopt otherwise. Negative input throws DomainError.
    std::optional<Rational> sqrt_exact() const;

    // Exact d-th root, same contract as sqrt_exact. d >= 1.
    std::optional<Rational> root_exact(unsigned long d) const;

    double to_double() const;
    std::string to_string() const;  // "p/q", "/q" omitted when q == 1

private:
    mpz_class num_, den_;
    void canonicalize();
};

inline Rational abs(const Rational& x) { return x.abs(); }

}  // namespace ordfield
