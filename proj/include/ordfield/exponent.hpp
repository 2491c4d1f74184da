#pragma once

#include <compare>
#include <string>

#include "ordfield/rational.hpp"

namespace ordfield {

// Series exponent: a rational value tagged with the exponent group it lives
// in. Integer-kind exponents always have denominator 1; a whole series uses
// one kind throughout (Laurent = Integer, Levi-Civita = Ratio).
class Exponent {
public:
    enum class Kind { Integer, Ratio };

    Exponent() : kind_(Kind::Integer), value_(0) {}

    static Exponent integer(long n) { return Exponent(Kind::Integer, Rational(n)); }
    static Exponent integer(const Rational& v);
    static Exponent ratio(const Rational& v) { return Exponent(Kind::Ratio, v); }
    static Exponent of_kind(Kind k, const Rational& v);

    Kind kind() const { return kind_; }
    const Rational& value() const { return value_; }

    Exponent operator-() const { return Exponent(kind_, -value_); }
    Exponent operator+(const Exponent& o) const;
    Exponent operator-(const Exponent& o) const;

    // Exact halving. Integer kind requires an even value (an odd exponent
    // has no half in the integer exponent group).
    Exponent halved() const;

    bool operator==(const Exponent& o) const { return value_ == o.value_; }
    std::strong_ordering operator<=>(const Exponent& o) const {
        return value_ <=> o.value_;
    }

    std::string to_string() const { return value_.to_string(); }

private:
    Exponent(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}
    Kind kind_;
    Rational value_;
};

}  // namespace ordfield
