#include "ordfield/exponent.hpp"

namespace ordfield {

Exponent Exponent::integer(const Rational& v) {
    if (!v.is_integer())
        throw ModeError("integer-kind exponent requires an integer value, got " +
                        v.to_string());
    return Exponent(Kind::Integer, v);
}

Exponent Exponent::of_kind(Kind k, const Rational& v) {
    return k == Kind::Integer ? integer(v) : ratio(v);
}

Exponent Exponent::operator+(const Exponent& o) const {
    if (kind_ != o.kind_) throw ModeError("mixed exponent kinds");
    return Exponent(kind_, value_ + o.value_);
}

Exponent Exponent::operator-(const Exponent& o) const {
    if (kind_ != o.kind_) throw ModeError("mixed exponent kinds");
    return Exponent(kind_, value_ - o.value_);
}

Exponent Exponent::halved() const {
    Rational half = value_ / Rational(2);
    if (kind_ == Kind::Integer && !half.is_integer())
        throw DomainError("exponent " + value_.to_string() +
                          " has no half in the integer exponent group");
    return Exponent(kind_, half);
}

}  // namespace ordfield
