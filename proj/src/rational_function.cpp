#include "ordfield/rational_function.hpp"

#include "ordfield/errors.hpp"

namespace ordfield {

RationalFunction::RationalFunction(Polynomial num, Polynomial den,
                                   RfOrdering ord)
    : num_(std::move(num)), den_(std::move(den)), ord_(ord) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(Rational(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational lc = den_.lead();
    if (!(lc == Rational(1))) {
        Rational inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

void RationalFunction::check_mode(const RationalFunction& o) const {
    if (ord_ != o.ord_)
        throw ModeError("mixed rational-function orderings");
}

RationalFunction RationalFunction::constant(const Rational& c, RfOrdering ord) {
    return RationalFunction(Polynomial::constant(c),
                            Polynomial::constant(Rational(1)), ord);
}

RationalFunction RationalFunction::x(RfOrdering ord) {
    return RationalFunction(Polynomial::x(),
                            Polynomial::constant(Rational(1)), ord);
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_, ord_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    check_mode(o);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_, ord_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    check_mode(o);
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_, ord_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    check_mode(o);
    return RationalFunction(num_ * o.num_, den_ * o.den_, ord_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    check_mode(o);
    if (o.is_zero()) throw DomainError("division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_, ord_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return RationalFunction(den_, num_, ord_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return constant(Rational(1), ord_);
    RationalFunction base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e)
                            : static_cast<unsigned long>(e);
    RationalFunction result = constant(Rational(1), ord_);
    RationalFunction sq = base;
    while (k) {
        if (k & 1) result = result * sq;
        k >>= 1;
        if (k) sq = sq * sq;
    }
    return result;
}

int RationalFunction::sign() const {
    if (is_zero()) return 0;
    if (ord_ == RfOrdering::AtInfinity)
        return num_.lead().sign() * den_.lead().sign();
    return num_.coeff(num_.ord0()).sign() * den_.coeff(den_.ord0()).sign();
}

Ordering RationalFunction::sign_cmp(const RationalFunction& a,
                                    const RationalFunction& b) {
    int s = (a - b).sign();
    if (s < 0) return Ordering::Less;
    if (s > 0) return Ordering::Greater;
    return Ordering::Equal;
}

RationalFunction RationalFunction::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational RationalFunction::order_valuation() const {
    if (is_zero()) throw DomainError("valuation of zero");
    if (ord_ == RfOrdering::AtZero)
        return Rational(static_cast<long>(num_.ord0()) -
                        static_cast<long>(den_.ord0()));
    return Rational(den_.degree() - num_.degree());
}

Classification RationalFunction::classify() const {
    Classification c;
    if (is_zero()) {
        c.is_zero = true;
        c.infinitesimal = true;
        c.finite = true;
        return c;
    }
    Rational v = order_valuation();
    c.infinitesimal = v > Rational(0);
    c.finite = v >= Rational(0);
    c.infinite = !c.finite;
    return c;
}

Rational RationalFunction::standard_part() const {
    Classification c = classify();
    if (!c.finite) throw DomainError("infinite element has no standard part");
    if (c.is_zero || c.infinitesimal) return Rational(0);
    if (ord_ == RfOrdering::AtInfinity)
        return num_.lead() / den_.lead();
    return num_.coeff(num_.ord0()) / den_.coeff(den_.ord0());
}

GeneralizedSeries RationalFunction::laurent_at_zero(long depth) const {
    SeriesMode mode = SeriesMode::Laurent;
    std::vector<GeneralizedSeries::Term> nt;
    for (std::size_t i = 0; i < num_.coeffs().size(); ++i)
        if (!num_.coeffs()[i].is_zero())
            nt.push_back({Exponent::integer(static_cast<long>(i)),
                          num_.coeffs()[i]});
    std::vector<GeneralizedSeries::Term> dt;
    for (std::size_t i = 0; i < den_.coeffs().size(); ++i)
        if (!den_.coeffs()[i].is_zero())
            dt.push_back({Exponent::integer(static_cast<long>(i)),
                          den_.coeffs()[i]});
    GeneralizedSeries n = GeneralizedSeries::from_terms(std::move(nt), mode);
    GeneralizedSeries d = GeneralizedSeries::from_terms(std::move(dt), mode);
    return n * d.inverse(depth);
}

RationalFunction RationalFunction::sigma_square() const {
    return RationalFunction(num_.substitute_square(), den_.substitute_square(),
                            ord_);
}

RationalFunction RationalFunction::reciprocal_argument() const {
    RfOrdering flipped = ord_ == RfOrdering::AtInfinity ? RfOrdering::AtZero
                                                        : RfOrdering::AtInfinity;
    if (is_zero()) return RationalFunction(Polynomial(), den_, flipped);
    long dn = num_.degree(), dd = den_.degree();
    Polynomial n = num_.reversed(), d = den_.reversed();
    if (dd > dn)
        n = n * Polynomial::monomial(Rational(1), static_cast<std::size_t>(dd - dn));
    else if (dn > dd)
        d = d * Polynomial::monomial(Rational(1), static_cast<std::size_t>(dn - dd));
    return RationalFunction(std::move(n), std::move(d), flipped);
}

std::string RationalFunction::to_string() const {
    if (den_ == Polynomial::constant(Rational(1))) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction q_embed(const Rational& q, RfOrdering ord) {
    return RationalFunction::constant(q, ord);
}

}  // namespace ordfield
