#include "ordfield/polynomial.hpp"

#include "ordfield/errors.hpp"

namespace ordfield {

Polynomial::Polynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::x() {
    return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t e) {
    std::vector<Rational> v(e + 1, Rational(0));
    v[e] = c;
    return Polynomial(std::move(v));
}

const Rational& Polynomial::lead() const {
    if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

std::size_t Polynomial::ord0() const {
    if (coeffs_.empty()) throw DomainError("zero polynomial has no order");
    std::size_t i = 0;
    while (coeffs_[i].is_zero()) ++i;
    return i;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()),
                            Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return Polynomial();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    std::vector<Rational> v;
    v.reserve(coeffs_.size());
    for (const auto& q : coeffs_) v.push_back(q * c);
    return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    Polynomial r = *this;
    if (r.degree() < d.degree()) return {Polynomial(), r};
    std::vector<Rational> q(r.degree() - d.degree() + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::size_t shift = r.degree() - d.degree();
        Rational factor = r.lead() / d.lead();
        q[shift] = factor;
        r = r - d * Polynomial::monomial(factor, shift);
    }
    return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw DomainError("zero polynomial cannot be made monic");
    return *this * lead().inverse();
}

Rational Polynomial::eval(const Rational& v) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * v + *it;
    return acc;
}

Polynomial Polynomial::substitute_square() const {
    if (is_zero()) return *this;
    std::vector<Rational> v(2 * coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[2 * i] = coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::reversed() const {
    std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational ac = c.abs();
        std::string term;
        if (i == 0)
            term = ac.to_string();
        else {
            std::string tpow = i == 1 ? "t" : "t^" + std::to_string(i);
            term = ac == Rational(1) ? tpow : ac.to_string() + "*" + tpow;
        }
        if (first) {
            s = (c.is_negative() ? "-" : "") + term;
            first = false;
        } else {
            s += (c.is_negative() ? " - " : " + ") + term;
        }
    }
    return s;
}

}  // namespace ordfield
