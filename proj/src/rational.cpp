#include "ordfield/rational.hpp"

#include <cctype>

namespace ordfield {

Rational::Rational(mpz_class num, mpz_class den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    canonicalize();
}

void Rational::canonicalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    size_t i = 0, n = text.size();
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    bool neg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    size_t digits = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) throw ParseError("expected rational number", i);
    mpz_class num(std::string(text.substr(digits, i - digits)), 10);
    if (neg) num = -num;
    mpz_class den(1);
    if (i < n && text[i] == '/') {
        ++i;
        size_t dstart = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == dstart) throw ParseError("expected denominator digits", i);
        den = mpz_class(std::string(text.substr(dstart, i - dstart)), 10);
    }
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i != n) throw ParseError("trailing characters after rational", i);
    if (den == 0) throw DomainError("rational with zero denominator");
    return Rational(num, den);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw DomainError("division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::inverse() const {
    if (num_ == 0) throw DomainError("inverse of zero");
    return Rational(den_, num_);
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.num_ < 0) r.num_ = -r.num_;
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e)
                            : static_cast<unsigned long>(e);
    Rational out;
    mpz_pow_ui(out.num_.get_mpz_t(), base.num_.get_mpz_t(), k);
    mpz_pow_ui(out.den_.get_mpz_t(), base.den_.get_mpz_t(), k);
    return out;  // powers of a canonical form stay canonical
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    // cross-multiplication; denominators are positive
    int c = cmp(num_ * o.den_, o.num_ * den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
}

std::optional<Rational> Rational::sqrt_exact() const {
    return root_exact(2);
}

std::optional<Rational> Rational::root_exact(unsigned long d) const {
    if (d == 0) throw DomainError("zeroth root");
    if (num_ < 0 && d % 2 == 0)
        throw DomainError("even root of a negative rational");
    if (num_ == 0) return Rational(0);
    mpz_class rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), num_.get_mpz_t(), d);
    if (!exact_n) return std::nullopt;
    int exact_d = mpz_root(rd.get_mpz_t(), den_.get_mpz_t(), d);
    if (!exact_d) return std::nullopt;
    return Rational(rn, rd);
}

double Rational::to_double() const {
    return mpq_class(num_, den_).get_d();
}

std::string Rational::to_string() const {
    std::string s = num_.get_str();
    if (den_ != 1) {
        s += '/';
        s += den_.get_str();
    }
    return s;
}

}  // namespace ordfield
