#include "ordfield/series.hpp"

#include <algorithm>
#include <map>

namespace ordfield {

namespace {

Exponent::Kind kind_of(SeriesMode mode) {
    return mode == SeriesMode::Laurent ? Exponent::Kind::Integer
                                       : Exponent::Kind::Ratio;
}

std::string truncation_message(const Exponent& bound) {
    return "indistinguishable at truncation: unknown below known_order t^" +
           bound.to_string();
}

}  // namespace

const Exponent& ValuationValue::exponent() const {
    if (!v_) throw DomainError("valuation is infinite");
    return *v_;
}

bool ValuationValue::operator==(const ValuationValue& o) const {
    if (is_infinite() || o.is_infinite())
        return is_infinite() == o.is_infinite();
    return *v_ == *o.v_;
}

bool ValuationValue::operator<(const ValuationValue& o) const {
    if (is_infinite()) return false;
    if (o.is_infinite()) return true;
    return *v_ < *o.v_;
}

ValuationValue ValuationValue::min(const ValuationValue& a,
                                   const ValuationValue& b) {
    return b < a ? b : a;
}

ValuationValue ValuationValue::operator+(const ValuationValue& o) const {
    if (is_infinite() || o.is_infinite()) return infinite();
    return ValuationValue(*v_ + *o.v_);
}

std::string ValuationValue::to_string() const {
    return v_ ? v_->to_string() : "inf";
}

GeneralizedSeries GeneralizedSeries::zero(SeriesMode mode) {
    return GeneralizedSeries(mode);
}

GeneralizedSeries GeneralizedSeries::constant(const Rational& c,
                                              SeriesMode mode) {
    GeneralizedSeries s(mode);
    if (!c.is_zero())
        s.terms_.push_back({Exponent::of_kind(kind_of(mode), Rational(0)), c});
    return s;
}

GeneralizedSeries GeneralizedSeries::monomial(const Rational& coeff,
                                              const Exponent& e,
                                              SeriesMode mode) {
    if (e.kind() != kind_of(mode))
        throw ModeError("exponent kind does not match series mode");
    GeneralizedSeries s(mode);
    if (!coeff.is_zero()) s.terms_.push_back({e, coeff});
    return s;
}

GeneralizedSeries GeneralizedSeries::from_terms(
    std::vector<Term> terms, SeriesMode mode,
    std::optional<Exponent> known_order) {
    GeneralizedSeries s(mode);
    auto k = kind_of(mode);
    for (const auto& [e, c] : terms)
        if (e.kind() != k)
            throw ModeError("exponent kind does not match series mode");
    if (known_order && known_order->kind() != k)
        throw ModeError("known_order kind does not match series mode");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& [e, c] : terms) {
        if (!s.terms_.empty() && s.terms_.back().first == e)
            s.terms_.back().second += c;
        else
            s.terms_.push_back({e, c});
    }
    std::erase_if(s.terms_, [](const Term& t) { return t.second.is_zero(); });
    s.known_order_ = std::move(known_order);
    s.drop_above_bound();
    return s;
}

void GeneralizedSeries::drop_above_bound() {
    if (!known_order_) return;
    std::erase_if(terms_,
                  [&](const Term& t) { return t.first >= *known_order_; });
}

Exponent GeneralizedSeries::exp_of(const Rational& v) const {
    return Exponent::of_kind(kind_of(mode_), v);
}

ValuationValue GeneralizedSeries::valuation() const {
    if (!terms_.empty()) return ValuationValue(terms_.front().first);
    if (known_order_)
        throw TruncationError("valuation unknown: no support below known_order t^" +
                              known_order_->to_string());
    return ValuationValue::infinite();
}

Rational GeneralizedSeries::coeff_at(const Exponent& e) const {
    if (known_order_ && e >= *known_order_)
        throw TruncationError("coefficient at t^" + e.to_string() +
                              " lies at or above known_order t^" +
                              known_order_->to_string());
    for (const auto& [ex, c] : terms_)
        if (ex == e) return c;
    return Rational(0);
}

GeneralizedSeries GeneralizedSeries::operator-() const {
    GeneralizedSeries s(mode_);
    s.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.terms_.push_back({e, -c});
    s.known_order_ = known_order_;
    return s;
}

GeneralizedSeries GeneralizedSeries::operator+(
    const GeneralizedSeries& o) const {
    if (mode_ != o.mode_) throw ModeError("mixed series modes");
    std::optional<Exponent> bound;
    if (known_order_ && o.known_order_)
        bound = std::min(*known_order_, *o.known_order_);
    else if (known_order_)
        bound = known_order_;
    else
        bound = o.known_order_;
    std::vector<Term> merged = terms_;
    merged.insert(merged.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(std::move(merged), mode_, std::move(bound));
}

GeneralizedSeries GeneralizedSeries::operator-(
    const GeneralizedSeries& o) const {
    return *this + (-o);
}

std::vector<GeneralizedSeries::Term> GeneralizedSeries::mul_capped(
    const std::vector<Term>& a, const std::vector<Term>& b,
    const std::optional<Exponent>& cap) {
    std::map<Exponent, Rational> acc;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exponent e = ea + eb;
            if (cap && e >= *cap) continue;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, ca * cb);
            else
                it->second += ca * cb;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) out.push_back({e, c});
    return out;
}

GeneralizedSeries GeneralizedSeries::operator*(
    const GeneralizedSeries& o) const {
    if (mode_ != o.mode_) throw ModeError("mixed series modes");
    if (is_exact() && terms_.empty()) return *this;
    if (o.is_exact() && o.terms_.empty()) return o;
    std::optional<Exponent> bound;
    auto consider = [&bound](const std::optional<Exponent>& ko,
                             const GeneralizedSeries& other) {
        if (!ko) return;
        Exponent lv = other.terms_.empty() ? *other.known_order_
                                           : other.terms_.front().first;
        Exponent cand = *ko + lv;
        if (!bound || cand < *bound) bound = cand;
    };
    consider(known_order_, o);
    consider(o.known_order_, *this);
    return from_terms(mul_capped(terms_, o.terms_, bound), mode_, bound);
}

GeneralizedSeries GeneralizedSeries::inverse(long depth) const {
    if (terms_.empty()) {
        if (is_exact()) throw DomainError("division by zero");
        throw TruncationError("cannot invert: no support below known_order t^" +
                              known_order_->to_string());
    }
    const Exponent m = terms_.front().first;
    const Rational c = terms_.front().second;
    if (terms_.size() == 1 && is_exact())
        return monomial(c.inverse(), -m, mode_);
    // a = c*t^m*(1+u) with v(u) > 0, so 1/a = (1/c)*t^-m * sum((-u)^k).
    Exponent target = is_exact() ? -m + exp_of(Rational(depth))
                                 : *known_order_ - m - m;
    Exponent cap = target + m;
    std::vector<Term> u;
    u.reserve(terms_.size() - 1);
    for (size_t i = 1; i < terms_.size(); ++i)
        u.push_back({terms_[i].first - m, -(terms_[i].second / c)});
    std::map<Exponent, Rational> acc;
    acc.emplace(exp_of(Rational(0)), Rational(1));
    std::vector<Term> p = {{exp_of(Rational(0)), Rational(1)}};
    while (true) {
        p = mul_capped(p, u, cap);
        if (p.empty()) break;
        for (const auto& [e, q] : p) {
            auto it = acc.find(e);
            if (it == acc.end()) acc.emplace(e, q);
            else it->second += q;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (const auto& [e, q] : acc) out.push_back({e - m, q / c});
    return from_terms(std::move(out), mode_, target);
}

GeneralizedSeries GeneralizedSeries::sqrt(long depth) const {
    if (terms_.empty()) {
        if (is_exact()) return *this;
        throw TruncationError("cannot take sqrt: no support below known_order t^" +
                              known_order_->to_string());
    }
    const Exponent m = terms_.front().first;
    const Rational c = terms_.front().second;
    if (c.is_negative())
        throw DomainError("sqrt of a negative element (leading coefficient " +
                          c.to_string() + ")");
    Exponent half_m = m.halved();
    auto root_c = c.sqrt_exact();
    if (!root_c)
        throw DomainError("leading coefficient " + c.to_string() +
                          " has no exact rational square root");
    if (terms_.size() == 1 && is_exact())
        return monomial(*root_c, half_m, mode_);
    // a = c*t^m*(1+u); sqrt(a) = sqrt(c)*t^(m/2) * sum binom(1/2,k) u^k.
    Exponent target = is_exact() ? half_m + exp_of(Rational(depth))
                                 : *known_order_ - half_m;
    Exponent cap = target - half_m;
    std::vector<Term> u;
    u.reserve(terms_.size() - 1);
    for (size_t i = 1; i < terms_.size(); ++i)
        u.push_back({terms_[i].first - m, terms_[i].second / c});
    std::map<Exponent, Rational> acc;
    acc.emplace(exp_of(Rational(0)), Rational(1));
    std::vector<Term> p = {{exp_of(Rational(0)), Rational(1)}};
    Rational binom(1);
    for (long k = 1;; ++k) {
        p = mul_capped(p, u, cap);
        if (p.empty()) break;
        binom *= Rational(3 - 2 * k, 2 * k);
        for (const auto& [e, q] : p) {
            Rational v = q * binom;
            auto it = acc.find(e);
            if (it == acc.end()) acc.emplace(e, v);
            else it->second += v;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (const auto& [e, q] : acc) out.push_back({e + half_m, q * *root_c});
    return from_terms(std::move(out), mode_, target);
}

GeneralizedSeries GeneralizedSeries::pow(long e, long depth) const {
    if (e == 0) return constant(Rational(1), mode_);
    GeneralizedSeries base = e < 0 ? inverse(depth) : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e)
                            : static_cast<unsigned long>(e);
    GeneralizedSeries result = constant(Rational(1), mode_);
    GeneralizedSeries sq = base;
    while (k) {
        if (k & 1) result = result * sq;
        k >>= 1;
        if (k) sq = sq * sq;
    }
    return result;
}

GeneralizedSeries GeneralizedSeries::truncate(const Exponent& new_order) const {
    if (new_order.kind() != kind_of(mode_))
        throw ModeError("known_order kind does not match series mode");
    if (known_order_ && new_order > *known_order_)
        throw DomainError("cannot raise known_order from t^" +
                          known_order_->to_string() + " to t^" +
                          new_order.to_string() +
                          ": precision cannot be invented");
    GeneralizedSeries s = *this;
    s.known_order_ = new_order;
    s.drop_above_bound();
    return s;
}

GeneralizedSeries GeneralizedSeries::abs() const {
    return sign() < 0 ? -*this : *this;
}

int GeneralizedSeries::sign() const {
    if (!terms_.empty()) return terms_.front().second.sign();
    if (is_exact()) return 0;
    throw TruncationError(truncation_message(*known_order_));
}

Classification GeneralizedSeries::classify() const {
    Classification c;
    if (terms_.empty()) {
        if (!is_exact())
            throw TruncationError("classification unknown below known_order t^" +
                                  known_order_->to_string());
        c.is_zero = true;
        c.infinitesimal = true;
        c.finite = true;
        c.infinite = false;
        return c;
    }
    const Rational& v = terms_.front().first.value();
    c.is_zero = false;
    c.infinitesimal = v > Rational(0);
    c.finite = v >= Rational(0);
    c.infinite = !c.finite;
    return c;
}

std::pair<Rational, GeneralizedSeries> GeneralizedSeries::decompose() const {
    if (terms_.empty()) {
        if (is_exact()) return {Rational(0), *this};
        if (known_order_->value() > Rational(0)) return {Rational(0), *this};
        throw TruncationError("standard part unknown below known_order t^" +
                              known_order_->to_string());
    }
    if (terms_.front().first.value() < Rational(0))
        throw DomainError("infinite element has no standard part");
    Rational std_part = coeff_at(exp_of(Rational(0)));
    return {std_part, *this - constant(std_part, mode_)};
}

Ordering GeneralizedSeries::sign_cmp(const GeneralizedSeries& a,
                                     const GeneralizedSeries& b) {
    int s = (a - b).sign();
    if (s < 0) return Ordering::Less;
    if (s > 0) return Ordering::Greater;
    return Ordering::Equal;
}

bool GeneralizedSeries::same_data(const GeneralizedSeries& o) const {
    if (mode_ != o.mode_ || terms_.size() != o.terms_.size()) return false;
    if (known_order_.has_value() != o.known_order_.has_value()) return false;
    if (known_order_ && !(*known_order_ == *o.known_order_)) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].first == o.terms_[i].first) ||
            !(terms_[i].second == o.terms_[i].second))
            return false;
    return true;
}

std::string GeneralizedSeries::to_string() const {
    auto power = [](const Exponent& e) -> std::string {
        if (e.kind() == Exponent::Kind::Integer) return "t^" + e.to_string();
        return "t^(" + e.to_string() + ")";
    };
    if (terms_.empty() && is_exact()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational ac = c.abs();
        std::string term;
        if (e.value() == Rational(0)) {
            term = ac.to_string();
        } else {
            std::string tpow = e.value() == Rational(1) ? "t" : power(e);
            term = ac == Rational(1) ? tpow : ac.to_string() + "*" + tpow;
        }
        if (first) {
            s = (c.is_negative() ? "-" : "") + term;
            first = false;
        } else {
            s += (c.is_negative() ? " - " : " + ") + term;
        }
    }
    if (known_order_) {
        std::string mark = "O(" + power(*known_order_) + ")";
        s = first ? mark : s + " + " + mark;
    }
    return s;
}

GeneralizedSeries q_embed(const Rational& q, SeriesMode mode) {
    return GeneralizedSeries::constant(q, mode);
}

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "Less";
        case Ordering::Greater: return "Greater";
        default: return "Equal";
    }
}

}  // namespace ordfield
