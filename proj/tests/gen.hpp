#pragma once

#include <random>
#include <vector>

#include "ordfield/rational.hpp"
#include "ordfield/rational_function.hpp"
#include "ordfield/series.hpp"

// Deterministic random elements for the property suites. Everything is
// seeded by the caller so failures reproduce.
namespace ordfield::gen {

inline Rational rational(std::mt19937& rng, long lo = -9, long hi = 9,
                         long dmax = 6) {
    std::uniform_int_distribution<long> n(lo, hi), d(1, dmax);
    return Rational(n(rng), d(rng));
}

inline Rational nonzero_rational(std::mt19937& rng) {
    for (;;) {
        Rational q = rational(rng);
        if (!q.is_zero()) return q;
    }
}

inline Exponent exponent(std::mt19937& rng, SeriesMode mode, long emin,
                         long emax) {
    std::uniform_int_distribution<long> ex(emin, emax);
    if (mode == SeriesMode::Laurent) return Exponent::integer(ex(rng));
    std::uniform_int_distribution<long> dq(1, 4);
    return Exponent::ratio(Rational(ex(rng), dq(rng)));
}

// Exact element with a handful of support points.
inline GeneralizedSeries series(std::mt19937& rng, SeriesMode mode,
                                int max_terms = 4, long emin = -3,
                                long emax = 6) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::vector<GeneralizedSeries::Term> terms;
    int k = nt(rng);
    for (int i = 0; i < k; ++i)
        terms.push_back({exponent(rng, mode, emin, emax), rational(rng)});
    return GeneralizedSeries::from_terms(std::move(terms), mode);
}

inline GeneralizedSeries nonzero_series(std::mt19937& rng, SeriesMode mode,
                                        int max_terms = 4, long emin = -3,
                                        long emax = 6) {
    for (;;) {
        GeneralizedSeries s = series(rng, mode, max_terms, emin, emax);
        if (s.has_support()) return s;
    }
}

// Exact element with all exponents >= emin >= 0, hence finite.
inline GeneralizedSeries finite_series(std::mt19937& rng, SeriesMode mode,
                                       int max_terms = 4) {
    return series(rng, mode, max_terms, 0, 6);
}

inline Polynomial polynomial(std::mt19937& rng, int max_deg = 3) {
    std::uniform_int_distribution<int> d(0, max_deg);
    std::vector<Rational> c(static_cast<std::size_t>(d(rng)) + 1);
    for (auto& q : c) q = rational(rng);
    return Polynomial(std::move(c));
}

inline Polynomial nonzero_polynomial(std::mt19937& rng, int max_deg = 3) {
    for (;;) {
        Polynomial p = polynomial(rng, max_deg);
        if (!p.is_zero()) return p;
    }
}

inline RationalFunction ratfunc(std::mt19937& rng, RfOrdering ord) {
    return RationalFunction(polynomial(rng), nonzero_polynomial(rng), ord);
}

inline RationalFunction nonzero_ratfunc(std::mt19937& rng, RfOrdering ord) {
    for (;;) {
        RationalFunction f = ratfunc(rng, ord);
        if (!f.is_zero()) return f;
    }
}

}  // namespace ordfield::gen
