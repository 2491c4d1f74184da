#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ordfield/probe_report.hpp"
#include "ordfield/rational_function.hpp"
#include "ordfield/series.hpp"

namespace ordfield {

// Uniform hooks so the probes below run over any of the three ordered
// fields. Comparisons are exact and may raise TruncationError for series.

inline Ordering field_cmp(const Rational& a, const Rational& b) {
    auto c = a <=> b;
    return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
}
inline Ordering field_cmp(const GeneralizedSeries& a, const GeneralizedSeries& b) {
    return GeneralizedSeries::sign_cmp(a, b);
}
inline Ordering field_cmp(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::sign_cmp(a, b);
}

inline Rational embed_like(const Rational&, const Rational& q) { return q; }
inline GeneralizedSeries embed_like(const GeneralizedSeries& like, const Rational& q) {
    return q_embed(q, like.mode());
}
inline RationalFunction embed_like(const RationalFunction& like, const Rational& q) {
    return q_embed(q, like.ordering());
}

inline std::string field_str(const Rational& x) { return x.to_string(); }
inline std::string field_str(const GeneralizedSeries& x) { return x.to_string(); }
inline std::string field_str(const RationalFunction& x) { return x.to_string(); }

inline Rational field_abs(const Rational& x) { return x.abs(); }
inline GeneralizedSeries field_abs(const GeneralizedSeries& x) { return x.abs(); }
inline RationalFunction field_abs(const RationalFunction& x) { return x.abs(); }

inline Classification field_classify(const Rational& x) {
    Classification c;
    c.is_zero = x.is_zero();
    c.infinitesimal = x.is_zero();  // Q is Archimedean: 0 is the only one
    c.finite = true;
    c.infinite = false;
    return c;
}
inline Classification field_classify(const GeneralizedSeries& x) {
    return x.classify();
}
inline Classification field_classify(const RationalFunction& x) {
    return x.classify();
}

inline Rational field_standard(const Rational& x) { return x; }
inline Rational field_standard(const GeneralizedSeries& x) {
    return x.decompose().first;
}
inline Rational field_standard(const RationalFunction& x) {
    return x.standard_part();
}

template <typename T>
struct ClosedInterval {
    T lo, hi;
};

template <typename T>
struct OpenInterval {
    T lo, hi;
};

namespace detail {

template <typename T>
void check_closed_nonempty(const std::vector<ClosedInterval<T>>& family) {
    if (family.empty()) throw DomainError("empty interval family");
    for (std::size_t i = 0; i < family.size(); ++i)
        if (field_cmp(family[i].lo, family[i].hi) == Ordering::Greater)
            throw DomainError("interval " + std::to_string(i) +
                              " is empty (lo > hi)");
}

// Indices of the greatest lower endpoint and the least upper endpoint.
template <typename T>
std::pair<std::size_t, std::size_t> extreme_endpoints(
    const std::vector<ClosedInterval<T>>& family) {
    std::size_t imax = 0, imin = 0;
    for (std::size_t i = 1; i < family.size(); ++i) {
        if (field_cmp(family[i].lo, family[imax].lo) == Ordering::Greater)
            imax = i;
        if (field_cmp(family[i].hi, family[imin].hi) == Ordering::Less)
            imin = i;
    }
    return {imax, imin};
}

}  // namespace detail

// Do the closed intervals have a common point? On a totally ordered set the
// whole family intersects iff max(lo) <= min(hi).
template <typename T>
bool fip_check(const std::vector<ClosedInterval<T>>& family) {
    detail::check_closed_nonempty(family);
    auto [imax, imin] = detail::extreme_endpoints(family);
    return field_cmp(family[imax].lo, family[imin].hi) != Ordering::Greater;
}

// A point of the common intersection of a finite family of closed
// intervals: the greatest lower endpoint. Membership in every interval is
// re-verified before returning.
template <typename T>
T cantor_point_finite(const std::vector<ClosedInterval<T>>& family) {
    detail::check_closed_nonempty(family);
    auto [imax, imin] = detail::extreme_endpoints(family);
    if (field_cmp(family[imax].lo, family[imin].hi) == Ordering::Greater)
        throw DomainError("empty intersection: lo of interval " +
                          std::to_string(imax) + " (" + field_str(family[imax].lo) +
                          ") exceeds hi of interval " + std::to_string(imin) +
                          " (" + field_str(family[imin].hi) + ")");
    const T& point = family[imax].lo;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (field_cmp(point, family[i].lo) == Ordering::Less ||
            field_cmp(point, family[i].hi) == Ordering::Greater)
            throw Error("constructed point escapes interval " + std::to_string(i));
    return point;
}

// Strict interior point of a family of open intervals that share slack rho:
// requires rho > 0 and rho <= hi_l - lo_k for every pair (k, l); the point
// max(lo) + rho/2 then sits strictly inside each interval.
template <typename T>
T open_fip_point(const std::vector<OpenInterval<T>>& family, const T& rho) {
    if (family.empty()) throw DomainError("empty interval family");
    T zero = embed_like(rho, Rational(0));
    if (field_cmp(rho, zero) != Ordering::Greater)
        throw DomainError("rho must be positive");
    std::size_t imax = 0, imin = 0;
    for (std::size_t i = 1; i < family.size(); ++i) {
        if (field_cmp(family[i].lo, family[imax].lo) == Ordering::Greater)
            imax = i;
        if (field_cmp(family[i].hi, family[imin].hi) == Ordering::Less)
            imin = i;
    }
    // the pair minimizing hi_l - lo_k decides for all pairs
    T slack = family[imin].hi - family[imax].lo;
    if (field_cmp(slack, rho) == Ordering::Less)
        throw DomainError("rho too large: hi of interval " + std::to_string(imin) +
                          " minus lo of interval " + std::to_string(imax) +
                          " is " + field_str(slack) + " < rho");
    T half_rho = rho * embed_like(rho, Rational(1, 2));
    T zeta = family[imax].lo + half_rho;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (field_cmp(zeta, family[i].lo) != Ordering::Greater ||
            field_cmp(zeta, family[i].hi) != Ordering::Less)
            throw Error("constructed point is not interior to interval " +
                        std::to_string(i));
    return zeta;
}

// Least 1-based N (with at least two indices at or past it, so the answer
// is never vacuous) such that all |a_n - a_m| < eps for n, m >= N; one
// entry per threshold. Any threshold without such an N makes the verdict
// Inconclusive.
template <typename T>
ProbeReport cauchy_probe(const std::vector<T>& prefix,
                         const std::vector<T>& thresholds) {
    if (prefix.size() < 2) throw DomainError("prefix needs at least two terms");
    if (thresholds.empty()) throw DomainError("no thresholds given");
    ProbeReport rep;
    rep.name = "cauchy";
    rep.verdict = Verdict::Witness;
    for (const T& eps : thresholds) {
        T zero = embed_like(eps, Rational(0));
        if (field_cmp(eps, zero) != Ordering::Greater)
            throw DomainError("threshold must be positive");
        // last violating pair by smaller index decides the least N
        std::optional<std::pair<std::size_t, std::size_t>> worst;
        for (std::size_t i = 0; i + 1 < prefix.size(); ++i) {
            for (std::size_t j = i + 1; j < prefix.size(); ++j) {
                if (field_cmp(field_abs(prefix[i] - prefix[j]), eps) !=
                    Ordering::Less) {
                    if (!worst || i > worst->first) worst = {i, j};
                }
            }
        }
        std::size_t n0 = worst ? worst->first + 1 : 0;  // 0-based start
        if (n0 + 2 <= prefix.size()) {
            rep.witnesses.push_back("eps = " + field_str(eps) +
                                    ": N = " + std::to_string(n0 + 1));
            rep.trace.push_back(
                "eps = " + field_str(eps) + ": all pairwise differences from N = " +
                std::to_string(n0 + 1) + " on are below eps" +
                (worst ? " (pair (" + std::to_string(worst->first + 1) + ", " +
                             std::to_string(worst->second + 1) + ") still violates)"
                       : ""));
        } else {
            rep.verdict = Verdict::Inconclusive;
            rep.trace.push_back(
                "eps = " + field_str(eps) + ": no nonvacuous N works; pair (" +
                std::to_string(worst->first + 1) + ", " +
                std::to_string(worst->second + 1) + ") has |a_n - a_m| = " +
                field_str(field_abs(prefix[worst->first] - prefix[worst->second])) +
                " >= eps");
        }
    }
    return rep;
}

// Least natural n with |x| < n, witnessed exactly and cross-checked by a
// bounded scan; infinite x yields CounterexampleShown.
template <typename T>
ProbeReport archimedean_probe(const T& x, long scan_bound = 1000000) {
    ProbeReport rep;
    rep.name = "archimedean";
    T ax = field_abs(x);
    Classification cls = field_classify(x);
    if (!cls.finite) {
        rep.verdict = Verdict::CounterexampleShown;
        rep.witnesses.push_back(field_str(x));
        rep.trace.push_back("|x| is infinite: no natural exceeds it");
        for (long n = 1; n <= scan_bound; n *= 10) {
            bool ge = field_cmp(ax, embed_like(ax, Rational(n))) != Ordering::Less;
            rep.trace.push_back("scan n = " + std::to_string(n) + ": |x| >= n is " +
                                (ge ? "true" : "false"));
            if (!ge) throw Error("infinite element fell below a scanned natural");
        }
        return rep;
    }
    Rational std_part = field_standard(ax);
    mpz_class n = std_part.floor() + 1;
    if (std_part.is_integer() &&
        field_cmp(ax, embed_like(ax, std_part)) == Ordering::Less)
        n = std_part.num();
    Rational rn{n};
    if (field_cmp(ax, embed_like(ax, rn)) != Ordering::Less)
        throw Error("candidate witness does not bound |x|");
    if (n > 1 && field_cmp(ax, embed_like(ax, Rational(n - 1))) == Ordering::Less)
        throw Error("candidate witness is not minimal");
    rep.verdict = Verdict::Witness;
    rep.witnesses.push_back(rn.to_string());
    rep.trace.push_back("st(|x|) = " + std_part.to_string());
    rep.trace.push_back("check |x| < " + rn.to_string() + ": true");
    if (n > 1)
        rep.trace.push_back("check |x| >= " + Rational(n - 1).to_string() +
                            ": true (witness minimal)");
    if (n <= scan_bound) {
        long nl = static_cast<long>(n.get_si());
        for (long k = 1; k < nl; ++k)
            if (field_cmp(ax, embed_like(ax, Rational(k))) == Ordering::Less)
                throw Error("scan found an earlier witness");
        rep.trace.push_back("scan n = 1.." + std::to_string(nl) +
                            ": no earlier witness");
    } else {
        rep.trace.push_back("scan capped at " + std::to_string(scan_bound) +
                            "; exact comparisons above certify the witness");
    }
    return rep;
}

// The staircase t^-1, t^-2, ..., t^-n: strictly increasing and, term by
// term, beyond every rational bound.
std::vector<GeneralizedSeries> gen_unbounded_increasing(long n, SeriesMode mode);

// Are 1..n_max bounded above? In a series field t^-1 bounds them all
// (Witness); in Q any candidate bound B is beaten by floor(B)+1
// (CounterexampleShown).
ProbeReport bounded_naturals_probe(long n_max, SeriesMode mode);
ProbeReport bounded_naturals_probe_rational(long n_max,
                                            const Rational& candidate_bound);

}  // namespace ordfield
