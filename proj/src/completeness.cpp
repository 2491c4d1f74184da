#include "ordfield/completeness.hpp"

namespace ordfield {

std::vector<GeneralizedSeries> gen_unbounded_increasing(long n, SeriesMode mode) {
    if (n < 1) throw DomainError("sequence length must be positive");
    std::vector<GeneralizedSeries> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long k = 1; k <= n; ++k) {
        Exponent e = mode == SeriesMode::Laurent
                         ? Exponent::integer(-k)
                         : Exponent::ratio(Rational(-k));
        out.push_back(GeneralizedSeries::monomial(Rational(1), e, mode));
    }
    return out;
}

ProbeReport bounded_naturals_probe(long n_max, SeriesMode mode) {
    if (n_max < 1) throw DomainError("n_max must be positive");
    ProbeReport rep;
    rep.name = "naturals-bounded";
    Exponent e = mode == SeriesMode::Laurent ? Exponent::integer(-1)
                                             : Exponent::ratio(Rational(-1));
    GeneralizedSeries bound = GeneralizedSeries::monomial(Rational(1), e, mode);
    for (long k = 1; k <= n_max; ++k) {
        if (GeneralizedSeries::sign_cmp(q_embed(Rational(k), mode), bound) !=
            Ordering::Less)
            throw Error("natural " + std::to_string(k) + " reached t^-1");
    }
    rep.verdict = Verdict::Witness;
    rep.witnesses.push_back(bound.to_string());
    rep.trace.push_back("n < t^-1 for every n = 1.." + std::to_string(n_max));
    rep.trace.push_back("the naturals are bounded above: the field is non-Archimedean");
    return rep;
}

ProbeReport bounded_naturals_probe_rational(long n_max,
                                            const Rational& candidate_bound) {
    if (n_max < 1) throw DomainError("n_max must be positive");
    ProbeReport rep;
    rep.name = "naturals-bounded";
    Rational beat{candidate_bound.floor() + 1};
    if (!(beat > candidate_bound))
        throw Error("floor(B)+1 failed to exceed the candidate bound");
    rep.verdict = Verdict::CounterexampleShown;
    rep.witnesses.push_back(beat.to_string());
    long found = 0;
    for (long k = 1; k <= n_max; ++k) {
        if (Rational(k) > candidate_bound) {
            found = k;
            break;
        }
    }
    if (found)
        rep.trace.push_back("scan n = 1.." + std::to_string(n_max) + ": n = " +
                            std::to_string(found) + " already exceeds B = " +
                            candidate_bound.to_string());
    else
        rep.trace.push_back("scan n = 1.." + std::to_string(n_max) +
                            " stayed below B = " + candidate_bound.to_string() +
                            "; floor(B)+1 = " + beat.to_string() + " exceeds it");
    rep.trace.push_back("no candidate bounds the naturals: Q is Archimedean");
    return rep;
}

}  // namespace ordfield
