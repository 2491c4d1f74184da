#include "ordfield/archimedean.hpp"

#include "ordfield/errors.hpp"

namespace ordfield {

namespace {

// Largest dyadic k/2^p <= h, with the grid chosen fine enough (16 guard
// bits past parity) that the result keeps most of h: 0 < result <= h.
Rational dyadic_floor(const Rational& h) {
    if (h.sign() <= 0) throw Error("dyadic_floor needs a positive input");
    if (mpz_popcount(h.den().get_mpz_t()) == 1)
        return h;  // denominator already a power of two
    long nb = static_cast<long>(mpz_sizeinbase(h.num().get_mpz_t(), 2));
    long db = static_cast<long>(mpz_sizeinbase(h.den().get_mpz_t(), 2));
    unsigned long p = static_cast<unsigned long>(std::max(0L, db - nb) + 16);
    mpz_class scaled = h.num() << p;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), h.den().get_mpz_t());
    mpz_class grid = 1;
    grid <<= p;
    Rational out(q, grid);
    if (out.sign() <= 0 || out > h) throw Error("dyadic_floor left its range");
    return out;
}

}  // namespace

IterationTrace sqrt_sup_iterate(const Rational& a, const Rational& tol,
                                long max_iter) {
    if (a.sign() <= 0) throw DomainError("sqrt iteration needs a > 0");
    if (tol.sign() <= 0) throw DomainError("tolerance must be positive");
    if (max_iter < 0) throw DomainError("max_iter must be nonnegative");
    IterationTrace trace;
    trace.a = a;
    trace.tol = tol;
    Rational s(1);
    Rational one(1), two(2);
    Rational residual = (s * s - a).abs();
    for (long it = 1; it <= max_iter; ++it) {
        if (residual <= tol) break;
        Rational sq = s * s;
        Rational denom = (s + one) * (s + one);
        bool ascending = sq < a;
        Rational h;
        if (ascending) {
            Rational ideal = (a - sq) / denom;
            if (ideal > one) ideal = one;
            h = dyadic_floor(ideal / two);
            s += h;
            if (!(s * s < a)) throw Error("ascending step overshot: s^2 >= a");
        } else {
            h = dyadic_floor((sq - a) / (two * denom));
            s -= h;
            if (!(s * s > a)) throw Error("descending step undershot: s^2 <= a");
            if (s.sign() <= 0) throw Error("iterate left the positive cone");
        }
        Rational next_residual = (s * s - a).abs();
        if (!(next_residual < residual))
            throw Error("residual failed to decrease strictly");
        residual = next_residual;
        trace.steps.push_back({it, s, h, residual, ascending});
    }
    trace.result = s;
    trace.tolerance_met = residual <= tol;
    return trace;
}

std::vector<Rational> dyadic_sup(
    const std::function<bool(const Rational&)>& is_upper_bound, long m, long M,
    long P) {
    if (P < 0) throw DomainError("P must be nonnegative");
    if (!(m < M)) throw DomainError("need m < M");
    if (is_upper_bound(Rational(m)))
        throw DomainError("contract violation: m is an upper bound");
    if (!is_upper_bound(Rational(M)))
        throw DomainError("contract violation: M is not an upper bound");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(P) + 1);
    // level 0: walk down from M to the least integer upper bound
    mpz_class k(M);
    while (k - 1 > m && is_upper_bound(Rational(mpz_class(k - 1)))) --k;
    out.push_back(Rational(k));
    mpz_class pow2(1);
    for (long p = 1; p <= P; ++p) {
        pow2 <<= 1;
        // k_p is 2k or 2k-1: test the lower candidate
        mpz_class lower = 2 * k - 1;
        k = is_upper_bound(Rational(lower, pow2)) ? lower : 2 * k;
        if (is_upper_bound(Rational(mpz_class(k - 1), pow2)))
            throw DomainError(
                "contract violation: predicate is not monotone at level " +
                std::to_string(p));
        out.push_back(Rational(k, pow2));
    }
    return out;
}

RationalInterval bisect_ivt(const Polynomial& p, const Rational& lo,
                            const Rational& hi, long iters) {
    if (!(lo < hi)) throw DomainError("need lo < hi");
    if (iters < 0) throw DomainError("iters must be nonnegative");
    Rational a = lo, b = hi;
    Rational fa = p.eval(a), fb = p.eval(b);
    if (fa.sign() * fb.sign() > 0)
        throw DomainError("no sign change certified: p(lo) and p(hi) agree in sign");
    for (long i = 0; i < iters; ++i) {
        Rational mid = (a + b) / Rational(2);
        Rational fm = p.eval(mid);
        if (fa.sign() * fm.sign() <= 0) {
            b = mid;
            fb = fm;
        } else {
            a = mid;
            fa = fm;
        }
        if (fa.sign() * fb.sign() > 0)
            throw Error("sign-change invariant broke during bisection");
    }
    return {a, b};
}

BwSelection bw_select(const std::vector<Rational>& prefix, const Rational& a,
                      const Rational& b, long K) {
    if (prefix.empty()) throw DomainError("empty prefix");
    if (!(a < b)) throw DomainError("need a < b");
    if (K < 1) throw DomainError("K must be positive");
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (prefix[i] < a || prefix[i] > b)
            throw DomainError("prefix value at index " + std::to_string(i) +
                              " lies outside [a, b]");
    BwSelection sel;
    sel.indices.push_back(0);
    sel.intervals.push_back({a, b});
    for (long k = 2; k <= K; ++k) {
        const RationalInterval& g = sel.intervals.back();
        Rational mid = (g.lo + g.hi) / Rational(2);
        std::size_t last = sel.indices.back();
        long in_left = 0, in_right = 0;
        for (std::size_t i = last + 1; i < prefix.size(); ++i) {
            if (prefix[i] >= g.lo && prefix[i] <= mid) ++in_left;
            if (prefix[i] >= mid && prefix[i] <= g.hi) ++in_right;
        }
        if (in_left == 0 && in_right == 0) {
            sel.exhausted = true;
            sel.reason = "prefix exhausted after " + std::to_string(k - 1) +
                         " selections";
            break;
        }
        RationalInterval next =
            in_left >= in_right ? RationalInterval{g.lo, mid}
                                : RationalInterval{mid, g.hi};
        std::size_t pick = prefix.size();
        for (std::size_t i = last + 1; i < prefix.size(); ++i) {
            if (prefix[i] >= next.lo && prefix[i] <= next.hi) {
                pick = i;
                break;
            }
        }
        if (pick == prefix.size())
            throw Error("counted a nonempty half but found no member");
        sel.indices.push_back(pick);
        sel.intervals.push_back(next);
    }
    return sel;
}

}  // namespace ordfield
