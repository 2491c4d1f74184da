#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ordfield/polynomial.hpp"
#include "ordfield/rational.hpp"

namespace ordfield {

struct SqrtStep {
    long iteration;     // 1-based
    Rational s;         // iterate after the step
    Rational h;         // step applied (subtracted on the descending branch)
    Rational residual;  // |s^2 - a|
    bool ascending;
};

struct IterationTrace {
    Rational a, tol;
    Rational result;
    bool tolerance_met = false;
    std::vector<SqrtStep> steps;
};

// Monotone staircase toward sqrt(a), starting at s = 1.
//   below a: step h = (1/2)*min{(a - s^2)/(s+1)^2, 1}, keeps s^2 < a
//   above a: step h = (s^2 - a)/(2(s+1)^2),           keeps s^2 > a
// The ideal step is floored onto a dyadic grid before use (any smaller
// positive step preserves both branch invariants), which keeps iterate
// digit size linear in the iteration count instead of tripling per step.
// Stops when |s^2 - a| <= tol or after max_iter steps; each invariant is
// re-verified every iteration.
IterationTrace sqrt_sup_iterate(const Rational& a, const Rational& tol,
                                long max_iter);

// Dyadic approximation of sup S from above, S described by its upper-bound
// predicate: a_p = k_p / 2^p with k_p = min{k : k/2^p an upper bound,
// k <= 2^p * M}. Needs m below the sup (not an upper bound) and M an upper
// bound; k_{p+1} is located among {2k_p - 1, 2k_p}. Returns a_0..a_P.
// Predicate contract violations found during the run raise DomainError.
std::vector<Rational> dyadic_sup(
    const std::function<bool(const Rational&)>& is_upper_bound, long m, long M,
    long P);

struct RationalInterval {
    Rational lo, hi;
};

// Bisection on a certified sign change: p(lo)*p(hi) <= 0 is required,
// maintained, and re-checked each halving. The final width is exactly
// (hi - lo) / 2^iters.
RationalInterval bisect_ivt(const Polynomial& p, const Rational& lo,
                            const Rational& hi, long iters);

struct BwSelection {
    std::vector<std::size_t> indices;         // strictly increasing, 0-based
    std::vector<RationalInterval> intervals;  // |G_k| = (b-a)/2^(k-1)
    bool exhausted = false;  // prefix ran out before K selections
    std::string reason;
};

// Halving selection over a finite prefix in [a, b]: each round keeps the
// half holding more of the still-unused values (ties to the left half) and
// selects the least unused index inside it. Returns fewer than K rounds,
// with a reason, when the prefix is exhausted.
BwSelection bw_select(const std::vector<Rational>& prefix, const Rational& a,
                      const Rational& b, long K);

}  // namespace ordfield
