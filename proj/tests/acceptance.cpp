// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Randomized suites use fixed seeds so reruns are reproducible.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gen.hpp"
#include "ordfield/archimedean.hpp"
#include "ordfield/cli.hpp"
#include "ordfield/completeness.hpp"
#include "ordfield/eval.hpp"
#include "ordfield/metric.hpp"

using namespace ordfield;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
Clock::time_point suite_start;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 t0)
        .count();
}

void report(int idx, const std::string& what, bool ok, long ms,
            const std::string& detail = "") {
    std::printf("criterion %2d: %s  %s (%ld ms)%s\n", idx, ok ? "pass" : "FAIL",
                what.c_str(), ms, detail.empty() ? "" : ("  " + detail).c_str());
    if (!ok) ++failures;
}

void run(int idx, const std::string& what,
         const std::function<void(bool&, std::string&)>& body,
         long budget_ms = 0) {
    Clock::time_point t0 = Clock::now();
    bool ok = true;
    std::string detail;
    try {
        body(ok, detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    long ms = ms_since(t0);
    if (budget_ms > 0 && ms > budget_ms) {
        ok = false;
        detail += " over time budget " + std::to_string(budget_ms) + " ms";
    }
    report(idx, what, ok, ms, detail);
}

#define ACC(cond)                                              \
    do {                                                       \
        if (!(cond)) {                                         \
            ok = false;                                        \
            if (detail.empty()) detail = "failed: " #cond;     \
            return;                                            \
        }                                                      \
    } while (0)

// ----- uniform element generation across the four field modes -----

enum class Mode { Laurent, Lc, RfInf, RfZero };
const std::vector<Mode> kModes{Mode::Laurent, Mode::Lc, Mode::RfInf,
                               Mode::RfZero};

// dispatch a callable over the element type of the mode
template <typename Fn>
void with_mode(std::mt19937& rng, Mode m, Fn&& fn) {
    switch (m) {
        case Mode::Laurent: {
            auto g = [&] { return gen::series(rng, SeriesMode::Laurent); };
            fn(g, GeneralizedSeries::zero(SeriesMode::Laurent),
               q_embed(Rational(1), SeriesMode::Laurent));
            break;
        }
        case Mode::Lc: {
            auto g = [&] { return gen::series(rng, SeriesMode::LeviCivita); };
            fn(g, GeneralizedSeries::zero(SeriesMode::LeviCivita),
               q_embed(Rational(1), SeriesMode::LeviCivita));
            break;
        }
        case Mode::RfInf: {
            auto g = [&] { return gen::ratfunc(rng, RfOrdering::AtInfinity); };
            fn(g, RationalFunction::constant(Rational(0), RfOrdering::AtInfinity),
               RationalFunction::constant(Rational(1), RfOrdering::AtInfinity));
            break;
        }
        case Mode::RfZero: {
            auto g = [&] { return gen::ratfunc(rng, RfOrdering::AtZero); };
            fn(g, RationalFunction::constant(Rational(0), RfOrdering::AtZero),
               RationalFunction::constant(Rational(1), RfOrdering::AtZero));
            break;
        }
    }
}

// equality at exact level: series match below any bound, ratfuncs exactly
bool no_support_difference(const GeneralizedSeries& a,
                           const GeneralizedSeries& b) {
    return !(a - b).has_support();
}
bool no_support_difference(const RationalFunction& a,
                           const RationalFunction& b) {
    return a == b;
}

}  // namespace

// ----- criteria -----

static void criterion_field_axioms() {
    run(1, "ordered-field axioms, 4 modes x 1000 triples",
        [](bool& ok, std::string& detail) {
            std::mt19937 rng(11);
            for (Mode m : kModes) {
                with_mode(rng, m, [&](auto& g, auto zero, auto one) {
                    for (int i = 0; i < 1000 && ok; ++i) {
                        auto x = g(), y = g(), z = g();
                        // ring axioms, all exact
                        ACC(no_support_difference(x + y, y + x));
                        ACC(no_support_difference((x + y) + z, x + (y + z)));
                        ACC(no_support_difference(x * y, y * x));
                        ACC(no_support_difference((x * y) * z, x * (y * z)));
                        ACC(no_support_difference(x * (y + z), x * y + x * z));
                        ACC(no_support_difference(x + zero, x));
                        ACC(no_support_difference(x * one, x));
                        ACC(no_support_difference(x + (-x), zero));
                        // multiplicative inverse: equal below the bound
                        if (field_cmp(x, zero) != Ordering::Equal)
                            ACC(no_support_difference(x * x.inverse() - one,
                                                      zero));
                        // order axioms
                        Ordering xy = field_cmp(x, y);
                        ACC(field_cmp(x + z, y + z) == xy);
                        if (field_cmp(z, zero) == Ordering::Greater)
                            ACC(field_cmp(x * z, y * z) == xy);
                        if (xy != Ordering::Greater &&
                            field_cmp(y, z) != Ordering::Greater)
                            ACC(field_cmp(x, z) != Ordering::Greater);
                        // triangle inequality |x+y| <= |x| + |y|
                        ACC(field_cmp(field_abs(x + y),
                                      field_abs(x) + field_abs(y)) !=
                            Ordering::Greater);
                    }
                });
                if (!ok) {
                    detail += " (mode " + std::to_string(static_cast<int>(m)) + ")";
                    break;
                }
            }
        },
        10000);
}

static void criterion_valuation_axioms() {
    run(2, "valuation axioms on 1000 random pairs",
        [](bool& ok, std::string& detail) {
            std::mt19937 rng(12);
            for (int i = 0; i < 1000 && ok; ++i) {
                SeriesMode mode =
                    i % 2 ? SeriesMode::LeviCivita : SeriesMode::Laurent;
                GeneralizedSeries x = gen::nonzero_series(rng, mode);
                GeneralizedSeries y = gen::nonzero_series(rng, mode);
                ACC((x * y).valuation() == x.valuation() + y.valuation());
                ACC((x + y).valuation() >=
                    ValuationValue::min(x.valuation(), y.valuation()));
                // convexity: |x| <= |y| forces v(x) >= v(y)
                if (GeneralizedSeries::sign_cmp(x.abs(), y.abs()) !=
                    Ordering::Greater)
                    ACC(x.valuation() >= y.valuation());
            }
        });
}

static void criterion_classification() {
    run(3, "classification duality and ideal structure, 1000 elements",
        [](bool& ok, std::string& detail) {
            std::mt19937 rng(13);
            for (int i = 0; i < 1000 && ok; ++i) {
                SeriesMode mode =
                    i % 2 ? SeriesMode::LeviCivita : SeriesMode::Laurent;
                GeneralizedSeries x = gen::nonzero_series(rng, mode);
                Classification cx = x.classify();
                // duality through the inverse
                Classification cinv = x.inverse().classify();
                ACC(cx.infinitesimal == cinv.infinite);
                ACC(cx.infinite == cinv.infinitesimal);
                // I * F stays in I; F is a subring
                GeneralizedSeries f = gen::series(rng, mode, 3, 0, 5);
                if (cx.infinitesimal && f.classify().finite)
                    ACC((x * f).classify().infinitesimal ||
                        !(x * f).has_support());
                GeneralizedSeries f2 = gen::series(rng, mode, 3, 0, 5);
                ACC((f + f2).classify().finite);
                ACC((f * f2).classify().finite);
                ACC((-f).classify().finite);
                ACC((f - f2).classify().finite);
                // convexity of the infinitesimals
                GeneralizedSeries y = gen::nonzero_series(rng, mode);
                if (y.classify().infinitesimal &&
                    GeneralizedSeries::sign_cmp(x.abs(), y.abs()) ==
                        Ordering::Less)
                    ACC(x.classify().infinitesimal);
            }
        });
}

static void criterion_landmarks() {
    run(4, "landmark expansions to depth 16",
        [](bool& ok, std::string& detail) {
            GeneralizedSeries t = GeneralizedSeries::monomial(
                Rational(1), Exponent::integer(1), SeriesMode::Laurent);
            GeneralizedSeries one =
                q_embed(Rational(1), SeriesMode::Laurent);
            GeneralizedSeries g = t / (one - t);
            ACC(*g.known_order() == Exponent::integer(17));
            for (long e = 1; e <= 16; ++e)
                ACC(g.coeff_at(Exponent::integer(e)) == Rational(1));
            Classification cg = g.classify();
            ACC(cg.infinitesimal && cg.finite && !cg.infinite && !cg.is_zero);

            GeneralizedSeries h = (t - t * t).inverse();
            ACC(*h.known_order() == Exponent::integer(15));
            for (long e = -1; e <= 14; ++e)
                ACC(h.coeff_at(Exponent::integer(e)) == Rational(1));
            Classification ch = h.classify();
            ACC(ch.infinite && !ch.finite && !ch.infinitesimal);
        });
}

static void criterion_decompose() {
    run(5, "decomposition unique, additive, exact on 1000 finite elements",
        [](bool& ok, std::string& detail) {
            std::mt19937 rng(15);
            for (int i = 0; i < 1000 && ok; ++i) {
                SeriesMode mode =
                    i % 2 ? SeriesMode::LeviCivita : SeriesMode::Laurent;
                GeneralizedSeries x = gen::finite_series(rng, mode);
                GeneralizedSeries y = gen::finite_series(rng, mode);
                auto [sx, rx] = x.decompose();
                auto [sy, ry] = y.decompose();
                // recombination is the identity
                ACC((q_embed(sx, mode) + rx).same_data(x));
                // determinism (uniqueness given st + infinitesimal shape)
                auto [sx2, rx2] = x.decompose();
                ACC(sx == sx2 && rx.same_data(rx2));
                // additivity
                auto [sxy, rxy] = (x + y).decompose();
                ACC(sxy == sx + sy);
                ACC(rxy.same_data(rx + ry));
                // the remainder really is infinitesimal
                if (rx.has_support()) ACC(rx.classify().infinitesimal);
            }
        });
}

static void criterion_sigma() {
    run(6, "sigma is an order-isomorphism onto its image, 500 pairs",
        [](bool& ok, std::string& detail) {
            std::mt19937 rng(16);
            for (int i = 0; i < 500 && ok; ++i) {
                RationalFunction a = gen::ratfunc(rng, RfOrdering::AtInfinity);
                RationalFunction b = gen::ratfunc(rng, RfOrdering::AtInfinity);
                Ordering ab = RationalFunction::sign_cmp(a, b);
                ACC(RationalFunction::sign_cmp(a.sigma_square(),
                                               b.sigma_square()) == ab);
                ACC(a.sigma_square() + b.sigma_square() ==
                    (a + b).sigma_square());
                ACC(a.sigma_square() * b.sigma_square() ==
                    (a * b).sigma_square());
            }
        });
}

static void criterion_dyadic_sup() {
    run(7, "dyadic staircase above sqrt(2), 20 levels",
        [](bool& ok, std::string& detail) {
            auto is_ub = [](const Rational& x) {
                return x.sign() > 0 && x * x >= Rational(2);
            };
            std::vector<Rational> a = dyadic_sup(is_ub, 0, 2, 20);
            ACC(a.size() == 21);
            ACC(a[4] == Rational(23, 16));
            for (long p = 0; p <= 20; ++p) {
                Rational eps(mpz_class(1), mpz_class(1) << p);
                ACC(is_ub(a[p]));
                ACC(!is_ub(a[p] - eps));
                Rational gap = a[p] * a[p] - Rational(2);
                ACC(gap >= Rational(0));
                ACC(gap <= Rational(mpz_class(4), mpz_class(1) << p));
            }
        },
        1000);
}

static void criterion_sqrt_iterate() {
    run(8, "sqrt staircase: invariants, descent, pinned first step",
        [](bool& ok, std::string& detail) {
            IterationTrace tr =
                sqrt_sup_iterate(Rational(2), Rational(1, 1000), 100);
            ACC(tr.tolerance_met);
            ACC(!tr.steps.empty());
            ACC(tr.steps[0].s == Rational(9, 8));
            Rational prev(1);  // |1^2 - 2|
            for (const auto& st : tr.steps) {
                if (st.ascending)
                    ACC(st.s * st.s < Rational(2));
                else
                    ACC(st.s * st.s > Rational(2));
                ACC(st.residual < prev);
                prev = st.residual;
            }
            ACC((tr.result * tr.result - Rational(2)).abs() <=
                Rational(1, 1000));
        });
}

static void criterion_bisect() {
    run(9, "bisection: exact width, float-oracle bracket",
        [](bool& ok, std::string& detail) {
            Polynomial p(std::vector<Rational>{Rational(-5), Rational(-2),
                                               Rational(0), Rational(1)});
            RationalInterval iv = bisect_ivt(p, Rational(2), Rational(3), 30);
            ACC(iv.hi - iv.lo == Rational(mpz_class(1), mpz_class(1) << 30));
            Rational root(mpz_class("20945514815"), mpz_class("10000000000"));
            Rational tol(1, 1000000);
            ACC(iv.lo <= root + tol);
            ACC(iv.hi >= root - tol);
        });
}

static void criterion_ultrametric() {
    run(10, "ultrametric on 1000 triples; 200 nested ball chains",
        [](bool& ok, std::string& detail) {
            std::mt19937 rng(110);
            for (int i = 0; i < 1000 && ok; ++i) {
                GeneralizedSeries x = gen::series(rng, SeriesMode::Laurent);
                GeneralizedSeries y = gen::series(rng, SeriesMode::Laurent);
                GeneralizedSeries z = gen::series(rng, SeriesMode::Laurent);
                ValuationValue dxz = metric_distance(x, z).level;
                ValuationValue dxy = metric_distance(x, y).level;
                ValuationValue dyz = metric_distance(y, z).level;
                ACC(dxz >= ValuationValue::min(dxy, dyz));
            }
            std::uniform_int_distribution<long> step(1, 3), coeff(-5, 5);
            for (int rep = 0; rep < 200 && ok; ++rep) {
                std::vector<ClosedBall> chain;
                GeneralizedSeries center =
                    gen::series(rng, SeriesMode::Laurent, 2, -2, 2);
                long level = 2;
                for (int i = 0; i < 6; ++i) {
                    chain.push_back({center, Exponent::integer(level)});
                    long c = coeff(rng);
                    if (c != 0)
                        center = center + GeneralizedSeries::monomial(
                                              Rational(c),
                                              Exponent::integer(level +
                                                                step(rng) - 1),
                                              SeriesMode::Laurent);
                    level += step(rng);
                }
                GeneralizedSeries pt = nested_ball_point(chain);
                for (const auto& b : chain) ACC(ball_contains(b, pt));
            }
        });
}

static void criterion_open_fip() {
    run(11, "open families with slack rho on 200 instances",
        [](bool& ok, std::string& detail) {
            std::mt19937 rng(111);
            for (int rep = 0; rep < 200 && ok; ++rep) {
                Rational core_lo = gen::rational(rng);
                Rational rho(1, 1 + static_cast<long>(rng() % 9));
                Rational core_hi = core_lo + rho;
                std::vector<OpenInterval<Rational>> family;
                int n = 1 + static_cast<int>(rng() % 5);
                for (int i = 0; i < n; ++i)
                    family.push_back({core_lo - gen::rational(rng).abs(),
                                      core_hi + gen::rational(rng).abs()});
                family.push_back({core_lo, core_hi});
                Rational zeta = open_fip_point(family, rho);
                for (const auto& iv : family) {
                    ACC(iv.lo + rho * Rational(1, 2) <= zeta);
                    ACC(zeta <= iv.hi - rho * Rational(1, 2));
                    ACC(iv.lo < zeta && zeta < iv.hi);
                }
                // invalid slack is always rejected
                Rational too_big = (family.back().hi - family.back().lo) +
                                   Rational(1);
                bool rejected = false;
                try {
                    open_fip_point(family, too_big);
                } catch (const DomainError&) {
                    rejected = true;
                }
                ACC(rejected);
                rejected = false;
                try {
                    open_fip_point(family, Rational(0));
                } catch (const DomainError&) {
                    rejected = true;
                }
                ACC(rejected);
            }
        });
}

static void criterion_shadows() {
    run(12, "non-archimedean shadows: 2^-p vs t, bounded naturals, staircase",
        [](bool& ok, std::string& detail) {
            GeneralizedSeries t = GeneralizedSeries::monomial(
                Rational(1), Exponent::integer(1), SeriesMode::Laurent);
            for (long p = 1; p <= 64; ++p) {
                Rational half_p(mpz_class(1), mpz_class(1) << p);
                ACC(GeneralizedSeries::sign_cmp(
                        q_embed(half_p, SeriesMode::Laurent), t) ==
                    Ordering::Greater);
            }
            GeneralizedSeries ti = t.inverse();
            for (long n = 1; n <= 1000; ++n)
                ACC(GeneralizedSeries::sign_cmp(
                        q_embed(Rational(n), SeriesMode::Laurent), ti) ==
                    Ordering::Less);
            std::vector<GeneralizedSeries> seq =
                gen_unbounded_increasing(64, SeriesMode::Laurent);
            ACC(seq.size() == 64);
            Rational million(1000000);
            for (std::size_t i = 0; i < seq.size(); ++i) {
                if (i + 1 < seq.size())
                    ACC(GeneralizedSeries::sign_cmp(seq[i], seq[i + 1]) ==
                        Ordering::Less);
                ACC(GeneralizedSeries::sign_cmp(
                        seq[i], q_embed(million, SeriesMode::Laurent)) ==
                    Ordering::Greater);
            }
        });
}

static void criterion_cli_golden() {
    run(13, "CLI golden outputs byte-match in text and json",
        [](bool& ok, std::string& detail) {
            struct Case {
                std::string stem;
                std::vector<std::string> args;
            };
            // mirrors the frozen list in the unit tests
            const std::vector<Case> cases{
                {"eval-geometric", {"eval", "t/(1-t)"}},
                {"eval-laurent-inverse", {"eval", "1/(t - t^2)"}},
                {"eval-neg-pow", {"eval", "--field", "q", "--", "-2^2"}},
                {"sqrt-binomial", {"sqrt", "1+t"}},
                {"eval-lc-half", {"eval", "--field", "lc", "t^(1/2)*t^(1/2)"}},
                {"classify-infinite", {"classify", "t^-1"}},
                {"classify-ratfunc",
                 {"classify", "--field", "ratfunc-inf", "(3*t^2+1)/(t^2+1)"}},
                {"compare-huge", {"compare", "t^-1", "1000000"}},
                {"compare-ratfunc",
                 {"compare", "--field", "ratfunc-inf", "x^2", "x"}},
                {"val-series", {"val", "t^2*(1+t)"}},
                {"val-ratfunc-zero",
                 {"val", "--field", "ratfunc-zero", "(t^2+t^3)/(1+t)"}},
                {"dist-level", {"dist", "t", "t+t^4"}},
                {"probe-cantor",
                 {"probe", "cantor", "0-t", "t", "0-t^2", "t^2", "0-t^5",
                  "t^5"}},
                {"probe-open-fip",
                 {"probe", "open-fip", "--rho", "t^2", "0", "1", "0", "t", "0",
                  "t^2"}},
                {"probe-cauchy-geometric",
                 {"probe", "cauchy", "t", "t+t^2", "t+t^2+t^3",
                  "t+t^2+t^3+t^4", "t+t^2+t^3+t^4+t^5",
                  "t+t^2+t^3+t^4+t^5+t^6", "--eps", "t^3"}},
                {"probe-cauchy-open",
                 {"probe", "cauchy", "1/2", "1/4", "1/8", "1/16", "--eps",
                  "t"}},
                {"probe-archimedean-ratfunc",
                 {"probe", "archimedean", "--field", "ratfunc-zero",
                  "(3-t)/(1+t)"}},
                {"probe-archimedean-huge", {"probe", "archimedean", "t^-1"}},
                {"probe-dyadic-sup",
                 {"probe", "dyadic-sup", "--square", "2", "-P", "6"}},
                {"probe-sqrt-iter", {"probe", "sqrt-iter", "2", "--tol",
                                     "1/100"}},
                {"probe-ivt",
                 {"probe", "ivt", "x^3-2*x-5", "2", "3", "--iters", "20"}},
                {"probe-bw",
                 {"probe", "bw", "-a", "-1", "-b", "1", "-K", "5", "--", "-1",
                  "1", "-1", "1", "-1", "1", "-1", "1", "-1", "1"}},
                {"probe-naturals-laurent", {"probe", "naturals-bounded", "5"}},
                {"probe-naturals-q",
                 {"probe", "naturals-bounded", "--field", "q", "5"}},
                {"probe-unbounded", {"probe", "unbounded-seq", "4"}},
            };
            ACC(cases.size() >= 20);
            for (const auto& c : cases) {
                for (const std::string fmt : {"text", "json"}) {
                    std::vector<std::string> args = c.args;
                    auto it = std::find(args.begin(), args.end(), "--");
                    args.insert(it, {"--format", fmt});
                    CommandResult res = run_command(args);
                    if (res.exit_code != 0) {
                        ok = false;
                        detail = c.stem + " exited " +
                                 std::to_string(res.exit_code);
                        return;
                    }
                    std::string path = std::string(ORDFIELD_GOLDEN_DIR) + "/" +
                                       c.stem + "." + fmt + ".txt";
                    std::FILE* fp = std::fopen(path.c_str(), "rb");
                    if (!fp) {
                        ok = false;
                        detail = "missing golden " + path;
                        return;
                    }
                    std::string stored;
                    char buf[4096];
                    std::size_t got;
                    while ((got = std::fread(buf, 1, sizeof buf, fp)) > 0)
                        stored.append(buf, got);
                    std::fclose(fp);
                    if (stored != res.out) {
                        ok = false;
                        detail = c.stem + "." + fmt + " differs";
                        return;
                    }
                }
            }
        });
}

int main() {
    suite_start = Clock::now();
    criterion_field_axioms();
    criterion_valuation_axioms();
    criterion_classification();
    criterion_landmarks();
    criterion_decompose();
    criterion_sigma();
    criterion_dyadic_sup();
    criterion_sqrt_iterate();
    criterion_bisect();
    criterion_ultrametric();
    criterion_open_fip();
    criterion_shadows();
    criterion_cli_golden();
    long total = ms_since(suite_start);
    bool in_budget = total < 60000;
    std::printf("total: %ld ms (budget 60000 ms) %s\n", total,
                in_budget ? "ok" : "OVER");
    if (!in_budget) ++failures;
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria pass\n");
    return 0;
}
