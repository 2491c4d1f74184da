#include "ordfield/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <type_traits>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordfield/archimedean.hpp"
#include "ordfield/completeness.hpp"
#include "ordfield/eval.hpp"
#include "ordfield/metric.hpp"

namespace ordfield {

namespace {

using nlohmann::ordered_json;

std::string five_digits(double d) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.5g", d);
    return buf;
}

FieldTag field_of(const std::string& s) { return parse_field_tag(s); }

OutputFormat format_of(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    throw ParseError("unknown format '" + s + "' (expected text or json)", 0);
}

struct SessionOpts {
    std::string field = "laurent";
    std::string format = "text";
    long trunc = 16;
    long scan_bound = 1000000;

    void attach(CLI::App* cmd) {
        cmd->add_option("--field", field,
                        "field: q, laurent, lc, ratfunc-inf, ratfunc-zero")
            ->capture_default_str();
        cmd->add_option("--trunc", trunc, "expansion depth for inverse/sqrt")
            ->capture_default_str();
        cmd->add_option("--format", format, "output format: text or json")
            ->capture_default_str();
        cmd->add_option("--scan-bound", scan_bound, "cap for scan-based checks")
            ->capture_default_str();
    }

    SessionConfig config() const {
        SessionConfig cfg;
        cfg.field = field_of(field);
        cfg.format = format_of(format);
        cfg.trunc = trunc;
        cfg.scan_bound = scan_bound;
        return cfg;
    }
};

SeriesMode series_mode_of(const SessionConfig& cfg) {
    if (cfg.field == FieldTag::Laurent) return SeriesMode::Laurent;
    if (cfg.field == FieldTag::LeviCivita) return SeriesMode::LeviCivita;
    throw DomainError("this command requires a series field (laurent or lc)");
}

// Run fn with a value of the concrete element type of the session's field.
template <typename Fn>
std::string with_field_type(const SessionConfig& cfg, Fn&& fn) {
    switch (cfg.field) {
        case FieldTag::Q: return fn(std::type_identity<Rational>{});
        case FieldTag::Laurent:
        case FieldTag::LeviCivita:
            return fn(std::type_identity<GeneralizedSeries>{});
        case FieldTag::RatfuncInf:
        case FieldTag::RatfuncZero:
            return fn(std::type_identity<RationalFunction>{});
    }
    throw Error("unhandled field tag");
}

template <typename T>
T eval_as(const std::string& text, const SessionConfig& cfg) {
    return std::get<T>(evaluate_text(text, cfg));
}

std::string render(const ProbeReport& rep, const SessionConfig& cfg) {
    return cfg.format == OutputFormat::Json ? rep.to_json() : rep.to_text();
}

std::string cmd_eval(const SessionConfig& cfg, const std::string& expr,
                     bool take_sqrt) {
    ExprPtr ast =
        parse_expression(expr, cfg.field == FieldTag::LeviCivita);
    if (take_sqrt) {
        auto wrapped = std::make_shared<Expr>();
        wrapped->op = Expr::Op::Sqrt;
        wrapped->lhs = ast;
        ast = wrapped;
    }
    std::string value = value_to_string(evaluate(ast, cfg));
    if (cfg.format == OutputFormat::Text) return value + "\n";
    ordered_json j;
    j["command"] = take_sqrt ? "sqrt" : "eval";
    j["field"] = to_string(cfg.field);
    j["input"] = expr;
    j["value"] = value;
    return j.dump(2) + "\n";
}

std::string cmd_classify(const SessionConfig& cfg, const std::string& expr) {
    return with_field_type(cfg, [&](auto tag) {
        using T = typename decltype(tag)::type;
        T v = eval_as<T>(expr, cfg);
        Classification c = field_classify(v);
        std::string value = field_str(v);
        std::string std_part;
        if (c.finite) std_part = field_standard(v).to_string();
        if (cfg.format == OutputFormat::Text) {
            auto b = [](bool x) { return x ? "true" : "false"; };
            std::string s = "value: " + value + "\n";
            s += std::string("is_zero: ") + b(c.is_zero) +
                 ", infinitesimal: " + b(c.infinitesimal) +
                 ", finite: " + b(c.finite) + ", infinite: " + b(c.infinite) +
                 "\n";
            if (c.finite) s += "standard part: " + std_part + "\n";
            return s;
        }
        ordered_json j;
        j["command"] = "classify";
        j["field"] = to_string(cfg.field);
        j["input"] = expr;
        j["value"] = value;
        j["classification"] = {{"is_zero", c.is_zero},
                               {"infinitesimal", c.infinitesimal},
                               {"finite", c.finite},
                               {"infinite", c.infinite}};
        if (c.finite) j["standard_part"] = std_part;
        return j.dump(2) + "\n";
    });
}

std::string cmd_compare(const SessionConfig& cfg, const std::string& lhs,
                        const std::string& rhs) {
    return with_field_type(cfg, [&](auto tag) {
        using T = typename decltype(tag)::type;
        Ordering o = field_cmp(eval_as<T>(lhs, cfg), eval_as<T>(rhs, cfg));
        if (cfg.format == OutputFormat::Text) return to_string(o) + "\n";
        ordered_json j;
        j["command"] = "compare";
        j["field"] = to_string(cfg.field);
        j["lhs"] = lhs;
        j["rhs"] = rhs;
        j["result"] = to_string(o);
        return j.dump(2) + "\n";
    });
}

std::string cmd_val(const SessionConfig& cfg, const std::string& expr) {
    std::string v;
    switch (cfg.field) {
        case FieldTag::Q:
            throw DomainError("val is not available in field q");
        case FieldTag::Laurent:
        case FieldTag::LeviCivita:
            v = eval_as<GeneralizedSeries>(expr, cfg).valuation().to_string();
            break;
        default: {
            RationalFunction f = eval_as<RationalFunction>(expr, cfg);
            v = f.is_zero() ? "inf" : f.order_valuation().to_string();
        }
    }
    if (cfg.format == OutputFormat::Text) return v + "\n";
    ordered_json j;
    j["command"] = "val";
    j["field"] = to_string(cfg.field);
    j["input"] = expr;
    j["valuation"] = v;
    return j.dump(2) + "\n";
}

std::string cmd_dist(const SessionConfig& cfg, const std::string& lhs,
                     const std::string& rhs) {
    series_mode_of(cfg);
    MetricDistance d = metric_distance(eval_as<GeneralizedSeries>(lhs, cfg),
                                       eval_as<GeneralizedSeries>(rhs, cfg));
    std::string display = five_digits(d.display);
    if (cfg.format == OutputFormat::Text)
        return "level: " + d.level.to_string() + ", display: " + display + "\n";
    ordered_json j;
    j["command"] = "dist";
    j["field"] = to_string(cfg.field);
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["level"] = d.level.to_string();
    j["display"] = display;
    return j.dump(2) + "\n";
}

template <typename T>
std::vector<ClosedInterval<T>> closed_intervals(
    const std::vector<std::string>& endpoints, const SessionConfig& cfg) {
    std::vector<ClosedInterval<T>> family;
    for (std::size_t i = 0; i + 1 < endpoints.size(); i += 2)
        family.push_back(
            {eval_as<T>(endpoints[i], cfg), eval_as<T>(endpoints[i + 1], cfg)});
    return family;
}

std::string probe_cantor(const SessionConfig& cfg,
                         const std::vector<std::string>& endpoints) {
    if (endpoints.size() < 2 || endpoints.size() % 2 != 0)
        throw ParseError("cantor takes lo hi pairs (an even count >= 2)", 0);
    return with_field_type(cfg, [&](auto tag) {
        using T = typename decltype(tag)::type;
        auto family = closed_intervals<T>(endpoints, cfg);
        ProbeReport rep;
        rep.name = "cantor";
        std::size_t imax = 0, imin = 0;
        for (std::size_t i = 1; i < family.size(); ++i) {
            if (field_cmp(family[i].lo, family[imax].lo) == Ordering::Greater)
                imax = i;
            if (field_cmp(family[i].hi, family[imin].hi) == Ordering::Less)
                imin = i;
        }
        if (fip_check(family)) {
            T pt = cantor_point_finite(family);
            rep.verdict = Verdict::Witness;
            rep.witnesses.push_back(field_str(pt));
            rep.trace.push_back("greatest lower endpoint: " +
                                field_str(family[imax].lo) + " (interval " +
                                std::to_string(imax) + ")");
            rep.trace.push_back("least upper endpoint: " +
                                field_str(family[imin].hi) + " (interval " +
                                std::to_string(imin) + ")");
            rep.trace.push_back("membership re-checked in all " +
                                std::to_string(family.size()) + " intervals");
        } else {
            rep.verdict = Verdict::CounterexampleShown;
            rep.witnesses.push_back(field_str(family[imax].lo));
            rep.witnesses.push_back(field_str(family[imin].hi));
            rep.trace.push_back(
                "intervals " + std::to_string(imax) + " and " +
                std::to_string(imin) + " are disjoint: lo " +
                field_str(family[imax].lo) + " > hi " +
                field_str(family[imin].hi));
        }
        return render(rep, cfg);
    });
}

std::string probe_open_fip(const SessionConfig& cfg, const std::string& rho_s,
                           const std::vector<std::string>& endpoints) {
    if (endpoints.size() < 2 || endpoints.size() % 2 != 0)
        throw ParseError("open-fip takes lo hi pairs (an even count >= 2)", 0);
    return with_field_type(cfg, [&](auto tag) {
        using T = typename decltype(tag)::type;
        std::vector<OpenInterval<T>> family;
        for (std::size_t i = 0; i + 1 < endpoints.size(); i += 2)
            family.push_back({eval_as<T>(endpoints[i], cfg),
                              eval_as<T>(endpoints[i + 1], cfg)});
        T rho = eval_as<T>(rho_s, cfg);
        T zeta = open_fip_point(family, rho);
        ProbeReport rep;
        rep.name = "open-fip";
        rep.verdict = Verdict::Witness;
        rep.witnesses.push_back(field_str(zeta));
        rep.trace.push_back("rho = " + field_str(rho) +
                            " fits below every hi - lo gap across pairs");
        rep.trace.push_back("zeta = max(lo) + rho/2 lies strictly inside all " +
                            std::to_string(family.size()) + " intervals");
        return render(rep, cfg);
    });
}

std::string probe_cauchy(const SessionConfig& cfg,
                         const std::vector<std::string>& eps,
                         const std::vector<std::string>& terms) {
    return with_field_type(cfg, [&](auto tag) {
        using T = typename decltype(tag)::type;
        std::vector<T> prefix, thresholds;
        for (const auto& s : terms) prefix.push_back(eval_as<T>(s, cfg));
        for (const auto& s : eps) thresholds.push_back(eval_as<T>(s, cfg));
        return render(cauchy_probe(prefix, thresholds), cfg);
    });
}

std::string probe_archimedean(const SessionConfig& cfg,
                              const std::string& expr) {
    return with_field_type(cfg, [&](auto tag) {
        using T = typename decltype(tag)::type;
        return render(archimedean_probe(eval_as<T>(expr, cfg), cfg.scan_bound),
                      cfg);
    });
}

struct DyadicSupArgs {
    std::string square, cut;
    long levels = 20;
    long lower = 0, upper = 0;
    bool lower_set = false, upper_set = false;
};

std::string probe_dyadic_sup(const SessionConfig& cfg,
                             const DyadicSupArgs& args) {
    if (args.square.empty() == args.cut.empty())
        throw ParseError("dyadic-sup needs exactly one of --square or --cut", 0);
    std::function<bool(const Rational&)> is_ub;
    long m, M;
    std::string set_desc;
    if (!args.square.empty()) {
        Rational a = Rational::parse(args.square);
        if (a.sign() <= 0) throw DomainError("--square needs a positive rational");
        is_ub = [a](const Rational& x) {
            return x.sign() > 0 && x * x >= a;
        };
        m = 0;
        M = std::max<long>(1, static_cast<long>(a.ceil().get_si()));
        set_desc = "S = {q : q^2 < " + a.to_string() + "}";
    } else {
        Rational c = Rational::parse(args.cut);
        is_ub = [c](const Rational& x) { return x >= c; };
        m = static_cast<long>(c.floor().get_si()) - 1;
        M = static_cast<long>(c.ceil().get_si());
        set_desc = "S = {q : q < " + c.to_string() + "}";
    }
    if (args.lower_set) m = args.lower;
    if (args.upper_set) M = args.upper;
    std::vector<Rational> a_p = dyadic_sup(is_ub, m, M, args.levels);
    ProbeReport rep;
    rep.name = "dyadic-sup";
    rep.verdict = Verdict::Witness;
    rep.witnesses.push_back(a_p.back().to_string());
    rep.trace.push_back(set_desc + ", m = " + std::to_string(m) +
                        ", M = " + std::to_string(M));
    for (std::size_t p = 0; p < a_p.size(); ++p)
        rep.trace.push_back("a_" + std::to_string(p) + " = " +
                            a_p[p].to_string());
    rep.trace.push_back(
        "each a_p is an upper bound and a_p - 2^-p is not (checked in the run)");
    return render(rep, cfg);
}

std::string probe_sqrt_iter(const SessionConfig& cfg, const std::string& a_s,
                            const std::string& tol_s, long max_iter) {
    IterationTrace tr =
        sqrt_sup_iterate(Rational::parse(a_s), Rational::parse(tol_s), max_iter);
    ProbeReport rep;
    rep.name = "sqrt-iter";
    rep.verdict = tr.tolerance_met ? Verdict::Witness : Verdict::Inconclusive;
    rep.witnesses.push_back(tr.result.to_string());
    for (const auto& st : tr.steps)
        rep.trace.push_back(
            "step " + std::to_string(st.iteration) + " (" +
            (st.ascending ? "ascending" : "descending") + "): s = " +
            st.s.to_string() + ", h = " + st.h.to_string() +
            ", |s^2 - a| = " + st.residual.to_string());
    rep.trace.push_back(
        std::string("tolerance ") + (tr.tolerance_met ? "met" : "not met") +
        " after " + std::to_string(tr.steps.size()) + " steps (tol = " +
        tr.tol.to_string() + ")");
    return render(rep, cfg);
}

std::string probe_ivt(const SessionConfig& cfg, const std::string& poly_s,
                      const std::string& lo_s, const std::string& hi_s,
                      long iters) {
    SessionConfig pc = cfg;
    pc.field = FieldTag::RatfuncInf;
    RationalFunction f = eval_as<RationalFunction>(poly_s, pc);
    if (f.den().degree() != 0)
        throw DomainError("ivt needs a polynomial (denominator-free expression)");
    Polynomial p = f.num() * f.den().coeff(0).inverse();
    RationalInterval iv =
        bisect_ivt(p, Rational::parse(lo_s), Rational::parse(hi_s), iters);
    ProbeReport rep;
    rep.name = "ivt";
    rep.verdict = Verdict::Witness;
    rep.witnesses.push_back("[" + iv.lo.to_string() + ", " + iv.hi.to_string() +
                            "]");
    rep.trace.push_back("p = " + p.to_string());
    rep.trace.push_back("p(lo) = " + p.eval(iv.lo).to_string() +
                        ", p(hi) = " + p.eval(iv.hi).to_string());
    rep.trace.push_back("width = " + (iv.hi - iv.lo).to_string() + " after " +
                        std::to_string(iters) + " halvings");
    return render(rep, cfg);
}

std::string probe_bw(const SessionConfig& cfg, const std::string& a_s,
                     const std::string& b_s, long K,
                     const std::vector<std::string>& values) {
    std::vector<Rational> prefix;
    prefix.reserve(values.size());
    for (const auto& s : values) prefix.push_back(Rational::parse(s));
    BwSelection sel = bw_select(prefix, Rational::parse(a_s),
                                Rational::parse(b_s), K);
    ProbeReport rep;
    rep.name = "bw";
    rep.verdict = sel.exhausted ? Verdict::Inconclusive : Verdict::Witness;
    const RationalInterval& last = sel.intervals.back();
    rep.witnesses.push_back("[" + last.lo.to_string() + ", " +
                            last.hi.to_string() + "]");
    for (std::size_t k = 0; k < sel.indices.size(); ++k)
        rep.trace.push_back(
            "k = " + std::to_string(k + 1) + ": index " +
            std::to_string(sel.indices[k]) + ", value " +
            prefix[sel.indices[k]].to_string() + ", interval [" +
            sel.intervals[k].lo.to_string() + ", " +
            sel.intervals[k].hi.to_string() + "]");
    if (sel.exhausted) rep.trace.push_back(sel.reason);
    return render(rep, cfg);
}

std::string probe_naturals(const SessionConfig& cfg, long n_max) {
    ProbeReport rep;
    switch (cfg.field) {
        case FieldTag::Laurent:
            rep = bounded_naturals_probe(n_max, SeriesMode::Laurent);
            break;
        case FieldTag::LeviCivita:
            rep = bounded_naturals_probe(n_max, SeriesMode::LeviCivita);
            break;
        case FieldTag::Q:
            rep = bounded_naturals_probe_rational(n_max,
                                                  Rational(cfg.scan_bound));
            break;
        default:
            throw DomainError(
                "naturals-bounded runs over q or a series field");
    }
    return render(rep, cfg);
}

std::string probe_unbounded_seq(const SessionConfig& cfg, long n) {
    SeriesMode mode = series_mode_of(cfg);
    std::vector<GeneralizedSeries> seq = gen_unbounded_increasing(n, mode);
    Rational big(1000000);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i + 1 < seq.size() &&
            GeneralizedSeries::sign_cmp(seq[i], seq[i + 1]) != Ordering::Less)
            throw Error("sequence is not strictly increasing at index " +
                        std::to_string(i));
        if (GeneralizedSeries::sign_cmp(seq[i], q_embed(big, mode)) !=
            Ordering::Greater)
            throw Error("term " + std::to_string(i) + " does not exceed 10^6");
    }
    ProbeReport rep;
    rep.name = "unbounded-seq";
    rep.verdict = Verdict::Witness;
    rep.witnesses.push_back(seq.back().to_string());
    std::size_t shown = std::min<std::size_t>(seq.size(), 4);
    for (std::size_t i = 0; i < shown; ++i)
        rep.trace.push_back("x_" + std::to_string(i + 1) + " = " +
                            seq[i].to_string());
    if (seq.size() > shown)
        rep.trace.push_back("... up to x_" + std::to_string(seq.size()) + " = " +
                            seq.back().to_string());
    rep.trace.push_back("strictly increasing: verified");
    rep.trace.push_back("every term exceeds 10^6: verified");
    return render(rep, cfg);
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv) {
    CommandResult res;
    CLI::App app{"exact arithmetic and completeness probes for totally ordered "
                 "non-Archimedean fields"};
    app.name("ordfield");
    app.require_subcommand(1);

    std::string out;

    SessionOpts so_eval;
    std::string eval_expr;
    CLI::App* c_eval = app.add_subcommand("eval", "evaluate an expression");
    c_eval->add_option("expr", eval_expr, "expression")->required();
    so_eval.attach(c_eval);
    c_eval->callback(
        [&] { out = cmd_eval(so_eval.config(), eval_expr, false); });

    SessionOpts so_sqrt;
    std::string sqrt_expr;
    CLI::App* c_sqrt = app.add_subcommand("sqrt", "square root of an expression");
    c_sqrt->add_option("expr", sqrt_expr, "expression")->required();
    so_sqrt.attach(c_sqrt);
    c_sqrt->callback(
        [&] { out = cmd_eval(so_sqrt.config(), sqrt_expr, true); });

    SessionOpts so_classify;
    std::string classify_expr;
    CLI::App* c_classify = app.add_subcommand(
        "classify", "infinitesimal/finite/infinite classification");
    c_classify->add_option("expr", classify_expr, "expression")->required();
    so_classify.attach(c_classify);
    c_classify->callback(
        [&] { out = cmd_classify(so_classify.config(), classify_expr); });

    SessionOpts so_compare;
    std::vector<std::string> compare_args;
    CLI::App* c_compare = app.add_subcommand("compare", "order two expressions");
    c_compare->add_option("exprs", compare_args, "two expressions")
        ->expected(2)
        ->required();
    so_compare.attach(c_compare);
    c_compare->callback([&] {
        out = cmd_compare(so_compare.config(), compare_args[0], compare_args[1]);
    });

    SessionOpts so_val;
    std::string val_expr;
    CLI::App* c_val = app.add_subcommand("val", "canonical valuation");
    c_val->add_option("expr", val_expr, "expression")->required();
    so_val.attach(c_val);
    c_val->callback([&] { out = cmd_val(so_val.config(), val_expr); });

    SessionOpts so_dist;
    std::vector<std::string> dist_args;
    CLI::App* c_dist = app.add_subcommand("dist", "valuation-metric distance");
    c_dist->add_option("exprs", dist_args, "two expressions")
        ->expected(2)
        ->required();
    so_dist.attach(c_dist);
    c_dist->callback(
        [&] { out = cmd_dist(so_dist.config(), dist_args[0], dist_args[1]); });

    CLI::App* c_probe =
        app.add_subcommand("probe", "order and completeness probes");
    c_probe->require_subcommand(1);

    SessionOpts so_cantor;
    std::vector<std::string> cantor_eps;
    CLI::App* p_cantor = c_probe->add_subcommand(
        "cantor", "common point of closed intervals");
    p_cantor->add_option("endpoints", cantor_eps, "lo hi pairs")->required();
    so_cantor.attach(p_cantor);
    p_cantor->callback(
        [&] { out = probe_cantor(so_cantor.config(), cantor_eps); });

    SessionOpts so_ofip;
    std::string ofip_rho;
    std::vector<std::string> ofip_eps;
    CLI::App* p_ofip = c_probe->add_subcommand(
        "open-fip", "interior point of open intervals with slack rho");
    p_ofip->add_option("--rho", ofip_rho, "shared positive slack")->required();
    p_ofip->add_option("endpoints", ofip_eps, "lo hi pairs")->required();
    so_ofip.attach(p_ofip);
    p_ofip->callback(
        [&] { out = probe_open_fip(so_ofip.config(), ofip_rho, ofip_eps); });

    SessionOpts so_cauchy;
    std::vector<std::string> cauchy_eps, cauchy_terms;
    CLI::App* p_cauchy = c_probe->add_subcommand(
        "cauchy", "Cauchy indices of a sequence prefix");
    p_cauchy->add_option("--eps", cauchy_eps,
                         "threshold (repeatable; place after the terms)")
        ->required();
    p_cauchy->add_option("terms", cauchy_terms, "prefix terms")->required();
    so_cauchy.attach(p_cauchy);
    p_cauchy->callback([&] {
        out = probe_cauchy(so_cauchy.config(), cauchy_eps, cauchy_terms);
    });

    SessionOpts so_arch;
    std::string arch_expr;
    CLI::App* p_arch = c_probe->add_subcommand(
        "archimedean", "least natural above |x|, if any");
    p_arch->add_option("expr", arch_expr, "expression")->required();
    so_arch.attach(p_arch);
    p_arch->callback(
        [&] { out = probe_archimedean(so_arch.config(), arch_expr); });

    SessionOpts so_dsup;
    DyadicSupArgs dsup;
    CLI::App* p_dsup = c_probe->add_subcommand(
        "dyadic-sup", "dyadic staircase onto a supremum");
    p_dsup->add_option("--square", dsup.square,
                       "approximate sup{q : q^2 < A} for this A");
    p_dsup->add_option("--cut", dsup.cut, "approximate sup{q : q < C}");
    p_dsup->add_option("-P,--levels", dsup.levels, "number of dyadic levels")
        ->capture_default_str();
    auto* lo_opt = p_dsup->add_option("--lower", dsup.lower,
                                      "override m (not an upper bound)");
    auto* hi_opt =
        p_dsup->add_option("--upper", dsup.upper, "override M (an upper bound)");
    so_dsup.attach(p_dsup);
    p_dsup->callback([&, lo_opt, hi_opt] {
        dsup.lower_set = lo_opt->count() > 0;
        dsup.upper_set = hi_opt->count() > 0;
        out = probe_dyadic_sup(so_dsup.config(), dsup);
    });

    SessionOpts so_siter;
    std::string siter_a, siter_tol = "1/1000";
    long siter_max = 100;
    CLI::App* p_siter = c_probe->add_subcommand(
        "sqrt-iter", "monotone staircase toward sqrt(a)");
    p_siter->add_option("a", siter_a, "target (positive rational)")->required();
    p_siter->add_option("--tol", siter_tol, "residual tolerance")
        ->capture_default_str();
    p_siter->add_option("--max-iter", siter_max, "iteration cap")
        ->capture_default_str();
    so_siter.attach(p_siter);
    p_siter->callback([&] {
        out = probe_sqrt_iter(so_siter.config(), siter_a, siter_tol, siter_max);
    });

    SessionOpts so_ivt;
    std::string ivt_poly, ivt_lo, ivt_hi;
    long ivt_iters = 30;
    CLI::App* p_ivt = c_probe->add_subcommand(
        "ivt", "bisect a certified sign change of a polynomial");
    p_ivt->add_option("poly", ivt_poly, "polynomial in t or x")->required();
    p_ivt->add_option("lo", ivt_lo, "left endpoint")->required();
    p_ivt->add_option("hi", ivt_hi, "right endpoint")->required();
    p_ivt->add_option("--iters", ivt_iters, "halvings")->capture_default_str();
    so_ivt.attach(p_ivt);
    p_ivt->callback([&] {
        out = probe_ivt(so_ivt.config(), ivt_poly, ivt_lo, ivt_hi, ivt_iters);
    });

    SessionOpts so_bw;
    std::string bw_a, bw_b;
    long bw_k = 5;
    std::vector<std::string> bw_values;
    CLI::App* p_bw = c_probe->add_subcommand(
        "bw", "halving selection over a bounded prefix");
    p_bw->add_option("-a", bw_a, "interval left end")->required();
    p_bw->add_option("-b", bw_b, "interval right end")->required();
    p_bw->add_option("-K", bw_k, "selection rounds")->capture_default_str();
    p_bw->add_option("values", bw_values, "prefix values")->required();
    so_bw.attach(p_bw);
    p_bw->callback([&] {
        out = probe_bw(so_bw.config(), bw_a, bw_b, bw_k, bw_values);
    });

    SessionOpts so_nat;
    long nat_n = 1000;
    CLI::App* p_nat = c_probe->add_subcommand(
        "naturals-bounded", "are the naturals bounded above?");
    p_nat->add_option("n", nat_n, "how many naturals to scan")
        ->capture_default_str();
    so_nat.attach(p_nat);
    p_nat->callback([&] { out = probe_naturals(so_nat.config(), nat_n); });

    SessionOpts so_useq;
    long useq_n = 16;
    CLI::App* p_useq = c_probe->add_subcommand(
        "unbounded-seq", "strictly increasing sequence beyond every rational");
    p_useq->add_option("n", useq_n, "length")->capture_default_str();
    so_useq.attach(p_useq);
    p_useq->callback(
        [&] { out = probe_unbounded_seq(so_useq.config(), useq_n); });

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
        res.out = out;
        res.exit_code = 0;
    } catch (const CLI::CallForHelp& e) {
        CLI::App* sub = &app;
        while (!sub->get_subcommands().empty())
            sub = sub->get_subcommands().front();
        res.out = sub->help();
        res.exit_code = 0;
    } catch (const CLI::ParseError& e) {
        res.err = std::string(e.what()) + "\n" + app.help();
        res.exit_code = 2;
    } catch (const ParseError& e) {
        res.err = "parse error at byte " + std::to_string(e.offset) + ": " +
                  e.what() + "\n";
        res.exit_code = 2;
    } catch (const DomainError& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = 1;
    } catch (const Error& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = 1;
    } catch (const std::exception& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = 1;
    }
    return res;
}

}  // namespace ordfield
