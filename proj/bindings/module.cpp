// Python bindings for the core types and probes. Big integers cross the
// boundary as decimal strings so arbitrary precision survives the trip.

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordfield/archimedean.hpp"
#include "ordfield/cli.hpp"
#include "ordfield/completeness.hpp"
#include "ordfield/eval.hpp"
#include "ordfield/metric.hpp"

namespace py = pybind11;
using namespace ordfield;

namespace {

mpz_class to_mpz(const py::int_& i) {
    return mpz_class(py::str(i).cast<std::string>(), 10);
}

py::int_ to_pyint(const mpz_class& z) {
    PyObject* v = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
    if (!v) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(v);
}

template <typename T>
std::vector<ClosedInterval<T>> closed_family(
    const std::vector<std::pair<T, T>>& pairs) {
    std::vector<ClosedInterval<T>> fam;
    fam.reserve(pairs.size());
    for (const auto& [lo, hi] : pairs) fam.push_back({lo, hi});
    return fam;
}

template <typename T>
std::vector<OpenInterval<T>> open_family(
    const std::vector<std::pair<T, T>>& pairs) {
    std::vector<OpenInterval<T>> fam;
    fam.reserve(pairs.size());
    for (const auto& [lo, hi] : pairs) fam.push_back({lo, hi});
    return fam;
}

// one set of probe defs per field type, same python names
template <typename T>
void def_probes(py::module_& m) {
    m.def("fip_check", [](const std::vector<std::pair<T, T>>& f) {
        return fip_check(closed_family(f));
    });
    m.def("cantor_point", [](const std::vector<std::pair<T, T>>& f) {
        return cantor_point_finite(closed_family(f));
    });
    m.def("open_fip_point",
          [](const std::vector<std::pair<T, T>>& f, const T& rho) {
              return open_fip_point(open_family(f), rho);
          });
    m.def("cauchy_probe",
          [](const std::vector<T>& prefix, const std::vector<T>& thresholds) {
              return cauchy_probe(prefix, thresholds);
          });
    m.def(
        "archimedean_probe",
        [](const T& x, long scan_bound) {
            return archimedean_probe(x, scan_bound);
        },
        py::arg("x"), py::arg("scan_bound") = 1000000);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic in totally ordered non-Archimedean fields";

    // exception hierarchy; later registrations are matched first, so the
    // most derived types go last
    static auto exc_error =
        py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    static auto exc_domain =
        py::register_exception<DomainError>(m, "DomainError", exc_error.ptr());
    static auto exc_mode =
        py::register_exception<ModeError>(m, "ModeError", exc_domain.ptr());
    static auto exc_trunc = py::register_exception<TruncationError>(
        m, "TruncationError", exc_domain.ptr());
    static py::exception<ParseError> exc_parse(m, "ParseError",
                                               exc_error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            std::string msg = "parse error at byte " +
                              std::to_string(e.offset) + ": " + e.what();
            py::set_error(exc_parse, msg.c_str());
        }
    });

    py::enum_<Ordering>(m, "Ordering")
        .value("Less", Ordering::Less)
        .value("Equal", Ordering::Equal)
        .value("Greater", Ordering::Greater);

    py::enum_<SeriesMode>(m, "SeriesMode")
        .value("Laurent", SeriesMode::Laurent)
        .value("LeviCivita", SeriesMode::LeviCivita);

    py::enum_<RfOrdering>(m, "RfOrdering")
        .value("AtInfinity", RfOrdering::AtInfinity)
        .value("AtZero", RfOrdering::AtZero);

    py::enum_<Verdict>(m, "Verdict")
        .value("Witness", Verdict::Witness)
        .value("CounterexampleShown", Verdict::CounterexampleShown)
        .value("Inconclusive", Verdict::Inconclusive);

    py::enum_<FieldTag>(m, "FieldTag")
        .value("Q", FieldTag::Q)
        .value("Laurent", FieldTag::Laurent)
        .value("LeviCivita", FieldTag::LeviCivita)
        .value("RatfuncInf", FieldTag::RatfuncInf)
        .value("RatfuncZero", FieldTag::RatfuncZero);

    py::enum_<OutputFormat>(m, "OutputFormat")
        .value("Text", OutputFormat::Text)
        .value("Json", OutputFormat::Json);

    py::class_<Rational>(m, "Rational")
        .def(py::init<>())
        .def(py::init([](const py::int_& n) { return Rational(to_mpz(n)); }))
        .def(py::init([](const py::int_& n, const py::int_& d) {
            return Rational(to_mpz(n), to_mpz(d));
        }))
        .def_static("parse",
                    [](const std::string& s) { return Rational::parse(s); })
        .def_property_readonly(
            "num", [](const Rational& r) { return to_pyint(r.num()); })
        .def_property_readonly(
            "den", [](const Rational& r) { return to_pyint(r.den()); })
        .def("is_zero", &Rational::is_zero)
        .def("is_integer", &Rational::is_integer)
        .def("sign", &Rational::sign)
        .def("abs", &Rational::abs)
        .def("inverse", &Rational::inverse)
        .def("pow", &Rational::pow)
        .def("floor", [](const Rational& r) { return to_pyint(r.floor()); })
        .def("ceil", [](const Rational& r) { return to_pyint(r.ceil()); })
        .def("sqrt_exact", &Rational::sqrt_exact)
        .def("root_exact", &Rational::root_exact)
        .def("to_double", &Rational::to_double)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__float__", &Rational::to_double)
        .def("__str__", &Rational::to_string)
        .def("__repr__", [](const Rational& r) {
            return "Rational(" + r.to_string() + ")";
        });

    auto exp_cls =
        py::class_<Exponent>(m, "Exponent")
            .def_static("integer",
                        py::overload_cast<long>(&Exponent::integer))
            .def_static("integer_of",
                        py::overload_cast<const Rational&>(&Exponent::integer))
            .def_static("ratio", &Exponent::ratio)
            .def_property_readonly("kind", &Exponent::kind)
            .def_property_readonly("value", &Exponent::value)
            .def("halved", &Exponent::halved)
            .def(py::self + py::self)
            .def(py::self - py::self)
            .def(-py::self)
            .def(py::self == py::self)
            .def(py::self != py::self)
            .def(py::self < py::self)
            .def(py::self <= py::self)
            .def(py::self > py::self)
            .def(py::self >= py::self)
            .def("__str__", &Exponent::to_string)
            .def("__repr__", [](const Exponent& e) {
                return "Exponent(" + e.to_string() + ")";
            });
    py::enum_<Exponent::Kind>(exp_cls, "Kind")
        .value("Integer", Exponent::Kind::Integer)
        .value("Ratio", Exponent::Kind::Ratio);

    py::class_<ValuationValue>(m, "ValuationValue")
        .def(py::init<Exponent>())
        .def_static("infinite", &ValuationValue::infinite)
        .def_static("min", &ValuationValue::min)
        .def("is_infinite", &ValuationValue::is_infinite)
        .def_property_readonly("exponent",
                               [](const ValuationValue& v)
                                   -> std::optional<Exponent> {
                                   if (v.is_infinite()) return std::nullopt;
                                   return v.exponent();
                               })
        .def(py::self + py::self)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def(py::self >= py::self)
        .def("__str__", &ValuationValue::to_string)
        .def("__repr__", [](const ValuationValue& v) {
            return "ValuationValue(" + v.to_string() + ")";
        });

    py::class_<Classification>(m, "Classification")
        .def_readonly("is_zero", &Classification::is_zero)
        .def_readonly("infinitesimal", &Classification::infinitesimal)
        .def_readonly("finite", &Classification::finite)
        .def_readonly("infinite", &Classification::infinite)
        .def("__repr__", [](const Classification& c) {
            auto b = [](bool v) { return v ? "True" : "False"; };
            return std::string("Classification(is_zero=") + b(c.is_zero) +
                   ", infinitesimal=" + b(c.infinitesimal) +
                   ", finite=" + b(c.finite) + ", infinite=" + b(c.infinite) +
                   ")";
        });

    py::class_<GeneralizedSeries>(m, "GeneralizedSeries")
        .def_static("zero", &GeneralizedSeries::zero)
        .def_static("constant", &GeneralizedSeries::constant)
        .def_static("monomial", &GeneralizedSeries::monomial)
        .def_static("from_terms", &GeneralizedSeries::from_terms,
                    py::arg("terms"), py::arg("mode"),
                    py::arg("known_order") = std::nullopt)
        .def_property_readonly("mode", &GeneralizedSeries::mode)
        .def_property_readonly("terms", &GeneralizedSeries::terms)
        .def_property_readonly("known_order", &GeneralizedSeries::known_order)
        .def("is_exact", &GeneralizedSeries::is_exact)
        .def("has_support", &GeneralizedSeries::has_support)
        .def("valuation", &GeneralizedSeries::valuation)
        .def("coeff_at", &GeneralizedSeries::coeff_at)
        .def("inverse", &GeneralizedSeries::inverse, py::arg("depth") = 16)
        .def("sqrt", &GeneralizedSeries::sqrt, py::arg("depth") = 16)
        .def("pow", &GeneralizedSeries::pow, py::arg("e"),
             py::arg("depth") = 16)
        .def("truncate", &GeneralizedSeries::truncate)
        .def("abs", &GeneralizedSeries::abs)
        .def("classify", &GeneralizedSeries::classify)
        .def("decompose", &GeneralizedSeries::decompose)
        .def_static("sign_cmp", &GeneralizedSeries::sign_cmp)
        .def("compare", &GeneralizedSeries::compare)
        .def("sign", &GeneralizedSeries::sign)
        .def("same_data", &GeneralizedSeries::same_data)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def("__str__", &GeneralizedSeries::to_string)
        .def("__repr__", [](const GeneralizedSeries& s) {
            return "GeneralizedSeries(" + s.to_string() + ")";
        });
    m.def("q_embed",
          py::overload_cast<const Rational&, SeriesMode>(&q_embed));

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init<>())
        .def(py::init<std::vector<Rational>>())
        .def_static("constant", &Polynomial::constant)
        .def_static("x", &Polynomial::x)
        .def_static("monomial", &Polynomial::monomial)
        .def("is_zero", &Polynomial::is_zero)
        .def_property_readonly("degree", &Polynomial::degree)
        .def_property_readonly("coeffs", &Polynomial::coeffs)
        .def("coeff", &Polynomial::coeff)
        .def("lead", &Polynomial::lead)
        .def("ord0", &Polynomial::ord0)
        .def("divmod", &Polynomial::divmod)
        .def_static("gcd", &Polynomial::gcd)
        .def("monic", &Polynomial::monic)
        .def("eval", &Polynomial::eval)
        .def("substitute_square", &Polynomial::substitute_square)
        .def("reversed", &Polynomial::reversed)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self * Rational())
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &Polynomial::to_string)
        .def("__repr__", [](const Polynomial& p) {
            return "Polynomial(" + p.to_string() + ")";
        });

    py::class_<RationalFunction>(m, "RationalFunction")
        .def(py::init<Polynomial, Polynomial, RfOrdering>())
        .def_static("constant", &RationalFunction::constant)
        .def_static("x", &RationalFunction::x)
        .def_property_readonly("num", &RationalFunction::num)
        .def_property_readonly("den", &RationalFunction::den)
        .def_property_readonly("ordering", &RationalFunction::ordering)
        .def("is_zero", &RationalFunction::is_zero)
        .def("inverse", &RationalFunction::inverse)
        .def("pow", &RationalFunction::pow)
        .def("sign", &RationalFunction::sign)
        .def_static("sign_cmp", &RationalFunction::sign_cmp)
        .def("compare", &RationalFunction::compare)
        .def("abs", &RationalFunction::abs)
        .def("classify", &RationalFunction::classify)
        .def("standard_part", &RationalFunction::standard_part)
        .def("order_valuation", &RationalFunction::order_valuation)
        .def("laurent_at_zero", &RationalFunction::laurent_at_zero,
             py::arg("depth") = 16)
        .def("sigma_square", &RationalFunction::sigma_square)
        .def("reciprocal_argument", &RationalFunction::reciprocal_argument)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &RationalFunction::to_string)
        .def("__repr__", [](const RationalFunction& f) {
            return "RationalFunction(" + f.to_string() + ")";
        });
    m.def("q_embed",
          py::overload_cast<const Rational&, RfOrdering>(&q_embed));

    py::class_<MetricDistance>(m, "MetricDistance")
        .def_readonly("level", &MetricDistance::level)
        .def_readonly("display", &MetricDistance::display)
        .def("__repr__", [](const MetricDistance& d) {
            return "MetricDistance(level=" + d.level.to_string() + ")";
        });
    m.def("metric_distance", &metric_distance);

    py::class_<ClosedBall>(m, "ClosedBall")
        .def(py::init([](GeneralizedSeries center, Exponent level) {
            return ClosedBall{std::move(center), std::move(level)};
        }))
        .def_readonly("center", &ClosedBall::center)
        .def_readonly("level", &ClosedBall::level);
    m.def("ball_contains", &ball_contains);
    m.def("nested_ball_point", &nested_ball_point);

    py::class_<ProbeReport>(m, "ProbeReport")
        .def_readonly("name", &ProbeReport::name)
        .def_readonly("verdict", &ProbeReport::verdict)
        .def_readonly("witnesses", &ProbeReport::witnesses)
        .def_readonly("trace", &ProbeReport::trace)
        .def("to_text", &ProbeReport::to_text)
        .def("to_json", &ProbeReport::to_json)
        .def("__repr__", &ProbeReport::to_text);

    def_probes<Rational>(m);
    def_probes<GeneralizedSeries>(m);
    def_probes<RationalFunction>(m);
    m.def("gen_unbounded_increasing", &gen_unbounded_increasing);
    m.def("bounded_naturals_probe", &bounded_naturals_probe);
    m.def("bounded_naturals_probe_rational", &bounded_naturals_probe_rational);

    py::class_<SqrtStep>(m, "SqrtStep")
        .def_readonly("iteration", &SqrtStep::iteration)
        .def_readonly("s", &SqrtStep::s)
        .def_readonly("h", &SqrtStep::h)
        .def_readonly("residual", &SqrtStep::residual)
        .def_readonly("ascending", &SqrtStep::ascending);

    py::class_<IterationTrace>(m, "IterationTrace")
        .def_readonly("a", &IterationTrace::a)
        .def_readonly("tol", &IterationTrace::tol)
        .def_readonly("result", &IterationTrace::result)
        .def_readonly("tolerance_met", &IterationTrace::tolerance_met)
        .def_readonly("steps", &IterationTrace::steps);
    m.def("sqrt_sup_iterate", &sqrt_sup_iterate);

    m.def("dyadic_sup", &dyadic_sup, py::arg("is_upper_bound"), py::arg("m"),
          py::arg("M"), py::arg("P"));

    py::class_<RationalInterval>(m, "RationalInterval")
        .def(py::init([](Rational lo, Rational hi) {
            return RationalInterval{std::move(lo), std::move(hi)};
        }))
        .def_readonly("lo", &RationalInterval::lo)
        .def_readonly("hi", &RationalInterval::hi)
        .def("__repr__", [](const RationalInterval& iv) {
            return "[" + iv.lo.to_string() + ", " + iv.hi.to_string() + "]";
        });
    m.def("bisect_ivt", &bisect_ivt);

    py::class_<BwSelection>(m, "BwSelection")
        .def_readonly("indices", &BwSelection::indices)
        .def_readonly("intervals", &BwSelection::intervals)
        .def_readonly("exhausted", &BwSelection::exhausted)
        .def_readonly("reason", &BwSelection::reason);
    m.def("bw_select", &bw_select);

    py::class_<SessionConfig>(m, "SessionConfig")
        .def(py::init([](FieldTag field, long trunc, OutputFormat format,
                         long scan_bound) {
                 SessionConfig cfg;
                 cfg.field = field;
                 cfg.trunc = trunc;
                 cfg.format = format;
                 cfg.scan_bound = scan_bound;
                 return cfg;
             }),
             py::arg("field") = FieldTag::Laurent, py::arg("trunc") = 16,
             py::arg("format") = OutputFormat::Text,
             py::arg("scan_bound") = 1000000)
        .def_readwrite("field", &SessionConfig::field)
        .def_readwrite("trunc", &SessionConfig::trunc)
        .def_readwrite("format", &SessionConfig::format)
        .def_readwrite("scan_bound", &SessionConfig::scan_bound);
    m.def("parse_field_tag", &parse_field_tag);
    m.def("evaluate_text", &evaluate_text);
    m.def("value_to_string", &value_to_string);

    py::class_<CommandResult>(m, "CommandResult")
        .def_readonly("exit_code", &CommandResult::exit_code)
        .def_readonly("out", &CommandResult::out)
        .def_readonly("err", &CommandResult::err);
    m.def("run_command", &run_command);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
