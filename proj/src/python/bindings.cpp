#include "axtower/apf.hpp"
#include "axtower/ax.hpp"
#include "axtower/cli.hpp"
#include "axtower/cohomology.hpp"
#include "axtower/errors.hpp"
#include "axtower/io.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace axtower;
using i64 = std::int64_t;

namespace {

py::object fraction(const Rational& q) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(q.numerator(), q.denominator());
}

Rational to_rational(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Rational(h.cast<i64>());
    return Rational(h.attr("numerator").cast<i64>(), h.attr("denominator").cast<i64>());
}

py::list fractions(const std::vector<Rational>& qs) {
    py::list out;
    for (const auto& q : qs) out.append(fraction(q));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Kummer tower arithmetic, Galois oscillation and H^1 digit extraction";

    auto base = py::register_exception<Error>(m, "AxtowerError", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base);
    py::register_exception<DivisionByZero>(m, "DivisionByZero", base);
    py::register_exception<FieldMismatch>(m, "FieldMismatch", base);
    py::register_exception<ConfigMismatch>(m, "ConfigMismatch", base);
    py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted", base);
    py::register_exception<UnsupportedConfig>(m, "UnsupportedConfig", base);
    py::register_exception<WindowTooShort>(m, "WindowTooShort", base);
    py::register_exception<LeadingCoefficientZero>(m, "LeadingCoefficientZero", base);
    py::register_exception<NoDependenceFound>(m, "NoDependenceFound", base);
    py::register_exception<SupportViolation>(m, "SupportViolation", base);
    py::register_exception<DegenerateInput>(m, "DegenerateInput", base);
    py::register_exception<ParseError>(m, "ParseError", base);

    py::class_<ResidueField, std::shared_ptr<ResidueField>>(m, "ResidueField")
        .def_static("make", [](i64 p, std::vector<i64> mod) { return std::const_pointer_cast<ResidueField>(ResidueField::make(p, mod)); },
                    py::arg("p"), py::arg("modulus"))
        .def_static("prime", [](i64 p) { return std::const_pointer_cast<ResidueField>(ResidueField::prime(p)); })
        .def_property_readonly("p", &ResidueField::p)
        .def_property_readonly("degree", &ResidueField::degree)
        .def_property_readonly("order", &ResidueField::order)
        .def_property_readonly("modulus", &ResidueField::modulus);

    py::class_<ResidueElement>(m, "ResidueElement")
        .def(py::init([](std::shared_ptr<ResidueField> k, std::vector<i64> c) { return ResidueElement(k, c); }))
        .def_static("from_int", [](std::shared_ptr<ResidueField> k, i64 c) { return ResidueElement::from_int(k, c); })
        .def_property_readonly("coords", &ResidueElement::coords)
        .def("is_zero", &ResidueElement::is_zero)
        .def("inv", &ResidueElement::inv)
        .def("frobenius", [](const ResidueElement& a, std::uint64_t s) { return frobenius(a, s); }, py::arg("s") = 1)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__repr__", &ResidueElement::to_string);

    py::class_<Valuation>(m, "Valuation")
        .def_property_readonly("kind", [](const Valuation& v) {
            return v.is_exact() ? "exact" : v.is_at_least() ? "at_least" : "infinite";
        })
        .def_property_readonly("value", [](const Valuation& v) -> py::object {
            if (v.is_infinite()) return py::none();
            return fraction(v.bound());
        })
        .def("certainly_at_least", [](const Valuation& v, const py::object& q) { return v.certainly_at_least(to_rational(q)); })
        .def(py::self == py::self)
        .def("__str__", &Valuation::to_string)
        .def("__repr__", [](const Valuation& v) { return "Valuation(" + v.to_string() + ")"; });

    py::class_<TowerConfig, std::shared_ptr<TowerConfig>>(m, "TowerConfig")
        .def_static("unramified", [](std::shared_ptr<ResidueField> k, int P) {
            return std::const_pointer_cast<TowerConfig>(TowerConfig::unramified(k, P));
        }, py::arg("field"), py::arg("precision") = 0)
        .def_static("pure", [](std::shared_ptr<ResidueField> k, int e, int P) {
            return std::const_pointer_cast<TowerConfig>(TowerConfig::pure(k, e, P));
        }, py::arg("field"), py::arg("e"), py::arg("precision") = 0)
        .def_static("make", [](std::shared_ptr<ResidueField> k, int e, std::vector<WCoeffs> E, int P) {
            return std::const_pointer_cast<TowerConfig>(TowerConfig::make(k, e, E, P));
        }, py::arg("field"), py::arg("e"), py::arg("eisenstein"), py::arg("precision") = 0)
        .def_property_readonly("p", &TowerConfig::p)
        .def_property_readonly("e", &TowerConfig::e)
        .def_property_readonly("precision", &TowerConfig::precision)
        .def_property_readonly("field", [](const TowerConfig& c) { return std::const_pointer_cast<ResidueField>(c.field()); });

    py::class_<TowerElement>(m, "TowerElement")
        .def_static("zero", [](std::shared_ptr<TowerConfig> c, int n) { return TowerElement::zero(c, n); })
        .def_static("from_integer", [](std::shared_ptr<TowerConfig> c, int n, i64 v) { return TowerElement::from_integer(c, n, v); })
        .def_static("from_coeffs", [](std::shared_ptr<TowerConfig> c, int n, i64 shift, std::vector<WCoeffs> cs) {
            return TowerElement::from_coeffs(c, n, shift, cs);
        }, py::arg("config"), py::arg("level"), py::arg("shift"), py::arg("coeffs"))
        .def_static("teichmuller", [](std::shared_ptr<TowerConfig> c, int n, const ResidueElement& d, i64 idx) {
            return TowerElement::teichmuller(c, n, d, idx);
        }, py::arg("config"), py::arg("level"), py::arg("digit"), py::arg("index"))
        .def_static("uniformizer", [](std::shared_ptr<TowerConfig> c, int n) { return TowerElement::uniformizer(c, n); })
        .def_static("eta", [](std::shared_ptr<TowerConfig> c, int mm, int n) { return TowerElement::eta(c, mm, n); },
                    py::arg("config"), py::arg("m"), py::arg("level"))
        .def_static("from_json", [](const std::string& s) { return parse_element(s); })
        .def("to_json", [](const TowerElement& x) { return element_to_json(x); })
        .def_property_readonly("level", &TowerElement::level)
        .def_property_readonly("shift", &TowerElement::shift)
        .def_property_readonly("cutoff", [](const TowerElement& x) -> py::object {
            if (x.is_exact_zero()) return py::none();
            return py::int_(x.cutoff());
        })
        .def("valuation", &TowerElement::valuation)
        .def("embed", &TowerElement::embed)
        .def("mul_pi_power", &TowerElement::mul_pi_power)
        .def("__pow__", [](const TowerElement& x, unsigned k) { return x.pow(k); })
        .def("digits", [](const TowerElement& x, i64 lo, i64 hi) { return teichmuller_expand(x, lo, hi); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__repr__", &TowerElement::to_string);

    m.def("galois_oscillation", [](const TowerElement& x) { return galois_oscillation(x).oscillation; });
    m.def("best_approximant", &best_approximant);
    m.def("approximation_defect", &approximation_defect);
    m.def("oscillation_identity", [](const TowerElement& x) {
        auto r = oscillation_identity(x);
        return py::make_tuple(r.lhs, r.rhs);
    });
    m.def("approximation_equivalence", [](const TowerElement& x, const py::object& A) {
        auto r = approximation_equivalence(x, to_rational(A));
        return py::make_tuple(r.oscillation_side, r.approximation_side);
    });
    m.def("cyclotomic_oracle_oscillation", [](const TowerElement& x) { return cyclotomic_oracle_oscillation(x); });
    m.def("ax_constants", [](i64 p, int mm) {
        auto c = ax_constants(p, mm);
        return py::make_tuple(fraction(c.optimal), fraction(c.ax_original));
    });

    m.def("ramification_break", [](int n, i64 p, int e) { return fraction(ramification_break(n, p, e)); });
    m.def("ramification_breaks", [](int n, i64 p, int e) { return fractions(ramification_profile(n, p, e).breaks); });
    m.def("different_valuation", [](int n, i64 p, int e) {
        auto d = different_valuation(n, p, e);
        return py::make_tuple(fraction(d.derivative), fraction(d.closed_expression));
    });
    m.def("herbrand_integral", [](int n, i64 p, int e) { return fraction(herbrand_integral_check(n, p, e).integral); });

    py::class_<TwistRelation>(m, "TwistRelation")
        .def(py::init([](std::shared_ptr<ResidueField> k, std::vector<ResidueElement> d) { return TwistRelation(k, d); }))
        .def_property_readonly("coeffs", &TwistRelation::coeffs)
        .def_property_readonly("order", &TwistRelation::order)
        .def(py::self == py::self)
        .def("__repr__", &TwistRelation::to_string);
    m.def("check_relation", &check_relation);
    m.def("find_relation", [](std::shared_ptr<ResidueField> k, const TwistSequence& s, int r) { return find_relation(k, s, r); });
    m.def("extend_sequence", &extend_sequence, py::arg("relation"), py::arg("seed"), py::arg("count"));
    m.def("solution_count", &solution_count);

    py::class_<InvariantClass>(m, "InvariantClass")
        .def_readonly("rep", &InvariantClass::rep)
        .def_readonly("normalized", &InvariantClass::normalized)
        .def_readonly("oscillation", &InvariantClass::oscillation)
        .def_readonly("valuation", &InvariantClass::normalized_valuation)
        .def_readonly("validated", &InvariantClass::validated);
    m.def("validate_invariant", &validate_invariant);
    m.def("psi_digits", &psi_digits);
    m.def("torsion", [](const InvariantClass& c) {
        auto t = torsion_check(c);
        return py::make_tuple(t.n, t.bound);
    });
    m.def("xi_tower_sequence", &xi_tower_sequence);
    m.def("find_K_linear_dependence", &find_K_linear_dependence, py::arg("xis"), py::arg("r_max") = -1);
    m.def("newton_polygon", [](const std::map<i64, std::string>& vals) {
        std::map<i64, Valuation> v;
        for (const auto& [k, s] : vals) v.emplace(k, parse_valuation(s));
        py::list segs;
        for (const auto& s : newton_polygon(v).segments) segs.append(py::make_tuple(fraction(s.slope), s.length));
        return segs;
    });
    m.def("index_set", [](i64 p, int e, int r) {
        auto s = index_sets(p, e, r);
        return py::make_tuple(s.pairs_r, fraction(s.bound));
    });

    m.def("run_cli", [](std::vector<std::string> args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
