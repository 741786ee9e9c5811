#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arithdeg/degree.hpp"
#include "arithdeg/report_io.hpp"
#include "arithdeg/verify.hpp"

namespace py = pybind11;
using namespace arithdeg;

PYBIND11_MODULE(_arithdeg, m) {
    m.doc() = "Exact arithmetic degrees of special-endomorphism loci on quaternionic "
              "CM moduli: Hilbert symbols, quaternion invariants, Diff sets, ideal "
              "counts, orbital integrals, deformation lengths, degree formulas.";

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<bound_error>(m, "BoundError", PyExc_OverflowError);
    py::register_exception<consistency_error>(m, "ConsistencyError", PyExc_RuntimeError);

    py::class_<FactoredRational>(m, "FactoredRational")
        .def(py::init<>())
        .def_static("from_integer", &FactoredRational::from_integer)
        .def_static("prime_power", &FactoredRational::prime_power)
        .def_property_readonly("sign", &FactoredRational::sign)
        .def("ord", &FactoredRational::ord)
        .def("is_one", &FactoredRational::is_one)
        .def("is_positive", &FactoredRational::is_positive)
        .def("is_integer", &FactoredRational::is_integer)
        .def("support", &FactoredRational::support)
        .def("exponents", &FactoredRational::exponents)
        .def_property_readonly("numerator", &FactoredRational::numerator)
        .def_property_readonly("denominator", &FactoredRational::denominator)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(py::self == py::self)
        .def("inverse", &FactoredRational::inverse)
        .def("__repr__",
             [](const FactoredRational& f) { return "FactoredRational(" + f.str() + ")"; })
        .def("__str__", &FactoredRational::str);

    m.def("factorize", &factorize, py::arg("n"),
          "Trial-division factorization of a nonzero integer.");
    m.def("kronecker_symbol", &kronecker_symbol, py::arg("a"), py::arg("n"));
    m.def("is_prime", &is_prime, py::arg("n"));

    py::enum_<SplitKind>(m, "SplitKind")
        .value("split", SplitKind::split)
        .value("inert", SplitKind::inert)
        .value("ramified", SplitKind::ramified);

    py::class_<SplittingData>(m, "SplittingData")
        .def_readonly("prime", &SplittingData::prime)
        .def_readonly("kind", &SplittingData::kind)
        .def_readonly("e", &SplittingData::e)
        .def_readonly("f", &SplittingData::f)
        .def("__repr__", [](const SplittingData& s) {
            return "SplittingData(prime=" + std::to_string(s.prime) + ", kind=" +
                   to_string(s.kind) + ")";
        });

    py::class_<FieldData>(m, "FieldData")
        .def_readonly("disc", &FieldData::disc)
        .def_readonly("s", &FieldData::s)
        .def("__repr__", [](const FieldData& f) {
            return "FieldData(disc=" + std::to_string(f.disc) +
                   ", s=" + std::to_string(f.s) + ")";
        });

    m.def("validate_field", &validate_field, py::arg("d_K"),
          "Accepts d_K iff it is a fundamental discriminant < 0.");
    m.def("splitting_type", &splitting_type, py::arg("field"), py::arg("ell"));

    py::class_<Place>(m, "Place")
        .def_static("finite", &Place::finite, py::arg("p"))
        .def_static("infinite", &Place::infinite)
        .def("is_finite", &Place::is_finite)
        .def_property_readonly("prime", &Place::prime)
        .def("__repr__", [](const Place& v) { return "Place(" + v.str() + ")"; });

    m.def("hilbert_symbol",
          py::overload_cast<const FactoredRational&, const FactoredRational&,
                            const Place&>(&hilbert_symbol),
          py::arg("a"), py::arg("b"), py::arg("v"));
    m.def("hilbert_symbol",
          py::overload_cast<long long, long long, const Place&>(&hilbert_symbol),
          py::arg("a"), py::arg("b"), py::arg("v"));
    m.def("hilbert_oracle", &hilbert_oracle, py::arg("a"), py::arg("b"), py::arg("ell"),
          "Solvability search mod ell^k; independent of the closed formulas.");

    py::class_<QuaternionData>(m, "QuaternionData")
        .def_readonly("disc", &QuaternionData::disc)
        .def_readonly("ramified_primes", &QuaternionData::ramified_primes)
        .def_readonly("degenerate", &QuaternionData::degenerate)
        .def_property_readonly("r", &QuaternionData::r)
        .def("ramified_at", &QuaternionData::ramified_at)
        .def("__repr__", [](const QuaternionData& q) {
            return "QuaternionData(disc=" + std::to_string(q.disc) + ")";
        });

    m.def("validate_quaternion", &validate_quaternion, py::arg("d_B"), py::arg("field"),
          py::arg("allow_degenerate") = false);
    m.def("local_invariant", &local_invariant, py::arg("q"), py::arg("v"));

    py::enum_<DiffVariant>(m, "DiffVariant")
        .value("plain", DiffVariant::plain)
        .value("quaternionic", DiffVariant::quaternionic);

    py::class_<DiffSet>(m, "DiffSet")
        .def_readonly("primes", &DiffSet::primes)
        .def_readonly("variant", &DiffSet::variant)
        .def("singleton", &DiffSet::singleton)
        .def("__repr__", [](const DiffSet& d) { return "DiffSet(" + d.str() + ")"; });

    m.def("diff_set", &diff_set, py::arg("field"), py::arg("m"));
    m.def("diff_b_set", &diff_b_set, py::arg("field"), py::arg("q"), py::arg("m"));

    m.def("count_ideals_local", &count_ideals_local, py::arg("field"), py::arg("ell"),
          py::arg("x"));
    m.def("count_ideals",
          py::overload_cast<const FieldData&, const FactoredRational&>(&count_ideals),
          py::arg("field"), py::arg("x"));
    m.def("count_ideals", py::overload_cast<const FieldData&, long long>(&count_ideals),
          py::arg("field"), py::arg("n"));
    m.def("count_ideals_hnf", &count_ideals_hnf, py::arg("field"), py::arg("n"),
          "Hermite-normal-form sublattice enumeration oracle.");
    m.def("count_ideals_divisor_sum", &count_ideals_divisor_sum, py::arg("field"),
          py::arg("n"));

    py::class_<Rational>(m, "Rational")
        .def_readonly("num", &Rational::num)
        .def_readonly("den", &Rational::den)
        .def("is_integer", &Rational::is_integer)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; })
        .def("__str__", &Rational::str)
        .def(py::self == py::self);

    py::class_<Setting>(m, "Setting")
        .def(py::init<FieldData, QuaternionData>(), py::arg("field"), py::arg("quaternion"))
        .def_readonly("field", &Setting::field)
        .def_readonly("quaternion", &Setting::quaternion);

    py::enum_<StackKind>(m, "StackKind")
        .value("surface_y", StackKind::surface_y)
        .value("elliptic_z", StackKind::elliptic_z);

    py::class_<DegreeReport>(m, "DegreeReport")
        .def_readonly("stack", &DegreeReport::stack)
        .def_readonly("m", &DegreeReport::m)
        .def_readonly("field_disc", &DegreeReport::field_disc)
        .def_readonly("quaternion_disc", &DegreeReport::quaternion_disc)
        .def_readonly("degenerate", &DegreeReport::degenerate)
        .def_readonly("diff", &DegreeReport::diff)
        .def_readonly("supported", &DegreeReport::supported)
        .def_readonly("p", &DegreeReport::p)
        .def_readonly("splitting", &DegreeReport::splitting)
        .def_readonly("epsilon", &DegreeReport::epsilon)
        .def_readonly("argument", &DegreeReport::argument)
        .def_readonly("ideal_count", &DegreeReport::ideal_count)
        .def_readonly("count", &DegreeReport::count)
        .def_readonly("length", &DegreeReport::length)
        .def_readonly("degree_coeff", &DegreeReport::degree_coeff)
        .def("degree_display", &DegreeReport::degree_display)
        .def("degree_approx", &DegreeReport::degree_approx)
        .def("to_text", [](const DegreeReport& r) { return format_text(r); })
        .def("to_json", [](const DegreeReport& r) { return format_json(r); })
        .def("to_csv_row", [](const DegreeReport& r) { return format_csv_row(r); })
        .def("__repr__", [](const DegreeReport& r) {
            return "DegreeReport(m=" + std::to_string(r.m) + ", deg=" + r.degree_display() +
                   ")";
        });

    m.def("parse_json", &parse_json, py::arg("s"));
    m.def("csv_header", &csv_header);

    m.def("epsilon_p", &epsilon_p, py::arg("setting"), py::arg("p"));
    m.def("beta_valuation", &beta_valuation, py::arg("setting"), py::arg("ell"),
          py::arg("p"));
    m.def("argument_m", &argument_m, py::arg("setting"), py::arg("m"), py::arg("p"));
    m.def("orbital_integral", &orbital_integral, py::arg("setting"), py::arg("ell"),
          py::arg("m"), py::arg("p"));
    m.def("point_count", &point_count, py::arg("setting"), py::arg("m"));
    m.def("length_y", &length_y, py::arg("setting"), py::arg("m"), py::arg("p"));
    m.def("length_z", &length_z, py::arg("field"), py::arg("m"), py::arg("p"));
    m.def("degree_y", &degree_y, py::arg("setting"), py::arg("m"));
    m.def("degree_z", &degree_z, py::arg("field"), py::arg("m"));
    m.def("z_reduction_check", &z_reduction_check, py::arg("field"), py::arg("m"));

    py::enum_<VerifyLevel>(m, "VerifyLevel")
        .value("quick", VerifyLevel::quick)
        .value("full", VerifyLevel::full);

    py::class_<SuiteResult>(m, "SuiteResult")
        .def_readonly("name", &SuiteResult::name)
        .def_readonly("passed", &SuiteResult::passed)
        .def_readonly("cases", &SuiteResult::cases)
        .def_readonly("counterexample", &SuiteResult::counterexample);

    m.def("run_verification", &run_verification, py::arg("level") = VerifyLevel::quick);
}
