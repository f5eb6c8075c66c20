#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orthozeros/bounds.hpp"
#include "orthozeros/convexity.hpp"
#include "orthozeros/report.hpp"
#include "orthozeros/sweep.hpp"
#include "orthozeros/version.hpp"

namespace py = pybind11;
using namespace orthozeros;

PYBIND11_MODULE(_core, m) {
  m.doc() = "zeros, convexity intervals, and spacing bounds of classical "
            "orthogonal polynomials";
  m.attr("__version__") = kToolVersion;

  py::register_exception<ParameterOutOfRange>(m, "ParameterOutOfRange", PyExc_ValueError);
  py::register_exception<DegreeNonPositive>(m, "DegreeNonPositive", PyExc_ValueError);
  py::register_exception<Overflow>(m, "Overflow", PyExc_OverflowError);
  py::register_exception<DomainViolation>(m, "DomainViolation", PyExc_ValueError);
  py::register_exception<UnsupportedFamily>(m, "UnsupportedFamily", PyExc_TypeError);
  py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure", PyExc_RuntimeError);
  py::register_exception<DegreeTooSmall>(m, "DegreeTooSmall", PyExc_ValueError);
  py::register_exception<DegenerateCubic>(m, "DegenerateCubic", PyExc_ValueError);

  py::enum_<FamilyKind>(m, "FamilyKind")
      .value("Laguerre", FamilyKind::Laguerre)
      .value("Jacobi", FamilyKind::Jacobi)
      .value("Ultraspherical", FamilyKind::Ultraspherical);

  py::enum_<Purpose>(m, "Purpose")
      .value("ZeroComputation", Purpose::ZeroComputation)
      .value("Classification", Purpose::Classification);

  py::enum_<Label>(m, "Label")
      .value("Convex", Label::Convex)
      .value("Concave", Label::Concave);

  py::enum_<Verdict>(m, "Verdict")
      .value("Agrees", Verdict::Agrees)
      .value("Disagrees", Verdict::Disagrees)
      .value("Straddles", Verdict::Straddles)
      .value("BelowTolerance", Verdict::BelowTolerance);

  py::class_<FamilySpec>(m, "FamilySpec")
      .def_static("laguerre", &FamilySpec::laguerre, py::arg("alpha"), py::arg("degree"))
      .def_static("jacobi", &FamilySpec::jacobi, py::arg("alpha"), py::arg("beta"),
                  py::arg("degree"))
      .def_static("ultraspherical", &FamilySpec::ultraspherical, py::arg("alpha"),
                  py::arg("degree"))
      .def_readonly("kind", &FamilySpec::kind)
      .def_readonly("alpha", &FamilySpec::alpha)
      .def_readonly("beta", &FamilySpec::beta)
      .def_readonly("degree", &FamilySpec::degree)
      .def("__repr__", [](const FamilySpec& s) {
        return "FamilySpec(" + to_json(s).dump() + ")";
      });

  py::class_<Interval>(m, "Interval")
      .def_readonly("lo", &Interval::lo)
      .def_readonly("hi", &Interval::hi)
      .def("contains", &Interval::contains);

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("value", &EvalResult::value)
      .def_readonly("derivative", &EvalResult::derivative);

  py::class_<RecurrenceCoefficients>(m, "RecurrenceCoefficients")
      .def_readonly("diagonal", &RecurrenceCoefficients::diagonal)
      .def_readonly("offdiagonal", &RecurrenceCoefficients::offdiagonal);

  py::class_<NormalFormProfile>(m, "NormalFormProfile")
      .def_readonly("family", &NormalFormProfile::family)
      .def_readonly("support", &NormalFormProfile::support_interval)
      .def_readonly("x_aux", &NormalFormProfile::x_aux)
      .def_readonly("y_aux", &NormalFormProfile::y_aux)
      .def_readonly("z_aux", &NormalFormProfile::z_aux)
      .def_readonly("t0", &NormalFormProfile::t0)
      .def_readonly("t12", &NormalFormProfile::t12)
      .def_readonly("t12_in_support", &NormalFormProfile::t12_in_support)
      .def_readonly("T12", &NormalFormProfile::T12)
      .def_readonly("discriminant", &NormalFormProfile::discriminant)
      .def_readonly("discriminant_sign", &NormalFormProfile::discriminant_sign);

  py::class_<ZeroSet>(m, "ZeroSet")
      .def_readonly("spec", &ZeroSet::spec)
      .def_readonly("zeros", &ZeroSet::zeros)
      .def_readonly("spacings", &ZeroSet::spacings)
      .def_readonly("second_differences", &ZeroSet::second_differences);

  py::class_<FirstZeroBounds>(m, "FirstZeroBounds")
      .def_readonly("lower", &FirstZeroBounds::lower)
      .def_readonly("upper_a", &FirstZeroBounds::upper_a)
      .def_readonly("upper_b", &FirstZeroBounds::upper_b)
      .def_readonly("t0_below_upper_bounds", &FirstZeroBounds::t0_below_upper_bounds);

  py::class_<LabeledInterval>(m, "LabeledInterval")
      .def_readonly("span", &LabeledInterval::span)
      .def_readonly("label", &LabeledInterval::label)
      .def_readonly("provenance", &LabeledInterval::provenance);

  py::class_<ConvexityReport>(m, "ConvexityReport")
      .def_readonly("spec", &ConvexityReport::spec)
      .def_readonly("partition", &ConvexityReport::partition)
      .def_readonly("boundaries", &ConvexityReport::boundaries);

  py::class_<TripleClassification>(m, "TripleClassification")
      .def_readonly("k", &TripleClassification::k)
      .def_readonly("piece", &TripleClassification::piece)
      .def_readonly("sign", &TripleClassification::sign)
      .def_readonly("verdict", &TripleClassification::verdict);

  py::class_<EmpiricalClassification>(m, "EmpiricalClassification")
      .def_readonly("triples", &EmpiricalClassification::triples);

  py::class_<GapBoundRecord>(m, "GapBoundRecord")
      .def_readonly("k", &GapBoundRecord::k)
      .def_readonly("x_k", &GapBoundRecord::x_k)
      .def_readonly("x_k1", &GapBoundRecord::x_k1)
      .def_readonly("spacing", &GapBoundRecord::spacing)
      .def_readonly("lower", &GapBoundRecord::lower)
      .def_readonly("upper", &GapBoundRecord::upper)
      .def_readonly("lower_source", &GapBoundRecord::lower_source)
      .def_readonly("upper_source", &GapBoundRecord::upper_source)
      .def_readonly("lower_satisfied", &GapBoundRecord::lower_satisfied)
      .def_readonly("upper_satisfied", &GapBoundRecord::upper_satisfied)
      .def_readonly("lower_margin", &GapBoundRecord::lower_margin)
      .def_readonly("upper_margin", &GapBoundRecord::upper_margin);

  py::class_<GlobalBound>(m, "GlobalBound")
      .def_readonly("value", &GlobalBound::value)
      .def_readonly("satisfied", &GlobalBound::satisfied)
      .def_readonly("margin", &GlobalBound::margin);

  py::class_<BoundViolation>(m, "BoundViolation")
      .def_readonly("k", &BoundViolation::k)
      .def_readonly("which", &BoundViolation::which)
      .def_readonly("margin", &BoundViolation::margin);

  py::class_<BoundSuiteReport>(m, "BoundSuiteReport")
      .def_readonly("spec", &BoundSuiteReport::spec)
      .def_readonly("global_lower_paper", &BoundSuiteReport::global_lower_paper)
      .def_readonly("global_lower_derived", &BoundSuiteReport::global_lower_derived)
      .def_readonly("global_upper_F0", &BoundSuiteReport::global_upper_F0)
      .def_readonly("global_lower_F0", &BoundSuiteReport::global_lower_F0)
      .def_readonly("global_lower_FT2", &BoundSuiteReport::global_lower_FT2)
      .def_readonly("records", &BoundSuiteReport::records)
      .def_readonly("violations", &BoundSuiteReport::violations)
      .def("json", [](const BoundSuiteReport& r) { return to_json(r).dump(2); });

  py::class_<SweepViolationDetail>(m, "SweepViolationDetail")
      .def_readonly("spec", &SweepViolationDetail::spec)
      .def_readonly("k", &SweepViolationDetail::k)
      .def_readonly("which", &SweepViolationDetail::which)
      .def_readonly("margin", &SweepViolationDetail::margin);

  py::class_<SweepSummary>(m, "SweepSummary")
      .def_readonly("grid_description", &SweepSummary::grid_description)
      .def_readonly("specs_run", &SweepSummary::specs_run)
      .def_readonly("triples_classified", &SweepSummary::triples_classified)
      .def_readonly("agreements", &SweepSummary::agreements)
      .def_readonly("disagreements", &SweepSummary::disagreements)
      .def_readonly("straddles", &SweepSummary::straddles)
      .def_readonly("below_tolerance", &SweepSummary::below_tolerance)
      .def_readonly("bound_checks", &SweepSummary::bound_checks)
      .def_readonly("violations", &SweepSummary::violations)
      .def_readonly("paper_literal_checks", &SweepSummary::paper_literal_checks)
      .def_readonly("paper_literal_failures", &SweepSummary::paper_literal_failures)
      .def_readonly("laguerre_first_zero_below_t0",
                    &SweepSummary::laguerre_first_zero_below_t0)
      .def_readonly("first_zero_bound_anomalies",
                    &SweepSummary::first_zero_bound_anomalies)
      .def_readonly("violation_details", &SweepSummary::violation_details)
      .def("json", [](const SweepSummary& s) { return to_json(s).dump(2); });

  m.def("validate", [](const FamilySpec& spec, Purpose purpose) {
    return validate(spec, purpose);
  }, py::arg("spec"), py::arg("purpose"));
  m.def("support", &support, py::arg("spec"));
  m.def("evaluate", &evaluate, py::arg("spec"), py::arg("t"));
  m.def("recurrence_coefficients", &recurrence_coefficients, py::arg("spec"));

  m.def("F_eval", &F_eval, py::arg("spec"), py::arg("t"));
  m.def("j_eval", &j_eval, py::arg("spec"), py::arg("t"));
  m.def("discriminant", &discriminant, py::arg("spec"));
  m.def("critical_points", &critical_points, py::arg("spec"));
  m.def("j_roots_in_support", &j_roots_in_support, py::arg("spec"));
  m.def("F_supremum",
        [](const FamilySpec& spec, double lo, double hi) {
          return F_supremum(spec, Interval{lo, hi});
        },
        py::arg("spec"), py::arg("lo"), py::arg("hi"));

  m.def("compute_zeros", &compute_zeros, py::arg("spec"));
  m.def("spacing_profile", &spacing_profile, py::arg("zero_set"));
  m.def("first_zero_bounds", &first_zero_bounds, py::arg("spec"));

  m.def("classify_theoretical",
        [](const FamilySpec& spec) {
          return classify_theoretical(spec, critical_points(spec));
        },
        py::arg("spec"));
  m.def("classify_from_j_roots",
        [](const FamilySpec& spec) {
          return classify_from_j_roots(spec, critical_points(spec));
        },
        py::arg("spec"));
  m.def("asymptotic_pattern",
        [](double alpha, double beta) {
          return to_string(asymptotic_pattern(alpha, beta));
        },
        py::arg("alpha"), py::arg("beta"));
  m.def("classify_empirical", &classify_empirical, py::arg("zero_set"),
        py::arg("report"), py::arg("tol_rel") = 1e-9);
  m.def("empirical_label_runs", &empirical_label_runs, py::arg("zero_set"),
        py::arg("boundaries"), py::arg("tol_rel") = 1e-9);

  m.def("verify_suite", &verify_suite, py::arg("spec"));
  m.def("run_default_sweep",
        [](double tol_rel) { return run_sweep(default_sweep(), tol_rel); },
        py::arg("tol_rel") = 1e-9);
}
