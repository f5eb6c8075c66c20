"""Zeros, convexity intervals, and spacing bounds of classical orthogonal polynomials."""

from ._core import (  # noqa: F401
    BoundSuiteReport,
    BoundViolation,
    ConvergenceFailure,
    ConvexityReport,
    DegenerateCubic,
    DegreeNonPositive,
    DegreeTooSmall,
    DomainViolation,
    EmpiricalClassification,
    EvalResult,
    F_eval,
    F_supremum,
    FamilyKind,
    FamilySpec,
    FirstZeroBounds,
    GapBoundRecord,
    GlobalBound,
    Interval,
    Label,
    LabeledInterval,
    NormalFormProfile,
    Overflow,
    ParameterOutOfRange,
    Purpose,
    RecurrenceCoefficients,
    SweepSummary,
    SweepViolationDetail,
    TripleClassification,
    UnsupportedFamily,
    Verdict,
    ZeroSet,
    __version__,
    asymptotic_pattern,
    classify_empirical,
    classify_from_j_roots,
    classify_theoretical,
    compute_zeros,
    critical_points,
    discriminant,
    empirical_label_runs,
    evaluate,
    first_zero_bounds,
    j_eval,
    j_roots_in_support,
    recurrence_coefficients,
    run_default_sweep,
    spacing_profile,
    support,
    validate,
    verify_suite,
)
