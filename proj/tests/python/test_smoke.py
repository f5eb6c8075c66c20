"""Smoke tests for the python bindings against known closed-form values."""

import math

import pytest

import orthozeros as oz


def test_laguerre_zeros_match_quadratic():
    zs = oz.compute_zeros(oz.FamilySpec.laguerre(0.0, 2))
    assert zs.zeros[0] == pytest.approx(2 - math.sqrt(2), abs=1e-12)
    assert zs.zeros[1] == pytest.approx(2 + math.sqrt(2), abs=1e-12)


def test_chebyshev_u_zeros():
    n = 9
    zs = oz.compute_zeros(oz.FamilySpec.ultraspherical(0.5, n))
    exact = [math.cos(k * math.pi / (n + 1)) for k in range(n, 0, -1)]
    for got, want in zip(zs.zeros, exact):
        assert got == pytest.approx(want, abs=1e-12)


def test_validation_raises():
    with pytest.raises(ValueError):
        oz.validate(oz.FamilySpec.laguerre(-1.0, 3), oz.Purpose.ZeroComputation)
    with pytest.raises(ValueError):
        oz.validate(oz.FamilySpec.jacobi(-0.5, -0.7, 1), oz.Purpose.Classification)


def test_normal_form_profile_and_F():
    spec = oz.FamilySpec.ultraspherical(2.0, 5)
    p = oz.critical_points(spec)
    assert p.T12 is not None
    assert p.T12[1] == pytest.approx(5 / math.sqrt(28), abs=1e-15)
    assert oz.F_eval(spec, 0.0) == pytest.approx(53.0)
    assert oz.j_eval(spec, 0.0) == 0.0
    assert oz.discriminant(oz.FamilySpec.jacobi(20.0, 0.0, 3)) == -1787904.0


def test_classification_partition():
    spec = oz.FamilySpec.ultraspherical(0.0, 4)
    rep = oz.classify_theoretical(spec)
    assert [p.label for p in rep.partition] == [oz.Label.Convex, oz.Label.Concave]
    cls = oz.classify_empirical(oz.compute_zeros(spec), rep)
    assert all(t.verdict != oz.Verdict.Disagrees for t in cls.triples)


def test_asymptotic_pattern_strings():
    assert oz.asymptotic_pattern(0.5, 0.5) == "convex-concave"
    assert oz.asymptotic_pattern(2.0, 2.0) == "concave-convex-concave-convex"


def test_bound_suite_tight_witness():
    import json

    suite = oz.verify_suite(oz.FamilySpec.ultraspherical(7.0, 2))
    assert suite.violations == []
    assert suite.global_lower_F0.satisfied
    assert suite.global_lower_F0.margin == pytest.approx(3.1298e-4, rel=1e-3)
    rendered = json.loads(suite.json())
    assert rendered["spec"]["family"] == "ultraspherical"
    assert rendered["records"][0]["lower_satisfied"] is True


def test_evaluate_matches_reference():
    e = oz.evaluate(oz.FamilySpec.jacobi(2.0, 0.5, 7), -0.3)
    assert e.value == pytest.approx(0.52407382157707214, rel=1e-12)
    assert e.derivative == pytest.approx(0.11184301122665405, rel=1e-12)
