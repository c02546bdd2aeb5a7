import pytest

from braket.verification import (
    SUITES,
    check_hermitian,
    check_operator_symmetry,
    check_positivity,
    run_suite,
)


def test_every_suite_passes():
    reports = run_suite("all", samples=15)
    assert {r.name.split("[")[0] for r in reports} >= {"hermitian", "skew", "symmetric", "positivity"}
    assert all(r.passed for r in reports), [r.to_text() for r in reports if not r.passed]


def test_reports_are_reproducible():
    a = check_hermitian("mixed", 10, seed=3).to_dict()
    b = check_hermitian("mixed", 10, seed=3).to_dict()
    assert a == b


def test_x_symmetric_check_finds_failures_on_dists():
    report = check_operator_symmetry("x", "dists", "symmetric", 5)
    assert not report.passed
    assert "u" in report.failures[0] and "op_u_v" in report.failures[0]
    assert "FAIL" in report.to_text()


def test_positivity_on_mixed_states():
    assert check_positivity("mixed", 20).passed


def test_bad_arguments():
    with pytest.raises(ValueError):
        run_suite("nope")
    with pytest.raises(ValueError):
        check_operator_symmetry("x", "mixed")
    with pytest.raises(ValueError):
        check_operator_symmetry("ddx", "dists", "antisymmetric")
    assert set(SUITES) == {"hermitian", "symmetry", "positivity", "field"}
