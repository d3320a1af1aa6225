"""Package surface: exports and the exception taxonomy."""

import borelsum
from borelsum.errors import (
    ConvergenceError,
    DomainError,
    OnCutError,
    QuadratureError,
    RayGeometryError,
    ToleranceError,
)


def test_all_names_resolve():
    for name in borelsum.__all__:
        assert getattr(borelsum, name) is not None


def test_key_entry_points_are_exported():
    for name in (
        "sum_median",
        "sum_erfi",
        "radial_limit",
        "trefoil_coeffs",
        "poincare_coeffs",
        "l_value_exact",
        "zagier_g",
        "extract_ckl",
        "verify_transseries",
    ):
        assert name in borelsum.__all__


def test_domain_errors_are_value_errors():
    assert issubclass(DomainError, ValueError)
    assert issubclass(OnCutError, DomainError)
    assert issubclass(RayGeometryError, DomainError)


def test_budget_errors_are_runtime_errors():
    for exc in (ToleranceError, QuadratureError, ConvergenceError):
        assert issubclass(exc, RuntimeError)
