"""Shared exception types."""

from __future__ import annotations

__all__ = [
    "DomainError",
    "OnCutError",
    "RayGeometryError",
    "ToleranceError",
    "QuadratureError",
    "ConvergenceError",
]


class DomainError(ValueError):
    """Argument outside the mathematical domain of the operation."""


class OnCutError(DomainError):
    """Evaluation point lies on a branch cut (or exactly at a singularity)."""


class RayGeometryError(DomainError):
    """Integration ray is unusable (wrong sector, or passes too close to a pole)."""


class ToleranceError(RuntimeError):
    """Requested tolerance not reachable within the configured budget."""


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to converge within its panel budget."""


class ConvergenceError(RuntimeError):
    """An extrapolation ladder did not settle."""
