"""Shared tolerance profile.

Every numerically consequential decision (eigenvalue zero classification,
Loewner-order slack, factorization residual bounds, subspace comparison)
goes through a single :class:`ToleranceProfile`.  A process-wide default
may be installed once at startup; individual calls can override it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput


@dataclass(frozen=True)
class ToleranceProfile:
    """Relative tolerances used throughout the package.

    zero
        Eigenvalue/singular-value zero classification, scaled by
        ``dim * norm`` of the matrix at hand.
    psd
        Slack for Loewner-order tests, scaled by ``1 + norms``.
    residual
        Bound for factorization and identity residuals.
    subspace
        Principal-angle bound for subspace comparisons.
    """

    zero: float = 1e-10
    psd: float = 1e-9
    residual: float = 1e-8
    subspace: float = 1e-8

    def __post_init__(self):
        for field in ("zero", "psd", "residual", "subspace"):
            value = getattr(self, field)
            if not (value > 0.0):
                raise InvalidInput(f"tolerance {field!r} must be strictly positive, got {value}")


_default = ToleranceProfile()


def default_tolerances() -> ToleranceProfile:
    """Return the process-wide default profile."""
    return _default


def set_default_tolerances(profile: ToleranceProfile) -> None:
    """Install ``profile`` as the process-wide default (call once at startup)."""
    global _default
    if not isinstance(profile, ToleranceProfile):
        raise InvalidInput("expected a ToleranceProfile")
    _default = profile


def resolve(tol: ToleranceProfile | None) -> ToleranceProfile:
    return _default if tol is None else tol
