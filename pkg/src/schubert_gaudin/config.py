"""Numeric fallback settings shared by every module."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class NumericConfig:
    precision_bits: int = 256
    cluster_tol: float = 1e-30
    residual_tol: float = 1e-20
    newton_steps: int = 8


_current = NumericConfig()


def get_config() -> NumericConfig:
    return _current


def set_config(**changes) -> NumericConfig:
    """Replace fields of the process-wide configuration; returns the new one."""
    global _current
    _current = replace(_current, **changes)
    return _current


def working_precision():
    """Context manager running mpmath at the configured precision."""
    import mpmath

    return mpmath.workprec(_current.precision_bits)
