"""Deformation parameter tuple and its validity domain.

A deformation is described by five reals (p, q, alpha, beta, l): two
positive bases p, q; an exponent slope alpha and offset beta; and a
ladder grading step l.  Everything downstream divides by
p**(-l) - q**l, so the single hard restriction beyond positivity of the
bases is (p*q)**l != 1, enforced here through the equivalent condition
|l * ln(p*q)| > EPS_DEGENERATE.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Guard width around the singular surface (p*q)**l = 1.
EPS_DEGENERATE = 1e-12


class ParameterError(ValueError):
    """A candidate parameter tuple violates the validity domain."""


class NonPositiveBaseError(ParameterError):
    """p <= 0 or q <= 0."""


class DegenerateDenominatorError(ParameterError):
    """(p*q)**l = 1 within the guard, so p**(-l) - q**l vanishes."""


class ZeroAlphaError(ParameterError):
    """alpha = 0; fatal only where the exponent shift l/alpha is needed."""


@dataclass(frozen=True)
class DeformationParams:
    """Immutable (p, q, alpha, beta, l) tuple.

    Instances produced by :func:`validate` satisfy p > 0, q > 0 and
    |l * ln(p*q)| > EPS_DEGENERATE.  alpha = 0 is representable (the
    structure function is then constant in n) but is rejected by the
    operators that divide by alpha.
    """

    p: float
    q: float
    alpha: float
    beta: float
    l: float

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "alpha": self.alpha,
            "beta": self.beta,
            "l": self.l,
        }


def validate(p: float, q: float, alpha: float, beta: float, l: float) -> DeformationParams:
    """Check a candidate tuple and return it as DeformationParams.

    Raises NonPositiveBaseError or DegenerateDenominatorError.  alpha = 0
    is deliberately not rejected here; call :func:`require_nonzero_alpha`
    at the points of use that need l/alpha.
    """
    p, q, alpha, beta, l = float(p), float(q), float(alpha), float(beta), float(l)
    if not (p > 0.0) or not (q > 0.0):
        raise NonPositiveBaseError(f"bases must be positive, got p={p}, q={q}")
    if not (math.isfinite(p) and math.isfinite(q)):
        raise NonPositiveBaseError(f"bases must be finite, got p={p}, q={q}")
    for name, value in (("alpha", alpha), ("beta", beta), ("l", l)):
        if not math.isfinite(value):
            raise ParameterError(f"{name} must be finite, got {value}")
    if abs(l * math.log(p * q)) <= EPS_DEGENERATE:
        raise DegenerateDenominatorError(
            f"(p*q)**l = 1 within {EPS_DEGENERATE:g}: p={p}, q={q}, l={l}"
        )
    return DeformationParams(p, q, alpha, beta, l)


def dual(params: DeformationParams) -> DeformationParams:
    """Parameter involution p -> 1/q, q -> 1/p (alpha, beta, l unchanged).

    The bracket, the structure function and the oscillator spectrum are
    all invariant under this map; dual(dual(x)) == x up to reciprocal
    rounding.
    """
    return DeformationParams(1.0 / params.q, 1.0 / params.p, params.alpha, params.beta, params.l)


def require_nonzero_alpha(params: DeformationParams) -> None:
    if params.alpha == 0.0:
        raise ZeroAlphaError("alpha = 0: the exponent shift l/alpha does not exist")
