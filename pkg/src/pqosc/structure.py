"""Structure functions of the deformed oscillator schemes.

The central object is the two-base bracket

    bracket(x) = (p**(-x) - q**x) / (p**(-l) - q**l),

an analytic function of a real argument x.  The general five-parameter
structure function is f(n) = bracket(alpha*n + beta).  The classical
one- and two-parameter schemes (Arik-Coon, the symmetric q-bracket, the
plain two-base bracket, and their generalized forms) are provided as a
catalog alongside it, plus an independent finite-sum oracle used by the
test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .params import (
    DeformationParams,
    DegenerateDenominatorError,
    NonPositiveBaseError,
)

# |exponent| * |ln(base)| beyond which exp() would overflow a double.
EXP_LIMIT = 700.0

_BASE_GUARD = 1e-12


class ExponentOverflowError(ArithmeticError):
    """An exponential magnitude left the double-precision range."""


def _checked_exp(t: float) -> float:
    if abs(t) > EXP_LIMIT:
        raise ExponentOverflowError(f"exponent magnitude {abs(t):.3g} exceeds {EXP_LIMIT:g}")
    return math.exp(t)


def bracket(x: float, params: DeformationParams) -> float:
    """(p**(-x) - q**x) / (p**(-l) - q**l) for real x."""
    lp = math.log(params.p)
    lq = math.log(params.q)
    num = _checked_exp(-x * lp) - _checked_exp(x * lq)
    den = _checked_exp(-params.l * lp) - _checked_exp(params.l * lq)
    return num / den


def f_general(n: float, params: DeformationParams) -> float:
    """Five-parameter structure function, evaluated at real n."""
    return bracket(params.alpha * n + params.beta, params)


def pq_sum_oracle(n: int, p: float, q: float) -> float:
    """Explicit sum  sum_{k=0}^{n-1} p**-(n-1-k) * q**k.

    Telescoping against p**-1 - q shows this equals the two-base bracket
    at alpha=1, beta=0, l=1; it never divides by p**-1 - q, which makes
    it an independent oracle for f_general (valid at p*q = 1 too).
    Returns 0 for n = 0.
    """
    if n != int(n) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    n = int(n)
    return math.fsum(p ** (-(n - 1 - k)) * q ** k for k in range(n))


# ---------------------------------------------------------------------------
# Scheme catalog
# ---------------------------------------------------------------------------


def _check_base(name: str, value: float) -> None:
    if not (value > 0.0) or not math.isfinite(value):
        raise NonPositiveBaseError(f"{name} must be a positive finite real, got {value}")


@dataclass(frozen=True)
class StandardQM:
    """Undeformed oscillator: f(n) = n/2."""


@dataclass(frozen=True)
class ArikCoon:
    q: float

    def __post_init__(self):
        _check_base("q", self.q)
        if abs(self.q - 1.0) <= _BASE_GUARD:
            raise DegenerateDenominatorError("Arik-Coon needs q != 1")


@dataclass(frozen=True)
class ArikCoonGeneralized:
    q: float
    alpha: float
    beta: float

    def __post_init__(self):
        _check_base("q", self.q)
        if abs(self.q - 1.0) <= _BASE_GUARD:
            raise DegenerateDenominatorError("generalized Arik-Coon needs q != 1")


@dataclass(frozen=True)
class BiedenharnMacfarlane:
    q: float

    def __post_init__(self):
        _check_base("q", self.q)
        if abs(self.q - 1.0) <= _BASE_GUARD:
            raise DegenerateDenominatorError("symmetric bracket needs q != 1")


@dataclass(frozen=True)
class BMSymmetricGeneralized:
    q: float
    alpha: float
    beta: float

    def __post_init__(self):
        _check_base("q", self.q)
        if abs(self.q - 1.0) <= _BASE_GUARD:
            raise DegenerateDenominatorError("symmetric bracket needs q != 1")


@dataclass(frozen=True)
class TwoParameter:
    p: float
    q: float
    l: float

    def __post_init__(self):
        _check_base("p", self.p)
        _check_base("q", self.q)
        if abs(self.l * math.log(self.p * self.q)) <= _BASE_GUARD:
            raise DegenerateDenominatorError("two-base bracket needs (p*q)**l != 1")


@dataclass(frozen=True)
class TwoParameterSymmetricGeneralized:
    p: float
    q: float
    alpha: float
    beta: float
    l: float

    def __post_init__(self):
        _check_base("p", self.p)
        _check_base("q", self.q)
        if abs(self.l * math.log(self.p * self.q)) <= _BASE_GUARD:
            raise DegenerateDenominatorError("two-base bracket needs (p*q)**l != 1")


@dataclass(frozen=True)
class GeneralPQ:
    params: DeformationParams


Scheme = Union[
    StandardQM,
    ArikCoon,
    ArikCoonGeneralized,
    BiedenharnMacfarlane,
    BMSymmetricGeneralized,
    TwoParameter,
    TwoParameterSymmetricGeneralized,
    GeneralPQ,
]


def f_scheme(scheme: Scheme, n: float) -> float:
    """Evaluate the structure function of a catalog scheme at real n."""
    if isinstance(scheme, StandardQM):
        return 0.5 * n
    if isinstance(scheme, ArikCoon):
        lq = math.log(scheme.q)
        return (1.0 - _checked_exp(n * lq)) / (1.0 - scheme.q)
    if isinstance(scheme, ArikCoonGeneralized):
        lq = math.log(scheme.q)
        x = scheme.alpha * n + scheme.beta
        return _checked_exp(x * lq) * (1.0 - _checked_exp(n * lq)) / (1.0 - scheme.q)
    if isinstance(scheme, BiedenharnMacfarlane):
        lq = math.log(scheme.q)
        return (_checked_exp(-n * lq) - _checked_exp(n * lq)) / (1.0 / scheme.q - scheme.q)
    if isinstance(scheme, BMSymmetricGeneralized):
        lq = math.log(scheme.q)
        x = scheme.alpha * n + scheme.beta
        return (_checked_exp(-x * lq) - _checked_exp(x * lq)) / (1.0 / scheme.q - scheme.q)
    if isinstance(scheme, TwoParameter):
        lp = math.log(scheme.p)
        lq = math.log(scheme.q)
        num = _checked_exp(-n * lp) - _checked_exp(n * lq)
        den = _checked_exp(-scheme.l * lp) - _checked_exp(scheme.l * lq)
        return num / den
    if isinstance(scheme, TwoParameterSymmetricGeneralized):
        params = DeformationParams(scheme.p, scheme.q, scheme.alpha, scheme.beta, scheme.l)
        return f_general(n, params)
    if isinstance(scheme, GeneralPQ):
        return f_general(n, scheme.params)
    raise TypeError(f"not a scheme: {scheme!r}")
