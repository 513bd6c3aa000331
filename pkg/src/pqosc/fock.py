"""Truncated matrix representations of the deformed ladder algebra.

The representation lives on basis levels k = 0 .. dim-1.  The number
operator is N = diag(nu0 + l*k), the grading lattice is x_k = x0 + l*k,
and the ladder weights are w_k = bracket(x_k), so that

    a |k> = sqrt(w_k) |k-1>,      a+ |k> = sqrt(w_{k+1}) |k+1>,
    a+ a  = diag(w_k),            a a+   = diag(w_{k+1})  (interior).

Because bracket(x + l) - q**l * bracket(x) = p**(-x) identically, the
twisted relations

    a a+ - q**l  a+ a = P,        a a+ - p**(-l) a+ a = Q

hold exactly on the interior when P, Q are read as the grading diagonals
diag(p**(-x_k)), diag(q**(x_k)) ("grading" mode).  Reading them instead
as literal functions of N's eigenvalues ("literal" mode) agrees with the
grading only at alpha = 1; for alpha != 1 literal mode is a documented
negative case.  Truncation from below requires w_0 = 0, i.e. x0 = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .params import DeformationParams
from .report import CheckEntry, CheckReport
from .structure import EXP_LIMIT, ExponentOverflowError, bracket

_LOWEST_WEIGHT_TOL = 1e-12
_NEGATIVE_WEIGHT_TOL = 1e-14


class FockError(ValueError):
    """The requested truncated representation does not exist."""


class NegativeWeightError(FockError):
    """Some ladder weight is negative; square roots would be complex."""


class NotLowestWeightError(FockError):
    """w_0 != 0, so the level below the cutoff is not annihilated."""


class DimensionMismatchError(ValueError):
    """Operand shapes do not match the representation dimension."""


@dataclass(frozen=True)
class FockRep:
    params: DeformationParams
    dim: int
    x0: float
    nu0: float
    weights: np.ndarray  # length dim+1, w_k = bracket(x0 + l*k)
    a: np.ndarray        # lowering: a[k-1, k] = sqrt(w_k)
    a_dag: np.ndarray    # raising, transpose of a
    n_op: np.ndarray     # diag(nu0 + l*k)
    p_op: np.ndarray     # grading diagonal diag(p**(-x_k))
    q_op: np.ndarray     # grading diagonal diag(q**(x_k))

    @property
    def x_lattice(self) -> np.ndarray:
        return self.x0 + self.params.l * np.arange(self.dim)

    def generator(self, symbol: str) -> np.ndarray:
        table = {
            "1": np.eye(self.dim),
            "a": self.a,
            "a+": self.a_dag,
            "N": self.n_op,
            "P": self.p_op,
            "Q": self.q_op,
        }
        try:
            return table[symbol]
        except KeyError:
            raise KeyError(f"unknown generator symbol {symbol!r}") from None


def _checked_exp_array(t: np.ndarray) -> np.ndarray:
    worst = float(np.max(np.abs(t))) if t.size else 0.0
    if worst > EXP_LIMIT:
        raise ExponentOverflowError(f"exponent magnitude {worst:.3g} exceeds {EXP_LIMIT:g}")
    return np.exp(t)


def build(
    params: DeformationParams,
    dim: int,
    x0: Optional[float] = None,
    nu0: float = 0.0,
) -> FockRep:
    """Construct the truncated representation of size `dim`.

    x0 defaults to params.beta (the structure-function offset); the
    lowest-weight condition w_0 = bracket(x0) = 0 then holds only for
    beta = 0.  Pass x0=0 explicitly to absorb a nonzero beta into the
    lattice.
    """
    if dim < 1:
        raise FockError(f"dim must be positive, got {dim}")
    if x0 is None:
        x0 = params.beta
    x0 = float(x0)
    nu0 = float(nu0)

    weights = np.array([bracket(x0 + params.l * k, params) for k in range(dim + 1)])
    scale = max(1.0, float(np.max(np.abs(weights))))
    if not (-_NEGATIVE_WEIGHT_TOL * scale <= weights[0] <= _LOWEST_WEIGHT_TOL * scale):
        raise NotLowestWeightError(
            f"w_0 = {weights[0]:.6g} != 0: level 0 is not annihilated "
            f"(x0 = {x0:.6g}; the lattice must start at x0 = 0)"
        )
    for k in range(1, dim + 1):
        if weights[k] < -_NEGATIVE_WEIGHT_TOL * scale:
            raise NegativeWeightError(f"w_{k} = {weights[k]:.6g} < 0")

    a = np.zeros((dim, dim))
    for k in range(1, dim):
        a[k - 1, k] = math.sqrt(max(weights[k], 0.0))
    a_dag = a.T.copy()

    lp = math.log(params.p)
    lq = math.log(params.q)
    x = x0 + params.l * np.arange(dim)
    p_op = np.diag(_checked_exp_array(-x * lp))
    q_op = np.diag(_checked_exp_array(x * lq))
    n_op = np.diag(nu0 + params.l * np.arange(dim))

    return FockRep(params, dim, x0, nu0, weights, a, a_dag, n_op, p_op, q_op)


def interior_projector(dim: int, levels: int = 1) -> np.ndarray:
    """Diagonal projector zeroing the top `levels` basis levels."""
    pi = np.eye(dim)
    for k in range(max(dim - levels, 0), dim):
        pi[k, k] = 0.0
    return pi


def check_relations(rep: FockRep, mode: str = "grading", tol: float = 1e-10) -> CheckReport:
    """Residuals of the defining relations as matrix identities.

    The two twisted relations are compared after projecting out the top
    level, whose a a+ entry is corrupted by the truncation.  In grading
    mode P, Q are the stored diagonals; in literal mode they are
    recomputed as diag(p**-(alpha*nu_k + beta)), diag(q**(alpha*nu_k +
    beta)) from the eigenvalues nu_k of N.  Failures are reported, not
    raised.
    """
    if mode not in ("grading", "literal"):
        raise ValueError(f"mode must be 'grading' or 'literal', got {mode!r}")
    params = rep.params
    if mode == "grading":
        p_gen, q_gen = rep.p_op, rep.q_op
    else:
        nu = rep.nu0 + params.l * np.arange(rep.dim)
        expo = params.alpha * nu + params.beta
        p_gen = np.diag(_checked_exp_array(-expo * math.log(params.p)))
        q_gen = np.diag(_checked_exp_array(expo * math.log(params.q)))

    a, ad, n_op = rep.a, rep.a_dag, rep.n_op
    pi = interior_projector(rep.dim, levels=1)
    ql = params.q ** params.l
    pl = params.p ** (-params.l)

    r_q = (a @ ad - ql * (ad @ a) - p_gen) @ pi
    r_p = (a @ ad - pl * (ad @ a) - q_gen) @ pi
    r_lower = n_op @ a - a @ n_op + params.l * a
    r_raise = n_op @ ad - ad @ n_op - params.l * ad

    def mx(m: np.ndarray) -> float:
        return float(np.max(np.abs(m)))

    entries = (
        CheckEntry("aa+ - q^l a+a = P", mx(r_q), tol),
        CheckEntry("aa+ - p^-l a+a = Q", mx(r_p), tol),
        CheckEntry("[N, a] = -l a", mx(r_lower), tol),
        CheckEntry("[N, a+] = l a+", mx(r_raise), tol),
    )
    metadata = {
        "params": params.as_dict(),
        "dim": rep.dim,
        "mode": mode,
        "x0": rep.x0,
        "nu0": rep.nu0,
        "maxweight": float(np.max(np.abs(rep.weights))),
    }
    return CheckReport("fock-relations", entries, metadata)


def apply_word(rep: FockRep, word: Sequence[str], state: np.ndarray) -> np.ndarray:
    """Apply a product of generators to a state; rightmost symbol first."""
    if len(word) == 0:
        raise ValueError("word must be nonempty")
    vec = np.asarray(state, dtype=float)
    if vec.shape != (rep.dim,):
        raise DimensionMismatchError(f"state has shape {vec.shape}, expected ({rep.dim},)")
    if not np.all(np.isfinite(vec)):
        raise ValueError("state must be finite")
    for symbol in reversed(list(word)):
        vec = rep.generator(symbol) @ vec
    return vec
