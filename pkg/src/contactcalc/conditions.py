"""Pointwise condition checks: contact positivity and dilation equations.

The top-form coefficient of alpha ^ (d alpha)^n is evaluated by an explicit
signed-permutation expansion over the chart (or tangent-frame) basis.  This
is exact combinatorics — feasible for dimension 2n+1 <= 9 — and higher
dimensions are rejected outright.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .charts import ChartPoint, tangent_frame
from .errors import DomainError
from .fields import flow, two_form_matrix
from .forms import DEFAULT_STEP, OneFormField, d_matrix, eval_one_form

MAX_TOP_DIM = 9


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a sampled condition check.

    ``margin`` is the smallest signed quantity tested (positive is good);
    ``passed`` iff margin > -tolerance on every sample.
    """

    passed: bool
    margin: float
    tolerance: float
    samples: int

    def __str__(self):
        word = "PASS" if self.passed else "FAIL"
        return (f"{word} margin={self.margin:.6e} tol={self.tolerance:.1e} "
                f"samples={self.samples}")


def _report(margin: float, tolerance: float, samples: int) -> ConditionReport:
    return ConditionReport(margin > -tolerance, margin, tolerance, samples)


@lru_cache(maxsize=None)
def _perm_table(m: int):
    """All permutations of range(m) with their signs, as numpy arrays."""
    perms = np.array(list(itertools.permutations(range(m))), dtype=np.intp)
    # Parity via inversion count, vectorized over the pair positions.
    inversions = np.zeros(len(perms), dtype=np.intp)
    for i in range(m):
        for j in range(i + 1, m):
            inversions += perms[:, i] > perms[:, j]
    signs = np.where(inversions % 2 == 0, 1.0, -1.0)
    return perms, signs


def top_form_coefficient(a: np.ndarray, m2: np.ndarray) -> float:
    """(alpha ^ omega^n)(e_1, ..., e_{2n+1}) for covector a and skew matrix m2."""
    m = a.size
    if m % 2 == 0:
        raise DomainError(f"top form needs odd dimension, got {m}")
    if m > MAX_TOP_DIM:
        raise DomainError(
            f"dimension {m} exceeds the permutation-expansion limit {MAX_TOP_DIM}")
    n = (m - 1) // 2
    perms, signs = _perm_table(m)
    terms = signs * a[perms[:, 0]]
    for j in range(n):
        terms = terms * m2[perms[:, 1 + 2 * j], perms[:, 2 + 2 * j]]
    return float(terms.sum() / (2.0 ** n * math.factorial(n)))


def contact_margin(alpha: OneFormField, p: ChartPoint,
                   step: float = DEFAULT_STEP, orientation: int = 1) -> float:
    """The top-form coefficient at one point, on an oriented tangent frame
    for constrained charts.  The chart's own orientation sign is applied,
    times any extra ``orientation`` supplied by the caller."""
    a = eval_one_form(alpha, p)
    m2 = two_form_matrix(alpha, p, step)
    if p.chart.constraints:
        frame = tangent_frame(p, oriented=True)
        a = frame.T @ a
        m2 = frame.T @ m2 @ frame
    return orientation * p.chart.orientation * top_form_coefficient(a, m2)


def check_contact_condition(alpha: OneFormField, points: Sequence[ChartPoint],
                            step: float = DEFAULT_STEP, tolerance: float = 0.0,
                            orientation: int = 1) -> ConditionReport:
    """Positivity of alpha ^ (d alpha)^n at every sample point."""
    if not points:
        raise DomainError("empty sample set")
    margin = min(contact_margin(alpha, p, step, orientation) for p in points)
    return _report(margin, tolerance, len(points))


def _flow_jacobian(v: Callable[[np.ndarray], np.ndarray], x: np.ndarray,
                   time: float, step: float) -> tuple[np.ndarray, np.ndarray]:
    """(phi_time(x), D phi_time(x)) with the Jacobian by central differences."""
    y = flow(v, x, time)
    m = x.size
    jac = np.empty((m, m))
    for i in range(m):
        xp, xm = x.copy(), x.copy()
        xp[i] += step
        xm[i] -= step
        jac[:, i] = (flow(v, xp, time) - flow(v, xm, time)) / (2.0 * step)
    return y, jac


def lie_derivative_one_form(v, alpha: OneFormField, p: ChartPoint,
                            h: float = 1e-4, step: float = DEFAULT_STEP) -> np.ndarray:
    """L_v alpha at p via central differences of the flow pullback."""
    def pull(t: float) -> np.ndarray:
        y, jac = _flow_jacobian(v, p.coords, t, step)
        return jac.T @ np.asarray(alpha.evaluator(y), dtype=float)

    return (pull(h) - pull(-h)) / (2.0 * h)


def check_contact_dilation(v, alpha: OneFormField, points: Sequence[ChartPoint],
                           h: float = 1e-4, step: float = DEFAULT_STEP,
                           tolerance: float = 1e-6) -> ConditionReport:
    """L_v alpha = alpha, checked componentwise; margin is -max residual."""
    if not points:
        raise DomainError("empty sample set")
    worst = 0.0
    for p in points:
        resid = lie_derivative_one_form(v, alpha, p, h, step) - alpha.at(p)
        worst = max(worst, float(np.max(np.abs(resid))))
    return _report(-worst, tolerance, len(points))


def check_two_form_dilation(v, omega_source, points: Sequence[ChartPoint],
                            h: float = 1e-4, step: float = DEFAULT_STEP,
                            tolerance: float = 1e-6) -> ConditionReport:
    """L_v omega = omega for a 2-form given by a primitive or a matrix callable."""
    if not points:
        raise DomainError("empty sample set")
    if isinstance(omega_source, OneFormField):
        omega = lambda y: d_matrix(omega_source, y, step)
    else:
        omega = lambda y: np.asarray(omega_source(y), dtype=float)

    worst = 0.0
    for p in points:
        def pull(t: float) -> np.ndarray:
            y, jac = _flow_jacobian(v, p.coords, t, step)
            return jac.T @ omega(y) @ jac

        lie = (pull(h) - pull(-h)) / (2.0 * h)
        resid = lie - omega(p.coords)
        worst = max(worst, float(np.max(np.abs(resid))))
    return _report(-worst, tolerance, len(points))
