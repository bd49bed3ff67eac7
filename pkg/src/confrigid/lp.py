"""Dense phase-1 simplex (Bland's rule) for small equality-form feasibility
problems: find x >= 0 with A x = b, by minimizing the sum of artificial
variables.  Dimensions here are tiny (eigenspace multiplicity + 1), so the
priority is determinism, not speed."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PIVOT_TOL = 1e-9


@dataclass(frozen=True)
class Phase1Result:
    feasible: bool
    x: np.ndarray
    objective: float
    iterations: int


def phase1_feasibility(A: np.ndarray, b: np.ndarray, max_iter: int = 10_000) -> Phase1Result:
    """Solve min 1^T a  s.t.  A x + a = b (rows pre-flipped so b >= 0),
    x, a >= 0, with Bland's anti-cycling rule.  Feasible iff optimum ~ 0."""
    A = np.asarray(A, dtype=float).copy()
    b = np.asarray(b, dtype=float).copy()
    m, n = A.shape
    flip = b < 0
    A[flip] *= -1.0
    b[flip] *= -1.0

    # tableau columns: n structural + m artificial + rhs
    T = np.zeros((m + 1, n + m + 1))
    T[:m, :n] = A
    T[:m, n : n + m] = np.eye(m)
    T[:m, -1] = b
    # objective row: minimize sum of artificials -> reduced costs
    T[m, :n] = -A.sum(axis=0)
    T[m, -1] = -b.sum()
    basis = list(range(n, n + m))

    it = 0
    while it < max_iter:
        it += 1
        enter = -1
        for j in range(n + m):  # Bland: smallest eligible index
            if T[m, j] < -PIVOT_TOL:
                enter = j
                break
        if enter < 0:
            break
        leave, best = -1, np.inf
        for i in range(m):
            if T[i, enter] > PIVOT_TOL:
                ratio = T[i, -1] / T[i, enter]
                if ratio < best - PIVOT_TOL or (
                    abs(ratio - best) <= PIVOT_TOL
                    and (leave < 0 or basis[i] < basis[leave])
                ):
                    best, leave = ratio, i
        if leave < 0:
            break  # unbounded cannot happen in phase 1; guard anyway
        piv = T[leave, enter]
        T[leave] /= piv
        for i in range(m + 1):
            if i != leave and abs(T[i, enter]) > 0:
                T[i] -= T[i, enter] * T[leave]
        basis[leave] = enter

    x = np.zeros(n)
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = T[i, -1]
    objective = float(-T[m, -1])
    return Phase1Result(
        feasible=objective <= 1e-9, x=x, objective=objective, iterations=it
    )
