"""Dense primal simplex for tiny linear programs.

Solves  max c.x  subject to  A x <= b,  x >= 0,  with b >= 0, so the slack
basis is immediately feasible and no phase-1 is needed.  Bland's rule is used
throughout: the problems here have at most a few dozen variables, and
determinism matters more than pivot count.
"""
from __future__ import annotations

import numpy as np

from .errors import LPNumericalError

_PIVOT_TOL = 1e-9
_MAX_ITER = 20_000


def maximize(c: np.ndarray, A: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, float]:
    """Return (x, value) at an optimal basic feasible solution.

    Raises LPNumericalError if the program is unbounded or the iteration cap
    is hit (the inputs used in this package are always bounded, so either
    signals a caller bug or numerical trouble).
    """
    A = np.asarray(A, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    c = np.asarray(c, dtype=np.float64)
    m, nvar = A.shape
    if np.any(b < 0):
        raise LPNumericalError("right-hand side must be nonnegative")

    # tableau: columns = structural vars | slacks | rhs
    T = np.zeros((m, nvar + m + 1))
    T[:, :nvar] = A
    T[:, nvar : nvar + m] = np.eye(m)
    T[:, -1] = b
    obj = np.zeros(nvar + m + 1)
    obj[:nvar] = c
    basis = list(range(nvar, nvar + m))

    for _ in range(_MAX_ITER):
        entering = -1
        for j in range(nvar + m):  # Bland: lowest index with positive reduced cost
            if obj[j] > _PIVOT_TOL:
                entering = j
                break
        if entering < 0:
            x = np.zeros(nvar + m)
            x[basis] = T[:, -1]
            return x[:nvar], -float(obj[-1])
        col = T[:, entering]
        rows = np.nonzero(col > _PIVOT_TOL)[0]
        if len(rows) == 0:
            raise LPNumericalError("linear program is unbounded")
        ratios = T[rows, -1] / col[rows]
        best = ratios.min()
        # Bland tie-break: among minimal ratios, leave the basic var of lowest index
        tied = rows[np.nonzero(ratios <= best + _PIVOT_TOL * max(1.0, best))[0]]
        leave_row = min(tied, key=lambda r: basis[r])
        pivot = T[leave_row, entering]
        T[leave_row] /= pivot
        for r in range(m):
            if r != leave_row and T[r, entering] != 0.0:
                T[r] -= T[r, entering] * T[leave_row]
        obj -= obj[entering] * T[leave_row]
        basis[leave_row] = entering
    raise LPNumericalError("simplex iteration cap exceeded")
