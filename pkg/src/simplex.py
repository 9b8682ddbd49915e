"""
Exact rational simplex method.

Solves: maximize c.x subject to A x <= b, x >= 0, with b >= 0 so that the
slack basis is feasible from the start. Pivoting follows Bland's rule, which
rules out cycling on the degenerate vertices that the hull-edge programs are
full of.
"""
import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from .errors import InfeasibleError, UnboundedError

logger = logging.getLogger(__name__)


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> Tuple[Fraction, List[Fraction]]:
    """Return the optimum value and an optimal x."""
    m, k = len(A), len(c)
    if any(Fraction(v) < 0 for v in b):
        raise InfeasibleError("slack basis needs a non-negative right-hand side")

    # rows: constraints then the objective row; columns: x, slacks, rhs
    tableau = np.empty((m + 1, k + m + 1), dtype=object)
    tableau[:, :] = Fraction(0)
    for i, row in enumerate(A):
        tableau[i, :k] = [Fraction(v) for v in row]
        tableau[i, k + i] = Fraction(1)
        tableau[i, -1] = Fraction(b[i])
    tableau[m, :k] = [-Fraction(v) for v in c]
    basis = list(range(k, k + m))

    pivots = 0
    while True:
        entering = next((j for j in range(k + m) if tableau[m, j] < 0), None)
        if entering is None:
            break
        leaving, best = None, None
        for i in range(m):
            a = tableau[i, entering]
            if a > 0:
                ratio = tableau[i, -1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    leaving, best = i, ratio
        if leaving is None:
            raise UnboundedError(f"objective unbounded along variable {entering}")
        _pivot(tableau, leaving, entering)
        basis[leaving] = entering
        pivots += 1

    x = [Fraction(0)] * k
    for i, var in enumerate(basis):
        if var < k:
            x[var] = tableau[i, -1]
    logger.debug(f"Simplex finished after {pivots} pivots with value {tableau[m, -1]}")
    return tableau[m, -1], x


def _pivot(tableau: np.ndarray, row: int, col: int):
    tableau[row, :] = tableau[row, :] / tableau[row, col]
    for i in range(tableau.shape[0]):
        if i != row and tableau[i, col] != 0:
            tableau[i, :] = tableau[i, :] - tableau[i, col] * tableau[row, :]
