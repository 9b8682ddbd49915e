"""
Exact rational representations (X|Y) of Lagrangian matroids.

Columns are labelled 1..n followed by 1*..n*. Matrices hold Fractions in
numpy object arrays, so every determinant and rank below is exact.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, List, Literal, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import InvalidMatrixError, OracleMismatchError
from .lagmat import AdmissibleSet, LagrangianMatroid, assert_lagrangian, bases_of_map
from .models import RepresentationDocument
from .permkit import cycles
from .surfmap import EdgeSubset, OrientedMap, edge_of, is_one_face, partial_dual

logger = logging.getLogger(__name__)

Mode = Literal["orthogonal", "symplectic"]
MODES = ("orthogonal", "symplectic")


def _to_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise InvalidMatrixError(f"not a rational number: {value!r}")
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise InvalidMatrixError(f"not a rational number: {value!r}") from e


@dataclass(frozen=True)
class Representation:
    n: int
    rows: Tuple[Tuple[Fraction, ...], ...]
    mode: Mode = "orthogonal"

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise InvalidMatrixError(f"'n' must be a positive integer, got {self.n!r}")
        if self.mode not in MODES:
            raise InvalidMatrixError(f"unknown mode {self.mode!r}, expected one of {MODES}")
        rows = tuple(tuple(_to_fraction(v) for v in row) for row in self.rows)
        if not rows or len(rows) > self.n:
            raise InvalidMatrixError(f"expected 1..{self.n} rows, got {len(rows)}")
        if any(len(row) != 2 * self.n for row in rows):
            raise InvalidMatrixError(f"every row needs {2 * self.n} entries")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_document(cls, doc: Union[RepresentationDocument, dict]) -> "Representation":
        if not isinstance(doc, dict) or "n" not in doc or "rows" not in doc:
            raise InvalidMatrixError("representation document needs 'n' and 'rows'")
        if not isinstance(doc["rows"], list) or not all(isinstance(r, list) for r in doc["rows"]):
            raise InvalidMatrixError("'rows' must be a list of lists")
        return cls(doc["n"], tuple(tuple(r) for r in doc["rows"]), doc.get("mode", "orthogonal"))

    def to_document(self) -> RepresentationDocument:
        return {
            "n": self.n,
            "mode": self.mode,
            "rows": [[str(v) for v in row] for row in self.rows],
        }

    @cached_property
    def matrix(self) -> np.ndarray:
        out = np.empty((len(self.rows), 2 * self.n), dtype=object)
        for i, row in enumerate(self.rows):
            out[i, :] = row
        return out

    @property
    def X(self) -> np.ndarray:
        return self.matrix[:, :self.n]

    @property
    def Y(self) -> np.ndarray:
        return self.matrix[:, self.n:]

    def columns_of(self, B: AdmissibleSet) -> List[int]:
        """0-based column indices picked by an admissible set."""
        return [i - 1 if s > 0 else self.n + i - 1 for i, s in enumerate(B.signs, start=1)]


def det(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise InvalidMatrixError("determinant of a non-square matrix")
    if size == 0:
        return Fraction(1)
    entries = [[Fraction(v) for v in row] for row in matrix]
    # clear denominators so the elimination runs on Python ints
    scale = 1
    for row in entries:
        for v in row:
            scale = math.lcm(scale, v.denominator)
    a = [[int(v * scale) for v in row] for row in entries]

    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[-1][-1], scale ** size)


def rank(rows: Union[np.ndarray, Sequence[Sequence]]) -> int:
    """Exact row rank by Gaussian elimination over the rationals."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    piv_r = 0
    for piv_c in range(n_cols):
        i_row = next((i for i in range(piv_r, n_rows) if m[i][piv_c] != 0), None)
        if i_row is None:
            continue
        m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = m[r][piv_c]
            if fr == 0:
                continue
            frp = fr / fp
            for c in range(piv_c, n_cols):
                m[r][c] -= m[piv_r][c] * frp
        piv_r += 1
        if piv_r == n_rows:
            break
    return piv_r


def isotropy_check(R: Representation, mode: Optional[Mode] = None) -> bool:
    """X Y^t symmetric (symplectic) or antisymmetric (orthogonal)."""
    mode = mode or R.mode
    if mode not in MODES:
        raise InvalidMatrixError(f"unknown mode {mode!r}")
    gram = R.X.dot(R.Y.T)
    target = gram.T if mode == "symplectic" else -gram.T
    return bool(np.all(gram == target))


def bases_from_matrix(R: Representation) -> LagrangianMatroid:
    """Admissible column sets with a non-zero n x n minor."""
    if len(R.rows) != R.n or rank(R.rows) != R.n:
        raise InvalidMatrixError(f"a Lagrangian representation needs rank {R.n}")
    if not isotropy_check(R):
        raise InvalidMatrixError(f"rows do not span an isotropic subspace in {R.mode} mode")
    bases = []
    for mask in range(2 ** R.n):
        B = AdmissibleSet.all_unstarred(R.n).flip(EdgeSubset.from_mask(R.n, mask).members)
        if det(R.matrix[:, R.columns_of(B)].tolist()) != 0:
            bases.append(B)
    logger.debug(f"{R.n}x{2 * R.n} matrix has {len(bases)} non-zero admissible minors")
    return assert_lagrangian(LagrangianMatroid.from_bases(R.n, bases), "a matrix")


def swap_columns(R: Representation, A: Union[EdgeSubset, Iterable[int]]) -> Representation:
    """Exchange columns j and j* for every j in A.

    In symplectic mode the column moved into position j* is negated, so that
    X Y^t stays symmetric; minors change by sign only.
    """
    members = A.members if isinstance(A, EdgeSubset) else frozenset(A)
    if any(not 1 <= j <= R.n for j in members):
        raise InvalidMatrixError(f"column indices {sorted(members)} out of range 1..{R.n}")
    order = list(range(2 * R.n))
    for j in members:
        order[j - 1], order[R.n + j - 1] = R.n + j - 1, j - 1
    swapped = R.matrix[:, order]
    if R.mode == "symplectic":
        for j in members:
            swapped[:, R.n + j - 1] = -swapped[:, R.n + j - 1]
    return Representation(R.n, tuple(tuple(row) for row in swapped.tolist()), R.mode)


def rowspace_intersection_dim(first: Representation, second: Representation) -> int:
    if first.n != second.n:
        raise InvalidMatrixError(f"representations over {first.n} and {second.n} columns pairs")
    stacked = list(first.rows) + list(second.rows)
    return rank(first.rows) + rank(second.rows) - rank(stacked)


def boundary_word(M: OrientedMap) -> List[int]:
    """The single face of a one-face map, read from its smallest half-edge."""
    if not is_one_face(M):
        raise InvalidMatrixError("boundary word needs a map with exactly one face")
    return cycles(M.phi)[0]


def interlacement_matrix(word: Sequence[int], n: int) -> List[List[int]]:
    """Signed interlacement of the edges along a boundary word.

    Entry (e, f) is zero unless the occurrences of e and f alternate; it is +1
    when the first occurrence of f falls between the two occurrences of e,
    and -1 otherwise.
    """
    positions = {}
    for p, h in enumerate(word):
        positions.setdefault(edge_of(h), []).append(p)
    if sorted(positions) != list(range(1, n + 1)) or any(len(v) != 2 for v in positions.values()):
        raise InvalidMatrixError("boundary word must visit every edge exactly twice")

    a = [[0] * n for _ in range(n)]
    for e in range(1, n + 1):
        p1, p2 = positions[e]
        for f in range(1, n + 1):
            if f == e:
                continue
            q1, q2 = positions[f]
            if (p1 < q1 < p2) != (p1 < q2 < p2):
                a[e - 1][f - 1] = 1 if p1 < q1 < p2 else -1
    return a


def interlacement_representation(M: OrientedMap, base: Optional[AdmissibleSet] = None) -> Representation:
    """An orthogonal representation of Delta(M) built from a one-face partial dual."""
    matroid = bases_of_map(M)
    if base is None:
        if not matroid.bases:
            raise InvalidMatrixError("map has no base")
        base = matroid.bases[0]
    elif base not in matroid:
        raise InvalidMatrixError(f"{base} is not a base of the map")

    D = EdgeSubset(M.n, base.starred())
    one_face = partial_dual(M, D)
    a = interlacement_matrix(boundary_word(one_face), M.n)
    rows = tuple(
        tuple([int(i == j) for j in range(M.n)] + a[i]) for i in range(M.n))
    R = swap_columns(Representation(M.n, rows, "orthogonal"), D)

    found = bases_from_matrix(R)
    if found != matroid:
        logger.error(f"Interlacement construction gave {found}, expected {matroid}")
        raise OracleMismatchError(
            f"matrix bases {found} differ from map bases {matroid} (base {base})")
    return R


def lagrangian_pair_check(M: OrientedMap, j: int) -> bool:
    """The representation and its j-swap meet in dimension n-1."""
    if not 1 <= j <= M.n:
        raise InvalidMatrixError(f"edge index {j} out of range 1..{M.n}")
    R = interlacement_representation(M)
    return rowspace_intersection_dim(R, swap_columns(R, {j})) == M.n - 1
