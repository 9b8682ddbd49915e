"""
Lagrangian matroid polytopes: the convex hull of the points v_B in [-1, 1]^n.

Edges are found pair by pair with an exact linear program, and a collection
passes the root check when every edge is parallel to a root of type C_n.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from . import config
from .errors import BoundExceededError, InvalidMatroidError, InvalidWordError
from .hyperoct import SignedPerm, act_on_point
from .lagmat import AdmissibleSet, LagrangianMatroid
from .models import PolytopeDocument
from .simplex import maximize

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]


def point_of(B: AdmissibleSet) -> Point:
    return tuple(B.signs)


def vertices_from_matroid(collection: LagrangianMatroid) -> List[Point]:
    """One point per base, in base order (which is descending coordinate order)."""
    return [point_of(B) for B in collection]


def _check_size(points: Sequence[Point]):
    if len(points) > config.MAX_HULL_POINTS:
        raise BoundExceededError(f"{len(points)} points exceeds the hull bound of {config.MAX_HULL_POINTS}")
    if points and len(points[0]) > config.MAX_HULL_DIM:
        raise BoundExceededError(f"dimension {len(points[0])} exceeds the hull bound of {config.MAX_HULL_DIM}")


def edge_certificate(points: Sequence[Point], i: int, j: int) -> Optional[List[Fraction]]:
    """A functional w in [-1, 1]^n maximised over the points exactly on points i and j.

    Solved as: maximise t subject to w.(p - r) >= t and w.(q - r) >= t for every
    other point r, w.p = w.q, 0 <= t <= 1, with w = x - y and x, y in [0, 1].
    """
    p, q = np.array(points[i], dtype=object), np.array(points[j], dtype=object)
    n = len(p)
    rows, rhs = [], []

    def add(w_coeffs, t_coeff, bound):
        rows.append(list(w_coeffs) + [-v for v in w_coeffs] + [t_coeff])
        rhs.append(bound)

    for k, r in enumerate(points):
        if k in (i, j):
            continue
        r = np.array(r, dtype=object)
        add(-(p - r), 1, 0)
        add(-(q - r), 1, 0)
    add(p - q, 0, 0)
    add(q - p, 0, 0)
    for a in range(2 * n + 1):
        rows.append([int(b == a) for b in range(2 * n + 1)])
        rhs.append(1)

    objective = [0] * (2 * n) + [1]
    value, x = maximize(objective, rows, rhs)
    if value <= 0:
        return None
    return [x[a] - x[n + a] for a in range(n)]


def _certified(points: Sequence[Point], i: int, j: int, w: Sequence[Fraction]) -> bool:
    values = [sum(a * b for a, b in zip(w, pt)) for pt in points]
    top = values[i]
    return values[j] == top and all(v < top for k, v in enumerate(values) if k not in (i, j))


def is_edge(points: Sequence[Point], i: int, j: int) -> bool:
    if len(points) == 2:
        return points[0] != points[1]
    w = edge_certificate(points, i, j)
    if w is None:
        return False
    if not _certified(points, i, j, w):
        raise ArithmeticError(f"LP functional {w} does not separate points {i} and {j}")
    return True


def hull_edges(points: Sequence[Point]) -> List[Tuple[int, int]]:
    """Index pairs (i, j), i < j, spanning a 1-face of the convex hull."""
    points = list(points)
    _check_size(points)
    edges = [(i, j) for i, j in itertools.combinations(range(len(points)), 2) if is_edge(points, i, j)]
    logger.debug(f"{len(points)} points span {len(edges)} hull edges")
    return edges


@dataclass(frozen=True)
class MatroidPolytope:
    """Vertices sorted in descending order; edges are solved for on first use."""
    n: int
    vertices: Tuple[Point, ...]

    def __post_init__(self):
        ordered = tuple(sorted(set(map(tuple, self.vertices)), reverse=True))
        if any(len(v) != self.n for v in ordered):
            raise InvalidMatroidError(f"vertices must have {self.n} coordinates")
        object.__setattr__(self, "vertices", ordered)

    @cached_property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(hull_edges(self.vertices))

    @classmethod
    def from_document(cls, doc: Union[PolytopeDocument, dict]) -> "MatroidPolytope":
        """Edges in the document are ignored and solved for again."""
        if not isinstance(doc, dict) or "n" not in doc or "vertices" not in doc:
            raise InvalidMatroidError("polytope document needs 'n' and 'vertices'")
        n, vertices = doc["n"], doc["vertices"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise InvalidMatroidError(f"'n' must be a positive integer, got {n!r}")
        if not isinstance(vertices, list) or not vertices:
            raise InvalidMatroidError("'vertices' must be a non-empty list")
        for v in vertices:
            if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
                raise InvalidMatroidError(f"vertex {v!r} is not a list of integers")
        return cls(n, tuple(tuple(v) for v in vertices))

    @classmethod
    def from_matroid(cls, collection: LagrangianMatroid) -> "MatroidPolytope":
        return cls(collection.n, tuple(vertices_from_matroid(collection)))

    def apply(self, w: SignedPerm) -> "MatroidPolytope":
        """Image under a signed permutation."""
        if w.n != self.n:
            raise InvalidWordError(f"element of BC_{w.n} acting on a polytope in dimension {self.n}")
        return MatroidPolytope(self.n, tuple(act_on_point(w, v) for v in self.vertices))

    def skeleton(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((self.vertices[a], self.vertices[b]) for a, b in self.edges)
        return graph

    def to_document(self) -> PolytopeDocument:
        return {
            "n": self.n,
            "vertices": [list(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges],
        }


@dataclass(frozen=True)
class RootCheck:
    ok: bool
    edge: Optional[Tuple[Point, Point]] = None

    def __bool__(self) -> bool:
        return self.ok

    @property
    def difference(self) -> Optional[Point]:
        if self.edge is None:
            return None
        return tuple(a - b for a, b in zip(*self.edge))


def gs_check(collection: LagrangianMatroid) -> RootCheck:
    """Every hull edge has a difference vector with at most two non-zero entries.

    Pairs that differ in at most two coordinates pass whether or not they span an
    edge, so only the remaining pairs are put to the edge test.
    """
    points = vertices_from_matroid(collection)
    _check_size(points)
    for a, b in itertools.combinations(range(len(points)), 2):
        p, q = points[a], points[b]
        if sum(x != y for x, y in zip(p, q)) > 2 and is_edge(points, a, b):
            logger.info(f"Edge {p} - {q} is not parallel to a root")
            return RootCheck(False, (p, q))
    return RootCheck(True)


def reflect(P: MatroidPolytope, g: SignedPerm) -> MatroidPolytope:
    if not g.is_reflection():
        raise InvalidWordError(f"{g} is not a generating reflection")
    return P.apply(g)
