"""
Oriented maps on closed surfaces as half-edge permutations.

A map with n edges lives on the half-edges 1..2n. Edge j owns the half-edges
2j-1 and 2j, so alpha is always (1 2)(3 4)...(2n-1 2n); documents with any
other pairing are relabelled on the way in. The vertices are the cycles of
sigma and the faces the cycles of phi = (sigma alpha)^-1.
"""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

from . import config
from .errors import BoundExceededError, InvalidMapError, PermutationError
from .models import MapDocument
from .permkit import (Perm, compose, conjugate, cycle_count, cycles, group_order, inverse,
                      is_fpf_involution, is_transitive, parse_cycles)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EdgeSubset:
    """A set A of edge labels out of 1..n."""
    n: int
    members: FrozenSet[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        bad = [j for j in self.members if not 1 <= j <= self.n]
        if bad:
            raise InvalidMapError(f"edge index {sorted(bad)[0]} out of range 1..{self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int] = ()) -> "EdgeSubset":
        return cls(n, frozenset(members))

    @classmethod
    def full(cls, n: int) -> "EdgeSubset":
        return cls(n, frozenset(range(1, n + 1)))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "EdgeSubset":
        """Edge j is a member when bit j-1 of mask is set."""
        return cls(n, frozenset(j for j in range(1, n + 1) if mask >> (j - 1) & 1))

    @property
    def mask(self) -> int:
        return sum(1 << (j - 1) for j in self.members)

    def complement(self) -> "EdgeSubset":
        return EdgeSubset(self.n, frozenset(range(1, self.n + 1)) - self.members)

    def symmetric_difference(self, other: "EdgeSubset") -> "EdgeSubset":
        if other.n != self.n:
            raise InvalidMapError(f"edge subsets of {self.n} and {other.n} edges")
        return EdgeSubset(self.n, self.members ^ other.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


def canonical_alpha(n: int) -> Perm:
    return Perm.from_cycles([(2 * j - 1, 2 * j) for j in range(1, n + 1)], 2 * n)


def edge_of(half_edge: int) -> int:
    return (half_edge + 1) // 2


def edge_product(A: EdgeSubset) -> Perm:
    """The product of the transpositions c_j = (2j-1 2j) over j in A."""
    images = list(range(1, 2 * A.n + 1))
    for j in A.members:
        images[2 * j - 2], images[2 * j - 1] = 2 * j, 2 * j - 1
    return Perm(tuple(images))


@dataclass(frozen=True)
class OrientedMap:
    n: int
    sigma: Perm
    # original half-edge label of each canonical label, when ingestion relabelled
    label_trace: Optional[Tuple[int, ...]] = field(default=None, compare=False)

    @cached_property
    def alpha(self) -> Perm:
        return canonical_alpha(self.n)

    @cached_property
    def phi(self) -> Perm:
        return inverse(compose(self.sigma, self.alpha))

    def validate(self) -> "OrientedMap":
        if self.n < 1:
            raise InvalidMapError(f"a map needs at least one edge, got n={self.n}")
        if self.sigma.degree != 2 * self.n:
            raise InvalidMapError(f"sigma acts on {self.sigma.degree} points, expected {2 * self.n}")
        if not is_transitive([self.sigma, self.alpha], 2 * self.n):
            raise InvalidMapError("<sigma, alpha> is not transitive: the map is disconnected")
        twice = 2 - cycle_count(self.sigma) + self.n - cycle_count(self.phi)
        if twice % 2 or twice < 0:
            raise InvalidMapError(f"Euler characteristic gives genus {twice / 2}")
        return self


def from_document(doc: Union[MapDocument, dict]) -> OrientedMap:
    """Read and validate a map document, canonicalising alpha if needed."""
    if not isinstance(doc, dict) or "sigma" not in doc:
        raise InvalidMapError("map document needs a 'sigma' entry")
    try:
        sigma_cycles = _read_cycles(doc["sigma"])
        alpha_cycles = _read_cycles(doc["alpha"]) if doc.get("alpha") is not None else None
    except PermutationError as e:
        raise InvalidMapError(f"malformed cycles: {e}") from e

    n = doc.get("n")
    if n is None:
        labels = [x for c in sigma_cycles + (alpha_cycles or []) for x in c]
        n = (max(labels, default=0) + 1) // 2
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidMapError(f"'n' must be a positive integer, got {n!r}")

    try:
        sigma = Perm.from_cycles(sigma_cycles, 2 * n)
        alpha = Perm.from_cycles(alpha_cycles, 2 * n) if alpha_cycles is not None else canonical_alpha(n)
    except PermutationError as e:
        raise InvalidMapError(str(e)) from e

    if not is_fpf_involution(alpha):
        raise InvalidMapError(f"alpha {alpha} is not a fixed-point free involution")
    if not is_transitive([sigma, alpha], 2 * n):
        raise InvalidMapError("<sigma, alpha> is not transitive: the map is disconnected")

    trace = None
    if alpha != canonical_alpha(n):
        # edges are numbered by their smallest half-edge label
        pairs = sorted(sorted(c) for c in cycles(alpha))
        images = [0] * (2 * n)
        for j, (a, b) in enumerate(pairs, start=1):
            images[a - 1], images[b - 1] = 2 * j - 1, 2 * j
        h = Perm(tuple(images))
        sigma = conjugate(sigma, h)
        trace = inverse(h).images
        logger.info(f"Relabelled half-edges to canonical alpha: {h}")

    return OrientedMap(n, sigma, trace).validate()


def _read_cycles(value) -> List[List[int]]:
    if isinstance(value, str):
        return parse_cycles(value)
    if not isinstance(value, list) or not all(isinstance(c, list) for c in value):
        raise PermutationError(f"expected cycle notation or a list of cycles, got {value!r}")
    return value


def to_document(M: OrientedMap) -> MapDocument:
    V, E, F = counts(M)
    doc: MapDocument = {
        "n": M.n,
        "sigma": cycles(M.sigma),
        "alpha": cycles(M.alpha),
        "phi": cycles(M.phi),
        "vertices": V,
        "edges": E,
        "faces": F,
        "genus": genus(M),
    }
    if M.label_trace is not None:
        doc["label_trace"] = list(M.label_trace)
    return doc


def counts(M: OrientedMap) -> Tuple[int, int, int]:
    return cycle_count(M.sigma), M.n, cycle_count(M.phi)


def genus(M: OrientedMap) -> int:
    V, E, F = counts(M)
    twice = 2 - V + E - F
    if twice % 2 or twice < 0:
        raise InvalidMapError(f"Euler characteristic gives genus {twice / 2}")
    return twice // 2


def is_planar(M: OrientedMap) -> bool:
    return genus(M) == 0


def dual(M: OrientedMap) -> OrientedMap:
    return OrientedMap(M.n, inverse(M.phi))


def partial_dual(M: OrientedMap, A: Union[EdgeSubset, Iterable[int]]) -> OrientedMap:
    """Dualise the edges in A: sigma becomes sigma * prod c_j."""
    if not isinstance(A, EdgeSubset):
        A = EdgeSubset.of(M.n, A)
    if A.n != M.n:
        raise InvalidMapError(f"edge subset of {A.n} edges applied to a map with {M.n}")
    if not A.members:
        return M
    return OrientedMap(M.n, compose(M.sigma, edge_product(A)))


def is_one_face(M: OrientedMap) -> bool:
    return cycle_count(M.phi) == 1


def relabel_edges(M: OrientedMap, pi: Perm) -> OrientedMap:
    """Rename edge j to pi(j), carrying half-edges 2j-1, 2j to 2pi(j)-1, 2pi(j)."""
    if pi.degree != M.n:
        raise InvalidMapError(f"edge permutation of degree {pi.degree} for a map with {M.n} edges")
    images = []
    for j in range(1, M.n + 1):
        images.extend((2 * pi(j) - 1, 2 * pi(j)))
    return OrientedMap(M.n, conjugate(M.sigma, Perm(tuple(images))))


def is_isomorphic(M1: OrientedMap, M2: OrientedMap) -> Optional[Perm]:
    """A half-edge bijection h carrying (sigma1, alpha1) onto (sigma2, alpha2), if one exists."""
    if M1.n != M2.n or counts(M1) != counts(M2):
        return None
    m = 2 * M1.n
    for target in range(1, m + 1):
        h = _propagate(M1, M2, target)
        if h is not None:
            return h
    return None


def _propagate(M1: OrientedMap, M2: OrientedMap, target: int) -> Optional[Perm]:
    m = 2 * M1.n
    images = [0] * (m + 1)
    used = [False] * (m + 1)
    images[1], used[target] = target, True
    stack = [1]
    while stack:
        x = stack.pop()
        hx = images[x]
        for g1, g2 in ((M1.sigma, M2.sigma), (M1.alpha, M2.alpha)):
            y, hy = g1(x), g2(hx)
            if images[y]:
                if images[y] != hy:
                    return None
            elif used[hy]:
                return None
            else:
                images[y], used[hy] = hy, True
                stack.append(y)
    return Perm(tuple(images[1:]))


@dataclass(frozen=True)
class OrbitRow:
    subset: EdgeSubset
    vertices: int
    faces: int
    genus: int
    one_face: bool
    iso_class: int


def enumerate_partial_duals(M: OrientedMap, limit: Optional[int] = None) -> List[OrbitRow]:
    """One row per subset A of E, ordered by A read as a binary number."""
    limit = config.MAX_EDGES if limit is None else limit
    if M.n > limit:
        raise BoundExceededError(f"{M.n} edges exceeds the enumeration bound of {limit}")
    logger.info(f"Enumerating {2 ** M.n} partial duals of a map with {M.n} edges")

    rows = []
    representatives: List[OrientedMap] = []
    for A in subsets(M.n):
        P = partial_dual(M, A)
        iso_class = next(
            (k for k, R in enumerate(representatives) if is_isomorphic(P, R) is not None), None)
        if iso_class is None:
            iso_class = len(representatives)
            representatives.append(P)
        V, _, F = counts(P)
        rows.append(OrbitRow(A, V, F, genus(P), F == 1, iso_class))
    logger.info(f"Found {len(representatives)} isomorphism classes among the partial duals")
    return rows


def cartographic_group_order(M: OrientedMap) -> int:
    return group_order([M.sigma, M.alpha, M.phi])


def iter_maps(n: int) -> Iterator[OrientedMap]:
    """Every connected map with n edges and canonical alpha, one per sigma in S_2n."""
    alpha = canonical_alpha(n)
    for images in itertools.permutations(range(1, 2 * n + 1)):
        sigma = Perm(images)
        if is_transitive([sigma, alpha], 2 * n):
            yield OrientedMap(n, sigma)


def random_map(n: int, rng: Optional[random.Random] = None, attempts: int = 1000) -> OrientedMap:
    """A uniformly random connected map with n edges."""
    rng = rng or random.Random()
    alpha = canonical_alpha(n)
    images = list(range(1, 2 * n + 1))
    for _ in range(attempts):
        rng.shuffle(images)
        sigma = Perm(tuple(images))
        if is_transitive([sigma, alpha], 2 * n):
            return OrientedMap(n, sigma)
    raise InvalidMapError(f"no connected map with {n} edges found in {attempts} draws")


def subsets(n: int) -> Iterator[EdgeSubset]:
    """Every subset of the n edges, in mask order."""
    return (EdgeSubset.from_mask(n, mask) for mask in range(2 ** n))
