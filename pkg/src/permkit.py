"""
Permutation algebra on the points 1..m.

Products are read left to right: compose(p, q) applies p first, then q, so
that the triple of the half-edge permutations of a map satisfies
compose(compose(sigma, alpha), phi) == identity.
"""
from __future__ import annotations

import logging
import re
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import PermutationError

logger = logging.getLogger(__name__)

ELEMENT_SEP_RE = r" *[, ] *"
CYCLE_RE = rf"\(( *\d+({ELEMENT_SEP_RE}\d+)* *)?\) *"


@dataclass(frozen=True)
class Perm:
    """A bijection of {1..m}; images[x - 1] is the image of x."""
    images: Tuple[int, ...]

    def __post_init__(self):
        if not self.images:
            raise PermutationError("a permutation needs at least one point")
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise PermutationError(f"not a bijection of 1..{len(self.images)}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= len(self.images):
            raise PermutationError(f"point {x} outside 1..{len(self.images)}")
        return self.images[x - 1]

    @classmethod
    def identity(cls, m: int) -> "Perm":
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Perm":
        """Build a permutation from disjoint cycles; missing points are fixed."""
        images = list(range(1, degree + 1))
        seen = set()
        for cycle in cycles:
            for x in cycle:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise PermutationError(f"cycle entries must be integers, got {x!r}")
                if not 1 <= x <= degree:
                    raise PermutationError(f"label {x} out of range 1..{degree}")
                if x in seen:
                    raise PermutationError(f"label {x} appears in more than one cycle position")
                seen.add(x)
            for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: Optional[int] = None) -> "Perm":
        """Parse cycle notation such as "(1)(2 3 4)" or "(2,3,4)"."""
        cycles = parse_cycles(text)
        largest = max((x for c in cycles for x in c), default=1)
        if degree is None:
            degree = largest
        return cls.from_cycles(cycles, degree)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def moved_points(self) -> List[int]:
        return [i for i, x in enumerate(self.images, start=1) if x != i]

    def __str__(self) -> str:
        out = [f"({' '.join(map(str, c))})" for c in cycles(self) if len(c) > 1]
        return "".join(out) if out else "()"


def parse_cycles(text: str) -> List[List[int]]:
    """Split cycle notation into lists of labels, keeping fixed points that are written."""
    stripped = re.sub(r"\s", " ", text).strip()
    result = []
    for match in re.finditer(CYCLE_RE + r"|.", stripped):
        token = match.group().strip()
        if not (token.startswith("(") and token.endswith(")")):
            raise PermutationError(f"could not parse permutation {text!r}")
        body = token[1:-1].strip()
        if body:
            result.append([int(x) for x in re.split(ELEMENT_SEP_RE, body)])
    return result


def _check_degrees(p: Perm, q: Perm):
    if p.degree != q.degree:
        raise PermutationError(f"degree mismatch: {p.degree} vs {q.degree}")


def compose(p: Perm, q: Perm) -> Perm:
    """p first, then q."""
    _check_degrees(p, q)
    qi = q.images
    return Perm(tuple(qi[x - 1] for x in p.images))


def inverse(p: Perm) -> Perm:
    images = [0] * p.degree
    for i, x in enumerate(p.images, start=1):
        images[x - 1] = i
    return Perm(tuple(images))


def conjugate(p: Perm, r: Perm) -> Perm:
    """r^-1 p r, i.e. p with every label x renamed to r(x)."""
    _check_degrees(p, r)
    return compose(compose(inverse(r), p), r)


def cycles(p: Perm) -> List[List[int]]:
    """Disjoint cycles including fixed points, each starting at its smallest label."""
    seen = [False] * (p.degree + 1)
    out = []
    for start in range(1, p.degree + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = p.images[x - 1]
        out.append(cycle)
    return out


def cycle_count(p: Perm) -> int:
    return len(cycles(p))


def is_fpf_involution(p: Perm) -> bool:
    return all(x != i and p.images[x - 1] == i for i, x in enumerate(p.images, start=1))


def is_transitive(gens: Sequence[Perm], m: int) -> bool:
    """True when the group generated by gens has a single orbit on 1..m."""
    if not gens:
        if m > 1:
            raise PermutationError(f"no generators given for {m} points")
        return True
    graph = nx.Graph()
    graph.add_nodes_from(range(1, m + 1))
    for g in gens:
        if g.degree != m:
            raise PermutationError(f"generator of degree {g.degree} acting on {m} points")
        graph.add_edges_from((x, g(x)) for x in range(1, m + 1))
    return nx.is_connected(graph)


class _Level:
    """One stabilizer of the chain: base point, generators and transversal."""

    def __init__(self, point: int):
        self.point = point
        self.gens: List[Perm] = []
        self.transversal: Dict[int, Perm] = {}

    def rebuild(self, degree: int):
        self.transversal = {self.point: Perm.identity(degree)}
        queue = deque([self.point])
        while queue:
            x = queue.popleft()
            u = self.transversal[x]
            for s in self.gens:
                y = s(x)
                if y not in self.transversal:
                    self.transversal[y] = compose(u, s)
                    queue.append(y)


def _strip(levels: List[_Level], g: Perm, start: int) -> Tuple[Perm, int]:
    """Sift g through levels[start:]; returns the residue and the level it stopped at."""
    for i in range(start, len(levels)):
        level = levels[i]
        y = g(level.point)
        if y not in level.transversal:
            return g, i
        g = compose(g, inverse(level.transversal[y]))
    return g, len(levels)


def stabilizer_chain(gens: Sequence[Perm]) -> List[_Level]:
    """Deterministic Schreier-Sims; new base points are the smallest moved points."""
    gens = [g for g in gens if not g.is_identity()]
    if not gens:
        return []
    degree = gens[0].degree
    for g in gens:
        _check_degrees(gens[0], g)

    levels: List[_Level] = []
    for g in gens:
        if all(g(level.point) == level.point for level in levels):
            levels.append(_Level(g.moved_points()[0]))
    # level k keeps the generators fixing the base points of levels 0..k-1
    for k, level in enumerate(levels):
        fixed = [lv.point for lv in levels[:k]]
        level.gens = [g for g in gens if all(g(b) == b for b in fixed)]
        level.rebuild(degree)

    i = len(levels) - 1
    while i >= 0:
        added = False
        level = levels[i]
        for x, u in list(level.transversal.items()):
            for s in list(level.gens):
                schreier = compose(compose(u, s), inverse(level.transversal[s(x)]))
                residue, j = _strip(levels, schreier, i + 1)
                if residue.is_identity():
                    continue
                if j == len(levels):
                    levels.append(_Level(residue.moved_points()[0]))
                for k in range(i + 1, j + 1):
                    levels[k].gens.append(residue)
                    levels[k].rebuild(degree)
                i = j
                added = True
                break
            if added:
                break
        if not added:
            i -= 1
    return levels


def group_order(gens: Sequence[Perm]) -> int:
    """Exact order of the group generated by gens."""
    order = 1
    for level in stabilizer_chain(gens):
        order *= len(level.transversal)
    logger.debug(f"Group with {len(gens)} generators has order {order}")
    return order


def naive_group_order(gens: Sequence[Perm], limit: int = 10_000) -> int:
    """Order by closing the generators under multiplication; refuses closures above limit."""
    if not gens:
        return 1
    identity = Perm.identity(gens[0].degree)
    seen = {identity.images}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(g, s)
            if h.images not in seen:
                seen.add(h.images)
                if len(seen) > limit:
                    raise PermutationError(f"closure exceeds {limit} elements")
                queue.append(h)
    return len(seen)
