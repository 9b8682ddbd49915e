"""
The hyperoctahedral group BC_n and its actions.

An element is stored in canonical form: flip the stars at the positions in
`flips`, then relabel position i as perm(i). As a permutation of [n] u [n]*
it sends i to perm(i), starred when i is in flips, and satisfies
w(i*) = w(i)*. Products are read left to right like everything else here.
"""
from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, FrozenSet, Iterator, Optional, Sequence, Tuple

from .errors import InvalidWordError
from .lagmat import AdmissibleSet, LagrangianMatroid, relabel, twist
from .permkit import Perm, compose as compose_perms, inverse as inverse_perm
from .reprmat import Representation, swap_columns
from .surfmap import OrientedMap, partial_dual, relabel_edges

if TYPE_CHECKING:
    from .polytope import MatroidPolytope

logger = logging.getLogger(__name__)

LABEL_RE = r"(\d+)(\*?)"
TRANSPOSITION_RE = re.compile(rf"\(\s*{LABEL_RE}\s*[,\s]\s*{LABEL_RE}\s*\)")


@dataclass(frozen=True)
class SignedPerm:
    perm: Perm
    flips: FrozenSet[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "flips", frozenset(self.flips))
        if any(not 1 <= j <= self.n for j in self.flips):
            raise InvalidWordError(f"flip positions {sorted(self.flips)} out of range 1..{self.n}")

    @property
    def n(self) -> int:
        return self.perm.degree

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(Perm.identity(n))

    @classmethod
    def flip(cls, n: int, j: int) -> "SignedPerm":
        """The generator (j j*)."""
        return cls(Perm.identity(n), frozenset({j}))

    @classmethod
    def swap(cls, n: int, j: int, k: int) -> "SignedPerm":
        """The generator (j k)(j* k*)."""
        return cls(Perm.from_cycles([(j, k)], n))

    def __call__(self, label: Tuple[int, bool]) -> Tuple[int, bool]:
        """Image of (i, starred)."""
        i, starred = label
        return self.perm(i), starred != (i in self.flips)

    def is_identity(self) -> bool:
        return self.perm.is_identity() and not self.flips

    def is_reflection(self) -> bool:
        """(j j*), (j k)(j* k*) or (j k*)(j* k)."""
        moved = self.perm.moved_points()
        if not moved:
            return len(self.flips) == 1
        if len(moved) != 2:
            return False
        return not self.flips or self.flips == frozenset(moved)

    def __str__(self) -> str:
        if self.is_identity():
            return "()"
        out = []
        seen = set()
        for i in range(1, self.n + 1):
            if i in seen:
                continue
            # follow the signed cycle through i until it closes on i or i*
            cycle = [(i, False)]
            label = self(cycle[0])
            while label[0] != i:
                cycle.append(label)
                label = self(label)
            seen.update(j for j, _ in cycle)
            if label == (i, False):
                if len(cycle) == 1:
                    continue
                starred = [(j, not s) for j, s in cycle]
                out.append(_render(cycle) + _render(starred))
            else:
                out.append(_render(cycle + [(j, not s) for j, s in cycle]))
        return "".join(out)


def _render(cycle: Sequence[Tuple[int, bool]]) -> str:
    return "(" + " ".join(f"{j}{'*' if s else ''}" for j, s in cycle) + ")"


def _from_table(table: dict, n: int) -> SignedPerm:
    images, flips = [], set()
    for i in range(1, n + 1):
        j, starred = table[(i, False)]
        if table[(i, True)] != (j, not starred):
            raise InvalidWordError(f"word does not commute with the star involution at {i}")
        images.append(j)
        if starred:
            flips.add(i)
    return SignedPerm(Perm(tuple(images)), frozenset(flips))


def from_word(text: str, n: Optional[int] = None) -> SignedPerm:
    """Parse a product of generators such as "(1 1*)(1 2)(1* 2*)(1 2*)(1* 2)"."""
    stripped = text.strip()
    tokens = []
    pos = 0
    while pos < len(stripped):
        if stripped[pos].isspace():
            pos += 1
            continue
        match = TRANSPOSITION_RE.match(stripped, pos)
        if not match:
            raise InvalidWordError(f"malformed token at position {pos} of {text!r}")
        a, a_star, b, b_star = match.groups()
        tokens.append(((int(a), bool(a_star)), (int(b), bool(b_star))))
        pos = match.end()

    labels = [x for token in tokens for x, _ in token]
    if any(x < 1 for x in labels):
        raise InvalidWordError(f"labels start at 1 in {text!r}")
    n = max(labels, default=1) if n is None else n
    if any(x > n for x in labels):
        raise InvalidWordError(f"label out of range 1..{n} in {text!r}")

    result = SignedPerm.identity(n)
    k = 0
    while k < len(tokens):
        x, y = tokens[k]
        if x == y:
            raise InvalidWordError(f"degenerate transposition in {text!r}")
        if x[0] == y[0]:
            generator = [(x, y)]
            k += 1
        else:
            if k + 1 == len(tokens):
                raise InvalidWordError(f"transposition {_render([x, y])} needs its starred partner")
            partner = tokens[k + 1]
            starred = {(x[0], not x[1]), (y[0], not y[1])}
            if set(partner) != starred:
                raise InvalidWordError(
                    f"{_render([x, y])}{_render(list(partner))} is not a generator of BC_{n}")
            generator = [(x, y), partner]
            k += 2
        table = {(i, s): (i, s) for i in range(1, n + 1) for s in (False, True)}
        for u, v in generator:
            table[u], table[v] = v, u
        result = compose(result, _from_table(table, n))
    logger.debug(f"Parsed word {text!r} as {result}")
    return result


def compose(first: SignedPerm, second: SignedPerm) -> SignedPerm:
    """first, then second."""
    if first.n != second.n:
        raise InvalidWordError(f"cannot compose elements of BC_{first.n} and BC_{second.n}")
    back = inverse_perm(first.perm)
    flips = first.flips ^ frozenset(back(j) for j in second.flips)
    return SignedPerm(compose_perms(first.perm, second.perm), flips)


def inverse(w: SignedPerm) -> SignedPerm:
    return SignedPerm(inverse_perm(w.perm), frozenset(w.perm(j) for j in w.flips))


def all_elements(n: int) -> Iterator[SignedPerm]:
    """All 2^n n! elements of BC_n."""
    for images in itertools.permutations(range(1, n + 1)):
        perm = Perm(images)
        for mask in range(2 ** n):
            yield SignedPerm(perm, frozenset(j for j in range(1, n + 1) if mask >> (j - 1) & 1))


def _check_degree(w: SignedPerm, n: int, what: str):
    if w.n != n:
        raise InvalidWordError(f"element of BC_{w.n} acting on {what} over {n}")


def act_on_point(w: SignedPerm, v: Sequence[int]) -> Tuple[int, ...]:
    _check_degree(w, len(v), "a point")
    out = [0] * w.n
    for i, x in enumerate(v, start=1):
        out[w.perm(i) - 1] = -x if i in w.flips else x
    return tuple(out)


def act_on_admissible(w: SignedPerm, B: AdmissibleSet) -> AdmissibleSet:
    return AdmissibleSet(act_on_point(w, B.signs))


def act_on_matroid(w: SignedPerm, collection: LagrangianMatroid) -> LagrangianMatroid:
    _check_degree(w, collection.n, "a matroid")
    return relabel(twist(collection, w.flips), w.perm)


def act_on_map(w: SignedPerm, M: OrientedMap) -> OrientedMap:
    """Partial dual at the flips, then relabel the edges."""
    _check_degree(w, M.n, "a map")
    return relabel_edges(partial_dual(M, w.flips), w.perm)


def act_on_matrix(w: SignedPerm, R: Representation) -> Representation:
    """Swap columns j, j* at the flips, then move column i to perm(i) in both blocks."""
    _check_degree(w, R.n, "a matrix")
    swapped = swap_columns(R, w.flips)
    order = [0] * (2 * R.n)
    for i in range(1, R.n + 1):
        order[w.perm(i) - 1] = i - 1
        order[R.n + w.perm(i) - 1] = R.n + i - 1
    rows = tuple(tuple(row) for row in swapped.matrix[:, order].tolist())
    return Representation(R.n, rows, R.mode)


def act_on_polytope(w: SignedPerm, P: MatroidPolytope) -> MatroidPolytope:
    return P.apply(w)

