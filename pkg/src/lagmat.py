"""
Admissible sets and Lagrangian matroids over [n] and [n]*.

An admissible set holds exactly one of i, i* for every i, so it is stored as
a sign vector: +1 at i means i is in the set, -1 means i* is.
"""
from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, Optional, Tuple, Union

from . import config
from .errors import BoundExceededError, InvalidMatroidError
from .models import MatroidDocument
from .permkit import Perm
from .surfmap import EdgeSubset, OrientedMap, is_one_face, partial_dual, subsets

logger = logging.getLogger(__name__)

TOKEN_RE = re.compile(r"(\d+)(\*?)")


@dataclass(frozen=True)
class AdmissibleSet:
    signs: Tuple[int, ...]

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise InvalidMatroidError(f"signs must be +1 or -1, got {self.signs}")

    @property
    def n(self) -> int:
        return len(self.signs)

    @classmethod
    def all_unstarred(cls, n: int) -> "AdmissibleSet":
        return cls((1,) * n)

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "AdmissibleSet":
        """Read "12*3", or "1,2*,10" once labels pass 9."""
        if not isinstance(text, str):
            raise InvalidMatroidError(f"admissible set must be a string, got {text!r}")
        text = text.strip()
        if "," in text or " " in text:
            tokens = [t for t in re.split(r"[,\s]+", text) if t]
        else:
            tokens = re.findall(r"\d\*?", text)
            if "".join(tokens) != text:
                raise InvalidMatroidError(f"could not parse admissible set {text!r}")
        labels = {}
        for token in tokens:
            match = TOKEN_RE.fullmatch(token)
            if not match:
                raise InvalidMatroidError(f"could not parse element {token!r} in {text!r}")
            i = int(match.group(1))
            if i in labels:
                raise InvalidMatroidError(f"{text!r} mentions {i} twice: not admissible")
            labels[i] = -1 if match.group(2) else 1
        n = len(labels) if n is None else n
        if sorted(labels) != list(range(1, n + 1)):
            raise InvalidMatroidError(f"{text!r} does not hold one of i, i* for each i in 1..{n}")
        return cls(tuple(labels[i] for i in range(1, n + 1)))

    def unstarred(self) -> FrozenSet[int]:
        return frozenset(i for i, s in enumerate(self.signs, start=1) if s > 0)

    def starred(self) -> FrozenSet[int]:
        return frozenset(i for i, s in enumerate(self.signs, start=1) if s < 0)

    def flip(self, indices: Iterable[int]) -> "AdmissibleSet":
        """Swap i and i* for every i in indices."""
        signs = list(self.signs)
        for i in indices:
            signs[i - 1] = -signs[i - 1]
        return AdmissibleSet(tuple(signs))

    def sort_key(self) -> Tuple[int, ...]:
        # unstarred sorts first
        return tuple(0 if s > 0 else 1 for s in self.signs)

    def __str__(self) -> str:
        parts = [f"{i}{'' if s > 0 else '*'}" for i, s in enumerate(self.signs, start=1)]
        return "".join(parts) if self.n < 10 else ",".join(parts)


@dataclass(frozen=True)
class LagrangianMatroid:
    """A collection of admissible sets; the exchange axiom is checked on request only."""
    n: int
    bases: Tuple[AdmissibleSet, ...]

    def __post_init__(self):
        for B in self.bases:
            if B.n != self.n:
                raise InvalidMatroidError(f"base {B} has {B.n} elements, expected {self.n}")
        ordered = tuple(sorted(set(self.bases), key=AdmissibleSet.sort_key))
        object.__setattr__(self, "bases", ordered)

    @classmethod
    def from_bases(cls, n: int, bases: Iterable[AdmissibleSet]) -> "LagrangianMatroid":
        return cls(n, tuple(bases))

    @classmethod
    def parse(cls, n: int, texts: Iterable[str]) -> "LagrangianMatroid":
        return cls(n, tuple(AdmissibleSet.parse(t, n) for t in texts))

    @classmethod
    def from_document(cls, doc: Union[MatroidDocument, dict]) -> "LagrangianMatroid":
        if not isinstance(doc, dict) or "n" not in doc or "bases" not in doc:
            raise InvalidMatroidError("matroid document needs 'n' and 'bases'")
        n = doc["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise InvalidMatroidError(f"'n' must be a positive integer, got {n!r}")
        if not isinstance(doc["bases"], list) or not doc["bases"]:
            raise InvalidMatroidError("'bases' must be a non-empty list")
        if not all(isinstance(B, str) for B in doc["bases"]):
            raise InvalidMatroidError(f"bases must be strings such as \"12*3\", got {doc['bases']!r}")
        return cls.parse(n, doc["bases"])

    def to_document(self) -> MatroidDocument:
        return {"n": self.n, "bases": [str(B) for B in self.bases]}

    def __contains__(self, B: AdmissibleSet) -> bool:
        return B in self._members

    @cached_property
    def _members(self) -> FrozenSet[AdmissibleSet]:
        return frozenset(self.bases)

    def __iter__(self) -> Iterator[AdmissibleSet]:
        return iter(self.bases)

    def __len__(self) -> int:
        return len(self.bases)

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.bases)) + "}"


@dataclass(frozen=True)
class ExchangeCheck:
    ok: bool
    witness: Optional[Tuple[AdmissibleSet, AdmissibleSet, int]] = None  # (A, B, j)

    def __bool__(self) -> bool:
        return self.ok


def check_symmetric_exchange(collection: LagrangianMatroid) -> ExchangeCheck:
    """Brute-force test of the symmetric exchange axiom over all ordered pairs."""
    members = set(collection.bases)
    for A in collection.bases:
        for B in collection.bases:
            diff = [i for i in range(1, collection.n + 1) if A.signs[i - 1] != B.signs[i - 1]]
            for j in diff:
                if not any(A.flip({j, k}) in members for k in diff):
                    return ExchangeCheck(False, (A, B, j))
    return ExchangeCheck(True)


def assert_lagrangian(collection: LagrangianMatroid, source: str) -> LagrangianMatroid:
    """Exchange-axiom guard for matroids built from maps and matrices."""
    if len(collection) > config.EXCHANGE_ASSERT_LIMIT:
        logger.warning(
            f"Skipping exchange check for {len(collection)} bases from {source} "
            f"(limit {config.EXCHANGE_ASSERT_LIMIT})")
        return collection
    result = check_symmetric_exchange(collection)
    if not result:
        A, B, j = result.witness
        raise InvalidMatroidError(f"bases from {source} fail symmetric exchange at ({A}, {B}, {j})")
    return collection


def bases_of_map(M: OrientedMap, limit: Optional[int] = None) -> LagrangianMatroid:
    """Delta(M): (E minus A) with A*, for every A whose partial dual has one face."""
    limit = config.MAX_EDGES if limit is None else limit
    if M.n > limit:
        raise BoundExceededError(f"{M.n} edges exceeds the enumeration bound of {limit}")
    bases = []
    for A in subsets(M.n):
        if is_one_face(partial_dual(M, A)):
            bases.append(AdmissibleSet.all_unstarred(M.n).flip(A.members))
    logger.debug(f"Map with {M.n} edges has {len(bases)} bases")
    return assert_lagrangian(LagrangianMatroid.from_bases(M.n, bases), "a map")


def twist(collection: LagrangianMatroid, A: Union[EdgeSubset, Iterable[int]]) -> LagrangianMatroid:
    """Symmetric difference of every base with A and A*."""
    members = A.members if isinstance(A, EdgeSubset) else frozenset(A)
    if isinstance(A, EdgeSubset) and A.n != collection.n:
        raise InvalidMatroidError(f"edge subset of {A.n} edges applied to a matroid on {collection.n}")
    return LagrangianMatroid.from_bases(collection.n, (B.flip(members) for B in collection))


def star(collection: LagrangianMatroid) -> LagrangianMatroid:
    return twist(collection, range(1, collection.n + 1))


def relabel(collection: LagrangianMatroid, f: Perm) -> LagrangianMatroid:
    """Move the sign at i to position f(i), i.e. apply f and the induced f*."""
    if f.degree != collection.n:
        raise InvalidMatroidError(f"relabelling of degree {f.degree} on a matroid over {collection.n}")
    moved = []
    for B in collection:
        signs = [0] * collection.n
        for i, s in enumerate(B.signs, start=1):
            signs[f(i) - 1] = s
        moved.append(AdmissibleSet(tuple(signs)))
    return LagrangianMatroid.from_bases(collection.n, moved)


def is_matroid(collection: LagrangianMatroid) -> bool:
    """True when the unstarred parts are the bases of an ordinary matroid."""
    family = {B.unstarred() for B in collection}
    if len({len(F) for F in family}) > 1:
        return False
    for F1 in family:
        for F2 in family:
            for x in F1 - F2:
                if not any((F1 - {x}) | {y} in family for y in F2 - F1):
                    return False
    return True


def matroid_isomorphic(first: LagrangianMatroid, second: LagrangianMatroid,
                       limit: Optional[int] = None) -> Optional[Perm]:
    """A bijection f of [n] identifying the unstarred parts of the two collections."""
    limit = config.MAX_ISO_EDGES if limit is None else limit
    if first.n != second.n or len(first) != len(second):
        return None
    if first.n > limit:
        raise BoundExceededError(f"matroid isomorphism limited to n <= {limit}, got {first.n}")
    target = set(second.bases)
    for images in itertools.permutations(range(1, first.n + 1)):
        f = Perm(images)
        if set(relabel(first, f).bases) == target:
            return f
    return None
