from typing import List, Literal, Optional, TypedDict

Cycle = List[int]


class _MapDocumentBase(TypedDict):
    n: int
    sigma: List[Cycle]


class MapDocument(_MapDocumentBase, total=False):
    """A map given by its half-edge permutations, 1-based cycle arrays."""
    alpha: List[Cycle]  # omitted means (1 2)(3 4)...(2n-1 2n)
    # Added on output
    phi: List[Cycle]
    vertices: int
    edges: int
    faces: int
    genus: int
    label_trace: List[int]  # original half-edge label per canonical label


class MatroidDocument(TypedDict):
    n: int
    bases: List[str]  # e.g. "12*3"


class RepresentationDocument(TypedDict):
    n: int
    mode: Literal["orthogonal", "symplectic"]
    rows: List[List[str]]  # rationals as "p/q" or integer strings, columns 1..n, 1*..n*


class PolytopeDocument(TypedDict):
    n: int
    vertices: List[List[int]]
    edges: List[List[int]]  # indices into the sorted vertex list


class OrbitRowDocument(TypedDict):
    subset: List[int]
    vertices: int
    faces: int
    genus: int
    one_face: bool
    iso_class: int


class CommandResult(TypedDict):
    """What every CLI command prints, one object per invocation."""
    status: Literal["ok", "error"]
    payload: Optional[object]
    diagnostics: List[str]
