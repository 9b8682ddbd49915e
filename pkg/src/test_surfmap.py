import random

import pytest
from hypothesis import given, settings, strategies as st

from src.errors import BoundExceededError, InvalidMapError
from src.permkit import Perm, compose, cycles, inverse, naive_group_order
from src.surfmap import (EdgeSubset, OrientedMap, cartographic_group_order, counts, dual,
                         enumerate_partial_duals, from_document, genus, is_isomorphic, is_one_face,
                         is_planar, iter_maps, partial_dual, random_map, relabel_edges, subsets,
                         to_document)


def test_example_map_document(example_map):
    doc = to_document(example_map)
    assert doc["phi"] == [[1, 4, 2], [3]]
    assert (doc["vertices"], doc["edges"], doc["faces"]) == (2, 2, 2)
    assert doc["genus"] == 0
    assert cartographic_group_order(example_map) == 12


def test_single_edge(single_edge):
    assert counts(single_edge) == (2, 1, 1)
    assert cartographic_group_order(single_edge) == 2
    D = dual(single_edge)
    assert D.sigma == Perm.parse("(1 2)")
    assert counts(D) == (1, 1, 2)


def test_phi_closes_the_triple(triangle):
    assert compose(compose(triangle.sigma, triangle.alpha), triangle.phi).is_identity()


def test_from_document_accepts_strings_and_lists():
    a = from_document({"n": 2, "sigma": "(1)(2 3 4)"})
    b = from_document({"sigma": [[1], [2, 3, 4]], "alpha": [[1, 2], [3, 4]]})
    assert a == b


def test_from_document_canonicalises_alpha():
    M = from_document({"sigma": "(1)(2 3 4)", "alpha": "(1 3)(2 4)"})
    assert M.alpha == Perm.parse("(1 2)(3 4)")
    assert M.label_trace is not None
    assert counts(M) == (2, 2, 2)


@pytest.mark.parametrize("doc", [
    {"n": 2, "sigma": "(1)(2 3 4)", "alpha": "(1 2)(3)(4)"},
    {"n": 2, "sigma": "(1)(2)(3)(4)"},
    {"n": 2, "sigma": "(1 2 2)"},
    {"n": 0, "sigma": "()"},
    {"alpha": "(1 2)"},
    {"n": 1, "sigma": "(1 3)"},
])
def test_from_document_rejects_invalid(doc):
    with pytest.raises(InvalidMapError):
        from_document(doc)


def test_triangle_partial_duals(triangle):
    assert counts(triangle) == (3, 3, 2)
    assert is_planar(triangle)
    duals = [partial_dual(triangle, {j}) for j in (1, 2, 3)]
    assert [genus(P) for P in duals] == [1, 1, 1]
    assert is_isomorphic(duals[0], duals[1]) is not None
    assert is_isomorphic(duals[1], duals[2]) is not None
    assert is_one_face(partial_dual(triangle, {3}))


def test_partial_dual_of_everything_is_the_dual(triangle, example_map):
    for M in (triangle, example_map):
        assert partial_dual(M, EdgeSubset.full(M.n)) == dual(M)
        assert partial_dual(M, set()) == M


def test_partial_dual_rejects_bad_edges(triangle):
    with pytest.raises(InvalidMapError):
        partial_dual(triangle, {4})


def test_isomorphism_witness_conjugates(triangle):
    pi = Perm.parse("(1 2 3)")
    other = relabel_edges(triangle, pi)
    h = is_isomorphic(triangle, other)
    assert h is not None
    assert compose(compose(inverse(h), triangle.sigma), h) == other.sigma


def test_isomorphism_respects_counts(example_map, triangle):
    assert is_isomorphic(example_map, triangle) is None
    assert is_isomorphic(triangle, partial_dual(triangle, {1})) is None


def test_enumerate_partial_duals_triangle(triangle):
    rows = enumerate_partial_duals(triangle)
    assert [r.subset.mask for r in rows] == list(range(8))
    assert sum(r.genus == 1 for r in rows) == 3
    assert [r.iso_class for r in rows if len(r.subset) == 1] == [1, 1, 1]
    one_face = {str(r.subset) for r in rows if r.one_face}
    assert one_face == {"{3}", "{2}", "{1}"}


def test_enumerate_partial_duals_bound(triangle):
    with pytest.raises(BoundExceededError):
        enumerate_partial_duals(triangle, limit=2)


def test_iter_maps_counts():
    # both permutations of two half-edges are connected together with alpha
    assert len(list(iter_maps(1))) == 2
    assert all(M.validate() for M in iter_maps(2))


def check_partial_duality_algebra(M: OrientedMap, A: EdgeSubset, B: EdgeSubset):
    P = partial_dual(M, A)
    assert partial_dual(P, A) == M
    assert partial_dual(P, B) == partial_dual(M, A.symmetric_difference(B))
    assert genus(P) == genus(partial_dual(M, A.complement()))
    P.validate()
    assert counts(partial_dual(M, EdgeSubset.full(M.n))) == counts(dual(M))


def test_partial_duality_algebra_small(small_maps):
    rng = random.Random(7)
    for M in small_maps:
        for A in subsets(M.n):
            check_partial_duality_algebra(M, A, EdgeSubset.from_mask(M.n, rng.randrange(2 ** M.n)))


@pytest.mark.slow
def test_partial_duality_algebra_four_edges(maps_with_four_edges):
    rng = random.Random(11)
    for M in maps_with_four_edges:
        A = EdgeSubset.from_mask(4, rng.randrange(16))
        B = EdgeSubset.from_mask(4, rng.randrange(16))
        check_partial_duality_algebra(M, A, B)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 7), st.randoms())
def test_partial_duality_algebra_random(n, rng):
    M = random_map(n, rng)
    for A in subsets(n):
        check_partial_duality_algebra(M, A, EdgeSubset.from_mask(n, rng.randrange(2 ** n)))


def carries(h: Perm, M1: OrientedMap, M2: OrientedMap) -> bool:
    return all(compose(compose(inverse(h), g1), h) == g2
               for g1, g2 in ((M1.sigma, M2.sigma), (M1.alpha, M2.alpha)))


def random_edge_perm(n: int, rng: random.Random) -> Perm:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Perm(tuple(images))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.randoms())
def test_isomorphism_is_symmetric_and_transitive(n, rng):
    M1 = random_map(n, rng)
    M2 = relabel_edges(M1, random_edge_perm(n, rng))
    M3 = relabel_edges(M2, random_edge_perm(n, rng))
    h12, h23 = is_isomorphic(M1, M2), is_isomorphic(M2, M3)
    assert h12 is not None and h23 is not None
    assert carries(h12, M1, M2) and carries(h23, M2, M3)
    assert carries(inverse(h12), M2, M1)
    assert is_isomorphic(M2, M1) is not None
    assert carries(compose(h12, h23), M1, M3)
    assert is_isomorphic(M1, M3) is not None
    other = random_map(n, rng)
    assert (is_isomorphic(M1, other) is None) == (is_isomorphic(other, M1) is None)


def test_triangle_group_order_matches_closure(triangle):
    gens = [triangle.sigma, triangle.alpha, triangle.phi]
    assert cartographic_group_order(triangle) == 6 == naive_group_order(gens)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5), st.randoms())
def test_document_round_trip(n, rng):
    M = random_map(n, rng)
    doc = to_document(M)
    assert from_document({"n": doc["n"], "sigma": doc["sigma"]}) == M
    assert cycles(M.phi) == doc["phi"]
