import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (
    all_subsets,
    complexes,
    deletion_faces,
    faces_of,
    facet_sets,
    link_faces,
    maximal,
    pure_complexes,
)
from facetdecomp import corpus
from facetdecomp.complex import (
    Complex,
    ComplexError,
    alexander_dual,
    antifacet_count,
    antifacets,
    canonical_form,
    codimension,
    compacted,
    cone_apex,
    deletion,
    dimension,
    empty,
    f_vector,
    from_facets,
    is_pure,
    k_subsets,
    labels_of,
    link,
    mask,
    minimal_nonfaces,
    relabel,
    simplex,
    skeleton,
    void,
)

K4 = from_facets(itertools.combinations(range(1, 5), 2))
TWO_EDGES = from_facets([[1, 2], [3, 4]])


def sets(masks):
    return sorted(labels_of(m) for m in masks)


def lifted(r):
    """Facets of a compacted restriction in the original labels."""
    return frozenset(frozenset(r.labels[v - 1] for v in f) for f in r.complex.facet_sets())


# -- construction ----------------------------------------------------------------

def test_dedup_and_absorb():
    cx = from_facets([[1, 2], [2], [1, 2]])
    assert cx == Complex(2, (mask([1, 2]),))


def test_void_and_empty_differ():
    assert from_facets([]).is_void
    assert from_facets([[]]).is_empty
    assert from_facets([]) != from_facets([[]])
    assert from_facets([]).n == 0 and from_facets([[]]).n == 0


@pytest.mark.parametrize("bad", [[[0, 1]], [[-2]], [[1, "a"]], [[True]]])
def test_bad_labels(bad):
    with pytest.raises(ComplexError):
        from_facets(bad)


def test_label_exceeds_declared_n():
    with pytest.raises(ComplexError):
        from_facets([[1, 5]], n=4)


def test_declared_n_keeps_uncovered_vertices():
    assert from_facets([[1, 2]], n=3).n == 3


def test_k_subsets_is_colex():
    got = [labels_of(m) for m in k_subsets(4, 2)]
    assert got == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]
    assert [len(k_subsets(7, k)) for k in range(8)] == [math.comb(7, k) for k in range(8)]


def test_many_facets_example_size():
    cx = corpus.load("many_facets_not_extremal")
    assert (cx.n, len(cx.facets)) == (6, 16)
    given_facets = [{1, 2, 3}, {1, 4, 5}, {1, 2, 6}, {1, 4, 6}, {2, 4, 5}, {3, 4, 5}, {3, 5, 6}]
    assert all(frozenset(f) in facet_sets(cx) for f in given_facets)


# -- invariants --------------------------------------------------------------------

def test_dimension_examples():
    assert dimension(K4) == 1
    assert dimension(from_facets([[1, 2, 3]])) == 2
    assert dimension(empty()) == -1
    assert dimension(void()) is None


def test_codimension_examples():
    assert codimension(K4) == 2
    assert codimension(simplex(5)) == 0
    assert codimension(corpus.load("many_facets_not_extremal")) == 3
    with pytest.raises(ComplexError):
        codimension(void(3))


def test_purity_examples():
    assert is_pure(TWO_EDGES)
    assert not is_pure(from_facets([[1, 2, 3], [4]]))
    assert not is_pure(from_facets([[1, 2]], n=3))
    assert is_pure(from_facets([[1, 2]], n=3), require_cover=False)


def test_antifacet_examples():
    assert antifacet_count(K4) == 0
    assert sets(antifacets(TWO_EDGES)) == [(1, 3), (1, 4), (2, 3), (2, 4)]
    assert antifacet_count(corpus.load("many_facets_not_extremal")) == 4
    with pytest.raises(ComplexError):
        antifacets(from_facets([[1, 2, 3], [4]]))


def test_f_vector_examples():
    assert f_vector(corpus.load("many_facets_not_extremal")) == (6, 15, 16)
    assert f_vector(corpus.load("extremal_companion")) == (6, 14, 16)
    assert f_vector(simplex(3)) == (3, 3, 1)
    assert f_vector(empty()) == ()
    with pytest.raises(ComplexError):
        f_vector(void())


def test_cone_apex_examples():
    boundary_minus = from_facets([[1, 2, 4], [1, 3, 4], [2, 3, 4]])
    assert cone_apex(boundary_minus) == 4
    assert cone_apex(K4) is None
    assert cone_apex(from_facets([[1, 2], [1, 3]])) == 1


# -- link, deletion, skeleton -------------------------------------------------------

def test_link_examples():
    from facetdecomp.bounds import generate_tight_example

    tight = generate_tight_example(5, 2)
    assert lifted(link(tight, [1])) == {frozenset({2, 3}), frozenset({4, 5})}
    assert link(K4).complex == K4
    facet = link(K4, [1, 2])
    assert facet.complex.is_empty
    with pytest.raises(ComplexError):
        link(TWO_EDGES, [1, 3])


def test_deletion_examples():
    assert lifted(deletion(K4, 4)) == {frozenset(s) for s in ({1, 2}, {1, 3}, {2, 3})}
    assert lifted(deletion(TWO_EDGES, 1)) == {frozenset({2}), frozenset({3, 4})}
    cone = from_facets([[1, 2, 5], [2, 3, 5], [4, 5]])
    assert lifted(deletion(cone, 5)) == {frozenset({1, 2}), frozenset({2, 3}), frozenset({4})}
    with pytest.raises(ComplexError):
        deletion(K4, 5)


def test_skeleton_examples():
    assert skeleton(4, 1) == K4
    assert skeleton(4, 2).facets == tuple(sorted(k_subsets(4, 3)))
    assert skeleton(K4, 1) == K4
    assert skeleton(K4, -1).is_empty
    with pytest.raises(ComplexError):
        skeleton(K4, 2)


# -- nonfaces and duality ----------------------------------------------------------

def test_minimal_nonface_examples():
    k4_minus = from_facets([s for s in itertools.combinations(range(1, 5), 2) if s != (1, 2)])
    # as a 1-dimensional complex the two empty triangles are minimal nonfaces too
    assert sets(minimal_nonfaces(k4_minus)) == [(1, 2), (1, 3, 4), (2, 3, 4)]
    assert minimal_nonfaces(simplex(4)) == []
    assert sets(minimal_nonfaces(from_facets([[1, 2], [2, 3]]))) == [(1, 3)]


def test_alexander_dual_examples():
    assert alexander_dual(from_facets([[1, 2], [2, 3]])) == from_facets([[2]], n=3)
    triangle = from_facets([[1, 2], [1, 3], [2, 3]])
    assert alexander_dual(triangle).is_empty
    assert alexander_dual(simplex(3)).is_void


def oracle_dual(cx):
    faces = faces_of(cx.facet_sets())
    full = frozenset(range(1, cx.n + 1))
    return maximal(frozenset(s for s in all_subsets(cx.n) if full - s not in faces))


# -- properties ---------------------------------------------------------------------

@given(complexes())
def test_facets_are_an_antichain(cx):
    fs = cx.facets
    assert all(not (a & b == a) for a, b in itertools.permutations(fs, 2))


@given(complexes())
def test_faces_match_oracle(cx):
    assert {frozenset(labels_of(f)) for f in cx.faces} == faces_of(cx.facet_sets())


@given(complexes(), st.data())
def test_link_matches_oracle(cx, data):
    faces = faces_of(cx.facet_sets())
    sigma = data.draw(st.sampled_from(sorted(faces, key=sorted)))
    assert lifted(link(cx, sigma)) == maximal(link_faces(faces, sigma))


@given(complexes(), st.data())
def test_deletion_matches_oracle(cx, data):
    v = data.draw(st.integers(1, cx.n))
    faces = faces_of(cx.facet_sets())
    assert lifted(deletion(cx, v)) == maximal(deletion_faces(faces, v))


@given(complexes(max_n=6))
def test_minimal_nonfaces_match_oracle(cx):
    faces = faces_of(cx.facet_sets())
    nonfaces = [s for s in all_subsets(cx.n) if s not in faces]
    expected = {s for s in nonfaces if not any(t < s for t in nonfaces)}
    assert {frozenset(labels_of(m)) for m in minimal_nonfaces(cx)} == expected


@given(complexes(max_n=6, allow_void=True))
def test_alexander_dual_matches_oracle(cx):
    assert facet_sets(alexander_dual(cx)) == oracle_dual(cx)


@given(complexes(max_n=6, allow_void=True))
def test_alexander_dual_is_an_involution(cx):
    assert alexander_dual(alexander_dual(cx)) == cx


@given(complexes(), st.data())
def test_skeleton_truncates_f_vector(cx, data):
    d = dimension(cx)
    k = data.draw(st.integers(0, d))
    assert f_vector(skeleton(cx, k)) == f_vector(cx)[: k + 1]


@given(pure_complexes())
def test_facets_plus_antifacets(cx):
    c = codimension(cx)
    assert len(cx.facets) + antifacet_count(cx) == math.comb(cx.n, c)
    assert len(antifacets(cx)) == antifacet_count(cx)


@given(complexes(), st.randoms(use_true_random=False))
def test_canonical_form_is_invariant(cx, rnd):
    perm = list(range(1, cx.n + 1))
    rnd.shuffle(perm)
    a = canonical_form(cx)
    b = canonical_form(relabel(cx, perm))
    assert a is not None and b is not None
    assert a[0] == b[0]
    assert relabel(cx, a[1]) == a[0]


@given(complexes())
def test_compaction_round_trip(cx):
    r = compacted(cx)
    assert r.complex.vertex_mask == (1 << r.complex.n) - 1
    assert lifted(r) == facet_sets(cx)


@settings(max_examples=50)
@given(complexes(max_n=6))
def test_cone_apex_is_a_common_vertex(cx):
    apex = cone_apex(cx)
    common = frozenset.intersection(*facet_sets(cx))
    if apex is None:
        assert not common
    else:
        assert apex == min(common)
