import random
from fractions import Fraction as Q
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

import sympy_oracle
from regsimplex.exact import dot, sq_dist, sub, vec
from regsimplex.simplex import (
    Simplex,
    altitude_foot,
    apply_rational_similarity,
    central_angle_cosine,
    centroid,
    dihedral_cosine,
    face,
    simplex_central_cosine,
    simplex_dihedral_cosine,
    standard_simplex,
    verify_altitude_properties,
    well_built_ratio,
)


def e(i, d):
    return tuple(Q(int(k == i)) for k in range(d))


def test_standard_simplex():
    assert standard_simplex(1).vertices == (vec([1, 0]), vec([0, 1]))
    for n in (2, 3):
        s = standard_simplex(n)
        assert len(s.vertices) == n + 1
        sq = [sq_dist(p, q) for p, q in combinations(s.vertices, 2)]
        assert len(sq) == n * (n + 1) // 2 and set(sq) == {2}
        assert s.is_regular() and s.is_nondegenerate()
    with pytest.raises(ValueError):
        standard_simplex(-1)


def test_centroid():
    assert centroid(standard_simplex(4).vertices) == (Q(1, 5),) * 5
    assert centroid([e(1, 4), e(2, 4)]) == vec([0, Q(1, 2), Q(1, 2), 0])
    assert centroid([e(1, 4), e(2, 4), e(3, 4)]) == vec([0, Q(1, 3), Q(1, 3), Q(1, 3)])
    with pytest.raises(ValueError):
        centroid([])


def test_face():
    assert face(standard_simplex(2), 0) == (e(1, 3), e(2, 3))
    assert face(standard_simplex(3), 3) == (e(0, 4), e(1, 4), e(2, 4))
    f = face(standard_simplex(5), 2)
    assert {sq_dist(p, q) for p, q in combinations(f, 2)} == {2}
    with pytest.raises(IndexError):
        face(standard_simplex(2), 3)


def test_altitude_foot():
    assert altitude_foot(standard_simplex(2), 0) == vec([0, Q(1, 2), Q(1, 2)])
    foot = altitude_foot(standard_simplex(3), 0)
    assert foot == vec([0, Q(1, 3), Q(1, 3), Q(1, 3)])
    assert dot(sub(e(0, 4), foot), sub(e(1, 4), e(2, 4))) == 0
    with pytest.raises(ValueError):
        altitude_foot(standard_simplex(0), 0)


@pytest.mark.parametrize("n,sq_alt", [(2, Q(3, 2)), (3, Q(4, 3))])
def test_altitude_properties_examples(n, sq_alt):
    chk = verify_altitude_properties(standard_simplex(n))
    assert chk.passed
    assert {r.sq_length for r in chk.records} == {sq_alt}


def test_altitude_properties_segment():
    s = standard_simplex(1)
    chk = verify_altitude_properties(s)
    assert chk.passed
    mid = vec([Q(1, 2), Q(1, 2)])
    # the common point is the midpoint; the altitude from one end lands on the other
    assert chk.common_point == mid
    assert [r.foot for r in chk.records] == [s.vertices[1], s.vertices[0]]
    assert all(r.centroid_param == Q(1, 2) for r in chk.records)


@pytest.mark.parametrize("n", range(1, 13))
def test_altitude_properties_sweep(n):
    chk = verify_altitude_properties(standard_simplex(n))
    assert chk.passed and len(chk.records) == n + 1
    # the centroid splits each altitude at n/(n+1) from the vertex
    assert {r.centroid_param for r in chk.records} == {Q(n, n + 1)}


def test_altitude_check_reports_failure():
    # an isosceles but not equilateral triangle: altitudes not congruent
    s = Simplex(2, (vec([1, 0, 0]), vec([0, 1, 0]), vec([0, 0, 2])))
    chk = verify_altitude_properties(s)
    assert not chk.passed
    assert not chk.congruent


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 4), (3, 9)])
def test_well_built_ratio_examples(n, expected):
    assert well_built_ratio(standard_simplex(n)) == expected
    assert sympy_oracle.well_built_ratio(n) == expected


def test_well_built_ratio_n3_parts():
    s = standard_simplex(3)
    o, h = centroid(s.vertices), altitude_foot(s, 0)
    assert sq_dist(s.vertices[0], o) == Q(3, 4)
    assert sq_dist(o, h) == Q(1, 12)


@pytest.mark.parametrize("n", range(1, 11))
def test_well_built_every_vertex(n):
    s = standard_simplex(n)
    assert {well_built_ratio(s, v) for v in range(n + 1)} == {n * n}


@pytest.mark.parametrize("n", range(4, 8))
def test_well_built_matches_sympy(n):
    assert well_built_ratio(standard_simplex(n), n) == sympy_oracle.well_built_ratio(n, n)


def test_dihedral_examples():
    assert dihedral_cosine(2) == Q(1, 2)
    assert dihedral_cosine(3) == Q(1, 3)
    with pytest.raises(ValueError):
        dihedral_cosine(1)


@pytest.mark.parametrize("n", range(2, 9))
def test_dihedral_every_ridge(n):
    values = {dihedral_cosine(n, r) for r in combinations(range(n + 1), 2)}
    assert values == {Q(1, n)}
    assert Q(1, n) == sympy_oracle.dihedral_cosine(n)


def test_central_examples():
    assert central_angle_cosine(2) == Q(-1, 2)
    assert central_angle_cosine(3) == Q(-1, 3)
    s = standard_simplex(3)
    o = centroid(s.vertices)
    assert o == (Q(1, 4),) * 4
    u, w = sub(e(0, 4), o), sub(e(1, 4), o)
    assert dot(u, w) == Q(-1, 4) and dot(u, u) == Q(3, 4)
    with pytest.raises(ValueError):
        central_angle_cosine(1)


@pytest.mark.parametrize("n", range(2, 9))
def test_central_every_pair(n):
    assert {central_angle_cosine(n, p) for p in combinations(range(n + 1), 2)} == {Q(-1, n)}


def test_similarity_examples():
    s = standard_simplex(2)
    ident = apply_rational_similarity(s, 1, (1, 2, 3), (0, 0, 0))
    assert ident == s
    big = apply_rational_similarity(s, 3, (1, 2, 3), (0, 0, 0))
    assert big.edge_sq_lengths() == {18}
    assert well_built_ratio(big) == 4
    swapped = apply_rational_similarity(s, 1, (2, 1, 3), (0, 0, 0))
    assert set(swapped.vertices) == set(s.vertices)
    assert simplex_dihedral_cosine(swapped) == Q(1, 2)


@pytest.mark.parametrize("perm", [(1, 1, 2), (1, 2), (0, 1, 2), (1, 2, 4)])
def test_similarity_rejects_bad_perm(perm):
    with pytest.raises(ValueError):
        apply_rational_similarity(standard_simplex(2), 1, perm, (0, 0, 0))


def test_similarity_rejects_bad_scale():
    with pytest.raises(ValueError):
        apply_rational_similarity(standard_simplex(2), 0, (1, 2, 3), (0, 0, 0))


@st.composite
def similarities(draw):
    n = draw(st.integers(2, 6))
    d = n + 1
    perm = draw(st.permutations(range(1, d + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=d, max_size=d))
    c = draw(st.fractions(min_value=Q(1, 20), max_value=20, max_denominator=20))
    shift = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=12),
                          min_size=d, max_size=d))
    return n, c, tuple(p * sg for p, sg in zip(perm, signs)), tuple(shift)


@settings(max_examples=60, deadline=None)
@given(similarities())
def test_similarity_invariance(args):
    n, c, perm, shift = args
    img = apply_rational_similarity(standard_simplex(n), c, perm, shift)
    assert img.is_regular() and img.edge_sq_lengths() == {2 * c * c}
    assert well_built_ratio(img, random.Random(n).randrange(n + 1)) == n * n
    assert simplex_dihedral_cosine(img, 0, n) == Q(1, n)
    assert simplex_central_cosine(img, 1, n) == Q(-1, n)
    assert verify_altitude_properties(img).passed
