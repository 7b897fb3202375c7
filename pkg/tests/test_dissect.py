import pytest
from hypothesis import assume, given, settings, strategies as st

from latticediss.errors import Degenerate, IsVertex, NotIntegerArea, OutsideTriangle
from latticediss.dissect import (
    Dissection,
    NormalizedTriangle,
    UnimodularAffineMap,
    diagonal_dissection,
    dissection_to_json,
    normalize,
    parse_dissection_json,
    refine_triangle,
    split_with_point,
    unit_dissection,
)
from latticediss.geometry import (
    LatticePoint,
    LatticeTriangle,
    as_triangle,
    boundary_word,
    color_of,
    polygon_area2,
    signed_area2,
    validate_convex,
)
from latticediss.verify import verify_dissection
from latticediss.words import CyclicWord, decide_contractible

coords = st.integers(min_value=-60, max_value=60)
pts = st.tuples(coords, coords).map(lambda t: LatticePoint(*t))

unimods = st.builds(
    lambda sh1, sh2, swap, tx, ty: _build_map(sh1, sh2, swap, tx, ty),
    st.integers(-4, 4), st.integers(-4, 4), st.booleans(),
    st.integers(-50, 50), st.integers(-50, 50),
)


def _build_map(sh1, sh2, swap, tx, ty):
    m = UnimodularAffineMap(1, sh1, 0, 1).compose(UnimodularAffineMap(1, 0, sh2, 1))
    if swap:
        m = UnimodularAffineMap(0, 1, 1, 0).compose(m)
    return UnimodularAffineMap(m.m00, m.m01, m.m10, m.m11, tx, ty)


even_triangles = st.tuples(pts, pts, pts).map(lambda t: LatticeTriangle(*t)).filter(
    lambda t: signed_area2(t) != 0 and signed_area2(t) % 2 == 0
)


# --- UnimodularAffineMap ------------------------------------------------------

def test_map_requires_unimodular():
    with pytest.raises(ValueError):
        UnimodularAffineMap(2, 0, 0, 1)
    with pytest.raises(ValueError):
        UnimodularAffineMap(1, 1, 1, 1)
    assert UnimodularAffineMap(0, 1, 1, 0).det == -1


@given(unimods, pts)
def test_map_inverse_roundtrip(m, p):
    assert m.inverse().apply(m.apply(p)) == p
    assert m.apply(m.inverse().apply(p)) == p


@given(unimods, unimods, pts)
def test_map_compose(m1, m2, p):
    assert m1.compose(m2).apply(p) == m1.apply(m2.apply(p))


@given(unimods, pts, pts, pts)
def test_map_scales_area_by_det(m, a, b, c):
    t = LatticeTriangle(a, b, c)
    mt = LatticeTriangle(m.apply(a), m.apply(b), m.apply(c))
    assert signed_area2(mt) == m.det * signed_area2(t)


@given(unimods, pts, pts)
def test_map_preserves_color_equality(m, p, q):
    same = color_of(p) == color_of(q)
    same_img = color_of(m.apply(p)) == color_of(m.apply(q))
    assert same == same_img


# --- normalize -----------------------------------------------------------------

def test_normalize_examples():
    M, norm = normalize(as_triangle(((0, 0), (2, 0), (1, 1))))
    assert norm == NormalizedTriangle(2, 1, 1)
    # frozen by running the extended euclidean step by hand on edge (0,2)
    M, norm = normalize(as_triangle(((0, 0), (0, 2), (-1, 1))))
    assert norm == NormalizedTriangle(2, 1, 1)
    assert M.det == 1
    assert M.apply((0, 0)) == (0, 0)
    assert M.apply((0, 2)) == (2, 0)
    assert M.apply((-1, 1)) == (1, 1)


def test_normalize_errors():
    with pytest.raises(NotIntegerArea):
        normalize(as_triangle(((0, 0), (1, 0), (0, 1))))
    with pytest.raises(Degenerate):
        normalize(as_triangle(((0, 0), (1, 1), (2, 2))))


@settings(max_examples=400)
@given(even_triangles)
def test_normalize_properties(t):
    M, norm = normalize(t)
    d, p, q = norm
    assert d % 2 == 0 and d > 0
    assert 1 <= p <= q
    assert d * q == abs(signed_area2(t))
    assert M.det == 1
    images = {M.apply(v) for v in t}
    assert images == {LatticePoint(0, 0), LatticePoint(d, 0), LatticePoint(p, q)}


# --- split_with_point ------------------------------------------------------------

def test_split_interior():
    t = as_triangle(((0, 0), (2, 0), (1, 2)))
    parts = split_with_point(t, LatticePoint(1, 1))
    assert len(parts) == 3
    assert sorted(signed_area2(p) for p in parts) == [1, 1, 2]


def test_split_on_edge():
    t = as_triangle(((0, 0), (4, 0), (0, 1)))
    parts = split_with_point(t, LatticePoint(2, 0))
    assert [signed_area2(p) for p in parts] == [2, 2]


def test_split_errors():
    t = as_triangle(((0, 0), (2, 0), (1, 2)))
    with pytest.raises(OutsideTriangle):
        split_with_point(t, LatticePoint(5, 5))
    with pytest.raises(IsVertex):
        split_with_point(t, LatticePoint(2, 0))
    with pytest.raises(Degenerate):
        split_with_point(as_triangle(((0, 0), (1, 0), (2, 0))), LatticePoint(1, 0))


@settings(max_examples=300)
@given(st.tuples(pts, pts, pts), pts)
def test_split_partitions_area(tv, x):
    t = LatticeTriangle(*tv)
    assume(signed_area2(t) > 0)
    assume(x not in t)
    try:
        parts = split_with_point(t, x)
    except OutsideTriangle:
        return
    assert sum(signed_area2(p) for p in parts) == signed_area2(t)
    assert all(signed_area2(p) > 0 for p in parts)


# --- refine_triangle --------------------------------------------------------------

def test_refine_examples():
    t = as_triangle(((0, 0), (2, 0), (1, 1)))
    assert refine_triangle(t).triangles == (t,)
    assert [signed_area2(p) for p in refine_triangle(as_triangle(((0, 0), (4, 0), (0, 1)))).triangles] == [2, 2]
    d = refine_triangle(as_triangle(((0, 0), (2, 0), (1, 3))))
    assert len(d) == 3 and set(d.doubled_areas()) == {2}


def test_refine_errors():
    with pytest.raises(NotIntegerArea):
        refine_triangle(as_triangle(((0, 0), (1, 0), (0, 1))))
    with pytest.raises(Degenerate):
        refine_triangle(as_triangle(((0, 0), (2, 0), (4, 0))))


@settings(max_examples=150, deadline=None)
@given(even_triangles)
def test_refine_properties(t):
    d = refine_triangle(t)
    a2 = abs(signed_area2(t))
    assert len(d) == a2 // 2
    assert all(a == 2 for a in d.doubled_areas())
    # pieces form a genuine dissection of the triangle
    tv = t if signed_area2(t) > 0 else LatticeTriangle(t.v0, t.v2, t.v1)
    P = validate_convex(tv)
    assert verify_dissection(P, d, "unit").valid


# --- diagonal and unit dissections --------------------------------------------------

def test_diagonal_dissection_examples():
    assert diagonal_dissection(validate_convex([(0, 0), (1, 0), (1, 1), (0, 1)])) is None
    tri = validate_convex([(0, 0), (2, 0), (1, 1)])
    D = diagonal_dissection(tri)
    assert D is not None and len(D) == 1 and set(D.triangles[0]) == set(tri.vertices)


def test_diagonal_dissection_dodecagon():
    from latticediss.gen import realize_word

    P = realize_word(CyclicWord("ABABCCDCBBDB"))
    assert P is not None
    D = diagonal_dissection(P)
    assert D is not None and len(D) == 10
    assert all(a > 0 and a % 2 == 0 for a in D.doubled_areas())
    assert verify_dissection(P, D, "integral").valid


def test_unit_dissection_examples():
    assert unit_dissection(validate_convex([(0, 0), (3, 0), (3, 5), (0, 5)])) is None
    tri = validate_convex([(0, 0), (4, 0), (0, 1)])
    U = unit_dissection(tri)
    assert U is not None and len(U) == 2
    assert verify_dissection(tri, U, "unit").valid


def test_unit_dissection_hexagon_none():
    from latticediss.gen import realize_word

    P = realize_word(CyclicWord("ABCABC"))
    assert P is not None
    assert unit_dissection(P) is None


def test_unit_dissection_matches_contractibility():
    from latticediss.gen import random_convex_polygon

    for seed in range(40):
        P = random_convex_polygon(3 + seed % 9, 25, seed=seed)
        ok, _ = decide_contractible(boundary_word(P))
        U = unit_dissection(P)
        if ok:
            assert U is not None and len(U) == polygon_area2(P) // 2
            assert verify_dissection(P, U, "unit").valid
        else:
            assert U is None


# --- JSON -----------------------------------------------------------------------

def test_dissection_json_roundtrip():
    P = validate_convex([(0, 0), (4, 0), (0, 1)])
    D = unit_dissection(P)
    poly, D2 = parse_dissection_json(dissection_to_json(P, D))
    assert poly == list(P.vertices)
    assert D2.triangles == D.triangles


def test_dissection_json_rejects_bad_shapes():
    with pytest.raises(ValueError):
        parse_dissection_json('{"triangles": [[[0,0],[1,0]]]}')
    with pytest.raises(ValueError):
        parse_dissection_json('[1,2,3]')
