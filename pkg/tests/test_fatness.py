from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fatbundles import exact
from fatbundles.chevalley import Label, killing
from fatbundles.errors import (
    DegenerateBase,
    DimensionError,
    InvalidPolytope,
    InvariantViolation,
    NoEscapeDirection,
)
from fatbundles.fatness import (
    DualityContext,
    FatnessCertificate,
    Polytope,
    curvature_form,
    dual_inverse,
    dual_to_cartan,
    dual_vector,
    equivalence_check,
    nondegenerate,
    polytope_fat,
    translate_polytope,
    wall_test,
)
from fatbundles.reductive import Centralizer, Subsystem, d_type_subsystem, decompose
from fatbundles.root_system import Wall, reflect

from conftest import algebra


def v(*xs):
    return tuple(F(x) for x in xs)


def dec(family, n, spec):
    L = algebra(family, n)
    if spec == "d":
        spec = d_type_subsystem(L.rs)
    return decompose(L, spec)


A1T = dec("A", 1, Centralizer({}))
C2U2 = dec("C", 2, Centralizer({1}))
C2SO4 = dec("C", 2, "d")
SQUARE = Polytope([v(1, 1), v(1, -1), v(-1, 1), v(-1, -1)])
HALF = v(F(1, 2), F(1, 2))

rational = st.fractions(min_value=-10, max_value=10, max_denominator=7)


def vectors(dim):
    return st.lists(rational, min_size=dim, max_size=dim).map(tuple)


# --- wall test ---------------------------------------------------------------

def test_wall_test_examples():
    # the coroot of A_1 in e-coordinates is (1, -1)
    assert wall_test(v(1, -1), A1T).fat
    cert = wall_test(v(0, 0), C2U2)
    assert not cert.fat
    assert {w.wall for w in cert.witnesses} == {Wall(v(1, 1)), Wall(v(2, 0)), Wall(v(0, 2))}
    assert wall_test(HALF, C2SO4).fat
    det = wall_test(HALF, C2U2, with_determinant=True).determinant
    assert det == nondegenerate(curvature_form(HALF, C2U2))[1] and det != 0
    assert wall_test(v(1, -1), A1T, with_determinant=True).determinant == 256
    assert wall_test(v(0, 0), C2U2, with_determinant=True).determinant == 0


def test_wall_test_errors():
    with pytest.raises(DegenerateBase):
        wall_test(v(1, 1), dec("C", 2, Subsystem(algebra("C", 2).rs.roots)))
    with pytest.raises(DimensionError):
        wall_test(v(1), C2U2)
    with pytest.raises(InvariantViolation):
        FatnessCertificate(v(0, 0), "not_fat", ())


@given(vectors(2), rational.filter(bool))
def test_wall_test_scale_invariant(u, c):
    for D in (C2U2, C2SO4):
        assert wall_test(u, D).fat == wall_test(tuple(c * x for x in u), D).fat


@given(vectors(3))
def test_wall_test_weyl_invariant_within_h(u):
    D = dec("B", 3, Centralizer({1, 3}))
    verdict = wall_test(u, D).fat
    for a in D.delta_h:
        assert wall_test(reflect(u, a), D).fat == verdict


# --- duality -----------------------------------------------------------------

def test_dual_vector_examples():
    ctx = DualityContext.from_decomposition(A1T)
    assert dual_vector(v(0, 0), ctx) == v(0)
    # iH_alpha is the Cartan vector (1, -1); B(iH, iH) = -8
    assert dual_vector(v(1, -1), ctx) == v(-8)


@settings(max_examples=50, deadline=None)
@given(vectors(2))
def test_dual_round_trip_and_pairing(u):
    ctx = DualityContext.from_decomposition(C2U2)
    L = C2U2.L
    cov = dual_vector(u, ctx)
    assert dual_to_cartan(cov, ctx) == u
    assert dual_inverse(cov, ctx) == tuple(L.embed_cartan(u)[i] for i in C2U2.h_basis)
    x = L.embed_cartan(u)
    for pos, k in enumerate(C2U2.h_basis):
        assert cov[pos] == killing(L, x, L.basis_vector(k))


# --- curvature form ----------------------------------------------------------

def test_curvature_a1():
    M = curvature_form(v(1, -1), A1T)
    assert M == [[0, -16], [16, 0]]
    assert nondegenerate(M) == (True, 256)
    assert curvature_form(v(0, 0), A1T) == [[0, 0], [0, 0]]
    full = A1T.L.basis_vector(A1T.L.index[Label("H", 0)])
    assert curvature_form(full, A1T) == M


def test_curvature_errors():
    L = C2U2.L
    with pytest.raises(InvariantViolation):
        curvature_form(L.basis_vector(C2U2.m_basis[0]), C2U2)
    with pytest.raises(DimensionError):
        curvature_form(v(1, 2, 3), C2U2)


@given(vectors(2), rational)
def test_curvature_is_skew_and_linear(u, c):
    M = curvature_form(u, C2U2)
    assert exact.is_skew(M)
    assert curvature_form(tuple(c * x for x in u), C2U2) == [[c * x for x in r] for r in M]


def coroot_vector(beta):
    n2 = exact.dot(beta, beta)
    return tuple(2 * x / n2 for x in beta)


@settings(max_examples=40, deadline=None)
@given(vectors(2))
def test_curvature_determinant_closed_form(u):
    """For u in t, M is block diagonal on (U_b, V_b) with entry B(u, [U_b, V_b]) = 2 B(u, iH_b)."""
    L = C2U2.L
    x = L.embed_cartan(u)
    expected = F(1)
    for b in C2U2.complement_positive:
        expected *= (2 * killing(L, x, L.embed_cartan(coroot_vector(b)))) ** 2
    assert nondegenerate(curvature_form(u, C2U2))[1] == expected


def test_nondegenerate():
    assert nondegenerate([[0, F(-16)], [F(16), 0]]) == (True, 256)
    assert nondegenerate(exact.zeros(4)) == (False, 0)
    odd = [exact.vec(r) for r in [[0, 1, 2], [-1, 0, 3], [-2, -3, 0]]]
    assert nondegenerate(odd) == (False, 0)
    with pytest.raises(InvariantViolation):
        nondegenerate([[F(1), 0], [0, 0]])


@pytest.mark.parametrize("family,n,spec", [("C", 2, Centralizer({1})), ("A", 2, Centralizer({})), ("B", 2, Centralizer({2})), ("C", 2, "d"), ("D", 4, Centralizer({2}))])
def test_equivalence_on_hypothesis_samples(family, n, spec):
    D = dec(family, n, spec)

    @settings(max_examples=25, deadline=None)
    @given(vectors(D.rs.ambient_dim))
    def check(u):
        wall, curv = equivalence_check(u, D)
        assert wall == curv

    check()
    # walls themselves must agree too
    for b in D.complement_positive:
        u = tuple(F(0) for _ in b)
        assert equivalence_check(u, D) == (False, False)


# --- polytopes ---------------------------------------------------------------

def test_polytope_fat_examples():
    assert polytope_fat(Polytope([HALF]), C2U2).fat
    assert not polytope_fat(Polytope([v(0, 0), v(3, 1)]), C2U2).fat
    cert = polytope_fat(SQUARE, C2U2)
    assert not cert.fat
    walls = {w.wall: w for w in cert.witnesses}
    assert Wall(v(2, 0)) in walls
    a, b = walls[Wall(v(2, 0))].values
    assert a * b < 0


def test_polytope_validation():
    with pytest.raises(InvalidPolytope):
        Polytope([])
    with pytest.raises(InvalidPolytope):
        Polytope([v(1, 1), v(1, 2, 3)])
    assert SQUARE.translated(HALF, 2).vertices[0] == v(2, 2)


def test_translate_examples():
    t = translate_polytope(SQUARE, HALF, C2U2)
    assert t.threshold == 2 and not t.fat_at_zero
    assert Wall(v(2, 0)) in t.active_walls
    assert not polytope_fat(SQUARE.translated(HALF, 2), C2U2).fat
    assert polytope_fat(SQUARE.translated(HALF, 3), C2U2).fat
    point = translate_polytope(Polytope([v(1, 1)]), HALF, C2U2)
    assert point.threshold == 0 and point.fat_at_zero and point.active_walls == ()
    with pytest.raises(NoEscapeDirection) as info:
        translate_polytope(SQUARE, v(0, 1), C2U2)
    assert info.value.wall == Wall(v(2, 0))
    with pytest.raises(NoEscapeDirection):
        translate_polytope(SQUARE, v(0, 0), C2U2)


@settings(max_examples=60, deadline=None)
@given(st.lists(vectors(2), min_size=1, max_size=6), vectors(2))
def test_translate_threshold_is_sharp(verts, d):
    P = Polytope(verts)
    D = C2U2
    if any(w.value(d) == 0 for w in (Wall(b) for b in D.complement_positive)):
        return
    t = translate_polytope(P, d, D)
    assert polytope_fat(P.translated(d, t.threshold + 1), D).fat
    assert polytope_fat(P.translated(d, t.threshold + F(1, 1000)), D).fat
    if t.threshold > 0:
        assert t.active_walls
        assert not polytope_fat(P.translated(d, t.threshold), D).fat
