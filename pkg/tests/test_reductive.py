from fractions import Fraction as F

import pytest

from fatbundles import exact
from fatbundles.chevalley import Label
from fatbundles.errors import DimensionError, InvalidSubsystem
from fatbundles.reductive import (
    Centralizer,
    Subsystem,
    centralizer_subsystem,
    d_type_subsystem,
    decompose,
    validate_subsystem,
    x_sigma,
)
from fatbundles.root_system import build_root_system, evaluate_root

from conftest import algebra

C2 = build_root_system("C", 2)


def v(*xs):
    return tuple(F(x) for x in xs)


def pm(*a):
    return {v(*a), tuple(-x for x in v(*a))}


def test_x_sigma_examples():
    assert x_sigma(C2, {1}) == v(F(1, 2), F(1, 2))
    assert x_sigma(C2, set()) == v(F(3, 2), F(1, 2))
    assert x_sigma(C2, {1, 2}) == v(0, 0)
    with pytest.raises(DimensionError):
        x_sigma(C2, {3})
    with pytest.raises(DimensionError):
        x_sigma(C2, {0})


@pytest.mark.parametrize("family,n", [("A", 3), ("B", 3), ("C", 4), ("D", 4)])
def test_x_sigma_defining_property(family, n):
    rs = build_root_system(family, n)
    for mask in range(1 << n):
        sigma = {i + 1 for i in range(n) if mask >> i & 1}
        x = x_sigma(rs, sigma)
        for i, a in enumerate(rs.simple_roots):
            assert evaluate_root(a, x) == (0 if i + 1 in sigma else 1)
        if family == "A":
            assert sum(x) == 0
        s = centralizer_subsystem(rs, sigma)
        assert validate_subsystem(rs, s).valid


def test_centralizer_subsystem_examples():
    assert centralizer_subsystem(C2, {1}) == pm(1, -1)
    assert centralizer_subsystem(C2, set()) == frozenset()
    assert centralizer_subsystem(C2, {1, 2}) == set(C2.roots)


def test_validate_subsystem():
    long_roots = pm(2, 0) | pm(0, 2)
    assert validate_subsystem(C2, long_roots).valid
    rep = validate_subsystem(C2, {v(1, -1), v(0, 2)})
    assert not rep and rep.missing_negatives
    assert "not symmetric" in rep.describe()
    rep = validate_subsystem(C2, {v(1, 0)})
    assert rep.not_in_root_system == (v(1, 0),)


def test_short_roots_of_c2_are_not_closed():
    # (e1 - e2) + (e1 + e2) = 2e1 is a root, so {+-e1 +- e2} fails closure in C_2
    s = d_type_subsystem(C2).roots
    assert s == pm(1, 1) | pm(1, -1)
    rep = validate_subsystem(C2, s)
    assert not rep.valid
    assert not rep.missing_negatives and not rep.not_in_root_system
    sums = {c for _, _, c in rep.closure_violations}
    assert sums == pm(2, 0) | pm(0, 2)
    # the bracket confirms it: [U(e1-e2), U(e1+e2)] lands on the 2e1 and 2e2 planes, outside h
    L = algebra("C", 2)
    a, b = L.index[Label("U", v(1, -1))], L.index[Label("U", v(1, 1))]
    out = L.bracket_basis(a, b)
    assert out and {L.labels[k].key for k in out} == {v(2, 0), v(0, 2)}


def test_b_type_short_root_free_subsystem_is_closed():
    # in B_n the same set is the root system of so(2n), which is closed
    rs = build_root_system("B", 3)
    assert validate_subsystem(rs, d_type_subsystem(rs).roots).valid


def test_decompose_centralizer_c2():
    D = decompose(algebra("C", 2), Centralizer({1}))
    assert (D.dim_h, D.dim_m) == (4, 6)
    assert D.checks.all()
    assert D.x_sigma == v(F(1, 2), F(1, 2))
    assert D.warnings() == []
    assert sorted(D.complement_positive) == sorted([v(1, 1), v(2, 0), v(0, 2)])


def test_decompose_d_type_c2():
    D = decompose(algebra("C", 2), d_type_subsystem(C2))
    assert (D.dim_h, D.dim_m) == (6, 4)
    c = D.checks
    assert c.equal_rank and c.orthogonal and c.killing_nondeg_on_h and c.killing_nondeg_on_m
    assert not c.closed and not c.bracket_hm_in_m
    assert len(D.warnings()) == 2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_d_type_dimensions(n):
    L = algebra("C", n)
    D = decompose(L, d_type_subsystem(L.rs))
    assert D.dim_m == 2 * n and D.dim_h == n * (2 * n - 1)


def test_degenerate_and_errors():
    L = algebra("C", 2)
    D = decompose(L, Subsystem(C2.roots))
    assert D.degenerate and D.dim_m == 0 and "m = 0" in D.warnings()
    with pytest.raises(InvalidSubsystem):
        decompose(L, Subsystem([v(1, -1), v(0, 2)]))
    with pytest.raises(InvalidSubsystem):
        decompose(L, Subsystem([v(3, 0), v(-3, 0)]))
    with pytest.raises(TypeError):
        decompose(L, "nope")


@pytest.mark.parametrize("family,n", [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4)])
def test_centralizer_decompositions_hold_all_invariants(family, n):
    L = algebra(family, n)
    rs = L.rs
    for mask in range(1 << n):
        sigma = {i + 1 for i in range(n) if mask >> i & 1}
        D = decompose(L, Centralizer(sigma))
        assert D.checks.all(), sigma
        assert sorted(D.h_basis + D.m_basis) == list(range(L.dim))
        assert D.dim_m == len(rs.roots) - len(D.delta_h)
        G = L.killing_gram
        for a in D.h_basis:
            for b in D.m_basis:
                assert G[a][b] == 0
                assert set(L.bracket_basis(a, b)) <= set(D.m_basis)
        if D.dim_m:
            assert exact.is_negative_definite(D.gram(D.m_basis))
