"""Classical root systems A_n, B_n, C_n, D_n in orthogonal e_s coordinates.

Roots and Cartan vectors are tuples of ``Fraction`` in the ambient space
R^n (R^{n+1} for A_n). A Cartan vector ``u`` stands for the element T of
the compact Cartan subalgebra with ``alpha(T) = i * (alpha, u)``, so every
root evaluation is the rational ``(alpha, u)``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from . import exact
from .errors import DimensionError, InvalidRootDatum, InvalidSubsystem

Root = tuple  # tuple[Fraction, ...]
CartanVector = tuple  # tuple[Fraction, ...]

FAMILIES = ("A", "B", "C", "D")


def _unit(n: int, *entries: tuple[int, int]) -> Root:
    v = [Fraction(0)] * n
    for i, c in entries:
        v[i] += c
    return tuple(v)


def negate(v: Sequence) -> tuple:
    return tuple(-x for x in v)


def canonical(root: Root) -> Root:
    """Representative of {root, -root} whose first nonzero entry is positive."""
    for x in root:
        if x != 0:
            return tuple(root) if x > 0 else negate(root)
    raise InvalidRootDatum("zero vector is not a root")


@dataclass(frozen=True)
class Wall:
    """The hyperplane ker(root) in t. Walls of alpha and -alpha coincide."""

    root: Root

    def __post_init__(self):
        object.__setattr__(self, "root", canonical(exact.vec(self.root)))

    def value(self, u: CartanVector) -> Fraction:
        return evaluate_root(self.root, u)


def evaluate_root(alpha: Root, u: CartanVector) -> Fraction:
    """Rational r with alpha(T) = i*r for the toral element T encoded by u."""
    if len(alpha) != len(u):
        raise DimensionError(
            f"root has dimension {len(alpha)} but Cartan vector has {len(u)}"
        )
    return exact.dot(alpha, u)


def reflect(u: Sequence, alpha: Root) -> tuple:
    """Weyl reflection s_alpha(u) = u - 2(alpha,u)/(alpha,alpha) alpha."""
    c = 2 * exact.dot(alpha, u) / exact.dot(alpha, alpha)
    return tuple(x - c * a for x, a in zip(u, alpha))


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    ambient_dim: int
    roots: tuple
    simple_roots: tuple
    subsystem_only: bool = False
    _root_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_root_set", frozenset(self.roots))

    def __contains__(self, v) -> bool:
        return tuple(v) in self._root_set

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @cached_property
    def cartan_matrix(self) -> tuple:
        s = self.simple_roots
        return tuple(
            tuple(int(2 * exact.dot(a, b) / exact.dot(b, b)) for b in s) for a in s
        )

    def coroot(self, alpha: Root) -> tuple:
        return exact.scale(Fraction(2) / exact.dot(alpha, alpha), alpha)

    @cached_property
    def simple_coroots(self) -> tuple:
        return tuple(self.coroot(a) for a in self.simple_roots)

    @cached_property
    def _basis_solver(self):
        # columns = simple roots; rows = ambient coordinates
        return exact.transpose([list(a) for a in self.simple_roots])

    def simple_coefficients(self, v: Sequence) -> tuple | None:
        """Coefficients of v in the simple-root basis, or None if v is outside their span."""
        if len(v) != self.ambient_dim:
            raise DimensionError("vector does not live in the ambient space")
        return exact.solve(self._basis_solver, v)

    @cached_property
    def _coefficients(self) -> dict:
        return {r: self.simple_coefficients(r) for r in self.roots}

    def coefficients(self, root: Root) -> tuple:
        return self._coefficients[tuple(root)]

    def height(self, root: Root) -> int:
        return int(sum(self.coefficients(root)))

    def is_positive(self, root: Root) -> bool:
        return self.height(root) > 0

    @cached_property
    def positive_roots(self) -> tuple:
        """Positive roots ordered by height, simple roots first by index."""
        pos = [r for r in self.roots if self.is_positive(r)]
        return tuple(
            sorted(pos, key=lambda r: (self.height(r), tuple(-c for c in self.coefficients(r))))
        )

    def check_vector(self, u: Sequence) -> CartanVector:
        u = exact.vec(u)
        if len(u) != self.ambient_dim:
            raise DimensionError(
                f"{self.name} Cartan vectors have {self.ambient_dim} coordinates, got {len(u)}"
            )
        return u

    def project(self, u: Sequence) -> CartanVector:
        """Orthogonal projection onto the span of the roots (only moves A_n vectors)."""
        u = self.check_vector(u)
        if self.family != "A":
            return u
        mean = sum(u, Fraction(0)) / len(u)
        return tuple(x - mean for x in u)


def _enumerate_roots(family: str, n: int) -> tuple[list, list]:
    if family == "A":
        dim = n + 1
        roots = [_unit(dim, (s, 1), (t, -1)) for s in range(dim) for t in range(dim) if s != t]
        simple = [_unit(dim, (i, 1), (i + 1, -1)) for i in range(n)]
        return roots, simple
    roots = []
    for s, t in combinations(range(n), 2):
        for a in (1, -1):
            for b in (1, -1):
                roots.append(_unit(n, (s, a), (t, b)))
    simple = [_unit(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
    if family == "B":
        roots += [_unit(n, (s, c)) for s in range(n) for c in (1, -1)]
        simple.append(_unit(n, (n - 1, 1)))
    elif family == "C":
        roots += [_unit(n, (s, c)) for s in range(n) for c in (2, -2)]
        simple.append(_unit(n, (n - 1, 2)))
    else:
        simple.append(_unit(n, (n - 2, 1), (n - 1, 1)))
    return roots, simple


def build_root_system(family: str, rank: int) -> RootSystem:
    """Classical root system of the given family and rank.

    C_n uses simple roots e_1-e_2, ..., e_{n-1}-e_n, 2e_n. D_2 is accepted
    (it occurs as {+-e_1+-e_2} inside C_2) but flagged ``subsystem_only``.
    """
    family = str(family).upper()
    if family not in FAMILIES:
        raise InvalidRootDatum(f"unsupported family {family!r}; expected one of A, B, C, D")
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
        raise InvalidRootDatum(f"rank must be a positive integer, got {rank!r}")
    if family == "D" and rank < 2:
        raise InvalidRootDatum("D_n needs rank >= 2")
    subsystem_only = family == "D" and rank == 2
    if subsystem_only:
        warnings.warn("D2 is not simple; built as the subsystem {+-e1+-e2}", stacklevel=2)
    roots, simple = _enumerate_roots(family, rank)
    dim = rank + 1 if family == "A" else rank
    return RootSystem(
        family=family,
        rank=rank,
        ambient_dim=dim,
        roots=tuple(sorted(roots, reverse=True)),
        simple_roots=tuple(simple),
        subsystem_only=subsystem_only,
    )


def dominant_representative(u: Sequence, rs: RootSystem) -> CartanVector:
    """Move u into the closed dominant chamber by simple reflections.

    The lowest-index simple root with a negative value is reflected first;
    each step strictly reduces the number of positive roots negative on u.
    """
    u = rs.check_vector(u)
    while True:
        for alpha in rs.simple_roots:
            if evaluate_root(alpha, u) < 0:
                u = reflect(u, alpha)
                break
        else:
            return u


def forbidden_walls(rs: RootSystem, delta_h: Iterable) -> list[Wall]:
    """One wall per +- pair of roots in Delta minus Delta(h), in positive-root order."""
    dh = {tuple(exact.vec(r)) for r in delta_h}
    outside = [r for r in dh if r not in rs]
    if outside:
        raise InvalidSubsystem(f"roots not in {rs.name}: {outside}")
    return [Wall(r) for r in rs.positive_roots if r not in dh]


def weyl_orbit(u: Sequence, rs: RootSystem) -> set:
    """Full Weyl orbit of u by closure under simple reflections."""
    start = rs.check_vector(u)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for alpha in rs.simple_roots:
                w = reflect(v, alpha)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen
