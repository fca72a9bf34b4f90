"""Fatness tests for the canonical connection of K -> K/H.

A Cartan vector u (identified with the covector B(u, .)) is fat when the
two-form (X, Y) -> B(u, [X, Y]) on m is non-degenerate. For u in t this is
equivalent to u avoiding every wall ker(beta), beta in Delta minus Delta(h);
both routes are implemented here and can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import exact
from .chevalley import killing
from .errors import (
    DegenerateBase,
    DimensionError,
    InvalidPolytope,
    InvariantViolation,
    NoEscapeDirection,
)
from .reductive import ReductiveDecomposition
from .root_system import CartanVector, Wall, evaluate_root

FAT = "fat"
NOT_FAT = "not_fat"


@dataclass(frozen=True)
class Witness:
    """A wall together with the evidence that the subject meets it."""

    wall: Wall
    points: tuple  # offending vector(s)
    values: tuple  # wall values at those points


@dataclass(frozen=True)
class Polytope:
    """Convex hull of a finite vertex list of Cartan vectors."""

    vertices: tuple

    def __init__(self, vertices):
        verts = tuple(exact.vec(v) for v in vertices)
        if not verts:
            raise InvalidPolytope("a polytope needs at least one vertex")
        if len({len(v) for v in verts}) != 1:
            raise InvalidPolytope("vertices have different dimensions")
        object.__setattr__(self, "vertices", verts)

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    def translated(self, d: Sequence, c=1) -> "Polytope":
        c = exact.as_fraction(c)
        return Polytope(tuple(x + c * y for x, y in zip(v, d)) for v in self.vertices)


@dataclass(frozen=True)
class FatnessCertificate:
    subject: object  # CartanVector or Polytope
    verdict: str
    witnesses: tuple = ()
    determinant: Fraction | None = None

    def __post_init__(self):
        if self.verdict == NOT_FAT and not self.witnesses:
            raise InvariantViolation("a not_fat verdict needs at least one witness")

    @property
    def fat(self) -> bool:
        return self.verdict == FAT


def _require_m(D: ReductiveDecomposition) -> None:
    if D.degenerate:
        raise DegenerateBase("m = 0: the base K/H is a point, there is nothing to be fat on")


def _walls(D: ReductiveDecomposition) -> list:
    return [Wall(b) for b in D.complement_positive]


def wall_test(u: Sequence, D: ReductiveDecomposition, with_determinant: bool = False) -> FatnessCertificate:
    """Fat iff beta(u) != 0 for every positive beta in Delta minus Delta(h).

    Only vectors of t are accepted: every Ad_H-orbit in h meets t, and the
    set of forbidden walls is stable under the Weyl group of Delta(h).
    """
    _require_m(D)
    u = D.rs.check_vector(u)
    witnesses = tuple(
        Witness(w, (u,), (Fraction(0),)) for w in _walls(D) if w.value(u) == 0
    )
    det = None
    if with_determinant:
        _, det = nondegenerate(curvature_form(u, D))
    return FatnessCertificate(u, NOT_FAT if witnesses else FAT, witnesses, det)


@dataclass(frozen=True)
class DualityContext:
    """B_k restricted to h, used to pass between h and h*."""

    D: ReductiveDecomposition
    gram_h: list = field(repr=False)

    @classmethod
    def from_decomposition(cls, D: ReductiveDecomposition) -> "DualityContext":
        g = D.gram(D.h_basis)
        if exact.determinant(g) == 0:
            raise InvariantViolation("Killing form is degenerate on h")
        return cls(D, g)

    def h_coefficients(self, x: Sequence) -> tuple:
        """Restrict an algebra vector lying in h to the h-basis coordinates."""
        x = exact.vec(x)
        if any(x[i] for i in self.D.m_basis):
            raise InvariantViolation("vector has a component in m")
        return tuple(x[i] for i in self.D.h_basis)


def dual_vector(u: Sequence, ctx: DualityContext) -> tuple:
    """Covector u* with <u*, Y> = B(u, Y) for Y in the h-basis."""
    L = ctx.D.L
    x = L.embed_cartan(u) if len(u) == ctx.D.rs.ambient_dim else exact.vec(u)
    xh = ctx.h_coefficients(x) if len(x) == L.dim else exact.vec(x)
    if len(xh) != len(ctx.gram_h):
        raise DimensionError("vector does not match h")
    return exact.matvec(ctx.gram_h, xh)


def dual_inverse(covector: Sequence, ctx: DualityContext) -> tuple:
    """The element X of h (h-basis coordinates) with B(X, .) = covector."""
    x = exact.solve(ctx.gram_h, exact.vec(covector))
    if x is None:  # pragma: no cover - gram_h is invertible by construction
        raise InvariantViolation("Killing form is degenerate on h")
    return x


def dual_to_cartan(covector: Sequence, ctx: DualityContext) -> CartanVector:
    D = ctx.D
    xh = dual_inverse(covector, ctx)
    x = [Fraction(0)] * D.L.dim
    for i, c in zip(D.h_basis, xh):
        x[i] = c
    return D.L.cartan_vector(x)


def _pair_brackets(D: ReductiveDecomposition) -> dict:
    L = D.L
    out = {}
    for i, a in enumerate(D.m_basis):
        for j in range(i + 1, len(D.m_basis)):
            br = L.bracket_basis(a, D.m_basis[j])
            if br:
                out[(i, j)] = br
    return out


def curvature_form(xv: Sequence, D: ReductiveDecomposition) -> list:
    """Skew matrix M[a][b] = B(Xv, [e_a, e_b]) on the m-basis.

    ``xv`` is a Cartan vector or a full coefficient vector of an element of h.
    The overall minus sign of the curvature is dropped.
    """
    _require_m(D)
    L = D.L
    if len(xv) == D.rs.ambient_dim and len(xv) != L.dim:
        x = L.embed_cartan(xv)
    else:
        x = exact.vec(xv)
        if len(x) != L.dim:
            raise DimensionError(f"expected a Cartan vector or {L.dim} coefficients")
    if any(x[i] for i in D.m_basis):
        raise InvariantViolation("Xv must lie in h")
    bx = exact.matvec(L.killing_gram, x)  # B(x, e_k) for every k
    n = D.dim_m
    M = exact.zeros(n)
    for (i, j), br in _pair_brackets(D).items():
        v = sum((bx[k] * c for k, c in br.items()), Fraction(0))
        M[i][j], M[j][i] = v, -v
    return M


def nondegenerate(M: list) -> tuple[bool, Fraction]:
    """(det M != 0, det M) for a skew matrix, by exact elimination."""
    if not exact.is_skew(M):
        raise InvariantViolation("matrix is not skew-symmetric")
    if len(M) % 2:
        return False, Fraction(0)
    det = exact.determinant(M)
    return det != 0, det


def polytope_fat(P: Polytope, D: ReductiveDecomposition) -> FatnessCertificate:
    """Fat iff every forbidden wall keeps all vertices strictly on one side."""
    _require_m(D)
    if not isinstance(P, Polytope):
        P = Polytope(P)
    D.rs.check_vector(P.vertices[0])
    witnesses = []
    for w in _walls(D):
        vals = [w.value(v) for v in P.vertices]
        zero = next((i for i, x in enumerate(vals) if x == 0), None)
        if zero is not None:
            witnesses.append(Witness(w, (P.vertices[zero],), (vals[zero],)))
            continue
        pos = next((i for i, x in enumerate(vals) if x > 0), None)
        neg = next((i for i, x in enumerate(vals) if x < 0), None)
        if pos is not None and neg is not None:
            witnesses.append(
                Witness(w, (P.vertices[pos], P.vertices[neg]), (vals[pos], vals[neg]))
            )
    return FatnessCertificate(P, NOT_FAT if witnesses else FAT, tuple(witnesses))


@dataclass(frozen=True)
class Translation:
    threshold: Fraction
    fat_at_zero: bool
    active_walls: tuple  # walls attaining the threshold (empty when it is 0 from clipping)


def translate_polytope(P: Polytope, d: Sequence, D: ReductiveDecomposition) -> Translation:
    """Smallest c* >= 0 with P + c*d fat for every c > c*.

    For a wall beta with beta(d) != 0 the hull P + c*d meets ker(beta)
    exactly for c in [min_v, max_v] of -beta(v)/beta(d); c* is the largest
    upper end, clipped at 0.
    """
    _require_m(D)
    if not isinstance(P, Polytope):
        P = Polytope(P)
    d = D.rs.check_vector(d)
    best = Fraction(0)
    active = []
    for w in _walls(D):
        bd = w.value(d)
        vals = [w.value(v) for v in P.vertices]
        if bd == 0:
            if min(vals) <= 0 <= max(vals):
                raise NoEscapeDirection(
                    f"direction {d} lies in wall {w.root}, which the polytope meets", w
                )
            continue
        top = max(-x / bd for x in vals)
        if top > best:
            best, active = top, [w]
        elif top == best and top > 0:
            active.append(w)
    return Translation(best, polytope_fat(P, D).fat, tuple(active))


def equivalence_check(
    u: Sequence,
    D: ReductiveDecomposition,
    curvature: Callable = curvature_form,
) -> tuple[bool, bool]:
    """(wall verdict is fat, curvature determinant is nonzero) for one vector."""
    wall = wall_test(u, D).fat
    curv, _ = nondegenerate(curvature(u, D))
    return wall, curv
