"""Twistor-bundle certification over equal-rank homogeneous spaces K/H.

The certifier looks for T in t with beta(T) = +-i on every root of the
complement, checks that J = ad T restricted to m is a Killing-skew complex
structure, and that T avoids the forbidden walls.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import exact
from .chevalley import CompactLieAlgebra, adjoint_matrix
from .errors import DegenerateBase, DimensionError, InvalidSubsystem
from .fatness import wall_test
from .reductive import ReductiveDecomposition, SubalgebraSpec, decompose
from .root_system import CartanVector

CERTIFIED = "certified_fat"

DUALITY_NOTE = (
    "X_{J*} = T holds by construction: the form on so(m) is the pushforward of "
    "B_h along the isotropy representation, and J = ad T|_m"
)


def block_j(n: int) -> list:
    """n copies of [[0, 1], [-1, 0]] on the diagonal."""
    J = exact.zeros(2 * n)
    for k in range(n):
        J[2 * k][2 * k + 1] = Fraction(1)
        J[2 * k + 1][2 * k] = Fraction(-1)
    return J


def fiber_descriptor(dim_m: int) -> str:
    return f"SO({dim_m})/U({dim_m // 2})"


def _reduce_row(rows: list, row: list):
    """Reduce ``row`` (last entry = rhs) against echelon ``rows`` of (pivot, row)."""
    row = list(row)
    for p, r in rows:
        if row[p]:
            f = row[p]
            row = [x - f * y for x, y in zip(row, r)]
    return row


def _insert(rows: list, row: list):
    """New echelon list with ``row`` added, or None if it makes the system inconsistent."""
    row = _reduce_row(rows, row)
    piv = next((i for i, x in enumerate(row[:-1]) if x), None)
    if piv is None:
        return None if row[-1] else rows
    row = [x / row[piv] for x in row]
    new = []
    for p, r in rows:
        if r[piv]:
            f = r[piv]
            r = [x - f * y for x, y in zip(r, row)]
        new.append((p, r))
    new.append((piv, row))
    return new


def solve_T(D: ReductiveDecomposition):
    """First sign pattern (+ before -) admitting T with beta(T) = pattern[beta].

    Returns ``(T, pattern)`` or None. The search is a depth-first walk over
    the positive complement roots that drops a branch as soon as its
    linear system becomes inconsistent, so None means no pattern works.
    """
    if D.degenerate:
        raise DegenerateBase("m = 0: no complement roots to solve for")
    rs = D.rs
    n = rs.ambient_dim
    base = []
    if rs.family == "A":
        base = _insert(base, [Fraction(1)] * n + [Fraction(0)])
    roots = D.complement_positive

    def search(k, rows, signs):
        if k == len(roots):
            return rows, signs
        for s in (1, -1):
            nxt = _insert(rows, list(roots[k]) + [Fraction(s)])
            if nxt is not None:
                found = search(k + 1, nxt, signs + (s,))
                if found:
                    return found
        return None

    found = search(0, base, ())
    if found is None:
        return None
    rows, signs = found
    T = [Fraction(0)] * n
    for p, r in rows:
        T[p] = r[-1]
    return tuple(T), dict(zip(roots, signs))


@dataclass(frozen=True)
class JChecks:
    square_minus_id: bool
    skew_wrt_killing: bool


def restricted_ad(T: Sequence, D: ReductiveDecomposition) -> list:
    L = D.L
    T = D.rs.check_vector(T)
    ad = adjoint_matrix(L, L.embed_cartan(T))
    return exact.submatrix(ad, D.m_basis, D.m_basis)


def check_J(T: Sequence, D: ReductiveDecomposition) -> JChecks:
    """J = ad T|_m: test J^2 = -id and G J + J^T G = 0 for the Killing Gram G on m."""
    if len(T) != D.rs.ambient_dim:
        raise DimensionError(f"T needs {D.rs.ambient_dim} coordinates")
    J = restricted_ad(T, D)
    n = len(J)
    sq = exact.matmul(J, J)
    minus_id = [[Fraction(-1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    G = D.gram(D.m_basis)
    skew = exact.is_zero(
        [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(exact.matmul(G, J), exact.matmul(exact.transpose(J), G))]
    )
    return JChecks(sq == minus_id, skew)


@dataclass(frozen=True)
class TwistorChecks:
    rank_equal: bool = False
    dim_m_even: bool = False
    T_found: bool = False
    J_square_minus_id: bool = False
    J_skew: bool = False
    T_off_walls: bool = False
    duality_convention_note: str = DUALITY_NOTE


@dataclass(frozen=True)
class TwistorCertificate:
    D: ReductiveDecomposition | None
    verdict: str
    reason: str | None = None
    T: CartanVector | None = None
    sign_pattern: dict = field(default_factory=dict)
    checks: TwistorChecks = field(default_factory=TwistorChecks)
    fiber: str | None = None

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    @property
    def warnings(self) -> list:
        """Caveats about h and m that the verdict does not depend on."""
        return self.D.warnings() if self.D is not None else []


def _failed(D, reason, **kw) -> TwistorCertificate:
    return TwistorCertificate(D, f"failed({reason})", reason, **kw)


def certify_twistor(L: CompactLieAlgebra, spec: SubalgebraSpec) -> TwistorCertificate:
    """decompose -> rank/dimension checks -> solve_T -> check_J -> wall test on T.

    The verdict depends only on those steps. Defects of the decomposition
    itself (Delta(h) not closed, [h, m] not in m) do not change it; they
    are listed in ``certificate.warnings``.
    """
    try:
        D = decompose(L, spec)
    except InvalidSubsystem as exc:
        return _failed(None, f"invalid_subsystem: {exc}")
    rank_equal = D.checks.equal_rank
    if D.degenerate:
        return _failed(D, "degenerate", checks=TwistorChecks(rank_equal=rank_equal))
    fiber = fiber_descriptor(D.dim_m)
    even = D.dim_m % 2 == 0
    if not (rank_equal and even):
        checks = TwistorChecks(rank_equal=rank_equal, dim_m_even=even)
        return _failed(D, "not_rank_equal" if not rank_equal else "odd_dim_m", checks=checks)
    solved = solve_T(D)
    if solved is None:
        checks = TwistorChecks(rank_equal=True, dim_m_even=True)
        return _failed(D, "no_T", checks=checks, fiber=fiber)
    T, pattern = solved
    jc = check_J(T, D)
    off_walls = wall_test(T, D).fat
    checks = TwistorChecks(True, True, True, jc.square_minus_id, jc.skew_wrt_killing, off_walls)
    kw = dict(T=T, sign_pattern=pattern, checks=checks, fiber=fiber)
    if not jc.square_minus_id:
        return _failed(D, "J_square", **kw)
    if not jc.skew_wrt_killing:
        return _failed(D, "J_skew", **kw)
    if not off_walls:
        return _failed(D, "T_on_wall", **kw)
    return TwistorCertificate(D, CERTIFIED, None, **kw)
