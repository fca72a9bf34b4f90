"""Equal-rank subalgebras h of a compact form and the decomposition k = h + m."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import exact
from .chevalley import CompactLieAlgebra, Label
from .errors import DimensionError, InvalidSubsystem
from .root_system import CartanVector, RootSystem, evaluate_root, negate


@dataclass(frozen=True)
class Centralizer:
    """h = centralizer of x_sigma; ``sigma`` holds 1-based simple-root indices."""

    sigma: frozenset

    def __init__(self, sigma: Iterable[int] = ()):
        object.__setattr__(self, "sigma", frozenset(int(i) for i in sigma))


@dataclass(frozen=True)
class Subsystem:
    roots: frozenset

    def __init__(self, roots: Iterable):
        object.__setattr__(self, "roots", frozenset(exact.vec(r) for r in roots))


SubalgebraSpec = Centralizer | Subsystem


def d_type_subsystem(rs: RootSystem) -> Subsystem:
    """All roots of the form +-e_s +- e_t (s != t): so(2n) inside sp(2n), so(2n) inside so(2n+1)."""
    return Subsystem(r for r in rs.roots if sorted(abs(x) for x in r)[-2:] == [1, 1])


def _check_sigma(rs: RootSystem, sigma: Iterable[int]) -> frozenset:
    sigma = frozenset(sigma)
    bad = [i for i in sigma if not 1 <= i <= rs.rank]
    if bad:
        raise DimensionError(f"simple-root indices {sorted(bad)} outside 1..{rs.rank}")
    return sigma


def x_sigma(rs: RootSystem, sigma: Iterable[int]) -> CartanVector:
    """Toral element with alpha_i(x) = 0 for i in sigma and 1 otherwise."""
    sigma = _check_sigma(rs, sigma)
    rows = [list(a) for a in rs.simple_roots]
    rhs = [Fraction(0) if i + 1 in sigma else Fraction(1) for i in range(rs.rank)]
    if rs.family == "A":
        rows.append([Fraction(1)] * rs.ambient_dim)
        rhs.append(Fraction(0))
    x = exact.solve(rows, rhs)
    if x is None:  # pragma: no cover - simple roots are independent
        raise DimensionError("simple roots do not form a basis")
    return x


def centralizer_subsystem(rs: RootSystem, sigma: Iterable[int]) -> frozenset:
    x = x_sigma(rs, sigma)
    return frozenset(a for a in rs.roots if evaluate_root(a, x) == 0)


@dataclass(frozen=True)
class SubsystemReport:
    valid: bool
    not_in_root_system: tuple = ()
    missing_negatives: tuple = ()
    closure_violations: tuple = ()  # (alpha, beta, alpha + beta)

    def __bool__(self):
        return self.valid

    def describe(self) -> str:
        if self.valid:
            return "valid"
        parts = []
        if self.not_in_root_system:
            parts.append(f"not roots: {list(self.not_in_root_system)}")
        if self.missing_negatives:
            parts.append(f"not symmetric, missing {list(self.missing_negatives)}")
        if self.closure_violations:
            parts.append(f"not closed: {list(self.closure_violations)}")
        return "; ".join(parts)


def validate_subsystem(rs: RootSystem, roots: Iterable) -> SubsystemReport:
    """Check symmetry (S = -S) and closure (a, b in S, a+b root => a+b in S)."""
    s = {exact.vec(r) for r in roots}
    foreign = tuple(sorted(r for r in s if r not in rs))
    missing = tuple(sorted(negate(r) for r in s if negate(r) not in s and r in rs))
    bad = []
    ordered = sorted(s)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            c = tuple(x + y for x, y in zip(a, b))
            if c in rs and c not in s:
                bad.append((a, b, c))
    valid = not (foreign or missing or bad)
    return SubsystemReport(valid, foreign, missing, tuple(bad))


@dataclass(frozen=True)
class DecompositionChecks:
    equal_rank: bool
    closed: bool
    orthogonal: bool
    bracket_hm_in_m: bool
    killing_nondeg_on_h: bool
    killing_nondeg_on_m: bool

    def all(self) -> bool:
        return all(vars(self).values())


@dataclass(frozen=True)
class ReductiveDecomposition:
    L: CompactLieAlgebra
    delta_h: frozenset
    h_basis: tuple
    m_basis: tuple
    checks: DecompositionChecks
    x_sigma: CartanVector | None = None
    complement_positive: tuple = field(default=())

    def warnings(self) -> list:
        out = []
        if not self.checks.closed:
            out.append("Delta(h) is not closed under root addition, so h is not a subalgebra")
        if not self.checks.bracket_hm_in_m:
            out.append("[h, m] is not contained in m")
        if self.degenerate:
            out.append("m = 0")
        return out

    @property
    def rs(self) -> RootSystem:
        return self.L.rs

    @property
    def degenerate(self) -> bool:
        return not self.m_basis

    @property
    def dim_h(self) -> int:
        return len(self.h_basis)

    @property
    def dim_m(self) -> int:
        return len(self.m_basis)

    def gram(self, basis: Sequence[int]) -> list:
        return exact.submatrix(self.L.killing_gram, basis, basis)


def _in_span(x: dict, allowed: set) -> bool:
    return all(k in allowed for k in x)


def decompose(L: CompactLieAlgebra, spec: SubalgebraSpec) -> ReductiveDecomposition:
    """Split L into h (t plus root planes of Delta(h)) and its Killing complement m.

    Root sets outside Delta or not closed under negation raise
    InvalidSubsystem. Everything else, including closure under root
    addition, is computed and stored in ``checks`` without raising.
    """
    rs = L.rs
    xs = None
    if isinstance(spec, Centralizer):
        xs = x_sigma(rs, spec.sigma)
        dh = centralizer_subsystem(rs, spec.sigma)
    elif isinstance(spec, Subsystem):
        report = validate_subsystem(rs, spec.roots)
        if report.not_in_root_system or report.missing_negatives:
            raise InvalidSubsystem(report.describe())
        dh = spec.roots
    else:
        raise TypeError(f"unknown subalgebra spec {spec!r}")

    h_basis, m_basis, comp = [], [], []
    for i, lab in enumerate(L.labels):
        if lab.kind == "H" or lab.key in dh:
            h_basis.append(i)
        else:
            m_basis.append(i)
            if lab.kind == "U":
                comp.append(lab.key)

    G = L.killing_gram
    hs, ms = set(h_basis), set(m_basis)
    equal_rank = all(L.index[Label("H", j)] in hs for j in range(rs.rank))
    orthogonal = all(G[a][b] == 0 for a in h_basis for b in m_basis)
    hm_in_m = all(_in_span(L.bracket_basis(a, b), ms) for a in h_basis for b in m_basis)
    nondeg_h = exact.determinant(exact.submatrix(G, h_basis, h_basis)) != 0
    nondeg_m = exact.determinant(exact.submatrix(G, m_basis, m_basis)) != 0
    closed = not validate_subsystem(rs, dh).closure_violations
    checks = DecompositionChecks(equal_rank, closed, orthogonal, hm_in_m, nondeg_h, nondeg_m)
    return ReductiveDecomposition(
        L, frozenset(dh), tuple(h_basis), tuple(m_basis), checks, xs, tuple(comp)
    )
