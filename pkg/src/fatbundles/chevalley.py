"""Chevalley basis, compact real form, adjoint matrices and Killing form.

The integer constants N(alpha, beta) are read off a rational matrix
realisation of the classical algebra. Root vectors for non-simple roots are
generated from the simple ones by

    X_{alpha_i + beta} = sign/(p+1) [X_{alpha_i}, X_beta]
    X_{-(alpha_i + beta)} = -sign/(p+1) [X_{-alpha_i}, X_{-beta}]

with alpha_i the lowest-index simple root that can be split off, which makes
(alpha_i, beta) the extraspecial pair and N(alpha_i, beta) = sign*(p+1).
The compact form

    span{ iH_j } + span{ X_a - X_-a } + span{ i(X_a + X_-a) },  a > 0

is then bracketed symbolically from the Chevalley table, so the matrices
never enter the structure constants directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Sequence

from . import exact
from .errors import DimensionError, InvariantViolation
from .root_system import CartanVector, Root, RootSystem, negate


# --- matrix realisation -----------------------------------------------------

def _weights(rs: RootSystem) -> list:
    """For each row index of the natural module, the e-coordinate weight."""
    n = rs.rank
    if rs.family == "A":
        return [exact.vec(1 if i == s else 0 for i in range(n + 1)) for s in range(n + 1)]
    plus = [exact.vec(1 if i == s else 0 for i in range(n)) for s in range(n)]
    minus = [negate(w) for w in plus]
    if rs.family == "B":
        return plus + [exact.vec([0] * n)] + minus
    return plus + minus


def _simple_generators(rs: RootSystem) -> tuple[list, list]:
    """Sparse matrices e_i, f_i with [e_i, f_i] equal to the simple coroot."""
    n = rs.rank
    one = Fraction(1)
    fam = rs.family
    if fam == "A":
        es = [{(i, i + 1): one} for i in range(n)]
        fs = [{(i + 1, i): one} for i in range(n)]
        return es, fs
    size = 2 * n + (1 if fam == "B" else 0)
    neg = lambda s: size - n + s  # row of the weight -e_s
    es, fs = [], []
    for i in range(n - 1):
        es.append({(i, i + 1): one, (neg(i + 1), neg(i)): -one})
        fs.append({(i + 1, i): one, (neg(i), neg(i + 1)): -one})
    last = n - 1
    if fam == "B":
        zero = n
        es.append({(last, zero): one, (zero, neg(last)): -one})
        fs.append({(zero, last): 2 * one, (neg(last), zero): -2 * one})
    elif fam == "C":
        es.append({(last, neg(last)): one})
        fs.append({(neg(last), last): one})
    else:
        es.append({(last - 1, neg(last)): one, (last, neg(last - 1)): -one})
        fs.append({(neg(last), last - 1): one, (neg(last - 1), last): -one})
    return es, fs


def _mat_mul(a: dict, b: dict) -> dict:
    out = {}
    by_row = {}
    for (k, j), v in b.items():
        by_row.setdefault(k, []).append((j, v))
    for (i, k), x in a.items():
        for j, y in by_row.get(k, ()):
            out[(i, j)] = out.get((i, j), 0) + x * y
    return {key: v for key, v in out.items() if v != 0}


def _commutator(a: dict, b: dict) -> dict:
    ab = _mat_mul(a, b)
    for key, v in _mat_mul(b, a).items():
        ab[key] = ab.get(key, 0) - v
    return {key: v for key, v in ab.items() if v != 0}


def _scaled(c, a: dict) -> dict:
    return {key: c * v for key, v in a.items() if c * v != 0}


def _ratio(a: dict, b: dict) -> Fraction | None:
    """Scalar s with a == s*b, or None if a is not a multiple of b."""
    if not b:
        raise ValueError("reference matrix is zero")
    key = next(iter(b))
    s = Fraction(a.get(key, 0)) / b[key]
    if a != _scaled(s, b):
        return None
    return s


def string_length_below(rs: RootSystem, alpha: Root, beta: Root) -> int:
    """Largest p with beta - p*alpha a root."""
    p = 0
    while tuple(b - (p + 1) * a for a, b in zip(alpha, beta)) in rs:
        p += 1
    return p


@dataclass(frozen=True)
class ChevalleyConstants:
    """N(alpha, beta) with [X_alpha, X_beta] = N X_{alpha+beta}."""

    rs: RootSystem
    N: dict
    sign: int = 1

    def __call__(self, alpha: Root, beta: Root) -> int:
        return self.N.get((tuple(alpha), tuple(beta)), 0)

    def chain_rule_holds(self) -> bool:
        return all(
            abs(v) == string_length_below(self.rs, a, b) + 1 for (a, b), v in self.N.items()
        )

    def antisymmetric(self) -> bool:
        return all(self.N.get((b, a)) == -v for (a, b), v in self.N.items())

    def negation_rule_holds(self) -> bool:
        """N(-alpha, -beta) = -N(alpha, beta), needed for the compact form to close."""
        return all(self.N.get((negate(a), negate(b))) == -v for (a, b), v in self.N.items())


def _root_vectors(rs: RootSystem, sign: int) -> dict:
    es, fs = _simple_generators(rs)
    weights = _weights(rs)
    X = {}
    for a, e, f in zip(rs.simple_roots, es, fs):
        X[a], X[negate(a)] = e, f
    for gamma in rs.positive_roots:
        if gamma in X:
            continue
        for a in rs.simple_roots:
            beta = tuple(g - x for g, x in zip(gamma, a))
            if beta in rs and rs.is_positive(beta):
                break
        else:  # pragma: no cover - every non-simple positive root splits
            raise InvariantViolation(f"cannot split {gamma}")
        c = Fraction(sign, string_length_below(rs, a, beta) + 1)
        X[gamma] = _scaled(c, _commutator(X[a], X[beta]))
        X[negate(gamma)] = _scaled(-c, _commutator(X[negate(a)], X[negate(beta)]))
    for gamma in rs.positive_roots:
        # [X_g, X_-g] must be the diagonal matrix of the coroot
        co = rs.coroot(gamma)
        h = {(r, r): exact.dot(w, co) for r, w in enumerate(weights)}
        h = {k: v for k, v in h.items() if v != 0}
        if _commutator(X[gamma], X[negate(gamma)]) != h:
            raise InvariantViolation(f"root vectors for {gamma} are not Chevalley-normalised")
    return X


def chevalley_constants(rs: RootSystem, sign: int = 1) -> ChevalleyConstants:
    """Structure constants of a Chevalley basis.

    ``sign=+1`` makes N positive on extraspecial pairs, ``sign=-1`` makes it
    negative there; both are valid Chevalley bases.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    X = _root_vectors(rs, sign)
    N = {}
    for a in rs.roots:
        for b in rs.roots:
            s = tuple(x + y for x, y in zip(a, b))
            if s not in rs:
                continue
            v = _ratio(_commutator(X[a], X[b]), X[s])
            if v is None or v == 0 or v.denominator != 1:
                raise InvariantViolation(f"[X_{a}, X_{b}] is not an integer multiple of X_{s}")
            N[(a, b)] = int(v)
    return ChevalleyConstants(rs, N, sign)


# --- compact real form ------------------------------------------------------

class Label(NamedTuple):
    """Basis label: ('H', j) for iH_{alpha_j}; ('U', a) for X_a - X_-a; ('V', a) for i(X_a + X_-a)."""

    kind: str
    key: object

    def __str__(self):
        if self.kind == "H":
            return f"iH[{self.key + 1}]"
        coords = ",".join(str(x) for x in self.key)
        return f"{self.kind}({coords})"


def _cadd(acc: dict, key, c) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


@dataclass(frozen=True)
class CompactLieAlgebra:
    rs: RootSystem
    constants: ChevalleyConstants
    labels: tuple
    brackets: dict = field(repr=False)  # (a, b) -> {k: c}, a < b, zero brackets omitted

    @property
    def dim(self) -> int:
        return len(self.labels)

    @cached_property
    def index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def structure_constant(self, a: int, b: int, k: int) -> Fraction:
        return self.bracket_basis(a, b).get(k, Fraction(0))

    def bracket_basis(self, a: int, b: int) -> dict:
        if a == b:
            return {}
        if a < b:
            return self.brackets.get((a, b), {})
        return {k: -v for k, v in self.brackets.get((b, a), {}).items()}

    def _check(self, x: Sequence) -> tuple:
        if len(x) != self.dim:
            raise DimensionError(f"expected {self.dim} coefficients, got {len(x)}")
        return exact.vec(x)

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        x, y = self._check(x), self._check(y)
        out = [Fraction(0)] * self.dim
        xs = [(a, c) for a, c in enumerate(x) if c]
        ys = [(b, c) for b, c in enumerate(y) if c]
        for a, ca in xs:
            for b, cb in ys:
                for k, v in self.bracket_basis(a, b).items():
                    out[k] += ca * cb * v
        return tuple(out)

    def basis_vector(self, a: int) -> tuple:
        return tuple(Fraction(int(i == a)) for i in range(self.dim))

    def embed_cartan(self, u: Sequence) -> tuple:
        """Coefficient vector of the toral element T with alpha(T) = i*(alpha, u)."""
        u = self.rs.project(u)
        gram = [[exact.dot(a, b) for b in self.rs.simple_coroots] for a in self.rs.simple_coroots]
        rhs = [exact.dot(a, u) for a in self.rs.simple_coroots]
        c = exact.solve(gram, rhs)
        return tuple(c) + (Fraction(0),) * (self.dim - self.rs.rank)

    def cartan_vector(self, x: Sequence) -> CartanVector:
        """Inverse of ``embed_cartan``; rejects elements with root-space components."""
        x = self._check(x)
        r = self.rs.rank
        if any(x[r:]):
            raise InvariantViolation("element is not in the Cartan subalgebra t")
        u = [Fraction(0)] * self.rs.ambient_dim
        for c, co in zip(x[:r], self.rs.simple_coroots):
            for i, v in enumerate(co):
                u[i] += c * v
        return tuple(u)

    @cached_property
    def killing_gram(self) -> list:
        return killing_form(self)


def _complex_bracket(rs: RootSystem, N: ChevalleyConstants, x: dict, y: dict) -> dict:
    """Bracket on the complex Chevalley basis {('H', j), ('X', root)} with real coefficients."""
    out = {}
    coroot_coeffs = {}
    for kx, cx in x.items():
        for ky, cy in y.items():
            c = cx * cy
            (tx, ax), (ty, ay) = kx, ky
            if tx == "H" and ty == "H":
                continue
            if tx == "H":
                _cadd(out, ky, c * exact.dot(ay, rs.simple_coroots[ax]))
            elif ty == "H":
                _cadd(out, kx, -c * exact.dot(ax, rs.simple_coroots[ay]))
            elif ax == negate(ay):
                if ax not in coroot_coeffs:
                    co = rs.coroot(ax)
                    gram = [[exact.dot(p, q) for q in rs.simple_coroots] for p in rs.simple_coroots]
                    coroot_coeffs[ax] = exact.solve(gram, [exact.dot(p, co) for p in rs.simple_coroots])
                for j, h in enumerate(coroot_coeffs[ax]):
                    if h:
                        _cadd(out, ("H", j), c * h)
            else:
                n = N(ax, ay)
                if n:
                    _cadd(out, ("X", tuple(p + q for p, q in zip(ax, ay))), c * n)
    return out


def compact_real_form(rs: RootSystem, sign: int = 1) -> CompactLieAlgebra:
    """Compact real form with basis iH_{alpha_j}, U(a), V(a) for a > 0."""
    N = chevalley_constants(rs, sign)
    labels = [Label("H", j) for j in range(rs.rank)]
    for a in rs.positive_roots:
        labels += [Label("U", a), Label("V", a)]
    # each compact basis element as P + iQ over the complex Chevalley basis
    parts = []
    for lab in labels:
        if lab.kind == "H":
            parts.append(({}, {("H", lab.key): Fraction(1)}))
        elif lab.kind == "U":
            parts.append(({("X", lab.key): Fraction(1), ("X", negate(lab.key)): Fraction(-1)}, {}))
        else:
            parts.append(({}, {("X", lab.key): Fraction(1), ("X", negate(lab.key)): Fraction(1)}))
    index = {lab: i for i, lab in enumerate(labels)}
    brackets = {}
    br = lambda x, y: _complex_bracket(rs, N, x, y)
    for a in range(len(labels)):
        pa, qa = parts[a]
        for b in range(a + 1, len(labels)):
            pb, qb = parts[b]
            real, imag = {}, {}
            for k, v in br(pa, pb).items():
                _cadd(real, k, v)
            for k, v in br(qa, qb).items():
                _cadd(real, k, -v)
            for k, v in br(pa, qb).items():
                _cadd(imag, k, v)
            for k, v in br(qa, pb).items():
                _cadd(imag, k, v)
            coeffs = _to_compact(rs, index, real, imag)
            if coeffs:
                brackets[(a, b)] = coeffs
    return CompactLieAlgebra(rs, N, tuple(labels), brackets)


def _to_compact(rs, index, real: dict, imag: dict) -> dict:
    """Coordinates of real + i*imag in the compact basis; raises if it is not in the compact form."""
    out = {}
    for (t, key), v in real.items():
        if t == "H":
            raise InvariantViolation("bracket leaves the compact form (real Cartan part)")
        if rs.is_positive(key):
            if real.get(("X", negate(key)), 0) != -v:
                raise InvariantViolation(f"U-coefficient mismatch at {key}")
            out[index[Label("U", key)]] = Fraction(v)
        elif ("X", negate(key)) not in real:
            raise InvariantViolation(f"U-coefficient mismatch at {key}")
    for (t, key), v in imag.items():
        if t == "H":
            out[index[Label("H", key)]] = Fraction(v)
        elif rs.is_positive(key):
            if imag.get(("X", negate(key)), 0) != v:
                raise InvariantViolation(f"V-coefficient mismatch at {key}")
            out[index[Label("V", key)]] = Fraction(v)
        elif ("X", negate(key)) not in imag:
            raise InvariantViolation(f"V-coefficient mismatch at {key}")
    return out


def adjoint_matrix(L: CompactLieAlgebra, x: Sequence) -> list:
    """Matrix of ad x; column k holds the coefficients of [x, e_k]."""
    x = L._check(x)
    m = exact.zeros(L.dim)
    for a, c in enumerate(x):
        if not c:
            continue
        for k in range(L.dim):
            for j, v in L.bracket_basis(a, k).items():
                m[j][k] += c * v
    return m


def killing_form(L: CompactLieAlgebra) -> list:
    """Gram matrix B(e_a, e_b) = trace(ad e_a ad e_b), by brute-force trace."""
    # ad(e_a)[k][l] = c[a][l][k]
    ads = []
    for a in range(L.dim):
        entries = {}
        for l in range(L.dim):
            for k, v in L.bracket_basis(a, l).items():
                entries[(k, l)] = v
        ads.append(entries)
    gram = exact.zeros(L.dim)
    for a in range(L.dim):
        for b in range(a, L.dim):
            adb = ads[b]
            t = sum(
                (v * adb.get((l, k), 0) for (k, l), v in ads[a].items()),
                Fraction(0),
            )
            gram[a][b] = gram[b][a] = t
    return gram


def killing(L: CompactLieAlgebra, x: Sequence, y: Sequence) -> Fraction:
    return exact.dot(L._check(x), exact.matvec(L.killing_gram, L._check(y)))


def jacobi_violations(L: CompactLieAlgebra, triples=None) -> list:
    """Basis triples (a, b, c) where the Jacobi identity fails."""
    if triples is None:
        triples = ((a, b, c) for a in range(L.dim) for b in range(a + 1, L.dim) for c in range(b + 1, L.dim))
    bad = []
    for a, b, c in triples:
        ea, eb, ec = (L.basis_vector(i) for i in (a, b, c))
        total = exact.add(
            exact.add(L.bracket(L.bracket(ea, eb), ec), L.bracket(L.bracket(eb, ec), ea)),
            L.bracket(L.bracket(ec, ea), eb),
        )
        if any(total):
            bad.append((a, b, c))
    return bad


def invariance_violations(L: CompactLieAlgebra) -> list:
    """Triples (z, x, y) with B([z,x],y) + B(x,[z,y]) != 0."""
    G = L.killing_gram
    bad = []
    for z in range(L.dim):
        ad = adjoint_matrix(L, L.basis_vector(z))
        # B(ad_z e_x, e_y) + B(e_x, ad_z e_y) = (ad^T G + G ad)[x][y]
        m1 = exact.matmul(exact.transpose(ad), G)
        m2 = exact.matmul(G, ad)
        for x in range(L.dim):
            for y in range(L.dim):
                if m1[x][y] + m2[x][y] != 0:
                    bad.append((z, x, y))
    return bad
