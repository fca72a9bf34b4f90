"""JSON-ready dictionaries for certificates and reports. Rationals become "p/q"."""

from __future__ import annotations

from .exact import format_rational
from .fatness import FatnessCertificate, Polytope, Translation, Witness
from .oracle import OracleReport
from .reductive import ReductiveDecomposition
from .root_system import RootSystem
from .twistor import TwistorCertificate


def rvec(v) -> list:
    return [format_rational(x) for x in v]


def rmat(m) -> list:
    return [rvec(row) for row in m]


def root_system(rs: RootSystem) -> dict:
    return {
        "family": rs.family,
        "rank": rs.rank,
        "ambient_dim": rs.ambient_dim,
        "subsystem_only": rs.subsystem_only,
        "simple_roots": [rvec(a) for a in rs.simple_roots],
        "positive_roots": [rvec(a) for a in rs.positive_roots],
        "roots": [rvec(a) for a in rs.roots],
        "cartan_matrix": [list(row) for row in rs.cartan_matrix],
    }


def decomposition(D: ReductiveDecomposition, gram: bool = False) -> dict:
    out = {
        "algebra": D.rs.name,
        "dim": D.L.dim,
        "dim_h": D.dim_h,
        "dim_m": D.dim_m,
        "degenerate": D.degenerate,
        "delta_h": [rvec(a) for a in sorted(D.delta_h, reverse=True)],
        "h_basis": [str(D.L.labels[i]) for i in D.h_basis],
        "m_basis": [str(D.L.labels[i]) for i in D.m_basis],
        "x_sigma": rvec(D.x_sigma) if D.x_sigma is not None else None,
        "checks": dict(vars(D.checks)),
        "warnings": D.warnings(),
    }
    if gram:
        out["killing_gram"] = rmat(D.L.killing_gram)
    return out


def witness(w: Witness) -> dict:
    return {
        "wall": rvec(w.wall.root),
        "points": [rvec(p) for p in w.points],
        "values": rvec(w.values),
    }


def fatness(cert: FatnessCertificate) -> dict:
    subject = cert.subject
    if isinstance(subject, Polytope):
        subject = {"vertices": [rvec(v) for v in subject.vertices]}
    else:
        subject = rvec(subject)
    return {
        "subject": subject,
        "verdict": cert.verdict,
        "witnesses": [witness(w) for w in cert.witnesses],
        "determinant": format_rational(cert.determinant) if cert.determinant is not None else None,
    }


def translation(t: Translation, direction) -> dict:
    return {
        "direction": rvec(direction),
        "threshold": format_rational(t.threshold),
        "fat_at_zero": t.fat_at_zero,
        "active_walls": [rvec(w.root) for w in t.active_walls],
    }


def twistor(cert: TwistorCertificate) -> dict:
    D = cert.D
    return {
        "algebra": D.rs.name if D is not None else None,
        "verdict": cert.verdict,
        "reason": cert.reason,
        "T": rvec(cert.T) if cert.T is not None else None,
        "sign_pattern": [
            {"root": rvec(r), "sign": s} for r, s in cert.sign_pattern.items()
        ],
        "checks": dict(vars(cert.checks)),
        "fiber": cert.fiber,
        "dim_m": D.dim_m if D is not None else None,
        "decomposition_checks": dict(vars(D.checks)) if D is not None else None,
        "warnings": cert.warnings,
    }


def oracle(rep: OracleReport, seed: int, bound: int) -> dict:
    return {
        "samples": rep.samples,
        "seed": seed,
        "bound": bound,
        "agree": rep.agree,
        "fat": rep.fat,
        "not_fat": rep.not_fat,
        "disagreements": [rvec(u) for u in rep.disagreements],
        "ok": rep.ok,
    }
