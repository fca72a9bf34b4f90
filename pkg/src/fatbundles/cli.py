"""Command-line front end.

Exit codes: 0 positive verdict, 1 negative verdict, 2 input error.
Output is JSON on stdout unless ``--text`` is given; errors go to stderr
as JSON ``{"error": ..., "location": ...}``.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass
from functools import lru_cache

from . import serialize
from .chevalley import compact_real_form
from .errors import FatbundlesError, NoEscapeDirection
from .exact import format_rational, parse_rational, parse_vector
from .fatness import Polytope, translate_polytope, wall_test
from .oracle import run_oracle
from .reductive import Centralizer, Subsystem, d_type_subsystem, decompose, x_sigma
from .root_system import build_root_system
from .twistor import certify_twistor

OK, NEGATIVE, INPUT_ERROR = 0, 1, 2


class SpecError(Exception):
    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


@dataclass
class ProblemSpec:
    family: str
    rank: int
    subalgebra: object  # Centralizer | Subsystem | "d-type"
    vector: tuple | None = None
    polytope: list | None = None
    sigma: list | None = None


@lru_cache(maxsize=None)
def _algebra(family: str, rank: int, sign: int = 1):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rs = build_root_system(family, rank)
    return compact_real_form(rs, sign)


def _parse_subalgebra(obj, where="subalgebra"):
    if obj is None:
        return Centralizer(())
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SpecError("expected an object with a 'kind' field", where)
    kind = obj["kind"]
    if kind == "centralizer":
        sigma = obj.get("sigma", [])
        if not isinstance(sigma, list) or not all(isinstance(i, int) for i in sigma):
            raise SpecError("sigma must be a list of integers", f"{where}.sigma")
        return Centralizer(sigma)
    if kind == "cartan":
        return Centralizer(())
    if kind == "subsystem":
        roots = obj.get("roots")
        if roots == "d-type":
            return "d-type"
        if not isinstance(roots, list):
            raise SpecError("roots must be a list of coordinate lists or 'd-type'", f"{where}.roots")
        try:
            return Subsystem([parse_rational(str(x)) for x in r] for r in roots)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise SpecError(f"bad root coordinates: {exc}", f"{where}.roots") from exc
    raise SpecError(f"unknown kind {kind!r}", f"{where}.kind")


def _parse_rvec(obj, where):
    try:
        if isinstance(obj, str):
            return parse_vector(obj)
        return tuple(parse_rational(str(x)) for x in obj)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise SpecError(f"bad rational vector: {exc}", where) from exc


def _parse_vertices(text: str, where="--vertices"):
    return [_parse_rvec(part, where) for part in text.split(";") if part.strip()]


def load_spec(args) -> ProblemSpec:
    data = {}
    if getattr(args, "spec", None):
        try:
            if args.spec == "-":
                data = json.load(sys.stdin)
            else:
                with open(args.spec, encoding="utf-8") as fh:
                    data = json.load(fh)
        except OSError as exc:
            raise SpecError(f"cannot read spec: {exc}", "--spec") from exc
        except json.JSONDecodeError as exc:
            raise SpecError(f"malformed JSON: {exc.msg} at line {exc.lineno} column {exc.colno}", "--spec") from exc
        if not isinstance(data, dict):
            raise SpecError("spec must be a JSON object", "$")
    family = args.family or data.get("family")
    rank = args.rank if args.rank is not None else data.get("rank")
    if family is None:
        raise SpecError("no root datum: give --family/--rank or --spec", "family")
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise SpecError("rank must be an integer", "rank")

    if getattr(args, "subsystem", None):
        sub = "d-type" if args.subsystem == "d-type" else _parse_subalgebra(
            {"kind": "subsystem", "roots": json.loads(args.subsystem)}, "--subsystem"
        )
    elif getattr(args, "cartan_subalgebra", False):
        sub = Centralizer(())
    elif getattr(args, "centralizer", None) is not None:
        sub = Centralizer(int(i) for i in args.centralizer.split(",") if i.strip())
    else:
        sub = _parse_subalgebra(data.get("subalgebra"))

    vector = None
    if getattr(args, "vector", None) is not None:
        vector = _parse_rvec(args.vector, "--vector")
    elif "vector" in data:
        vector = _parse_rvec(data["vector"], "vector")

    polytope = None
    if getattr(args, "vertices", None):
        polytope = _parse_vertices(args.vertices)
    elif getattr(args, "polytope", None):
        try:
            with open(args.polytope, encoding="utf-8") as fh:
                pdata = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise SpecError(f"cannot read polytope: {exc}", "--polytope") from exc
        polytope = [_parse_rvec(v, "polytope.vertices") for v in pdata.get("vertices", [])]
    elif "polytope" in data:
        polytope = [_parse_rvec(v, "polytope.vertices") for v in data["polytope"].get("vertices", [])]

    sigma = None
    if getattr(args, "sigma", None) is not None:
        sigma = [int(i) for i in args.sigma.split(",") if i.strip()]
    elif "sigma" in data:
        sigma = list(data["sigma"])
    return ProblemSpec(str(family), rank, sub, vector, polytope, sigma)


def _resolve(spec: ProblemSpec, sign: int = 1):
    L = _algebra(spec.family.upper(), spec.rank, sign)
    sub = d_type_subsystem(L.rs) if spec.subalgebra == "d-type" else spec.subalgebra
    return L, sub


def _emit(args, payload: dict, text: str) -> None:
    if args.text and not args.json:
        print(text)
    else:
        print(json.dumps(payload, indent=2))


def _fmt(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


# --- commands ---------------------------------------------------------------

def cmd_roots(args) -> int:
    spec = load_spec(args)
    L, _ = _resolve(spec)
    rs = L.rs
    payload = serialize.root_system(rs)
    text = "\n".join(
        [f"{rs.name}: {len(rs.roots)} roots, ambient dimension {rs.ambient_dim}"]
        + [f"  simple {i + 1}: {_fmt(a)}" for i, a in enumerate(rs.simple_roots)]
        + ["  Cartan matrix: " + str([list(r) for r in rs.cartan_matrix])]
    )
    _emit(args, payload, text)
    return OK


def cmd_decompose(args) -> int:
    spec = load_spec(args)
    L, sub = _resolve(spec)
    D = decompose(L, sub)
    payload = serialize.decomposition(D, gram=args.gram)
    text = (
        f"{L.rs.name}: dim k = {L.dim}, dim h = {D.dim_h}, dim m = {D.dim_m}\n"
        + "\n".join(f"  {k}: {v}" for k, v in vars(D.checks).items())
        + "".join(f"\n  warning: {w}" for w in D.warnings())
    )
    _emit(args, payload, text)
    return OK


def cmd_fat_check(args) -> int:
    spec = load_spec(args)
    if spec.vector is None:
        raise SpecError("no vector given", "--vector")
    L, sub = _resolve(spec)
    D = decompose(L, sub)
    cert = wall_test(spec.vector, D, with_determinant=True)
    payload = serialize.fatness(cert)
    text = f"{_fmt(spec.vector)} is {cert.verdict} (curvature determinant {format_rational(cert.determinant)})"
    text += "".join(f"\n  on wall {_fmt(w.wall.root)}" for w in cert.witnesses)
    _emit(args, payload, text)
    return OK if cert.fat else NEGATIVE


def cmd_twistor(args) -> int:
    spec = load_spec(args)
    L, sub = _resolve(spec)
    cert = certify_twistor(L, sub)
    payload = serialize.twistor(cert)
    text = f"{L.rs.name}: {cert.verdict}"
    if cert.T is not None:
        text += f", T = {_fmt(cert.T)}, fiber {cert.fiber}"
    text += "".join(f"\n  warning: {w}" for w in cert.warnings)
    _emit(args, payload, text)
    return OK if cert.certified else NEGATIVE


def cmd_translate(args) -> int:
    spec = load_spec(args)
    if not spec.polytope:
        raise SpecError("no polytope given", "--vertices")
    L, sub = _resolve(spec)
    D = decompose(L, sub)
    if spec.sigma is not None:
        sigma = spec.sigma
    elif isinstance(sub, Centralizer):
        sigma = sorted(sub.sigma)
    else:
        raise SpecError("a direction needs --sigma when h is not a centralizer", "--sigma")
    d = x_sigma(L.rs, sigma)
    P = Polytope(spec.polytope)
    try:
        result = translate_polytope(P, d, D)
    except NoEscapeDirection as exc:
        payload = {"error": "NoEscapeDirection", "direction": serialize.rvec(d),
                   "blocking_wall": serialize.rvec(exc.wall.root)}
        _emit(args, payload, f"no escape: direction {_fmt(d)} lies in wall {_fmt(exc.wall.root)}")
        return NEGATIVE
    payload = serialize.translation(result, d)
    text = (
        f"threshold c* = {format_rational(result.threshold)} along {_fmt(d)}; "
        f"fat at c = 0: {result.fat_at_zero}"
        + "".join(f"\n  active wall {_fmt(w.root)}" for w in result.active_walls)
    )
    _emit(args, payload, text)
    return OK


def cmd_oracle(args) -> int:
    spec = load_spec(args)
    if args.samples < 1:
        raise SpecError("--samples must be >= 1", "--samples")
    if args.bound < 1:
        raise SpecError("--bound must be >= 1", "--bound")
    L, sub = _resolve(spec)
    D = decompose(L, sub)
    rep = run_oracle(D, args.samples, args.seed, args.bound)
    payload = serialize.oracle(rep, args.seed, args.bound)
    text = f"{rep.agree}/{rep.samples} agree ({rep.fat} fat, {rep.not_fat} not fat)"
    _emit(args, payload, text)
    return OK if rep.ok else NEGATIVE


# --- catalog ----------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    command: str
    spec: dict
    expected_verdict: str


CATALOG = (
    *(
        CatalogEntry(
            f"twistor over Sp({2 * n})/SO({2 * n})",
            "twistor",
            {"family": "C", "rank": n, "subalgebra": {"kind": "subsystem", "roots": "d-type"}},
            "certified_fat",
        )
        for n in (2, 3, 4)
    ),
    CatalogEntry("twistor over SU(3)/T", "twistor",
                 {"family": "A", "rank": 2, "subalgebra": {"kind": "cartan"}}, "failed(no_T)"),
    CatalogEntry("T = (1/2,1/2) on Sp(4)/SO(4)", "fat-check",
                 {"family": "C", "rank": 2, "subalgebra": {"kind": "subsystem", "roots": "d-type"},
                  "vector": ["1/2", "1/2"]}, "fat"),
    CatalogEntry("origin on Sp(4)/U(2)", "fat-check",
                 {"family": "C", "rank": 2, "subalgebra": {"kind": "centralizer", "sigma": [1]},
                  "vector": ["0", "0"]}, "not_fat"),
    CatalogEntry("square translated along x_sigma in Sp(4)/U(2)", "translate",
                 {"family": "C", "rank": 2, "subalgebra": {"kind": "centralizer", "sigma": [1]},
                  "polytope": {"vertices": [["1", "1"], ["1", "-1"], ["-1", "1"], ["-1", "-1"]]}},
                 "2/1"),
)


def run_entry(entry: CatalogEntry) -> str:
    data = entry.spec
    spec = ProblemSpec(
        data["family"], data["rank"], _parse_subalgebra(data.get("subalgebra")),
        _parse_rvec(data["vector"], "vector") if "vector" in data else None,
        [_parse_rvec(v, "vertices") for v in data["polytope"]["vertices"]] if "polytope" in data else None,
    )
    L, sub = _resolve(spec)
    if entry.command == "twistor":
        return certify_twistor(L, sub).verdict
    D = decompose(L, sub)
    if entry.command == "fat-check":
        return wall_test(spec.vector, D).verdict
    d = x_sigma(L.rs, sorted(sub.sigma))
    return format_rational(translate_polytope(Polytope(spec.polytope), d, D).threshold)


def cmd_catalog(args) -> int:
    rows = []
    for entry in CATALOG:
        got = run_entry(entry)
        rows.append({"name": entry.name, "command": entry.command,
                     "expected": entry.expected_verdict, "got": got,
                     "ok": got == entry.expected_verdict})
    ok = all(r["ok"] for r in rows)
    text = "\n".join(f"{'PASS' if r['ok'] else 'FAIL'}  {r['name']}: {r['got']}" for r in rows)
    _emit(args, {"entries": rows, "ok": ok}, text)
    return OK if ok else NEGATIVE


# --- parser -----------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser, subalgebra: bool = True) -> None:
    p.add_argument("--spec", metavar="FILE", help="JSON problem spec ('-' for stdin)")
    p.add_argument("--family", choices=list("ABCDabcd"))
    p.add_argument("--rank", type=int)
    if subalgebra:
        g = p.add_mutually_exclusive_group()
        g.add_argument("--subsystem", help="'d-type' or a JSON list of roots")
        g.add_argument("--cartan-subalgebra", action="store_true", help="h = t")
        g.add_argument("--centralizer", metavar="SIGMA", help="comma-separated simple-root indices")
    p.add_argument("--json", action="store_true", help="JSON output (default)")
    p.add_argument("--text", action="store_true", help="human-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fatbundles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="list a root system")
    _add_common(p, subalgebra=False)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("decompose", help="build k = h + m and report its checks")
    _add_common(p)
    p.add_argument("--gram", action="store_true", help="include the Killing Gram matrix")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("fat-check", help="wall test and curvature determinant for one vector")
    _add_common(p)
    p.add_argument("--vector", help="comma-separated rationals, e.g. 1/2,1/2")
    p.set_defaults(func=cmd_fat_check)

    p = sub.add_parser("twistor", help="certify the twistor bundle over K/H")
    _add_common(p)
    p.set_defaults(func=cmd_twistor)

    p = sub.add_parser("translate", help="escape threshold for a polytope along x_sigma")
    _add_common(p)
    p.add_argument("--vertices", help="';'-separated vertices, e.g. '1,1;1,-1'")
    p.add_argument("--polytope", metavar="FILE", help='JSON {"vertices": [...]}')
    p.add_argument("--sigma", help="simple-root indices defining the direction x_sigma")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("oracle", help="compare wall test and curvature determinant on seeded samples")
    _add_common(p)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=20)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("catalog", help="re-run the built-in examples")
    p.add_argument("--json", action="store_true")
    p.add_argument("--text", action="store_true")
    p.set_defaults(func=cmd_catalog)
    return parser


def _error(message: str, location=None) -> int:
    print(json.dumps({"error": message, "location": location}), file=sys.stderr)
    return INPUT_ERROR


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except SpecError as exc:
        return _error(str(exc), exc.location)
    except (FatbundlesError, ValueError) as exc:
        return _error(f"{type(exc).__name__}: {exc}")


if __name__ == "__main__":
    sys.exit(main())
