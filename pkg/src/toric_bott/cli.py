"""Command-line front end: JSON polytopes in, exact numbers out.

Every number printed is an exact integer or a "num/den" string; no
floating point appears anywhere.  Exit codes: 0 success, 1 a verification
check failed, 2 malformed input (including non-simple polytopes where
simplicity is required).
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction

from . import bott, bundle, counting, ehrhart, hodge, identities, weighted
from .errors import InputError, ToricBottError
from .polytope import Polytope, dilate, face_lattice, from_vertices

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2


# ---------------------------------------------------------------- inputs

def builtin_polytope(spec: str) -> Polytope:
    """Built-in families: simplex:N, cube:N, skewtet:M.

    ``skewtet:M`` is the tetrahedron with vertices (0,0,0), (1,0,0),
    (0,1,0), (1,1,M) -- the standard simple 3-polytope family whose
    dilation polynomials have leading coefficient M/6.
    """
    name, sep, param = spec.partition(":")
    if not sep:
        raise InputError(f"builtin spec {spec!r} must look like name:N")
    try:
        value = int(param)
    except ValueError:
        raise InputError(f"builtin parameter {param!r} is not an integer") from None
    if value < 1:
        raise InputError(f"builtin parameter must be >= 1, got {value}")
    if name == "simplex":
        points = [(0,) * value] + [
            tuple(1 if j == i else 0 for j in range(value)) for i in range(value)
        ]
        return from_vertices(points)
    if name == "cube":
        points = [tuple(bits) for bits in itertools.product((0, 1), repeat=value)]
        return from_vertices(points)
    if name == "skewtet":
        return from_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, value)])
    raise InputError(f"unknown builtin {name!r} (use simplex, cube, or skewtet)")


def load_polytope_document(path: str) -> Polytope:
    """Read {"dim": n, "vertices": [[...], ...]} and build the hull."""
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise InputError(f"{path}: top-level value must be an object")
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise InputError(f"{path}: field 'dim' must be a positive integer")
    vertices = doc.get("vertices")
    if not isinstance(vertices, list) or not vertices:
        raise InputError(f"{path}: field 'vertices' must be a nonempty array")
    if len(vertices) < dim + 1:
        raise InputError(
            f"{path}: need at least dim+1 = {dim + 1} vertices, got {len(vertices)}"
        )
    for i, v in enumerate(vertices):
        if not isinstance(v, list) or len(v) != dim:
            raise InputError(f"{path}: vertices[{i}] must be an array of length {dim}")
        for j, x in enumerate(v):
            if not isinstance(x, int) or isinstance(x, bool):
                raise InputError(f"{path}: vertices[{i}][{j}] = {x!r} is not an integer")
    return from_vertices([tuple(v) for v in vertices])


def load_bundle_document(path: str) -> bundle.BundleData:
    """Read {"base_dim": n, "summands": [polytope, ...]}."""
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise InputError(f"{path}: top-level value must be an object")
    base_dim = doc.get("base_dim")
    if not isinstance(base_dim, int) or base_dim < 0:
        raise InputError(f"{path}: field 'base_dim' must be a nonnegative integer")
    summands = doc.get("summands")
    if not isinstance(summands, list) or len(summands) < 2:
        raise InputError(f"{path}: field 'summands' must list at least two polytopes")
    built = []
    for i, sub in enumerate(summands):
        if not isinstance(sub, dict) or "vertices" not in sub:
            raise InputError(f"{path}: summands[{i}] must be a polytope object")
        points = sub["vertices"]
        if not isinstance(points, list) or not points:
            raise InputError(f"{path}: summands[{i}].vertices must be a nonempty array")
        for j, v in enumerate(points):
            if not isinstance(v, list) or len(v) != base_dim:
                raise InputError(
                    f"{path}: summands[{i}].vertices[{j}] must have length {base_dim}"
                )
        built.append(from_vertices([tuple(v) for v in points]))
    try:
        return bundle.BundleData(base_dim=base_dim, summands=tuple(built))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None


def _resolve_polytope(args) -> Polytope:
    if getattr(args, "input", None) and getattr(args, "builtin", None):
        raise InputError("give either --input or --builtin, not both")
    if getattr(args, "input", None):
        p = load_polytope_document(args.input)
    elif getattr(args, "builtin", None):
        p = builtin_polytope(args.builtin)
    else:
        raise InputError("no polytope given (use --input FILE or --builtin SPEC)")
    if getattr(args, "dilate", 1) != 1:
        p = dilate(p, args.dilate)
    return p


# ---------------------------------------------------------------- output

def _frac(x):
    """JSON-safe exact number: int, or "num/den" for proper fractions."""
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _coeff_strings(poly):
    return poly.coefficient_strings(descending=True)


def _emit(args, payload, lines):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


# ------------------------------------------------------------- commands

def _cmd_faces(args):
    p = _resolve_polytope(args)
    lattice = face_lattice(p)
    payload = {
        "command": "faces",
        "dim": p.dim,
        "f_vector": list(lattice.f_vector),
        "faces": [
            {
                "dim": f.dim,
                "vertex_ids": list(f.vertex_ids),
                "tight_facets": list(f.tight_facets),
            }
            for f in lattice
        ],
    }
    lines = [f"f-vector: {lattice.f_vector}"]
    for d in range(p.dim + 1):
        members = lattice.faces_of_dim(d)
        lines.append(f"dim {d}: {len(members)} face(s)")
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_count(args):
    p = _resolve_polytope(args)
    value = counting.count_points(p)
    _emit(args, {"command": "count", "count": value}, [str(value)])
    return EXIT_OK


def _cmd_table(args):
    p = _resolve_polytope(args)
    table = counting.count_table(p)
    payload = {
        "command": "table",
        "faces": [
            {
                "dim": f.dim,
                "vertex_ids": list(f.vertex_ids),
                "points": table.l(f),
                "interior_points": table.l_star(f),
            }
            for f in table.lattice
        ],
        "codim_point_sums": list(table.codim_point_sums),
        "dim_interior_sums": list(table.dim_interior_sums),
    }
    lines = ["dim  vertices            l   l*"]
    for f in table.lattice:
        ids = ",".join(map(str, f.vertex_ids))
        lines.append(f"{f.dim:>3}  {ids:<18} {table.l(f):>3}  {table.l_star(f):>3}")
    lines.append(f"codim point sums:    {table.codim_point_sums}")
    lines.append(f"dim interior sums:   {table.dim_interior_sums}")
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_bott(args):
    p = _resolve_polytope(args)
    values = {}
    if args.formula in ("1", "both"):
        values["1"] = bott.bott1_twisted(p, args.p)
    if args.formula in ("2", "both"):
        values["2"] = bott.bott2_twisted(p, args.p)
    payload = {"command": "bott", "p": args.p, "values": values}
    if len(values) == 2 and values["1"] != values["2"]:
        payload["agree"] = False
        _emit(args, payload, [f"MISMATCH: formula 1 gives {values['1']}, formula 2 gives {values['2']}"])
        return EXIT_CHECK_FAILED
    value = next(iter(values.values()))
    _emit(args, payload, [str(value)])
    return EXIT_OK


def _cmd_diag(args):
    p = _resolve_polytope(args)
    d1 = bott.bott1_untwisted(p).diagonal
    d2 = bott.bott2_untwisted(p).diagonal
    payload = {"command": "diag", "diagonal": list(d1)}
    if d1 != d2:
        payload["agree"] = False
        payload["diagonal_alt"] = list(d2)
        _emit(args, payload, [f"MISMATCH: {d1} vs {d2}"])
        return EXIT_CHECK_FAILED
    _emit(args, payload, [" ".join(map(str, d1))])
    return EXIT_OK


def _cmd_genpoly(args):
    p = _resolve_polytope(args)
    first, second = bott.generating_polys(p)
    payload = {
        "command": "genpoly",
        "diagonal_poly": _coeff_strings(first),
        "section_poly": _coeff_strings(second),
    }
    lines = [
        f"diagonal generating polynomial: {first.format('y')}",
        f"section generating polynomial:  {second.format('y')}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_ehrhart(args):
    p = _resolve_polytope(args)
    poly = ehrhart.hilbert_ehrhart(p, args.p)
    payload = {
        "command": "ehrhart",
        "p": args.p,
        "coefficients": _coeff_strings(poly),
    }
    lines = [f"L_{args.p}(k) = {poly}", f"coefficients: {_coeff_strings(poly)}"]
    code = EXIT_OK
    if args.check_reciprocity:
        results = []
        for k in range(1, args.check_reciprocity + 1):
            r = ehrhart.reciprocity_check(p, args.p, k)
            results.append(
                {"k": k, "holds": r.holds, "lhs": _frac(r.lhs), "rhs": _frac(r.rhs)}
            )
            mark = "ok" if r.holds else "FAIL"
            lines.append(f"reciprocity k={k}: {r.lhs} vs {r.rhs}  [{mark}]")
            if not r.holds:
                code = EXIT_CHECK_FAILED
        payload["reciprocity"] = results
    _emit(args, payload, lines)
    return code


def _cmd_hodge(args):
    p = _resolve_polytope(args)
    if args.chilog is not None:
        if args.printed_form:
            value = hodge.chi_log_printed(p, args.chilog)
        else:
            value = hodge.chi_log(p, args.chilog)
        payload = {"command": "hodge", "chi_log": {"q": args.chilog, "value": value}}
        _emit(args, payload, [str(value)])
        return EXIT_OK
    if args.ep is not None:
        value = hodge.euler_ep(p, args.ep)
        payload = {"command": "hodge", "euler": {"p": args.ep, "value": value}}
        _emit(args, payload, [str(value)])
        return EXIT_OK
    if args.printed_form:
        values = hodge.primitive_hodge_printed(p)
    else:
        values = hodge.primitive_hodge(p).values
    payload = {"command": "hodge", "values": list(values)}
    _emit(args, payload, [" ".join(map(str, values))])
    return EXIT_OK


def _cmd_weighted(args):
    p = _resolve_polytope(args)
    value = weighted.h0_weighted(p, args.p, args.k)
    payload = {"command": "weighted", "p": args.p, "k": args.k, "value": value}
    _emit(args, payload, [str(value)])
    return EXIT_OK


def _cmd_bundle(args):
    if not args.input:
        raise InputError("bundle needs --input FILE with the bundle document")
    data = load_bundle_document(args.input)
    if args.k <= args.p:
        print(
            f"warning: k = {args.k} <= p = {args.p} is outside the guaranteed range",
            file=sys.stderr,
        )
    value = bundle.h0_relative(data, args.p, args.k)
    payload = {"command": "bundle", "p": args.p, "k": args.k, "value": value}
    _emit(args, payload, [str(value)])
    return EXIT_OK


def _identity_windows(nmax: int, kmax: int):
    for n in range(1, nmax + 1):
        for p in range(n + 1):
            yield identities.identity_a1(n, p)
            yield identities.identity_a2(n, p)
            for s in range(n + 1):
                yield identities.appendix_identity(n, s, p)
            for k in range(1, kmax + 1):
                yield identities.identity_b1(n, p, k)
                yield identities.identity_b2(n, p, k)


def _cmd_verify(args):
    if args.identities:
        reports = list(_identity_windows(args.nmax, args.kmax))
        failures = [r for r in reports if not r.holds]
        payload = [
            {
                "identity": r.name,
                "params": list(r.params),
                "left": r.left,
                "right": r.right,
                "holds": r.holds,
            }
            for r in reports
        ]
        lines = [f"{len(reports)} identity instances checked, {len(failures)} failed"]
        for r in failures:
            lines.append(f"FAIL {r.name}{r.params}: {r.left} != {r.right}")
        _emit(args, payload, lines)
        return EXIT_CHECK_FAILED if failures else EXIT_OK

    p = _resolve_polytope(args)
    checks = []

    def record(name, passed, detail=""):
        checks.append({"name": name, "passed": passed, "detail": detail})

    n = p.dim
    d1 = bott.bott1_untwisted(p).diagonal
    d2 = bott.bott2_untwisted(p).diagonal
    record("untwisted formulas agree", d1 == d2, f"{d1} vs {d2}")
    for q in range(n + 1):
        v1 = bott.bott1_twisted(p, q)
        v2 = bott.bott2_twisted(p, q)
        record(f"twisted formulas agree (p={q})", v1 == v2, f"{v1} vs {v2}")
    for q in range(n + 1):
        ds = identities.dehn_sommerville(p, q)
        record(f"dehn-sommerville (p={q})", ds.holds, f"{ds.left} vs {ds.right}")
        fd = identities.face_duality(p, q)
        record(f"face-duality (p={q})", fd.holds, f"{fd.left} vs {fd.right}")
    for q in range(n + 1):
        bad = [
            k
            for k in range(1, 2 * n + 3)
            if not ehrhart.reciprocity_check(p, q, k).holds
        ]
        record(
            f"reciprocity (p={q}, k=1..{2 * n + 2})",
            not bad,
            f"failing k: {bad}" if bad else "",
        )
        lc = ehrhart.leading_coefficient_check(p, q)
        record(f"leading coefficient (p={q})", lc.holds, f"{lc.lhs} vs {lc.rhs}")
    if n >= 2:
        try:
            hv = hodge.primitive_hodge(p)
            record("hodge vector symmetric and nonnegative", True, str(hv.values))
        except (ToricBottError, AssertionError) as exc:
            record("hodge vector symmetric and nonnegative", False, str(exc))
        for q in range(1, n + 1):
            try:
                hodge.chi_log(p, q)
                record(f"chi-log routes agree (q={q})", True)
            except ToricBottError as exc:
                record(f"chi-log routes agree (q={q})", False, str(exc))

    failures = [c for c in checks if not c["passed"]]
    payload = {"command": "verify", "checks": checks, "failed": len(failures)}
    lines = []
    for c in checks:
        mark = "ok" if c["passed"] else "FAIL"
        detail = f"  ({c['detail']})" if c["detail"] and not c["passed"] else ""
        lines.append(f"[{mark}] {c['name']}{detail}")
    lines.append(f"{len(checks)} checks, {len(failures)} failed")
    _emit(args, payload, lines)
    return EXIT_CHECK_FAILED if failures else EXIT_OK


# --------------------------------------------------------------- parser

def _add_polytope_options(sp):
    sp.add_argument("--input", help="JSON polytope file")
    sp.add_argument(
        "--builtin",
        help="built-in polytope spec: simplex:N, cube:N, or skewtet:M",
    )
    sp.add_argument(
        "--dilate", type=int, default=1, metavar="K", help="dilate the polytope by K"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toric-bott",
        description="Exact face-count and cohomology-dimension computations "
        "on simple lattice polytopes.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("faces", help="face lattice and f-vector")
    _add_polytope_options(sp)
    sp.set_defaults(handler=_cmd_faces)

    sp = sub.add_parser("count", help="lattice points of the polytope")
    _add_polytope_options(sp)
    sp.set_defaults(handler=_cmd_count)

    sp = sub.add_parser("table", help="per-face point counts and aggregates")
    _add_polytope_options(sp)
    sp.set_defaults(handler=_cmd_table)

    sp = sub.add_parser("bott", help="twisted p-form section count")
    _add_polytope_options(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--formula", choices=["1", "2", "both"], default="both")
    sp.set_defaults(handler=_cmd_bott)

    sp = sub.add_parser("diag", help="untwisted diagonal dimensions")
    _add_polytope_options(sp)
    sp.set_defaults(handler=_cmd_diag)

    sp = sub.add_parser("genpoly", help="generating polynomials")
    _add_polytope_options(sp)
    sp.set_defaults(handler=_cmd_genpoly)

    sp = sub.add_parser("ehrhart", help="dilation-count polynomial for p-forms")
    _add_polytope_options(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument(
        "--check-reciprocity",
        type=int,
        metavar="K",
        help="also verify the duality law for k = 1..K",
    )
    sp.set_defaults(handler=_cmd_ehrhart)

    sp = sub.add_parser("hodge", help="hypersurface Hodge data")
    _add_polytope_options(sp)
    sp.add_argument("--ep", type=int, metavar="P", help="Euler number e^P instead")
    sp.add_argument("--chilog", type=int, metavar="Q", help="log-form chi at Q instead")
    sp.add_argument(
        "--printed-form",
        action="store_true",
        help="diagnostic: evaluate the unsigned published face sum",
    )
    sp.set_defaults(handler=_cmd_hodge)

    sp = sub.add_parser("weighted", help="weight-filtration section count")
    _add_polytope_options(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(handler=_cmd_weighted)

    sp = sub.add_parser("bundle", help="relative p-form sections on the bundle")
    sp.add_argument("--input", help="JSON bundle file")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(handler=_cmd_bundle)

    sp = sub.add_parser("verify", help="one-shot verification suite")
    _add_polytope_options(sp)
    sp.add_argument(
        "--identities", action="store_true", help="check the parametric identity windows"
    )
    sp.add_argument("--nmax", type=int, default=10)
    sp.add_argument("--kmax", type=int, default=10)
    sp.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ToricBottError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry_point():
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
