"""Command-line entry point.

Exit codes: 0 all checks pass, 1 a check failed, 2 inconclusive (truncation
bound reached), 3 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import catalog, formats
from .freeword import DEFAULT_DEGREE
from .frt import build_br, chi_relations
from .hopfcore import AxiomError, SubcoalgebraView, TableBialgebra
from .hopfelement import check_identity_101, hopf_element_report, integral_t, quasitriangular_report
from .kernel import Verdict, format_scalar
from .pairing import check_dec_identity, check_hopf_function, right_integral_space, search_hopf_functions
from .tensorlab import check_equation, invert_endo, iter_search_masks, search_size

EXIT = {"pass": 0, "fail": 1, "inconclusive": 2}
USAGE = 3

KINDS = {"hopf": "hopf", "qybe": "qybe", "inverse-eq": "inverse_eq", "commute13": "commute13"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 3 instead of argparse's 2
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _degree(text: str) -> int:
    d = int(text)
    if d < 2:
        raise argparse.ArgumentTypeError("degree bound must be at least 2")
    return d


def _range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError("range must look like i..j") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError("range must satisfy 0 <= i <= j")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument(
        "--degree", type=_degree, default=argparse.SUPPRESS, help=f"truncation bound D (default {DEFAULT_DEGREE})"
    )
    p = _Parser(prog="hopfeq", description="Exact checks for the Hopf equation and Hopf functions.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help, parents=[common])

    c = add("check", "check an operator equation")
    c.add_argument("kind", choices=sorted(KINDS))
    c.add_argument("--matrix", required=True)
    c.add_argument("--field", help="override the field in the matrix file")
    c.add_argument("--invert", action="store_true", help="check the inverse of the matrix")

    b = add("build-br", "build the bialgebra B(R)")
    b.add_argument("--matrix", required=True)
    b.add_argument("--emit-relations", action="store_true", help="print the presentation as JSON")

    v = add("verify-sigma", "check a σ table against a bialgebra")
    v.add_argument("--bialgebra", required=True)
    v.add_argument("--sigma", required=True)
    v.add_argument("--subcoalgebra", nargs="+")
    v.add_argument("--words", type=int, default=0, help="also check (H1) on words up to this degree")

    e = add("verify-example", "verify a catalog example")
    e.add_argument("name", choices=catalog.NAMES)
    e.add_argument("--q")
    e.add_argument("--a")
    e.add_argument("--n", type=int)
    e.add_argument("--field")
    e.add_argument("--variant", choices=["verbatim", "corrected"])

    s = add("search", "exhaustive search over a prime field")
    s.add_argument("what", choices=["solutions", "sigmas"])
    s.add_argument("--field", required=True)
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--kind", choices=sorted(KINDS), default="hopf")
    s.add_argument("--range", type=_range, dest="index_range")
    s.add_argument("--bialgebra")
    s.add_argument("--subcoalgebra", nargs="+")

    i = add("integrals", "right integrals of a table bialgebra")
    i.add_argument("--bialgebra", required=True)

    h = add("hopf-element", "check a Hopf element")
    h.add_argument("--bialgebra", required=True)
    h.add_argument("--element", required=True)
    return p


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(formats.dumps(payload))
    else:
        print(text)


def _verdict_exit(args: argparse.Namespace, verdict: Verdict, extra: dict | None = None) -> int:
    payload = verdict.to_json()
    if extra:
        payload.update(extra)
    _emit(args, payload, str(verdict))
    return EXIT[verdict.status]


def _cmd_check(args: argparse.Namespace) -> int:
    f = formats.parse_field(args.field) if args.field else None
    r = formats.matrix_from_json(formats.load_json(args.matrix), f)
    if args.invert:
        r = invert_endo(r)
    return _verdict_exit(args, check_equation(KINDS[args.kind], r), {"field": str(r.field), "n": r.n})


def _cmd_build_br(args: argparse.Namespace) -> int:
    r = formats.matrix_from_json(formats.load_json(args.matrix))
    try:
        br = build_br(r, args.degree)
    except AxiomError as e:
        return _verdict_exit(args, e.verdict)
    if args.emit_relations:
        print(formats.dumps(formats.bialgebra_to_json(br)))
        return 0
    rels = chi_relations(r).labelled()
    text = [f"B(R) over {r.field}: {len(br.generators)} generators, {len(rels)} nonzero relations"]
    text += [f"  {lab} = {p}" for lab, p in rels]
    payload = {"status": "pass", "generators": list(br.generators), "relations": {lab: str(p) for lab, p in rels}}
    _emit(args, payload, "\n".join(text))
    return 0


def _cmd_verify_sigma(args: argparse.Namespace) -> int:
    host = formats.bialgebra_from_json(formats.load_json(args.bialgebra), args.degree)
    sigma = formats.sigma_from_json(host, formats.load_json(args.sigma), args.subcoalgebra)
    parts = [check_hopf_function(sigma), check_dec_identity(sigma)]
    if args.words:
        parts.append(check_hopf_function(sigma, "words", args.words))
    v = Verdict.combine(parts, "σ checks")
    return _verdict_exit(args, v)


def _cmd_verify_example(args: argparse.Namespace) -> int:
    params: dict[str, Any] = {}
    if args.field:
        params["field"] = formats.parse_field(args.field)
    for key in ("q", "a", "n", "variant"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    try:
        report = catalog.verify_example(args.name, **params)
    except TypeError as e:
        raise UsageError(f"{args.name} does not take these parameters ({e})") from None
    _emit(args, report.to_json(), str(report))
    return EXIT[report.status]


def _cmd_search(args: argparse.Namespace) -> int:
    f = formats.parse_field(args.field)
    if not f.is_prime_field:
        raise UsageError("search needs a prime field GF(p)")
    if args.what == "solutions":
        p, n = f.modulus, args.n
        total = search_size(p, n)
        lo, hi = args.index_range or (0, total)
        hi = min(hi, total)
        hits = []
        for start, mats, mask in iter_search_masks(f, n, KINDS[args.kind], lo, hi):
            for k in mask.nonzero()[0]:
                mat = mats[k].tolist()
                hits.append({"index": int(start + k), "matrix": [[str(c) for c in row] for row in mat]})
        lines = [f"{len(hits)} {args.kind} solutions over {f}, n={n}, candidates {lo}..{hi}"]
        lines += [f"  #{h['index']}: [" + "; ".join(" ".join(r) for r in h["matrix"]) + "]" for h in hits]
        _emit(args, {"status": "pass", "count": len(hits), "solutions": hits}, "\n".join(lines))
        return 0
    if not args.bialgebra:
        raise UsageError("search sigmas needs --bialgebra")
    host = formats.bialgebra_from_json(formats.load_json(args.bialgebra), args.degree)
    if host.field != f:
        raise UsageError(f"bialgebra is over {host.field}, not {f}")
    names = args.subcoalgebra or list(getattr(host, "basis", host.generators))
    found = search_hopf_functions(host, SubcoalgebraView(host, names))
    out = [formats.sigma_to_json(s) for s in found]
    lines = [f"{len(found)} Hopf functions on C={names}"] + [f"  {json.dumps(o['table'])}" for o in out]
    _emit(args, {"status": "pass", "count": len(found), "sigmas": out}, "\n".join(lines))
    return 0


def _cmd_integrals(args: argparse.Namespace) -> int:
    host = formats.bialgebra_from_json(formats.load_json(args.bialgebra), args.degree)
    if not isinstance(host, TableBialgebra):
        raise UsageError("integrals need a table bialgebra")
    basis = right_integral_space(host)
    lines = [f"right integrals: dimension {len(basis)}"] + [f"  {T}" for T in basis]
    payload = {
        "status": "pass",
        "dimension": len(basis),
        "basis": [{b: format_scalar(T.values[b]) for b in host.basis} for T in basis],
    }
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_hopf_element(args: argparse.Namespace) -> int:
    host = formats.bialgebra_from_json(formats.load_json(args.bialgebra), args.degree)
    R = formats.element_from_json(host, formats.load_json(args.element))
    report = hopf_element_report(R)
    parts = list(report.values())
    if all(v.passed for v in parts):
        parts.append(check_identity_101(R))
        parts.append(integral_t(R)[1])
    v = Verdict.combine(parts, "Hopf element")
    qt = {k: q.status for k, q in quasitriangular_report(R).items()}
    _emit(
        args,
        {**v.to_json(), "axioms": {k: r.status for k, r in report.items()}, "quasitriangular": qt},
        f"{v}\nquasitriangular contrast: " + ", ".join(f"{k} {s}" for k, s in qt.items()),
    )
    return EXIT[v.status]


COMMANDS = {
    "check": _cmd_check,
    "build-br": _cmd_build_br,
    "verify-sigma": _cmd_verify_sigma,
    "verify-example": _cmd_verify_example,
    "search": _cmd_search,
    "integrals": _cmd_integrals,
    "hopf-element": _cmd_hopf_element,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    # global flags may appear before or after the subcommand
    args.json = getattr(args, "json", False)
    args.degree = getattr(args, "degree", DEFAULT_DEGREE)
    try:
        return COMMANDS[args.command](args)
    except (formats.FormatError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except AxiomError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT["fail"]
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())
