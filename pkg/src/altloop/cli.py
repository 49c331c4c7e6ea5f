"""Command-line front end.

Subcommands: check-loop, double, make, classify-algebra, classify-loop,
search-units, norm-one, verify-paper.  Reports go to stdout (text, or JSON
with --json, schema version 1) and are byte-deterministic for fixed inputs.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import classifier as cl
from . import composition as comp
from . import formats, loopring, loops, verification
from .errors import AltloopError
from .scalars import parse_field, parse_scalar

SCHEMA = 1


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _load_loop(spec: str) -> loops.FiniteLoop:
    if spec in loops.BUILTIN_TABLES:
        return loops.builtin_table(spec)
    return formats.loop_from_text(Path(spec).read_text())


def _write_output(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_params(raw: str, expected: int):
    parts = [parse_scalar(p) for p in raw.split(",")]
    if len(parts) != expected:
        raise AltloopError(f"expected {expected} comma-separated parameters, got {len(parts)}")
    return parts


def _cmd_check_loop(args) -> int:
    L = _load_loop(args.table)
    group = loops.is_associative(L)
    report = {
        "schema": SCHEMA,
        "command": "check-loop",
        "order": L.order,
        "valid": True,
        "group": group,
        "moufang": loops.is_moufang(L),
        "commutative": loops.is_commutative(L),
    }
    if group:
        report["hamiltonian_2_group"] = loops.is_hamiltonian_2group(L)
    else:
        report["hamiltonian_loop"] = loops.is_hamiltonian_loop(L)
    if args.json:
        print(_dump_json(report))
        return 0
    parts = [f"valid loop; order {L.order}"]
    parts.append("group: " + ("yes" if group else "no"))
    parts.append("Moufang: " + ("yes" if report["moufang"] else "no"))
    if group:
        parts.append(
            "Hamiltonian 2-group: "
            + ("yes" if report["hamiltonian_2_group"] else "no")
        )
    else:
        parts.append(
            "Hamiltonian loop: " + ("yes" if report["hamiltonian_loop"] else "no")
        )
    print("; ".join(parts))
    return 0


def _cmd_double(args) -> int:
    A = formats.involutive_from_json(Path(args.input).read_text())
    doubled = comp.cayley_dickson_double(A, parse_scalar(args.alpha), args.label)
    _write_output(formats.involutive_to_json(doubled), args.output)
    return 0


def _cmd_make(args) -> int:
    kind = args.kind
    if kind == "quaternion":
        a, b = _parse_params(args.params, 2)
        algebra = comp.quaternion_algebra(parse_field(args.field), a, b)
        text = formats.involutive_to_json(algebra)
    elif kind == "octonion":
        a, b, c = _parse_params(args.params, 3)
        algebra = comp.octonion_algebra(parse_field(args.field), a, b, c)
        text = formats.involutive_to_json(algebra)
    elif kind == "zorn":
        text = formats.algebra_to_json(comp.zorn_algebra())
    elif kind == "moufang-double":
        if not args.group or not args.g0:
            raise AltloopError("moufang-double needs --group and --g0")
        G = _load_loop(args.group)
        star = loops.inversion_involution(G)
        doubled = loops.moufang_double(G, star, G.index_of(args.g0))
        text = formats.loop_to_text(doubled)
    elif kind == "loop-algebra":
        if not args.loop:
            raise AltloopError("loop-algebra needs --loop")
        text = formats.algebra_to_json(loopring.loop_algebra(_load_loop(args.loop)))
    else:  # pragma: no cover - argparse restricts choices
        raise AltloopError(f"unknown kind {kind!r}")
    _write_output(text, args.output)
    return 0


def _verdict_report(command: str, verdict) -> dict:
    report = {"schema": SCHEMA, "command": command}
    report.update(formats.verdict_to_dict(verdict))
    return report


def _print_verdict(command: str, verdict, as_json: bool):
    if as_json:
        print(_dump_json(_verdict_report(command, verdict)))
    else:
        line = f"{verdict.answer}: {verdict.clause}"
        if verdict.witness:
            line += f" [witness: {verdict.witness}]"
        print(line)


def _cmd_classify_algebra(args) -> int:
    chosen = [
        bool(args.descriptor),
        args.octonion is not None,
        args.cayley_dickson is not None,
    ]
    if sum(chosen) != 1:
        raise AltloopError(
            "choose exactly one of --descriptor, --octonion, --cayley-dickson"
        )
    if args.descriptor:
        descriptor = formats.descriptor_from_json(Path(args.descriptor).read_text())
        verdict = cl.classify_algebra(descriptor)
    elif args.octonion is not None:
        field_text, _, params_text = args.octonion.rpartition(":")
        if not field_text:
            raise AltloopError('expected "FIELD:a,b,c", e.g. "Q:1,1,1"')
        a, b, c = _parse_params(params_text, 3)
        verdict = cl.classify_octonion_algebra(parse_field(field_text), a, b, c)
    else:
        verdict = cl.classify_cayley_dickson(int(args.cayley_dickson))
    _print_verdict("classify-algebra", verdict, args.json)
    return 0


def _cmd_classify_loop(args) -> int:
    L = _load_loop(args.table)
    if args.hirsch is not None or args.torsion_normal != "auto":
        normal = {"true": True, "false": False, "auto": None}[args.torsion_normal]
        descriptor = cl.RALoopDescriptor(L, normal, args.hirsch or 0)
        verdict = cl.classify_ra_loop(descriptor)
    else:
        verdict = cl.classify_finite_ra_loop(L)
    _print_verdict("classify-loop", verdict, args.json)
    return 0


def _cmd_search_units(args) -> int:
    L = _load_loop(args.loop)
    found = loopring.search_nontrivial_units(L, args.coeff_bound, args.support_bound)
    if args.json:
        units = []
        for u in found:
            inv = loopring.is_unit_integral(u)
            units.append(
                {
                    "element": repr(u),
                    "coords": [str(c) for c in u.coords],
                    "inverse": [str(c) for c in inv.coords],
                }
            )
        print(
            _dump_json(
                {
                    "schema": SCHEMA,
                    "command": "search-units",
                    "coeff_bound": args.coeff_bound,
                    "support_bound": args.support_bound,
                    "count": len(found),
                    "units": units,
                }
            )
        )
        return 0
    print(f"nontrivial units found: {len(found)}")
    for u in found:
        inv = loopring.is_unit_integral(u)
        print(f"  {u!r}   inverse: {inv!r}")
    return 0


def _cmd_norm_one(args) -> int:
    field = parse_field(args.field)
    if args.kind == "quaternion":
        a, b = _parse_params(args.params, 2)
        algebra = comp.quaternion_algebra(field, a, b)
    else:
        a, b, c = _parse_params(args.params, 3)
        algebra = comp.octonion_algebra(field, a, b, c)
    found = loopring.enumerate_norm_one(algebra)
    if args.json:
        print(
            _dump_json(
                {
                    "schema": SCHEMA,
                    "command": "norm-one",
                    "count": len(found),
                    "elements": [[str(c) for c in e.coords] for e in found],
                }
            )
        )
        return 0
    print(f"norm-one elements: {len(found)}")
    for e in found:
        print(f"  {e!r}")
    return 0


def _cmd_verify_paper(args) -> int:
    items = verification.run_all()
    passed = all(item["passed"] for item in items)
    if args.json:
        print(
            _dump_json(
                {
                    "schema": SCHEMA,
                    "command": "verify-paper",
                    "items": items,
                    "passed": passed,
                }
            )
        )
    else:
        for item in items:
            mark = "PASS" if item["passed"] else "FAIL"
            print(f"{mark} {item['id']:2d} {item['name']}")
        print(f"{'all checks passed' if passed else 'FAILURES present'}")
    return 0 if passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altloop",
        description="Exact constructions and hyperbolic-property classification"
        " for alternative algebras and Moufang loops.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("check-loop", help="validate a Cayley table and report its properties")
    p.add_argument("table", help="table file or builtin name (%s)" % ", ".join(loops.BUILTIN_TABLES))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check_loop)

    p = sub.add_parser("double", help="Cayley-Dickson double an involutive algebra file")
    p.add_argument("input", help="involutive algebra JSON file")
    p.add_argument("--alpha", required=True, help="doubling parameter (scalar literal)")
    p.add_argument("--label", default=None, help="label for the new generator")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_double)

    p = sub.add_parser("make", help="construct a named algebra or loop")
    p.add_argument(
        "kind",
        choices=("quaternion", "octonion", "zorn", "moufang-double", "loop-algebra"),
    )
    p.add_argument("--field", default="Q", help='e.g. "Q" or "Q(sqrt(-1))"')
    p.add_argument("--params", default="", help="comma-separated scalar literals")
    p.add_argument("--group", default=None, help="group table for moufang-double")
    p.add_argument(
        "--star",
        default="inverse",
        choices=("inverse",),
        help="involution for moufang-double (custom involutions via the API)",
    )
    p.add_argument("--g0", default=None, help="central element name for moufang-double")
    p.add_argument("--loop", default=None, help="loop table for loop-algebra")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_make)

    p = sub.add_parser("classify-algebra", help="hyperbolic-property verdict for an algebra")
    p.add_argument("--descriptor", default=None, help="descriptor JSON file")
    p.add_argument("--octonion", default=None, metavar="FIELD:A,B,C",
                   help='totally definite octonion, e.g. "Q:1,1,1"')
    p.add_argument("--cayley-dickson", default=None, metavar="M",
                   help="radicand m for the doubled algebra over Q(sqrt(m))")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify_algebra)

    p = sub.add_parser("classify-loop", help="hyperbolic-property verdict for a loop ring")
    p.add_argument("table", help="loop table file or builtin name")
    p.add_argument("--hirsch", type=int, default=None,
                   help="center Hirsch length (descriptor route)")
    p.add_argument("--torsion-normal", default="auto", choices=("true", "false", "auto"),
                   help="are torsion subloops normal in the whole loop")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify_loop)

    p = sub.add_parser("search-units", help="bounded search for nontrivial integral units")
    p.add_argument("loop", help="loop table file or builtin name")
    p.add_argument("--coeff-bound", type=int, required=True)
    p.add_argument("--support-bound", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_search_units)

    p = sub.add_parser("norm-one", help="enumerate norm-one elements of a definite order")
    p.add_argument("--kind", required=True, choices=("quaternion", "octonion"))
    p.add_argument("--params", required=True, help="constructor parameters, e.g. -1,-1,-1")
    p.add_argument("--field", default="Q")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_norm_one)

    p = sub.add_parser("verify-paper", help="run the full verification suite")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AltloopError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
