"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import instances
from .instances import RegistryError, check_graph_complement, get_monop
from .monop_core import check_monop_axioms
from .posets import (
    PosetError,
    build_poset_monop,
    check_interval_factorization,
    counting_matrix,
    format_element,
    inverse_report,
    mobius_matrix,
    sheffer_by_summation,
)
from .riordan import AdmissiblePair, matrix_of_pair, riordan_inverse
from .sheffer import PolySeq, sheffer_conjugate, umbral_inverse

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _json(obj) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **obj}, indent=2, sort_keys=True) + "\n"


def _resolve(args):
    try:
        mp = get_monop(args.instance)
    except RegistryError as exc:
        raise UsageError("unknown instance %r (see `catalog`)" % args.instance) from exc
    limit = instances.default_n_max(args.instance)
    if args.n > limit and not args.force:
        raise UsageError("n=%d exceeds the default n_max %d for %s; pass --force"
                         % (args.n, limit, args.instance))
    if args.n < 0:
        raise UsageError("n must be non-negative")
    return mp


def _pair(args) -> AdmissiblePair:
    pair = instances.generating_pair(args.instance, args.n)
    if pair is None:
        pair = instances.species_pair(args.instance, args.n)
    if pair is None:
        raise UsageError("no generating pair known for %s" % args.instance)
    return AdmissiblePair(*pair)


def _emit_matrix(m, fmt: str, extra: dict) -> str:
    if fmt == "csv":
        return m.to_csv()
    if fmt == "json":
        return _json({**extra, **m.to_json()})
    if fmt == "text":
        return str(m) + "\n"
    raise UsageError("format %s not supported here" % fmt)


def _emit_polys(seq: PolySeq, fmt: str, name: str, extra: dict) -> str:
    if fmt == "json":
        return _json({**extra, "polynomials": [p.to_json() for p in seq.polys]})
    if fmt == "text":
        return "".join("%s_%d(x) = %s\n" % (name, n, p) for n, p in enumerate(seq.polys))
    raise UsageError("format %s not supported here" % fmt)


def cmd_series(args) -> tuple[str, int]:
    _resolve(args)
    p = _pair(args)
    if args.format == "json":
        return _json({"instance": args.instance, **p.to_json()}), 0
    if args.format == "csv":
        rows = ["n,f,g"] + ["%d,%s,%s" % (n, p.f[n], p.g[n]) for n in range(args.n + 1)]
        return "\n".join(rows) + "\n", 0
    if args.format == "text":
        return ("f: %s\ng: %s\n" % (" ".join(map(str, p.f)), " ".join(map(str, p.g)))), 0
    raise UsageError("format %s not supported here" % args.format)


def cmd_riordan(args) -> tuple[str, int]:
    _resolve(args)
    p = _pair(args)
    if args.inverse:
        p = riordan_inverse(p)
    extra = {"instance": args.instance, "inverse": args.inverse}
    return _emit_matrix(matrix_of_pair(p, args.n), args.format, extra), 0


def cmd_sheffer(args) -> tuple[str, int]:
    mp = _resolve(args)
    extra = {"instance": args.instance, "inverse": args.inverse, "source": args.source}
    if args.source == "poset":
        pairs = [sheffer_by_summation(mp, n) for n in range(args.n + 1)]
        seq = PolySeq(tuple(q[1] if args.inverse else q[0] for q in pairs))
    else:
        seq = sheffer_conjugate(_pair(args), args.n)
        if args.inverse:
            seq = umbral_inverse(seq)
    return _emit_polys(seq, args.format, "s" if args.inverse else "t", extra), 0


def cmd_poset(args) -> tuple[str, int]:
    mp = _resolve(args)
    p = build_poset_monop(mp, args.n)
    if args.format == "dot":
        return p.to_dot(), 0
    if args.format == "json":
        data = p.to_json()
        data["mobius"] = p.mobius_from_zero()
        return _json(data), 0
    if args.format == "text":
        mu = p.mobius_from_zero()
        return "".join("%d\t%d\t%s\n" % (i, mu[i], format_element(e))
                       for i, e in enumerate(p.elements)), 0
    raise UsageError("format %s not supported here" % args.format)


def cmd_matrix(args) -> tuple[str, int]:
    mp = _resolve(args)
    build = counting_matrix if args.kind == "counting" else mobius_matrix
    return _emit_matrix(build(mp, args.n), args.format,
                        {"instance": args.instance, "kind": args.kind}), 0


def _verify_functoriality(mp, args) -> dict:
    pair = instances.generating_pair(args.instance, args.n)
    if pair is None:
        raise UsageError("no generating pair known for %s" % args.instance)
    expected = matrix_of_pair(AdmissiblePair(*pair), args.n)
    got = counting_matrix(mp, args.n)
    return {"instance": args.instance, "n_max": args.n,
            "status": "pass" if got == expected else "fail",
            "counting": got.to_json()["rows"], "expected": expected.to_json()["rows"]}


def cmd_verify(args) -> tuple[str, int]:
    if args.check == "complement":
        if args.n > 4 and not args.force:
            raise UsageError("n=%d is large for graphs; pass --force" % args.n)
        report = check_graph_complement(args.n).to_json()
    else:
        mp = _resolve(args)
        if args.check == "inverse":
            report = inverse_report(mp, args.n)
        elif args.check == "axioms":
            report = check_monop_axioms(mp, args.n).to_json()
        elif args.check == "factorization":
            report = check_interval_factorization(mp, args.n).to_json()
        else:
            report = _verify_functoriality(mp, args)
    status = 0 if report["status"] == "pass" else 1
    if args.format == "text":
        return "%s: %s\n" % (args.check, report["status"]), status
    return _json({"check": args.check, **report}), status


def cmd_catalog(args) -> tuple[str, int]:
    entries = list(instances.CATALOG.values())
    if args.format == "json":
        return _json({"instances": [e.to_json() for e in entries],
                      "patterns": ["E_r:<r>", "L_r:<r>", "dowling:Z<m>", "laguerre:r=<r>",
                                   "E_r_Eplus:<r>", "E_dowling:Z<m>", "E_r_dowling:<r>:Z<m>",
                                   "derivative:<operad>", "op:<operad>", "mon:<monoid>"]}), 0
    return "".join("%-20s %-7s n_max=%d  %s\n" % (e.id, e.kind, e.default_n_max, e.description)
                   for e in entries), 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monops", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format="text", formats=("text", "json", "csv", "dot"), instance=True):
        if instance:
            p.add_argument("--instance", "-i", required=True, help="registry id")
            p.add_argument("--n", "-n", type=int, required=True, help="size / n_max")
        p.add_argument("--format", "-f", choices=formats, default=default_format)
        p.add_argument("--output", "-o", help="write here instead of stdout")
        p.add_argument("--force", action="store_true", help="allow n above the default n_max")

    p = sub.add_parser("series", help="generating pair (f, g) of an instance")
    common(p, formats=("text", "json", "csv"))
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("riordan", help="Riordan array of the generating pair")
    p.add_argument("--inverse", action="store_true")
    common(p, "csv", ("text", "json", "csv"))
    p.set_defaults(func=cmd_riordan)

    p = sub.add_parser("sheffer", help="Sheffer family of an instance")
    p.add_argument("--inverse", action="store_true", help="umbral inverse (Möbius side)")
    p.add_argument("--source", choices=("pair", "poset"), default="pair")
    common(p, formats=("text", "json"))
    p.set_defaults(func=cmd_sheffer)

    p = sub.add_parser("poset", help="poset P[n] as Hasse diagram or dump")
    common(p, "dot", ("text", "json", "dot"))
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("matrix", help="counting or Möbius matrix")
    p.add_argument("kind", choices=("counting", "mobius"))
    common(p, "csv", ("text", "json", "csv"))
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", help="run a check; exit 1 on failure")
    p.add_argument("check", choices=("inverse", "axioms", "factorization", "functoriality",
                                     "complement"))
    p.add_argument("--instance", "-i")
    p.add_argument("--n", "-n", type=int, required=True)
    common(p, "json", ("text", "json"), instance=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="list registry ids")
    common(p, instance=False, formats=("text", "json"))
    p.set_defaults(func=cmd_catalog)
    return parser


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify" and args.check != "complement" and not args.instance:
            raise UsageError("--instance is required for verify %s" % args.check)
        text, code = args.func(args)
    except (UsageError, PosetError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
