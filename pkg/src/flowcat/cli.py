"""Command line interface.

Subcommands: volume, points, vertices, fvector, ct, verify.  Graphs are
given as `complete:<n+1>`, `morris:<n+1>,<a>,<b>,<m>`, `tesler:<n+1>,<a>,<b>`
or `file:<path>` (JSON per the core interchange format).  JSON output is
deterministic: keys sorted, big integers as decimal strings.  Exit codes:
0 success, 1 invalid input, 2 verification or agreement failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .closedform import (
    catalan_polytope_volume,
    cry_product,
    morris_polytope_volume,
    tesler_family_volume,
)
from .core import Multigraph, complete_graph, kostant, morris_graph, tesler_graph
from .ctengine import CTIntegrand, catalan_polytope_ct, constant_term, morris_ct, tesler_ct
from .faces import f_vector, tableau_to_forest, vertex_tableaux
from .lidskii import ehrhart_polynomial, lidskii_points, lidskii_volume
from .verify import SUITES


class CLIError(Exception):
    """Invalid input; reported on stderr with exit status 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise CLIError(message)


def _parse_graph(spec: str) -> tuple[str, tuple[int, ...], Multigraph]:
    """Returns (kind, params, graph)."""
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise CLIError(f"graph spec needs a kind prefix: {spec!r}")
    if kind == "file":
        try:
            with open(rest) as fh:
                data = json.load(fh)
            return "custom", (), Multigraph.from_json_dict(data)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise CLIError(f"cannot read graph file {rest!r}: {exc}")
    try:
        params = tuple(int(tok) for tok in rest.split(","))
    except ValueError:
        raise CLIError(f"graph parameters must be integers: {rest!r}")
    try:
        if kind == "complete" and len(params) == 1:
            return kind, params, complete_graph(params[0])
        if kind == "morris" and len(params) == 4:
            return kind, params, morris_graph(*params)
        if kind == "tesler" and len(params) == 3:
            return kind, params, tesler_graph(*params)
    except ValueError as exc:
        raise CLIError(str(exc))
    raise CLIError(f"unrecognized graph spec: {spec!r}")


def _parse_netflow(raw: str, G: Multigraph) -> tuple[int, ...]:
    try:
        vec = tuple(int(tok) for tok in raw.split(","))
    except ValueError:
        raise CLIError(f"netflow must be a comma separated integer list: {raw!r}")
    if len(vec) != G.vertex_count:
        raise CLIError(
            f"netflow length {len(vec)} does not match vertex count {G.vertex_count}"
        )
    return vec


def _as_int(value: object, method: str) -> int:
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise CLIError(f"method {method} produced a non-integer volume {value}")
        return int(value)
    return int(value)  # type: ignore[call-overload]


def _special_form(
    kind: str, params: tuple[int, ...], netflow: tuple[int, ...]
) -> tuple[object, object] | None:
    """(ct_value, closed_value) when the (graph, netflow) pair matches one of
    the families with a dedicated constant-term and closed-form route."""
    n = len(netflow) - 1
    if kind == "complete":
        if n >= 2 and netflow == (1, 1) + (0,) * (n - 2) + (-2,):
            return catalan_polytope_ct(n), catalan_polytope_volume(n)
        if n >= 3 and netflow == (1,) + (0,) * (n - 1) + (-1,):
            return morris_ct(n - 2, 0, 2, 1), cry_product(n)
    if kind == "morris" and netflow == (1,) + (0,) * (n - 1) + (-1,):
        _, a, b, m = params
        if a >= 1:
            return morris_ct(n - 1, a - 1, b, m), morris_polytope_volume(n, a, b, m)
    if kind == "tesler" and netflow == (1,) * n + (-n,):
        _, a, b = params
        return tesler_ct(n, a, b), tesler_family_volume(n, a, b)
    return None


def _emit(payload: dict[str, object], fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True), file=out)
    elif fmt == "csv":
        keys = sorted(payload)
        print(",".join(keys), file=out)
        print(",".join(str(payload[k]) for k in keys), file=out)
    else:
        for k in sorted(payload):
            print(f"{k}: {payload[k]}", file=out)


def _run_methods(
    args, compute: dict[str, object], result_key: str, out
) -> int:
    """Evaluate each requested method, report agreement, emit the payload."""
    values: dict[str, int] = {}
    for method in args.method:
        fn = compute.get(method)
        if fn is None:
            raise CLIError(f"method {method!r} does not apply to this input")
        values[method] = _as_int(fn(), method)
    agreement = len(set(values.values())) == 1
    payload: dict[str, object] = {
        result_key: str(next(iter(values.values()))),
        "agreement": agreement,
        "methods": {k: str(v) for k, v in sorted(values.items())},
    }
    _emit(payload, args.format, out)
    return 0 if agreement else 2


def _cmd_volume(args, out) -> int:
    kind, params, G = _parse_graph(args.graph)
    netflow = _parse_netflow(args.netflow, G)
    special = _special_form(kind, params, netflow)
    compute: dict[str, object] = {
        "lidskii": lambda: lidskii_volume(G, netflow),
        "ehrhart": lambda: ehrhart_polynomial(G, netflow).normalized_volume,
    }
    if special is not None:
        ct_val, closed_val = special
        compute["ct"] = lambda: ct_val
        compute["closed"] = lambda: closed_val
    return _run_methods(args, compute, "volume", out)


def _cmd_points(args, out) -> int:
    _, _, G = _parse_graph(args.graph)
    netflow = _parse_netflow(args.netflow, G)
    compute = {
        "lidskii": lambda: lidskii_points(G, netflow),
        "ehrhart": lambda: int(ehrhart_polynomial(G, netflow)(1)),
        "kostant": lambda: kostant(G, netflow),
    }
    return _run_methods(args, compute, "points", out)


def _parse_prefix(raw: str) -> tuple[int, ...]:
    try:
        vec = tuple(int(tok) for tok in raw.split(","))
    except ValueError:
        raise CLIError(f"netflow must be a comma separated integer list: {raw!r}")
    if any(x < 0 for x in vec):
        raise CLIError("netflow prefix entries must be nonnegative")
    return vec


def _cmd_vertices(args, out) -> int:
    a = _parse_prefix(args.netflow)
    tableaux = vertex_tableaux(a)
    if args.count_only:
        if args.format == "json":
            _emit({"count": str(len(tableaux))}, "json", out)
        else:
            print(len(tableaux), file=out)
        return 0
    payload: dict[str, object] = {"count": str(len(tableaux))}
    if args.enumerate:
        payload["tableaux"] = [[list(row) for row in T.rows] for T in tableaux]
        payload["forests"] = [
            tableau_to_forest(T).parent_array(len(a)) for T in tableaux
        ]
    _emit(payload, args.format, out)
    return 0


def _cmd_fvector(args, out) -> int:
    a = _parse_prefix(args.netflow)
    fv = f_vector(a)
    if args.format == "json":
        _emit({"f_vector": [str(v) for v in fv]}, "json", out)
    elif args.format == "csv":
        print(",".join(f"dim{d}" for d in range(len(fv))), file=out)
        print(",".join(str(v) for v in fv), file=out)
    else:
        print(" ".join(str(v) for v in fv), file=out)
    return 0


def _cmd_ct(args, out) -> int:
    try:
        if args.file == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.file) as fh:
                data = json.load(fh)
        f = CTIntegrand.from_json_dict(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CLIError(f"cannot read integrand: {exc}")
    value = constant_term(f)
    if args.format == "json":
        _emit({"constant_term": str(value)}, "json", out)
    else:
        print(value, file=out)
    return 0


def _cmd_verify(args, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        fn = SUITES[name]
        results = fn(args.max_n) if args.max_n is not None else fn()
        bad = [r for r in results if not r.ok]
        failed += len(bad)
        if args.format == "csv":
            for r in results:
                print(f"{name},{r.label},{r.ok},{r.expected},{r.actual}", file=out)
        else:
            print(f"{name}: {len(results) - len(bad)}/{len(results)} checks passed",
                  file=out)
            for r in bad:
                print(f"  FAIL {r.label}: expected {r.expected}, got {r.actual}",
                      file=out)
    return 2 if failed else 0


def build_parser() -> _Parser:
    parser = _Parser(prog="flowcat", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_graph_flags(p: _Parser) -> None:
        p.add_argument("--graph", required=True)
        p.add_argument("--netflow", required=True)
        p.add_argument("--format", choices=("json", "text", "csv"), default="json")

    p = sub.add_parser("volume", help="normalized volume of a flow polytope")
    add_graph_flags(p)
    p.add_argument("--method", action="append",
                   choices=("lidskii", "ehrhart", "ct", "closed"))
    p.set_defaults(fn=_cmd_volume)

    p = sub.add_parser("points", help="lattice point count of a flow polytope")
    add_graph_flags(p)
    p.add_argument("--method", action="append",
                   choices=("lidskii", "ehrhart", "kostant"))
    p.set_defaults(fn=_cmd_points)

    p = sub.add_parser("vertices",
                       help="vertices of the complete graph flow polytope")
    p.add_argument("--netflow", required=True,
                   help="nonnegative prefix a_1,...,a_n of the netflow")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--format", choices=("json", "text", "csv"), default="text")
    p.set_defaults(fn=_cmd_vertices)

    p = sub.add_parser("fvector",
                       help="face counts by dimension for the complete graph")
    p.add_argument("--netflow", required=True)
    p.add_argument("--format", choices=("json", "text", "csv"), default="text")
    p.set_defaults(fn=_cmd_fvector)

    p = sub.add_parser("ct", help="constant term of an integrand JSON file")
    p.add_argument("--file", required=True, help="path or - for stdin")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(fn=_cmd_ct)

    p = sub.add_parser("verify", help="run cross-verification suites")
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "method", "skip") is None:
            args.method = ["lidskii"]
        return args.fn(args, sys.stdout)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
