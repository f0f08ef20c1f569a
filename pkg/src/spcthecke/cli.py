"""Command line front end: enumeration, characteristics, graphs, verification.

Exit codes: 0 on success, 1 when a verified property fails (the report
with its witness is printed as JSON), 2 for usage errors and exceeded
size bounds.
"""

from __future__ import annotations

import argparse
import json
import sys

from .compositions import BoundExceeded
from . import modules
from . import qsym
from . import tableaux
from .verify import CLAIMS, run_claim

USAGE_ERROR = 2
PROPERTY_FAILURE = 1


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise ValueError(f"cannot parse {what} {text!r}; expected comma-separated integers")


def _cmd_enumerate(args) -> int:
    shape = _parse_ints(args.shape, "--shape")
    if args.kind == "spct":
        if args.sigma is None:
            print("error: enumerate spct requires --sigma", file=sys.stderr)
            return USAGE_ERROR
        sigma = _parse_ints(args.sigma, "--sigma")
        items = [t.to_json() for t in tableaux.enumerate_spct(shape, sigma, args.bound)]
    else:
        items = [t.to_json() for t in tableaux.enumerate_srt(shape, args.bound)]
    print(json.dumps(items))
    return 0


def _cmd_char(args) -> int:
    shape = _parse_ints(args.shape, "--shape")
    sigma = _parse_ints(args.sigma, "--sigma")
    elt = qsym.ch_spct(shape, sigma, args.bound)
    if args.basis == "QS":
        elt = qsym.qschur_expansion(shape, sigma)
    payload = elt.to_json()
    if args.json:
        print(json.dumps(payload))
    else:
        print(repr(elt))
    return 0


def _cmd_graph(args) -> int:
    shape = _parse_ints(args.shape, "--shape")
    sigma = _parse_ints(args.sigma, "--sigma")
    dot = modules.graph_dot(shape, sigma, args.bound)
    if args.dot and args.dot != "-":
        with open(args.dot, "w") as fh:
            fh.write(dot + "\n")
    else:
        print(dot)
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        for claim, (desc, _) in CLAIMS.items():
            print(f"{claim:22s} {desc}")
        return 0
    if args.claim is None:
        print("error: verify requires a claim id (or --list)", file=sys.stderr)
        return USAGE_ERROR
    if args.claim not in CLAIMS:
        print(f"error: unknown claim id {args.claim!r}; try --list", file=sys.stderr)
        return USAGE_ERROR
    report = run_claim(args.claim, max_n=args.max_n, jobs=args.jobs, seed=args.seed)
    text = json.dumps(report, default=str, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return 0 if report["status"] == "pass" else PROPERTY_FAILURE


def _cmd_basis_cert(args) -> int:
    report = qsym.z_basis_certificate(args.n, bound=max(args.n, qsym.DEFAULT_QSYM_BOUND))
    print(json.dumps(report, default=str, indent=2))
    return 0 if report["ok"] else PROPERTY_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spcthecke",
        description="0-Hecke modules on permuted composition tableaux, exactly",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list tableaux of a shape")
    p_enum.add_argument("kind", choices=["spct", "srt"])
    p_enum.add_argument("--shape", required=True, help="composition, e.g. 2,1")
    p_enum.add_argument("--sigma", help="type in one-line notation, e.g. 2,1")
    p_enum.add_argument("--bound", type=int, default=tableaux.DEFAULT_TABLEAU_BOUND)
    p_enum.set_defaults(fn=_cmd_enumerate)

    p_char = sub.add_parser("char", help="characteristic of a tableau module")
    p_char.add_argument("--shape", required=True)
    p_char.add_argument("--sigma", required=True)
    p_char.add_argument("--basis", choices=["F", "QS"], default="F")
    p_char.add_argument("--json", action="store_true")
    p_char.add_argument("--bound", type=int, default=tableaux.DEFAULT_TABLEAU_BOUND)
    p_char.set_defaults(fn=_cmd_char)

    p_graph = sub.add_parser("graph", help="action graph of a tableau module")
    p_graph.add_argument("--shape", required=True)
    p_graph.add_argument("--sigma", required=True)
    p_graph.add_argument("--dot", nargs="?", const="-", help="write DOT here ('-' = stdout)")
    p_graph.add_argument("--bound", type=int, default=tableaux.DEFAULT_TABLEAU_BOUND)
    p_graph.set_defaults(fn=_cmd_graph)

    p_verify = sub.add_parser("verify", help="run a registered claim suite")
    p_verify.add_argument("claim", nargs="?", help="claim id; see --list")
    p_verify.add_argument("--list", action="store_true", help="list claim ids")
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--out", help="also write the JSON report to this path")
    p_verify.set_defaults(fn=_cmd_verify)

    p_cert = sub.add_parser("basis-cert", help="lattice-basis certificate for one degree")
    p_cert.add_argument("--n", type=int, required=True)
    p_cert.set_defaults(fn=_cmd_basis_cert)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalise other codes
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
