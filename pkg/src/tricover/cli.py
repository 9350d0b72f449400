"""Command line interface.

Exit codes: 0 = success, 1 = verification failure, 2 = usage or input
errors. Output with --format json is the stable machine surface; the text
renderings are for humans and may change between versions.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .core import H3ParseError, Hypergraph, components, parse_h3, serialize_h3
from .cycles import is_acyclic
from .lab import (
    SuiteConfig,
    gen_cycle,
    gen_hypertree_pm,
    gen_random_connected,
    run_suite,
    verify_instance,
)
from .solver import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    SolveResult,
    constructive_cover,
    exact_nu,
    exact_tau,
)
from .trees import has_perfect_matching, hypertree_cover


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _read_instance(path: str) -> Hypergraph:
    if path == "-":
        return parse_h3(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_h3(fh.read())


def _write_text(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


# -- analyze -------------------------------------------------------------------


def _component_summary(comp: Hypergraph, budget: int) -> dict:
    acyclic = is_acyclic(comp)
    info: dict = {
        "n": comp.n,
        "m": comp.m,
        "is_hypertree": acyclic,
        "bound_num": 2 * comp.m + 1,
        "bound_den": 3,
    }
    try:
        info["has_pm"] = has_perfect_matching(comp, budget)
    except BudgetExceeded:
        info["has_pm"] = None
    try:
        t = exact_tau(comp, budget)
        u = exact_nu(comp, budget)
        info["tau"] = t.size
        info["nu"] = u.size
        info["tight"] = t.tight
        info["cover"] = sorted(comp.labels[v] for v in t.certificate.vertex_ids)
        info["matching"] = sorted(u.certificate.edge_indices)
    except BudgetExceeded:
        info.update(tau=None, nu=None, tight=None, cover=None, matching=None)
    if info["tight"] is None or info["has_pm"] is None:
        info["extremal"] = None
    else:
        info["extremal"] = bool(info["is_hypertree"] and info["has_pm"])
    return info


def _cmd_analyze(args: argparse.Namespace) -> int:
    h = _read_instance(args.path)
    comps = components(h).components
    doc = {
        "n": h.n,
        "m": h.m,
        "connected": h.is_connected(),
        "components": [_component_summary(c, args.budget) for c in comps],
    }
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True))
        return 0
    lines = [f"instance: n={h.n} m={h.m} connected={'yes' if doc['connected'] else 'no'}"]
    for i, c in enumerate(doc["components"], start=1):
        lines.append(
            f"component {i}: n={c['n']} m={c['m']}"
            f" hypertree={'yes' if c['is_hypertree'] else 'no'}"
            f" perfect_matching={_tri(c['has_pm'])}"
        )
        lines.append(
            f"  bound=(2m+1)/3={c['bound_num']}/{c['bound_den']}"
            f" tau={_tri(c['tau'])} nu={_tri(c['nu'])}"
            f" tight={_tri(c['tight'])} extremal={_tri(c['extremal'])}"
        )
        if c["cover"] is not None:
            lines.append(f"  cover={{{', '.join(c['cover'])}}} matching={c['matching']}")
    print("\n".join(lines))
    return 0


def _tri(value: object) -> str:
    if value is None:
        return "over-budget"
    if value is True:
        return "yes"
    if value is False:
        return "no"
    return str(value)


# -- cover ---------------------------------------------------------------------


def _cmd_cover(args: argparse.Namespace) -> int:
    h = _read_instance(args.path)
    if args.method == "exact":
        result = exact_tau(h, args.budget)
    else:
        if not h.is_connected():
            return _fail(f"method {args.method} needs a connected instance", 2)
        if args.method == "hypertree":
            if not is_acyclic(h):
                return _fail("method hypertree needs an acyclic instance", 2)
            cover = hypertree_cover(h)
            result = SolveResult(
                size=len(cover.vertex_ids),
                certificate=cover,
                method="hypertree",
                bound_num=2 * h.m + 1,
                bound_den=3,
                tight=3 * len(cover.vertex_ids) == 2 * h.m + 1,
            )
        else:
            result = constructive_cover(h, args.budget)
    if not result.certificate.is_valid(h):
        return _fail("certificate failed verification", 1)
    if args.format == "json":
        print(json.dumps(result.to_json_dict(h), sort_keys=True))
    else:
        toks = sorted(h.labels[v] for v in result.certificate.vertex_ids)
        print(
            f"cover size={result.size} method={result.method}"
            f" bound={result.bound_num}/{result.bound_den}"
            f" tight={'yes' if result.tight else 'no'}"
        )
        print("vertices: " + " ".join(toks))
    return 0


# -- verify --------------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.path is None and args.census is None and args.random is None:
        return _fail("verify needs a PATH, --census, or --random", 2)
    if args.path is not None:
        if args.census is not None or args.random is not None:
            return _fail("PATH and --census/--random are mutually exclusive", 2)
        h = _read_instance(args.path)
        reports = [
            verify_instance(c, args.budget) for c in components(h).components
        ]
        doc = {
            "instances": [r.to_json_dict() for r in reports],
            "counts": {
                "instances": len(reports),
                "passes": sum(1 for r in reports if r.ok),
                "failures": sum(1 for r in reports if not r.ok),
                "fallbacks": sum(
                    1 for r in reports if r.constructive_method == "fallback"
                ),
            },
        }
        ok = all(r.ok for r in reports)
        if args.format == "json":
            print(json.dumps(doc, sort_keys=True))
        else:
            print(
                f"components={len(reports)}"
                f" passes={doc['counts']['passes']}"
                f" failures={doc['counts']['failures']}"
            )
            for r in reports:
                bad = sorted(k for k, v in r.lemma_checks.items() if v == "fail")
                state = "ok" if r.ok else "FAIL " + ",".join(bad)
                print(f"  {r.instance_id}: {state}")
        return 0 if ok else 1
    config = SuiteConfig(
        census_max_m=args.census or 0,
        random_count=args.random or 0,
        seed=args.seed,
        budget=args.budget,
    )
    report = run_suite(config)
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), sort_keys=True))
    else:
        c = report.counts
        print(
            f"instances={c['instances']} passes={c['passes']}"
            f" failures={c['failures']} fallbacks={c['fallbacks']}"
            f" fallback_rate={report.fallback_rate:.4f}"
        )
        for failure in report.failures:
            print(f"  FAIL {failure['check']} on {failure['key']}")
    return 0 if report.ok else 1


# -- generate ------------------------------------------------------------------


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.kind == "hypertree-pm":
        if args.m is None:
            return _fail("generate hypertree-pm needs --m", 2)
        h = gen_hypertree_pm(args.m, args.seed)
    elif args.kind == "random":
        if args.n is None or args.m is None:
            return _fail("generate random needs --n and --m", 2)
        h = gen_random_connected(args.n, args.m, args.seed)
    else:
        if args.k is None:
            return _fail("generate cycle needs --k", 2)
        h = gen_cycle(args.k, linear=args.linear)
    _write_text(serialize_h3(h), args.out)
    return 0


# -- entry point ---------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricover",
        description="Vertex covers, matchings, and cycle structure of "
        "3-uniform hypergraphs (h3 files: one edge per line, three tokens).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="summarize an instance per component")
    p.add_argument("path", help="h3 file, or - for stdin")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("cover", help="compute a vertex cover with a certificate")
    p.add_argument("path", help="h3 file, or - for stdin")
    p.add_argument(
        "--method",
        choices=("exact", "constructive", "hypertree"),
        default="constructive",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("verify", help="run structural checks; exit 1 on failure")
    p.add_argument("path", nargs="?", default=None, help="h3 file, or - for stdin")
    p.add_argument("--census", type=int, default=None, metavar="M",
                   help="verify every connected instance with at most M edges")
    p.add_argument("--random", type=int, default=None, metavar="K",
                   help="verify K seeded random connected instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("generate", help="emit instances in h3 format")
    p.add_argument("kind", choices=("hypertree-pm", "random", "cycle"))
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--linear", action="store_true",
                   help="for cycle: keep every private vertex distinct")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", "-o", default=None, help="output file (default stdout)")
    p.set_defaults(func=_cmd_generate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except H3ParseError as exc:
        return _fail(str(exc), 2)
    except FileNotFoundError as exc:
        return _fail(str(exc), 2)
    except BudgetExceeded as exc:
        return _fail(str(exc), 2)
    except ValueError as exc:
        return _fail(str(exc), 2)


if __name__ == "__main__":
    sys.exit(main())
