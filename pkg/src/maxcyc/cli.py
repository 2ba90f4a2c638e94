"""Command-line front end.

Subcommands: eta, normals, quot, xsub, gminus, gkgraph, verify.  Output is
deterministic: identical invocations produce byte-identical output.  Exit
codes: 0 success, 1 verification failure, 2 usage/parse/realization error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .core import (
    DEFAULT_DEGREE_CAP,
    DEFAULT_ORDER_CAP,
    Group,
    is_cyclic,
    normal_subgroups,
    quotient_group,
)
from .constructors import named_normal, parse_spec, realize
from .corpus import SUITES, default_corpus_text, parse_corpus, run_suites
from .cyclic import eta, g_minus
from .errors import MaxcycError
from .theorems import check_quot_conditions, compute_X, gk_graph

CORPUS_ENV = "MAXCYC_CORPUS"


@dataclass(frozen=True)
class RunConfig:
    """Resolved run options shared by every subcommand."""

    order_cap: int = DEFAULT_ORDER_CAP
    degree_cap: int = DEFAULT_DEGREE_CAP
    jobs: int = 1
    output_format: str = "text"
    corpus_path: str | None = None

    def __post_init__(self):
        if self.order_cap < 1 or self.degree_cap < 1:
            raise ValueError("caps must be >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            order_cap=args.order_cap,
            degree_cap=args.degree_cap,
            jobs=getattr(args, "jobs", 1),
            output_format=args.format,
            corpus_path=getattr(args, "corpus", None) or os.environ.get(CORPUS_ENV),
        )


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text",
                   help="output format (default text)")
    p.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP,
                   help="largest allowed group order when realizing specs")
    p.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP,
                   help="largest allowed permutation degree when realizing specs")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxcyc",
        description="Maximal cyclic subgroup invariants of finite permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eta", help="eta, l, |G^-| and the maximal cyclic classes")
    p.add_argument("spec", help="group spec, e.g. 'S(3) x D(10)'")
    _common_flags(p)

    p = sub.add_parser("normals", help="list every normal subgroup")
    p.add_argument("spec")
    _common_flags(p)

    p = sub.add_parser("quot", help="quotient conditions for one normal subgroup")
    p.add_argument("spec")
    p.add_argument("--order", type=int, required=True, help="order of the normal subgroup")
    p.add_argument("--index", type=int, default=0, help="index among that order (default 0)")
    _common_flags(p)

    p = sub.add_parser("xsub", help="largest eta-preserving normal subgroup of a p-group")
    p.add_argument("spec")
    _common_flags(p)

    p = sub.add_parser("gminus", help="the set of non-generators of maximal cyclic subgroups")
    p.add_argument("spec")
    _common_flags(p)

    p = sub.add_parser("gkgraph", help="prime graph of the group")
    p.add_argument("spec")
    _common_flags(p)

    p = sub.add_parser("verify", help="run verification suites over a corpus")
    p.add_argument("--suite", action="append", default=None,
                   help="suite name (repeatable; default all); one of: "
                        + ", ".join(SUITES) + ", all")
    p.add_argument("--corpus", default=None,
                   help=f"corpus path (default ${CORPUS_ENV} or the bundled corpus)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    _common_flags(p)

    return parser


def _realize(args: argparse.Namespace, cfg: RunConfig) -> Group:
    spec = parse_spec(args.spec)
    return realize(spec, order_cap=cfg.order_cap, degree_cap=cfg.degree_cap)


def _emit(cfg: RunConfig, payload: dict, text_lines: list[str]) -> None:
    if cfg.output_format == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def cmd_eta(args: argparse.Namespace, cfg: RunConfig) -> int:
    G = _realize(args, cfg)
    rep = eta(G)
    payload = {
        "order": G.order,
        "eta": rep.eta,
        "l": rep.l_value,
        "gminus_size": rep.gminus_size,
        "classes": [
            {"subgroup_order": o, "class_size": s} for o, s in rep.class_reps
        ],
    }
    lines = [
        f"group: {args.spec}",
        f"order: {G.order}",
        f"eta: {rep.eta}",
        f"l: {rep.l_value}",
        f"gminus_size: {rep.gminus_size}",
        "classes (subgroup order, class size): "
        + ", ".join(f"({o}, {s})" for o, s in rep.class_reps),
    ]
    _emit(cfg, payload, lines)
    return 0


def cmd_normals(args: argparse.Namespace, cfg: RunConfig) -> int:
    G = _realize(args, cfg)
    rows = []
    counts: dict[int, int] = {}
    for N in normal_subgroups(G):
        idx = counts.get(N.order, 0)
        counts[N.order] = idx + 1
        gens = [g.cycle_string() for g in N.generators] or ["()"]
        rows.append({"order": N.order, "index": idx, "generators": gens})
    payload = {"order": G.order, "normal_subgroups": rows}
    lines = [f"{r['order']:>6}  {r['index']:>3}  {' '.join(r['generators'])}" for r in rows]
    lines.insert(0, f"{'order':>6}  {'idx':>3}  generators")
    _emit(cfg, payload, lines)
    return 0


def cmd_quot(args: argparse.Namespace, cfg: RunConfig) -> int:
    G = _realize(args, cfg)
    N = named_normal(G, args.order, args.index)
    rep = check_quot_conditions(G, N)
    payload = {
        "eta_g": rep.eta_g,
        "eta_quotient": rep.eta_q,
        "equal": rep.equal,
        "cond_a": rep.cond_a,
        "cond_b": rep.cond_b,
        "cond_c": rep.cond_c,
        "coset_union": rep.gminus_coset_union,
        "witnesses": {k: list(v) for k, v in rep.witnesses.items()},
    }
    lines = [
        f"eta(G): {rep.eta_g}",
        f"eta(G/N): {rep.eta_q}",
        f"equal: {rep.equal}",
        f"cond_a (N in G^-): {rep.cond_a}",
        f"cond_b (quotient non-generators are G^- cosets): {rep.cond_b}",
        f"cond_c (coset elements conjugate to generators): {rep.cond_c}",
        f"coset_union (G^- a union of N-cosets): {rep.gminus_coset_union}",
    ]
    for key, vals in sorted(rep.witnesses.items()):
        lines.append(f"witnesses[{key}]: {', '.join(vals)}")
    _emit(cfg, payload, lines)
    return 0


def cmd_xsub(args: argparse.Namespace, cfg: RunConfig) -> int:
    G = _realize(args, cfg)
    X = compute_X(G)
    e_g = eta(G).eta
    e_q = eta(quotient_group(G, X)[0]).eta
    gens = [g.cycle_string() for g in X.generators] or ["()"]
    payload = {
        "x_order": X.order,
        "generators": gens,
        "eta_g": e_g,
        "eta_g_mod_x": e_q,
        "cyclic": is_cyclic(X),
    }
    lines = [
        f"|X|: {X.order}",
        f"generators: {' '.join(gens)}",
        f"eta(G): {e_g}",
        f"eta(G/X): {e_q}",
        f"X cyclic: {is_cyclic(X)}",
    ]
    _emit(cfg, payload, lines)
    return 0


def cmd_gminus(args: argparse.Namespace, cfg: RunConfig) -> int:
    G = _realize(args, cfg)
    gm = sorted(g_minus(G))
    payload = {
        "order": G.order,
        "gminus_size": len(gm),
        "elements": [g.cycle_string() for g in gm],
    }
    lines = [
        f"order: {G.order}",
        f"gminus_size: {len(gm)}",
        "elements: " + ", ".join(g.cycle_string() for g in gm),
    ]
    _emit(cfg, payload, lines)
    return 0


def cmd_gkgraph(args: argparse.Namespace, cfg: RunConfig) -> int:
    G = _realize(args, cfg)
    graph = gk_graph(G)
    payload = {
        "vertices": list(graph.vertices),
        "edges": [list(e) for e in graph.edges],
        "components": graph.component_count(),
    }
    lines = [
        "vertices: " + ", ".join(str(v) for v in graph.vertices),
        "edges: " + (", ".join(f"{a}-{b}" for a, b in graph.edges) or "none"),
        f"components: {graph.component_count()}",
    ]
    _emit(cfg, payload, lines)
    return 0


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    names = args.suite or ["all"]
    if "all" in names:
        names = list(SUITES)
    if cfg.corpus_path:
        text = Path(cfg.corpus_path).read_text("utf-8")
    else:
        text = default_corpus_text()
    entries = parse_corpus(text)
    reports = run_suites(
        names,
        entries,
        order_cap=cfg.order_cap,
        degree_cap=cfg.degree_cap,
        jobs=cfg.jobs,
    )
    failures = 0
    for rep in reports:
        if cfg.output_format == "json":
            print(json.dumps(rep.to_dict()))
        else:
            mark = "PASS" if rep.passed else "FAIL"
            print(f"{mark} {rep.suite} {rep.instance}")
            if not rep.passed:
                for c in rep.checks:
                    if not c.passed:
                        print(f"     {c.name}: expected {c.expected!r}, got {c.actual!r}")
        if not rep.passed:
            failures += 1
    if cfg.output_format == "text":
        print(f"{len(reports) - failures}/{len(reports)} reports passed")
    return 1 if failures else 0


_COMMANDS = {
    "eta": cmd_eta,
    "normals": cmd_normals,
    "quot": cmd_quot,
    "xsub": cmd_xsub,
    "gminus": cmd_gminus,
    "gkgraph": cmd_gkgraph,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return _COMMANDS[args.command](args, cfg)
    except MaxcycError as exc:
        print(f"maxcyc: error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"maxcyc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
