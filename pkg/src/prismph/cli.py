"""Command line front end.

Graphs are given as graph6 strings or compact family shorthand (C6 cycle,
P5 path, K4 complete, K3,3 complete bipartite, Q3 hypercube, S4 star on 4
vertices).  Digits are never valid graph6 payload bytes, so the two notations
cannot collide.  Exit codes for decision commands: 0 yes / 1 no / 2
inconclusive or error.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from dataclasses import dataclass

from .dot_export import export_dot
from .extension import BaseNotExtendable, extend, memoized_base_oracle
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .graphs import (
    PRODUCT_VERTEX_CAP,
    TOWER_VERTEX_CAP,
    BudgetExceeded,
    Graph,
    cartesian_product,
    prism,
    prism_power,
    standard_graph,
    strong_product,
)
from .matchings import (
    Pairing,
    SearchBudget,
    enumerate_pairings,
    is_hamiltonian_extension,
    pairing_count,
    random_pairing,
    union_cycle_decomposition,
    verify_ph,
)
from .trees import (
    ML_VERTEX_CAP,
    PROBE_TOP_CAP,
    min_leaf_number,
    ph_power_exact,
    prism_leaf_reduction_steps,
)

_SHORTHAND = re.compile(r"([CPKQS])(\d+)(?:,(\d+))?")


@dataclass
class RunConfig:
    """Run-wide knobs: one seed, worker count, caps, and budgets."""

    seed: int = 0
    workers: int = 1
    fmt: str | None = None
    product_cap: int = PRODUCT_VERTEX_CAP
    tower_cap: int = TOWER_VERTEX_CAP
    probe_top_cap: int = PROBE_TOP_CAP
    ml_cap: int = ML_VERTEX_CAP
    max_pairings: int | None = None
    max_nodes: int | None = None

    def budget(self) -> SearchBudget:
        return SearchBudget(self.max_pairings, self.max_nodes)


def parse_graph_spec(spec: str) -> Graph:
    """Family shorthand or graph6."""
    m = _SHORTHAND.fullmatch(spec)
    if m:
        kind, a, b = m.group(1), int(m.group(2)), m.group(3)
        if kind == "K" and b is not None:
            return standard_graph("complete_bipartite", a, int(b))
        if b is not None:
            raise ValueError(f"family {kind} takes one parameter: {spec!r}")
        family = {"C": "cycle", "P": "path", "K": "complete", "Q": "hypercube", "S": "star"}[kind]
        return standard_graph(family, a)
    return decode_graph6(spec)


def _emit_graph(g: Graph, fmt: str | None) -> None:
    fmt = fmt or "graph6"
    if fmt == "graph6":
        print(encode_graph6(g))
    elif fmt == "json":
        print(json.dumps(g.to_json_dict(), indent=2))
    elif fmt == "dot":
        sys.stdout.write(export_dot(g))
    else:
        print(f"n={g.n} m={g.m} graph6={encode_graph6(g)}")


def _emit_json(obj: dict, fmt: str | None) -> None:
    if (fmt or "json") == "table":
        for key, value in obj.items():
            print(f"{key}: {json.dumps(value)}")
    else:
        print(json.dumps(obj, indent=2))


def _extract_op(tokens: list[str], op: str | None) -> tuple[list[str], str | None]:
    """Pull an --op flag out of a REMAINDER token list."""
    rest: list[str] = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok == "--op":
            if i + 1 >= len(tokens):
                raise ValueError("--op needs a value")
            op, i = tokens[i + 1], i + 2
        elif tok.startswith("--op="):
            op, i = tok[len("--op="):], i + 1
        else:
            rest.append(tok)
            i += 1
    return rest, op


def _int_params(tokens: list[str]) -> list[int]:
    """Flatten family parameters: 'd=3' -> 3, '1,3' -> 1, 3."""
    out: list[int] = []
    for tok in tokens:
        tok = tok.split("=", 1)[-1]
        for piece in tok.split(","):
            try:
                out.append(int(piece))
            except ValueError:
                raise ValueError(f"family parameters must be integers: {piece!r}") from None
    return out


def cmd_gen(args: argparse.Namespace, cfg: RunConfig) -> int:
    params, op = _extract_op(list(args.params), args.op)
    if args.family == "product":
        if op not in ("cartesian", "strong", "prism"):
            raise ValueError("gen product needs --op {cartesian,strong,prism}")
        specs = [parse_graph_spec(s) for s in params]
        if op == "prism":
            if len(specs) != 1:
                raise ValueError("gen product --op prism takes one graph")
            out = prism(specs[0]).host
        else:
            if len(specs) != 2:
                raise ValueError(f"gen product --op {op} takes two graphs")
            fn = cartesian_product if op == "cartesian" else strong_product
            out = fn(specs[0], specs[1], max_vertices=cfg.product_cap)
    else:
        values = _int_params(params)
        if args.family == "star" and len(values) == 2 and values[0] == 1:
            values = [values[1] + 1]  # star 1,3 names K_{1,3}: center part plus leaves
        out = standard_graph(args.family, *values)
    _emit_graph(out, cfg.fmt)
    return 0


def _load_pairing(text: str, n: int) -> Pairing:
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            text = fh.read()
    p = Pairing.from_json_dict(json.loads(text))
    if p.n != n:
        raise ValueError(f"pairing covers {p.n} vertices but the tower top has {n}")
    return p


def cmd_extend(args: argparse.Namespace, cfg: RunConfig) -> int:
    base = parse_graph_spec(args.base)
    tower = prism_power(base, args.k, max_vertices=cfg.tower_cap)
    top = tower.top
    oracle = memoized_base_oracle(base, max_nodes=cfg.max_nodes)
    if args.pairing is not None:
        pairings = [_load_pairing(args.pairing, top.n)]
    elif args.random is not None:
        rng = random.Random(cfg.seed)
        pairings = [random_pairing(top.n, rng) for _ in range(args.random)]
    else:
        pairings = enumerate_pairings(top.n)

    results = []
    ok_count = fail_count = 0
    first_render = None
    for p in pairings:
        try:
            matching, trace = extend(p, tower, oracle)
        except BaseNotExtendable as exc:
            fail_count += 1
            results.append(
                {
                    "pairing": p.to_json_dict(),
                    "ok": False,
                    "error": "base_not_extendable",
                    "stuck_pairing": exc.pairing.to_json_dict(),
                }
            )
            continue
        if not is_hamiltonian_extension(p, matching):  # re-validate before printing
            raise RuntimeError("extension failed re-validation")
        ok_count += 1
        cycle = union_cycle_decomposition(p, matching).cycles[0]
        results.append(
            {
                "pairing": p.to_json_dict(),
                "ok": True,
                "matching": [list(e) for e in matching.pairs],
                "cycle": list(cycle),
                "trace": trace.to_json_dict(),
            }
        )
        if first_render is None:
            first_render = (p, matching, trace)

    if cfg.fmt == "dot":
        if first_render is None:
            raise ValueError("no successful extension to render")
        p, matching, trace = first_render
        sys.stdout.write(
            export_dot(
                top,
                [
                    (p.pairs, "bold"),
                    (matching.pairs, "dashed"),
                    (trace.accent_edges(), "dotted"),
                ],
            )
        )
    else:
        _emit_json(
            {
                "base": encode_graph6(base),
                "k": args.k,
                "top_n": top.n,
                "ok_count": ok_count,
                "fail_count": fail_count,
                "results": results,
            },
            cfg.fmt,
        )
    return 0 if fail_count == 0 else 1


def cmd_verify_ph(args: argparse.Namespace, cfg: RunConfig) -> int:
    g = parse_graph_spec(args.graph)
    verdict = verify_ph(g, budget=cfg.budget(), workers=cfg.workers)
    out = verdict.to_json_dict()
    out["total_pairings"] = pairing_count(g.n)
    _emit_json(out, cfg.fmt)
    if verdict.is_ph is None:
        return 2
    return 0 if verdict.is_ph else 1


def cmd_ml(args: argparse.Namespace, cfg: RunConfig) -> int:
    g = parse_graph_spec(args.graph)
    result = min_leaf_number(g, max_nodes=cfg.max_nodes, vertex_cap=cfg.ml_cap)
    _emit_json(result.to_json_dict(), cfg.fmt)
    return 0 if result.exact else 2


def cmd_reduce_tree(args: argparse.Namespace, cfg: RunConfig) -> int:
    g = parse_graph_spec(args.graph)
    result = min_leaf_number(g, max_nodes=cfg.max_nodes, vertex_cap=cfg.ml_cap)
    steps = prism_leaf_reduction_steps(g, result.witness)
    host = prism(g).host
    final = steps[-1]
    for e in final.edges:  # re-validate before printing
        if e not in host.edges:
            raise RuntimeError("reduced tree failed re-validation against the prism")
    _emit_json(
        {
            "input_ml": result.value,
            "input_exact": result.exact,
            "input_tree_edges": [list(e) for e in result.witness.edges],
            "step_leaf_counts": [s.leaf_count for s in steps],
            "prism_tree_edges": [list(e) for e in final.edges],
            "prism_leaf_count": final.leaf_count,
        },
        cfg.fmt,
    )
    return 0


def cmd_p_bound(args: argparse.Namespace, cfg: RunConfig) -> int:
    g = parse_graph_spec(args.graph)
    result = min_leaf_number(g, max_nodes=cfg.max_nodes, vertex_cap=cfg.ml_cap)
    _emit_json(
        {
            "ml": result.value,
            "ml_exact": result.exact,
            "ph_power_upper_bound": result.value + 3,
        },
        cfg.fmt,
    )
    return 0


def cmd_p_exact(args: argparse.Namespace, cfg: RunConfig) -> int:
    g = parse_graph_spec(args.graph)
    result = ph_power_exact(
        g,
        args.max_k,
        budget=cfg.budget(),
        workers=cfg.workers,
        top_cap=cfg.probe_top_cap,
    )
    _emit_json(result.to_json_dict(), cfg.fmt)
    return {"found": 0, "not_found": 1, "budget_exceeded": 2}[result.status]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prismph",
        description="Pairing-Hamiltonian extensions in graph prisms",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized sampling")
    parser.add_argument("--workers", type=int, default=1, help="parallel workers for verification")
    parser.add_argument(
        "--format", dest="fmt", choices=["json", "graph6", "dot", "table"], default=None
    )
    parser.add_argument("--max-pairings", type=int, default=None, help="pairing budget")
    parser.add_argument("--max-nodes", type=int, default=None, help="per-search node budget")
    parser.add_argument("--product-cap", type=int, default=PRODUCT_VERTEX_CAP)
    parser.add_argument("--tower-cap", type=int, default=TOWER_VERTEX_CAP)
    parser.add_argument("--probe-top-cap", type=int, default=PROBE_TOP_CAP)
    parser.add_argument("--ml-cap", type=int, default=ML_VERTEX_CAP)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a standard graph or a product")
    p.add_argument("family", help="family name, or 'product' with --op")
    p.add_argument("params", nargs=argparse.REMAINDER, help="family parameters or product operands")
    p.add_argument("--op", choices=["cartesian", "strong", "prism"], default=None)
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("extend", help="constructively extend tower pairings")
    p.add_argument("--base", required=True, help="base graph (graph6 or shorthand)")
    p.add_argument("--k", type=int, required=True, help="prism iterations")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pairing", help="pairing JSON (inline or @file)")
    group.add_argument("--random", type=int, metavar="COUNT", help="sample seeded pairings")
    group.add_argument("--all", action="store_true", help="every pairing in canonical order")
    p.set_defaults(handler=cmd_extend)

    p = sub.add_parser("verify-ph", help="decide the pairing-Hamiltonian property")
    p.add_argument("graph")
    p.set_defaults(handler=cmd_verify_ph)

    p = sub.add_parser("ml", help="minimum leaf number over spanning trees")
    p.add_argument("graph")
    p.set_defaults(handler=cmd_ml)

    p = sub.add_parser("reduce-tree", help="prism leaf reduction from an ml witness")
    p.add_argument("graph")
    p.set_defaults(handler=cmd_reduce_tree)

    p = sub.add_parser("p-bound", help="upper bound for the smallest PH prism power")
    p.add_argument("graph")
    p.set_defaults(handler=cmd_p_bound)

    p = sub.add_parser("p-exact", help="probe for the smallest PH prism power")
    p.add_argument("graph")
    p.add_argument("--max-k", type=int, required=True)
    p.set_defaults(handler=cmd_p_exact)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        seed=args.seed,
        workers=args.workers,
        fmt=args.fmt,
        product_cap=args.product_cap,
        tower_cap=args.tower_cap,
        probe_top_cap=args.probe_top_cap,
        ml_cap=args.ml_cap,
        max_pairings=args.max_pairings,
        max_nodes=args.max_nodes,
    )
    try:
        return args.handler(args, cfg)
    except (Graph6Error, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON input: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
