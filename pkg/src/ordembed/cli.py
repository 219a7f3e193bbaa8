"""Command line front end over JSON documents.

Every subcommand prints exactly one JSON document on standard output with
sorted keys, so identical inputs give byte-identical output.  Exit codes:
0 success, 2 invalid input, 3 search budget exceeded, 4 verification
failure.  Diagnostics go to standard error.

Relation documents look like

    {"elements": ["a", "b"], "pairs": [["a", "b"]], "kind": "strict"}

and topology documents like ``{"opens_generators": [["a"], ["a", "b"]]}``.
When no topology file is given the discrete topology is used.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

import numpy as np

from .embedding import build_multi_embedding, hasse_projection, verify_existential_embedding
from .errors import SearchBudgetExceeded, ValidationError, VerificationError
from .pareto import build_pareto_representation, decomposition_check, verify_pareto_embedding
from .realizer import build_realizer, open_order_dimension, order_dimension, verify_realizer
from .relation import LoadedRelation, Relation, identity, load_relation_file, properties, strict_part, union
from .semiorder import GridSpec, SemiorderFamily, boundary_witnesses, verify_family_on_grid
from .topology import load_topology_file, relation_topology_report


def _poset_of(loaded: LoadedRelation) -> Relation:
    """The partial order a document denotes for realizer work.

    A weak document is taken as stored; a strict document contributes its
    reflexive closure.  (The polar-derived weak form is the right reading
    only for complete relations, which posets generally are not.)
    """
    if loaded.kind == "weak":
        return loaded.weak
    return union(loaded.strict, identity(loaded.ground))


def _strict_poset_of(loaded: LoadedRelation) -> Relation:
    if loaded.kind == "strict":
        return loaded.strict
    return strict_part(loaded.weak)


def _cmd_check(args: argparse.Namespace) -> tuple[dict, int]:
    loaded = load_relation_file(args.relation)
    t = load_topology_file(args.topology, loaded.ground)
    doc = {
        "kind": loaded.kind,
        "weak": {
            "properties": properties(loaded.weak).as_doc(),
            "topology": relation_topology_report(loaded.weak, t).as_doc(),
        },
        "strict": {
            "properties": properties(loaded.strict).as_doc(),
            "topology": relation_topology_report(loaded.strict, t).as_doc(),
        },
    }
    return doc, 0


def _cmd_realize(args: argparse.Namespace) -> tuple[dict, int]:
    loaded = load_relation_file(args.relation)
    poset = _poset_of(loaded)
    realizer = build_realizer(poset)
    verified = verify_realizer(poset, realizer)
    doc = realizer.as_doc()
    doc["verified"] = verified
    return doc, 0 if verified else 4


def _cmd_dimension(args: argparse.Namespace) -> tuple[dict, int]:
    loaded = load_relation_file(args.relation)
    t = load_topology_file(args.topology, loaded.ground)
    poset = _poset_of(loaded)
    d = order_dimension(poset, max_k=args.max_k, max_n=args.max_n)
    d_open = open_order_dimension(poset, t, max_k=args.max_k, max_n=args.max_n)
    doc = {
        "dimension": d,
        "open_dimension": d_open,
        "budgets": {"max_k": args.max_k, "max_n": args.max_n},
    }
    return doc, 0


def _cmd_embed(args: argparse.Namespace) -> tuple[dict, int]:
    loaded = load_relation_file(args.relation)
    t = load_topology_file(args.topology, loaded.ground)
    v = build_multi_embedding(loaded.weak, t)
    verified = verify_existential_embedding(loaded.weak, v)
    doc = v.as_doc()
    doc["verified"] = verified
    return doc, 0 if verified else 4


def _cmd_pareto(args: argparse.Namespace) -> tuple[dict, int]:
    loaded = load_relation_file(args.relation)
    q = _strict_poset_of(loaded)
    v = build_pareto_representation(q)
    verified = verify_pareto_embedding(q, v)
    realizer = build_realizer(union(q, identity(q.ground)))
    decomposed = decomposition_check(q, realizer)
    doc = v.as_doc()
    doc["verified"] = verified
    doc["decomposition_check"] = decomposed
    return doc, 0 if verified and decomposed else 4


def _cmd_hasse(args: argparse.Namespace) -> tuple[dict, int]:
    loaded = load_relation_file(args.relation)
    t = load_topology_file(args.topology, loaded.ground)
    v = build_multi_embedding(loaded.weak, t)
    return hasse_projection(v, loaded.strict).as_doc(), 0


def _boundary_unique(xs: np.ndarray, eps: float, alphas: np.ndarray) -> bool:
    """Every surviving shift for the pair (x, x + eps) lies within one
    alpha-grid step of x, for every sampled x."""
    step = float(np.max(np.diff(alphas))) if len(alphas) > 1 else float("inf")
    for x in xs:
        for a in boundary_witnesses(float(x), eps, alphas):
            if abs(a - float(x)) > step + 1e-9:
                return False
    return True


def _cmd_semiorder(args: argparse.Namespace) -> tuple[dict, int]:
    grid = GridSpec(args.pair_min, args.pair_max, args.pair_step)
    if args.alpha_count < 1:
        raise ValidationError("--alpha-count must be at least 1")
    alphas = np.linspace(args.pair_min, args.pair_max, args.alpha_count)
    family = SemiorderFamily(args.epsilon, tuple(float(a) for a in alphas))
    report = verify_family_on_grid(family, grid, collect_rows=args.csv is not None)
    if args.csv is not None:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["x", "y", "in_P", "witness_alpha", "margin"])
            for row in report.rows or []:
                writer.writerow([row.x, row.y, row.related,
                                 "" if row.witness is None else row.witness,
                                 row.margin])
    unique = _boundary_unique(grid.points(), args.epsilon, alphas)
    doc = report.as_doc()
    doc["pair_grid"] = grid.as_doc()
    doc["alpha_count"] = args.alpha_count
    doc["boundary_unique"] = unique
    return doc, 0 if unique else 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordembed",
        description="Construct and verify order embeddings over JSON documents.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("pretty", "compact"), default="pretty",
                        help="JSON layout on standard output (default pretty)")

    topo = argparse.ArgumentParser(add_help=False)
    topo.add_argument("--topology", metavar="FILE", default=None,
                      help="topology document; omitted means discrete")

    p = sub.add_parser("check", parents=[common, topo],
                       help="report relation properties and closed/open status")
    p.add_argument("relation", help="relation document")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("realize", parents=[common],
                       help="build and verify a realizer of the weak order")
    p.add_argument("relation")
    p.set_defaults(handler=_cmd_realize)

    p = sub.add_parser("dimension", parents=[common, topo],
                       help="order dimension, classical and open-extension variants")
    p.add_argument("relation")
    p.add_argument("--max-k", type=int, default=4, metavar="K",
                   help="largest realizer size to try (default 4)")
    p.add_argument("--max-n", type=int, default=8, metavar="N",
                   help="largest ground set accepted (default 8)")
    p.set_defaults(handler=_cmd_dimension)

    p = sub.add_parser("embed", parents=[common, topo],
                       help="continuous multi-utility embedding of the weak order")
    p.add_argument("relation")
    p.set_defaults(handler=_cmd_embed)

    p = sub.add_parser("pareto", parents=[common],
                       help="Pareto representation of the strict order")
    p.add_argument("relation")
    p.set_defaults(handler=_cmd_pareto)

    p = sub.add_parser("semiorder", parents=[common],
                       help="verify the threshold family on a square grid")
    p.add_argument("--epsilon", type=float, default=1.0,
                   help="discrimination threshold (default 1.0)")
    p.add_argument("--pair-min", type=float, default=-3.0)
    p.add_argument("--pair-max", type=float, default=3.0)
    p.add_argument("--pair-step", type=float, default=0.05)
    p.add_argument("--alpha-count", type=int, default=25,
                   help="shifts sampled across the pair range (default 25)")
    p.add_argument("--csv", metavar="FILE", default=None,
                   help="also write per-pair rows to FILE")
    p.set_defaults(handler=_cmd_semiorder)

    p = sub.add_parser("hasse", parents=[common, topo],
                       help="planar Hasse diagram of the strict order")
    p.add_argument("relation")
    p.set_defaults(handler=_cmd_hasse)

    return parser


def _emit(doc: dict, output: str) -> None:
    if output == "compact":
        text = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    else:
        text = json.dumps(doc, sort_keys=True, indent=2)
    print(text)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, code = args.handler(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    _emit(doc, args.output)
    return code


def run() -> None:
    raise SystemExit(main())
