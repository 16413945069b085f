"""Command-line entry point: ``graphvar VERB [INPUT] [flags]``.

Exit status is 0 on success, 1 when the analysis itself fails (cap
exceeded, invariant undefined, ...) and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CapExceededError, GraphError, ParseError, UndefinedError
from .graph import Graph, parse_graph
from .partitions import DEFAULT_PARTITION_CAP
from .picture import irreducible_components
from .rigidity import DEFAULT_EDGE_CAP, coupled_spanning_trees, rigidity_circuits, rigidity_report
from .treepoly import DEFAULT_PRIME, ideal_generators, tree_polynomial
from .verify import verify_report

VERBS = ("rigidity", "circuits", "cpl", "treepoly", "ideal", "components", "verify")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphvar",
        description="Rigidity, tree polynomials and picture-space components of a graph.",
    )
    parser.add_argument("verb", choices=VERBS, help="analysis to run")
    parser.add_argument("input", nargs="?", help="edge-list file ('-' for stdin)")
    parser.add_argument("--edges", help="inline edge list, lines separated by ';' (e.g. '1 2; 2 3')")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--seed", type=int, default=0, help="random seed for verify (default 0)")
    parser.add_argument("--prime", type=int, default=DEFAULT_PRIME, help="field size for verify (default 2^61-1)")
    parser.add_argument("--samples", type=int, default=100, help="pictures sampled by verify (default 100)")
    parser.add_argument(
        "--max-partitions", type=int, default=DEFAULT_PARTITION_CAP,
        help=f"largest vertex count for partition enumeration (default {DEFAULT_PARTITION_CAP})",
    )
    parser.add_argument(
        "--max-edges", type=int, default=DEFAULT_EDGE_CAP,
        help=f"largest edge count for circuit enumeration (default {DEFAULT_EDGE_CAP})",
    )
    return parser


def read_graph(args) -> Graph:
    if args.edges is not None and args.input is not None:
        raise UsageError("give either an input file or --edges, not both")
    if args.edges is not None:
        text = args.edges.replace(";", "\n")
    elif args.input is None or args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from exc
    return parse_graph(text)


def _edges(g: Graph, mask: int) -> list[list[str]]:
    return [list(e) for e in g.edge_ids(mask)]


def _label(g: Graph, mask: int) -> str:
    return "{" + ", ".join(g.edge_label(k) for k in range(g.m) if mask >> k & 1) + "}"


def analyse(verb: str, g: Graph, args) -> tuple[dict, str]:
    """Run one verb; returns the JSON payload and a human-readable rendering."""
    if verb == "rigidity":
        rep = rigidity_report(g)
        circuits = rigidity_circuits(g, args.max_edges)
        data = {
            "independent": rep.independent,
            "rank": rep.rank,
            "rigid": rep.rigid,
            "circuits": [_edges(g, c) for c in circuits],
        }
        lines = [
            f"independent: {rep.independent}",
            f"rank: {rep.rank}",
            f"rigid: {rep.rigid}",
        ]
        if rep.violating_set is not None:
            lines.append(f"violating set: {_label(g, rep.violating_set)}")
        lines.append(f"circuits: {len(circuits)}")
        return data, "\n".join(lines)

    if verb == "circuits":
        circuits = rigidity_circuits(g, args.max_edges)
        return {"circuits": [_edges(g, c) for c in circuits]}, "\n".join(_label(g, c) for c in circuits)

    if verb == "cpl":
        trees = coupled_spanning_trees(g)
        text = "\n".join(f"{_label(g, t)} | {_label(g, g.full & ~t)}" for t in trees)
        return {"coupled_trees": [_edges(g, t) for t in trees]}, text

    if verb == "treepoly":
        tau = tree_polynomial(g)
        return tau.to_dict(g), f"{tau.pretty(g)}\n({len(tau)} terms)"

    if verb == "ideal":
        gens = ideal_generators(g, args.max_edges)
        data = {"generators": [{"circuit": _edges(g, x.circuit), **x.poly.to_dict(g)} for x in gens]}
        text = "\n".join(f"{_label(g, x.circuit)}: {x.poly.pretty(g)}" for x in gens)
        return data, text or "(no generators: the edge set is rigidity-independent)"

    if verb == "components":
        rep = irreducible_components(g, args.max_partitions)
        data = rep.to_dict()
        lines = []
        for c in rep.components:
            blocks = " ".join("{" + ",".join(b) + "}" for b in g.partition_ids(c.partition))
            tag = "  (picture variety)" if c.is_picture_variety else ""
            lines.append(f"dim {c.dimension}: {blocks}{tag}")
        lines.append(f"cm certificate: {rep.cm_certificate}")
        return data, "\n".join(lines)

    if verb == "verify":
        data = verify_report(g, args.samples, args.prime, args.seed, args.max_edges)
        r = data["ranks"]
        text = (
            f"vanishing: {data['vanishing']}\n"
            f"ranks: combinatorial={r['combinatorial']} slope={r['slope']} length={r['length']}\n"
            f"seed={data['seed']} prime={data['prime']}"
        )
        return data, text

    raise UsageError(f"unknown verb {verb!r}")


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        g = read_graph(args)
    except (UsageError, ParseError) as exc:
        print(f"graphvar: {exc}", file=err)
        return 2
    try:
        data, text = analyse(args.verb, g, args)
    except UsageError as exc:
        print(f"graphvar: {exc}", file=err)
        return 2
    except (CapExceededError, UndefinedError, GraphError, ValueError) as exc:
        print(f"graphvar: {exc}", file=err)
        return 1
    if args.json:
        print(json.dumps(data, separators=(",", ":")), file=out)
    else:
        print(text, file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
