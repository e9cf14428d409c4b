"""Command-line front end.

Subcommands: metrics, lorenz, generate, check-seq, sweep, axiom. Exit
codes: 0 success, 1 negative verdict, 2 parse or usage error, 3 reference
total smaller than an actual total, 4 realization failure.

All commands are deterministic for fixed inputs, flags, and seed. The
``edges`` sweep draws from Python's seeded Mersenne Twister
(``random.Random``), whose output is stable across platforms. The
NETSPARSITY_PRECISION environment variable sets decimal places for text
output (default 4); JSON and CSV always carry full float precision.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Tuple

from .graph_core import (
    Graph,
    InputFormatError,
    OrderedDegreeVector,
    add_edge,
    degree_vector,
    degree_vector_from_sequence,
    parse_edge_list,
)
from .metrics import (
    Rational,
    ReferencePolicy,
    ReferenceTotalError,
    build_report,
    gini_index,
    lorenz_curve,
    resolve_reference_total,
    sparsity_index,
    text_precision,
)
from .sequences import (
    PowerLawSpec,
    RealizationError,
    build_frequency_table,
    frequency_to_sequence,
    havel_hakimi_check,
    havel_hakimi_realize,
    parse_degree_sequence,
    parse_frequency_table,
)
from . import transforms

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_REFERENCE = 3
EXIT_REALIZE = 4

_T1_HELP = "reference total: actual | simple-max | weighted-max | node-max | custom:<rational>"


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputFormatError as exc:
        return _fail(exc, EXIT_PARSE)
    except ReferenceTotalError as exc:
        return _fail(exc, EXIT_REFERENCE)
    except RealizationError as exc:
        return _fail(exc, EXIT_REALIZE)
    except ValueError as exc:
        return _fail(exc, EXIT_PARSE)


def _fail(exc: Exception, code: int) -> int:
    print(f"error: {exc}", file=sys.stderr)
    return code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netsparsity",
        description="Degree-based sparsity analytics for network graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    source = argparse.ArgumentParser(add_help=False)
    _add_source_args(source)

    p_metrics = sub.add_parser(
        "metrics", parents=[source], help="gini and sparsity indices for one input"
    )
    p_metrics.add_argument("--t1", default=None, help=_T1_HELP)
    p_metrics.add_argument(
        "--output", choices=["json", "text"], default="text", help="output style"
    )
    p_metrics.set_defaults(func=_cmd_metrics)

    p_lorenz = sub.add_parser(
        "lorenz", parents=[source], help="write the Lorenz curve as CSV"
    )
    p_lorenz.add_argument("--t1", default=None, help=_T1_HELP)
    p_lorenz.add_argument("--out", required=True, help="output CSV path ('-' for stdout)")
    p_lorenz.set_defaults(func=_cmd_lorenz)

    p_gen = sub.add_parser(
        "generate", help="build a power-law degree frequency table"
    )
    p_gen.add_argument("--beta", type=float, required=True, help="power-law exponent (> 1)")
    p_gen.add_argument("--nodes", type=int, default=200, help="node count (default 200)")
    p_gen.add_argument("--max-degree", type=int, default=11, help="maximal degree (default 11)")
    p_gen.add_argument(
        "--mode",
        choices=["largest-remainder", "fixture", "paper-fixture"],
        default="largest-remainder",
        help="apportionment rule, or 'fixture' for the embedded reference tables",
    )
    p_gen.add_argument("--out", required=True, help="frequency CSV path ('-' for stdout)")
    p_gen.add_argument(
        "--realize",
        action="store_true",
        help="also realize the sequence and write an edge list",
    )
    p_gen.add_argument(
        "--realize-out",
        default=None,
        help="edge list path (default: <out>.edges; implies --realize)",
    )
    p_gen.set_defaults(func=_cmd_generate)

    p_check = sub.add_parser(
        "check-seq", help="test a degree-sequence file for realizability"
    )
    p_check.add_argument("input", help="degree sequence file, one integer per line")
    p_check.set_defaults(func=_cmd_check_seq)

    p_sweep = sub.add_parser(
        "sweep", help="emit trend data over beta values or added edges"
    )
    p_sweep.add_argument("kind", choices=["beta", "edges"])
    p_sweep.add_argument("--out", required=True, help="output CSV path ('-' for stdout)")
    p_sweep.add_argument("--betas", default=None, help="comma-separated exponents (beta kind)")
    p_sweep.add_argument(
        "--nodes",
        type=int,
        default=None,
        help="node count for beta kind (default 200) or declared nodes for edges kind",
    )
    p_sweep.add_argument(
        "--max-degree", type=int, default=11, help="maximal degree for beta kind"
    )
    p_sweep.add_argument(
        "--mode",
        choices=["largest-remainder", "fixture", "paper-fixture"],
        default="fixture",
        help="table construction for beta kind (default: fixture)",
    )
    p_sweep.add_argument("--t1", default=None, help=_T1_HELP + " (beta kind)")
    p_sweep.add_argument("--input", default=None, help="edge list file (edges kind)")
    p_sweep.add_argument("--count", type=int, default=1, help="edges to add (edges kind)")
    p_sweep.add_argument("--seed", type=int, default=0, help="RNG seed (edges kind)")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_axiom = sub.add_parser(
        "axiom", help="apply a degree-vector transform and report the move"
    )
    p_axiom.add_argument(
        "transform",
        choices=["robin-hood", "scale", "rising-tide", "clone", "enrich", "append-zeros"],
    )
    _add_source_args(p_axiom)
    p_axiom.add_argument("--t1", default=None, help=_T1_HELP)
    p_axiom.add_argument("--i", type=int, default=None, help="1-based rank i")
    p_axiom.add_argument("--j", type=int, default=None, help="1-based rank j")
    p_axiom.add_argument("--alpha", type=Fraction, default=None, help="transform magnitude")
    p_axiom.add_argument("--copies", type=int, default=2, help="copies for clone")
    p_axiom.add_argument("--zeros", type=int, default=1, help="zero entries to append")
    p_axiom.add_argument(
        "--max-weight", type=Fraction, default=None, help="max edge weight for weighted-max scale"
    )
    p_axiom.set_defaults(func=_cmd_axiom)

    return parser


def _add_source_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", help="input file path")
    parser.add_argument(
        "--format",
        choices=["edgelist", "sequence", "freqtable"],
        default="edgelist",
        help="input format (default: edgelist)",
    )
    parser.add_argument(
        "--weighted",
        action="store_true",
        help="edge list carries a weight column (edgelist format only)",
    )
    parser.add_argument(
        "--nodes",
        type=int,
        default=None,
        help="declared node count, for isolated nodes (edgelist format only)",
    )


def _read_input(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None


def _write_output(path: str, content: str) -> None:
    if path == "-":
        sys.stdout.write(content)
    else:
        Path(path).write_text(content, encoding="utf-8")


def _load_vector(args) -> Tuple[OrderedDegreeVector, Optional[Graph]]:
    text = _read_input(args.input)
    if args.format == "edgelist":
        graph = parse_edge_list(
            text, expect_weighted=args.weighted, declared_nodes=args.nodes
        )
        return degree_vector(graph), graph
    if args.weighted:
        raise InputFormatError("--weighted only applies to edgelist input")
    if args.nodes is not None:
        raise InputFormatError("--nodes only applies to edgelist input")
    if args.format == "sequence":
        return degree_vector_from_sequence(parse_degree_sequence(text)), None
    return frequency_to_sequence(parse_frequency_table(text)), None


def _parse_reference(flag: Optional[str]) -> Tuple[Optional[ReferencePolicy], Optional[Fraction]]:
    if flag is None:
        return None, None
    if flag.startswith("custom"):
        _, sep, raw = flag.partition(":")
        if not sep or not raw:
            raise InputFormatError("custom reference needs a value: custom:<rational>")
        try:
            return ReferencePolicy.CUSTOM, Fraction(raw)
        except (ValueError, ZeroDivisionError):
            raise InputFormatError(f"invalid custom reference '{raw}'") from None
    try:
        return ReferencePolicy(flag), None
    except ValueError:
        raise InputFormatError(f"unknown reference policy '{flag}' ({_T1_HELP})") from None


def _default_policy(args) -> ReferencePolicy:
    weighted = getattr(args, "weighted", False)
    return ReferencePolicy.NODE_MAX if weighted else ReferencePolicy.POTENTIAL_SIMPLE


def _cmd_metrics(args) -> int:
    vec, graph = _load_vector(args)
    policy, custom = _parse_reference(args.t1)
    if policy is None:
        policy = _default_policy(args)
    source = graph if graph is not None else vec
    report = build_report(source, policy, custom)
    if args.output == "json":
        print(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK


def _cmd_lorenz(args) -> int:
    vec, graph = _load_vector(args)
    policy, custom = _parse_reference(args.t1)
    if policy is None:
        policy = _default_policy(args)
    source = graph if graph is not None else vec
    reference = resolve_reference_total(policy, source, custom)
    _write_output(args.out, lorenz_curve(vec, reference).to_csv())
    return EXIT_OK


def _cmd_generate(args) -> int:
    spec = PowerLawSpec(beta=args.beta, n=args.nodes, k=args.max_degree)
    table = build_frequency_table(spec, args.mode)
    sequence = [int(v) for v in frequency_to_sequence(table).values]
    if not havel_hakimi_check(sequence):
        frequencies = tuple(freq for _, freq in table.rows)
        print(
            f"error: degree sequence for beta={args.beta}, n={args.nodes}, "
            f"k={args.max_degree} is not realizable (frequencies {frequencies})",
            file=sys.stderr,
        )
        return EXIT_REALIZE
    _write_output(args.out, table.to_csv())
    if args.realize or args.realize_out is not None:
        out = args.realize_out
        if out is None:
            if args.out == "-":
                raise InputFormatError("--realize with stdout table needs --realize-out")
            out = args.out + ".edges"
        _write_output(out, havel_hakimi_realize(sequence).to_edge_list())
    return EXIT_OK


def _cmd_check_seq(args) -> int:
    sequence = parse_degree_sequence(_read_input(args.input))
    ok = havel_hakimi_check(sequence)
    print("REALIZABLE" if ok else "NOT REALIZABLE")
    return EXIT_OK if ok else EXIT_NEGATIVE


@dataclass(frozen=True)
class SweepRecord:
    """One trend-data row: the step key is a beta value or an edge count."""

    step: str
    total: Rational
    reference: Rational
    gini: Optional[Fraction]
    sparsity: Fraction
    density: Fraction

    def to_csv_row(self) -> str:
        return ",".join(
            [
                self.step,
                _csv_number(self.total),
                _csv_number(self.reference),
                "" if self.gini is None else repr(float(self.gini)),
                repr(float(self.sparsity)),
                repr(float(self.density)),
            ]
        )


def _cmd_sweep(args) -> int:
    if args.kind == "beta":
        return _sweep_beta(args)
    return _sweep_edges(args)


def _sweep_beta(args) -> int:
    if not args.betas:
        raise InputFormatError("beta sweep needs --betas")
    try:
        betas = sorted({float(tok) for tok in args.betas.split(",") if tok.strip()})
    except ValueError:
        raise InputFormatError(f"invalid --betas '{args.betas}'") from None
    if not betas:
        raise InputFormatError("beta sweep needs at least one exponent")
    policy, custom = _parse_reference(args.t1)
    if policy is None:
        policy = ReferencePolicy.POTENTIAL_SIMPLE
    if policy not in (ReferencePolicy.CUSTOM, ReferencePolicy.POTENTIAL_SIMPLE):
        raise InputFormatError(
            "beta sweep needs a reference that is common across distributions "
            "(custom:<value> or simple-max)"
        )
    nodes = args.nodes if args.nodes is not None else 200
    rows = []
    for beta in betas:
        spec = PowerLawSpec(beta=beta, n=nodes, k=args.max_degree)
        vec = frequency_to_sequence(build_frequency_table(spec, args.mode))
        reference = resolve_reference_total(policy, vec, custom)
        rows.append(
            SweepRecord(
                step=repr(float(beta)),
                total=vec.total_mass,
                reference=reference.resolved_value,
                gini=gini_index(vec) if vec.total_mass > 0 else None,
                sparsity=sparsity_index(vec, reference),
                density=Fraction(vec.total_mass) / (vec.n * (vec.n - 1)),
            )
        )
    _write_output(args.out, _sweep_csv(rows))
    return EXIT_OK


def _sweep_edges(args) -> int:
    if not args.input:
        raise InputFormatError("edges sweep needs --input")
    graph = parse_edge_list(
        _read_input(args.input), expect_weighted=False, declared_nodes=args.nodes
    )
    if graph.node_count < 2:
        raise InputFormatError("edges sweep needs at least two nodes")
    if args.count < 1:
        raise InputFormatError("--count must be at least 1")
    rng = random.Random(args.seed)
    rows = [_edge_sweep_row(graph)]
    for _ in range(args.count):
        absent = graph.absent_pairs()
        if not absent:
            raise RealizationError("graph is complete; no edge can be added")
        u, v = absent[rng.randrange(len(absent))]
        graph = add_edge(graph, u, v)
        rows.append(_edge_sweep_row(graph))
    _write_output(args.out, _sweep_csv(rows))
    return EXIT_OK


def _edge_sweep_row(graph: Graph) -> SweepRecord:
    vec = degree_vector(graph)
    reference = resolve_reference_total(ReferencePolicy.POTENTIAL_SIMPLE, graph)
    return SweepRecord(
        step=str(graph.edge_count),
        total=vec.total_mass,
        reference=reference.resolved_value,
        gini=gini_index(vec) if vec.total_mass > 0 else None,
        sparsity=sparsity_index(vec, reference),
        density=Fraction(2 * graph.edge_count, graph.node_count * (graph.node_count - 1)),
    )


def _csv_number(value) -> str:
    if isinstance(value, Fraction) and value.denominator != 1:
        return repr(float(value))
    return str(int(value))


def _sweep_csv(records) -> str:
    header = "step,T,T1,gini,sparsity_index,edge_density"
    return "\n".join([header, *(record.to_csv_row() for record in records)]) + "\n"


def _cmd_axiom(args) -> int:
    vec, graph = _load_vector(args)
    policy, custom = _parse_reference(args.t1)
    if policy is None:
        policy = _default_policy(args)
    source = graph if graph is not None else vec

    name = args.transform
    if name in ("robin-hood", "rising-tide", "enrich"):
        reference = resolve_reference_total(policy, source, custom)
        if name == "robin-hood":
            outcome = transforms.robin_hood(
                vec, _need(args.i, "--i"), _need(args.j, "--j"),
                _need(args.alpha, "--alpha"), reference,
            )
        elif name == "rising-tide":
            outcome = transforms.rising_tide(vec, _need(args.alpha, "--alpha"), reference)
        else:
            outcome = transforms.enrich_entry(
                vec, _need(args.i, "--i"), _need(args.alpha, "--alpha"), reference
            )
    elif name == "scale":
        max_weight = args.max_weight
        if max_weight is None and graph is not None:
            max_weight = graph.max_edge_weight
        outcome = transforms.scale(
            vec, _need(args.alpha, "--alpha"), policy, custom, max_weight
        )
    elif name == "clone":
        outcome = transforms.clone_concat(vec, args.copies, policy, custom)
    else:
        outcome = transforms.append_zeros(vec, args.zeros, policy, custom)

    digits = text_precision()
    lines = [
        f"transform: {name}",
        f"n: {outcome.before.n} -> {outcome.after.n}",
        f"T: {outcome.before.total_mass} -> {outcome.after.total_mass}",
        f"T1: {outcome.reference_before.resolved_value} "
        f"({outcome.reference_before.policy.value}) -> "
        f"{outcome.reference_after.resolved_value} "
        f"({outcome.reference_after.policy.value})",
        f"sparsity_index: {float(outcome.si_before):.{digits}f} -> "
        f"{float(outcome.si_after):.{digits}f}",
        f"delta: {float(outcome.delta):+.{digits}f}",
        "predicted_delta: n/a (no exact closed form for this move)"
        if outcome.predicted_delta is None
        else f"predicted_delta: {float(outcome.predicted_delta):+.{digits}f}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _need(value, flag: str):
    if value is None:
        raise InputFormatError(f"this transform needs {flag}")
    return value


if __name__ == "__main__":
    sys.exit(main())
