"""Graph ingestion, degree extraction, and edge mutation.

Graphs are undirected and simple: no self-loops and at most one stored edge
per node pair. Every edge carries a positive rational weight (1 everywhere
for unweighted graphs). Degrees follow the multigraph convention, so edge
weights add into the degrees of both endpoints and the total degree mass T
equals twice the sum of edge weights.

All values are immutable after construction and every operation is a pure
function, so everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from operator import le
from types import MappingProxyType
from typing import IO, Iterable, Mapping, Optional, Tuple, Union

__all__ = [
    "Graph",
    "InputFormatError",
    "OrderedDegreeVector",
    "add_edge",
    "degree_vector",
    "degree_vector_from_sequence",
    "parse_edge_list",
]

Mass = Union[int, Fraction]
EdgeKey = Tuple[int, int]


class InputFormatError(ValueError):
    """A text input does not follow its declared file format."""


def _as_rational(value) -> Mass:
    """Convert to an exact rational, collapsing integral values to int."""
    if isinstance(value, int):
        return value
    frac = Fraction(value)  # floats convert to their exact binary value
    if frac.denominator == 1:
        return int(frac)
    return frac


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph with positive edge weights.

    ``edges`` maps normalized ``(u, v)`` pairs with ``u < v`` to weights.
    Unweighted graphs store weight 1 on every edge; ``weighted`` records
    which mode the graph was built in so downstream reports can flag
    weight-blind quantities.
    """

    node_count: int
    edges: Mapping[EdgeKey, Mass]
    weighted: bool = False

    def __post_init__(self) -> None:
        if self.node_count < 1:
            raise ValueError("graph needs at least one node")
        normalized: dict[EdgeKey, Mass] = {}
        for (u, v), raw in dict(self.edges).items():
            if u == v:
                raise ValueError(f"self-loop on node {u}")
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise ValueError(
                    f"edge ({u}, {v}) outside node range 0..{self.node_count - 1}"
                )
            key = (u, v) if u < v else (v, u)
            if key in normalized:
                raise ValueError(f"duplicate edge {key}")
            weight = _as_rational(raw)
            if weight <= 0:
                raise ValueError(f"edge {key} must have positive weight, got {raw}")
            normalized[key] = weight
        object.__setattr__(self, "edges", MappingProxyType(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def total_weight(self) -> Mass:
        return sum(self.edges.values())

    @property
    def max_edge_weight(self) -> Optional[Mass]:
        """Largest edge weight, or None for an edgeless graph."""
        return max(self.edges.values()) if self.edges else None

    @property
    def is_complete(self) -> bool:
        return 2 * self.edge_count == self.node_count * (self.node_count - 1)

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self.edges

    def absent_pairs(self) -> list[EdgeKey]:
        """All node pairs not joined by an edge, in lexicographic order."""
        return [
            (u, v)
            for u in range(self.node_count)
            for v in range(u + 1, self.node_count)
            if (u, v) not in self.edges
        ]

    def to_edge_list(self) -> str:
        """Render as tab-separated text, one edge per line, sorted.

        Weighted graphs get a third column; integral weights are written
        without a fractional part.
        """
        lines = [f"# nodes: {self.node_count}"]
        for (u, v), w in sorted(self.edges.items()):
            if self.weighted:
                lines.append(f"{u}\t{v}\t{_format_mass(w)}")
            else:
                lines.append(f"{u}\t{v}")
        return "\n".join(lines) + "\n"


def _format_mass(value: Mass) -> str:
    return str(value)


@dataclass(frozen=True)
class OrderedDegreeVector:
    """Non-negative degree masses in ascending order with their exact total.

    For a simple unweighted graph every entry is an integer in [0, n - 1];
    weighted graphs may produce fractional masses.
    """

    values: Tuple[Mass, ...]
    total_mass: Mass

    def __post_init__(self) -> None:
        vals = self.values
        if not vals:
            raise ValueError("degree vector must be non-empty")
        if vals[0] < 0:
            raise ValueError("degree masses must be non-negative")
        if not all(map(le, vals, islice(vals, 1, None))):
            raise ValueError("degree masses must be in ascending order")
        if sum(vals) != self.total_mass:
            raise ValueError("total_mass does not match the sum of values")

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def max_value(self) -> Mass:
        return self.values[-1]


def parse_edge_list(
    text: Union[str, IO[str], Iterable[str]],
    expect_weighted: bool = False,
    declared_nodes: Optional[int] = None,
) -> Graph:
    """Parse tab- or whitespace-separated edge lines into a Graph.

    Lines are ``u<TAB>v`` (unweighted) or ``u<TAB>v<TAB>w`` (weighted); a
    missing weight column in weighted mode defaults to 1. ``#`` starts a
    comment line and blank lines are skipped. Node labels are arbitrary
    whitespace-free tokens, mapped to dense indices in first-appearance
    order. Weights accept any rational token (``3``, ``2.5``, ``1/3``).

    Duplicate edges are an error in unweighted mode and accumulate their
    weights in weighted mode. Isolated nodes can only be expressed through
    ``declared_nodes``, which must be at least the number of distinct
    labels.

    Raises InputFormatError on malformed lines, self-loops, non-positive
    or non-numeric weights, an unexpected weight column, or a
    ``declared_nodes`` smaller than the number of labels seen.
    """
    if isinstance(text, str):
        lines: Iterable[str] = text.splitlines()
    else:
        lines = text

    labels: dict[str, int] = {}
    accumulated: dict[EdgeKey, Fraction] = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if expect_weighted:
            if len(parts) == 2:
                u_label, v_label, w_token = parts[0], parts[1], "1"
            elif len(parts) == 3:
                u_label, v_label, w_token = parts
            else:
                raise InputFormatError(
                    f"line {lineno}: expected 'u v [w]', got {len(parts)} fields"
                )
        else:
            if len(parts) == 3:
                raise InputFormatError(
                    f"line {lineno}: weight column present in unweighted input"
                )
            if len(parts) != 2:
                raise InputFormatError(
                    f"line {lineno}: expected 'u v', got {len(parts)} fields"
                )
            u_label, v_label = parts
            w_token = "1"
        if u_label == v_label:
            raise InputFormatError(f"line {lineno}: self-loop on '{u_label}'")
        try:
            weight = Fraction(w_token)
        except (ValueError, ZeroDivisionError):
            raise InputFormatError(
                f"line {lineno}: invalid weight '{w_token}'"
            ) from None
        if weight <= 0:
            raise InputFormatError(
                f"line {lineno}: weight must be positive, got {w_token}"
            )
        u = labels.setdefault(u_label, len(labels))
        v = labels.setdefault(v_label, len(labels))
        key = (u, v) if u < v else (v, u)
        if key in accumulated:
            if not expect_weighted:
                raise InputFormatError(
                    f"line {lineno}: duplicate edge {u_label}-{v_label}"
                )
            accumulated[key] += weight
        else:
            accumulated[key] = weight

    node_count = len(labels)
    if declared_nodes is not None:
        if declared_nodes < 1:
            raise InputFormatError("declared_nodes must be positive")
        if declared_nodes < node_count:
            raise InputFormatError(
                f"declared_nodes={declared_nodes} but input names {node_count} nodes"
            )
        node_count = declared_nodes
    if node_count == 0:
        raise InputFormatError("empty edge list; pass declared_nodes for an edgeless graph")

    edges = {key: _as_rational(w) for key, w in accumulated.items()}
    return Graph(node_count=node_count, edges=edges, weighted=expect_weighted)


def degree_vector(g: Graph) -> OrderedDegreeVector:
    """Ascending degree masses of ``g``; weights add into both endpoints."""
    degrees: list[Mass] = [0] * g.node_count
    for (u, v), w in g.edges.items():
        degrees[u] += w
        degrees[v] += w
    return degree_vector_from_sequence(degrees)


def degree_vector_from_sequence(values: Iterable) -> OrderedDegreeVector:
    """Sort a bare sequence of non-negative rationals into a degree vector."""
    vals = [_as_rational(v) for v in values]
    if not vals:
        raise ValueError("empty sequence")
    for v in vals:
        if v < 0:
            raise ValueError(f"negative entry {v}")
    vals.sort()
    return OrderedDegreeVector(values=tuple(vals), total_mass=sum(vals))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return ``g`` plus one weight-1 edge; the original graph is unchanged.

    Raises ValueError for self-loops, out-of-range endpoints, or a pair
    already joined.
    """
    if u == v:
        raise ValueError(f"self-loop on node {u}")
    if not (0 <= u < g.node_count and 0 <= v < g.node_count):
        raise ValueError(f"endpoint outside node range 0..{g.node_count - 1}")
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) already present")
    edges = dict(g.edges)
    edges[(u, v) if u < v else (v, u)] = 1
    return Graph(node_count=g.node_count, edges=edges, weighted=g.weighted)
