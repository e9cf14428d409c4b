"""Gini index, sparsity index, Lorenz curves, and reference-total policies.

The central quantity is the rank-weighted sum ``W(b) = sum_i b_i * (n - i + 1/2)``
over the ascending vector ``b``. Twice ``W / (n * total)`` is the trapezoid
area under the piecewise-linear Lorenz curve, which gives

    gini_index(b)        = 1 - 2 W / (n T)     with T  the actual total mass,
    sparsity_index(b, R) = 1 - 2 W / (n T1)    with T1 a reference total >= T.

The sparsity index measures inequality against a configurable reference
total instead of the realized one; the two coincide when T1 = T, and in
general ``SI = (1 - T/T1) + (T/T1) * GI`` holds exactly. All public
functions return exact ``Fraction`` values; float conversion happens only
at serialization boundaries.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple, Union

import numpy as np

from .graph_core import Graph, OrderedDegreeVector, _as_rational, degree_vector

__all__ = [
    "LorenzCurve",
    "MetricsReport",
    "Rational",
    "ReferencePolicy",
    "ReferenceTotal",
    "ReferenceTotalError",
    "build_report",
    "edge_density",
    "gini_index",
    "gini_mad_oracle",
    "lorenz_curve",
    "rank_weighted_sum",
    "resolve_reference_total",
    "sparsity_index",
]

Rational = Union[int, Fraction]

# Vectors at least this long with moderate integer entries go through numpy.
_NUMPY_CUTOFF = 4096
_INT64_SAFE = 2**62


class ReferenceTotalError(ValueError):
    """Reference total is missing, non-positive, or below the actual total."""


class ReferencePolicy(Enum):
    """How the reference total T1 is chosen.

    ACTUAL                 the vector's own total (sparsity index == gini)
    POTENTIAL_SIMPLE       n * (n - 1), every possible edge of a simple graph
    POTENTIAL_WEIGHTED_MAX n * (n - 1) * max edge weight
    NODE_MAX               n * (largest degree mass)
    CUSTOM                 a caller-supplied value, validated against T
    """

    ACTUAL = "actual"
    POTENTIAL_SIMPLE = "simple-max"
    POTENTIAL_WEIGHTED_MAX = "weighted-max"
    NODE_MAX = "node-max"
    CUSTOM = "custom"


@dataclass(frozen=True)
class ReferenceTotal:
    """A resolved reference total: the policy plus its positive value."""

    policy: ReferencePolicy
    resolved_value: Rational

    def __post_init__(self) -> None:
        if self.resolved_value <= 0:
            raise ReferenceTotalError("reference total must be positive")

    @classmethod
    def custom(cls, value) -> "ReferenceTotal":
        return cls(ReferencePolicy.CUSTOM, _as_rational(value))


def resolve_reference_total(
    policy: ReferencePolicy,
    source: Union[Graph, OrderedDegreeVector],
    custom_value=None,
) -> ReferenceTotal:
    """Resolve a policy against a graph or degree vector.

    POTENTIAL_WEIGHTED_MAX needs a Graph (it reads edge weights); the other
    policies accept either source. CUSTOM requires ``custom_value`` and
    rejects values below the source's actual total.
    """
    vec = source if isinstance(source, OrderedDegreeVector) else degree_vector(source)
    graph = source if isinstance(source, Graph) else None
    n = vec.n

    if policy is ReferencePolicy.ACTUAL:
        value: Rational = vec.total_mass
        if value <= 0:
            raise ReferenceTotalError(
                "actual total is zero; pick a policy with a positive reference"
            )
    elif policy is ReferencePolicy.POTENTIAL_SIMPLE:
        value = n * (n - 1)
        if value <= 0:
            raise ReferenceTotalError("simple-max needs at least two nodes")
    elif policy is ReferencePolicy.POTENTIAL_WEIGHTED_MAX:
        if graph is None:
            raise ReferenceTotalError("weighted-max needs a graph with edge weights")
        top = graph.max_edge_weight
        if top is None:
            raise ReferenceTotalError("weighted-max needs at least one edge")
        value = n * (n - 1) * top
    elif policy is ReferencePolicy.NODE_MAX:
        top = vec.max_value
        if top <= 0:
            raise ReferenceTotalError("node-max is undefined for all-zero degrees")
        value = n * top
    elif policy is ReferencePolicy.CUSTOM:
        if custom_value is None:
            raise ReferenceTotalError("custom policy needs a value")
        value = _as_rational(custom_value)
        if value < vec.total_mass:
            raise ReferenceTotalError(
                f"custom reference {value} is below the actual total {vec.total_mass}"
            )
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown policy {policy!r}")
    return ReferenceTotal(policy=policy, resolved_value=value)


def rank_weighted_sum(b: OrderedDegreeVector) -> Fraction:
    """Exact ``sum_i b_i * (n - i + 1/2)`` over the ascending vector.

    This is ``n * total`` times the trapezoid area under the Lorenz curve
    drawn against the actual total; both indices are affine in it. Integer
    vectors of moderate magnitude run through an int64 dot product, other
    vectors through exact rational summation.
    """
    values = b.values
    n = len(values)
    if all(type(v) is int for v in values):
        top = values[-1]
        if n >= _NUMPY_CUTOFF and 2 * n * n * max(top, 1) < _INT64_SAFE:
            arr = np.fromiter(values, dtype=np.int64, count=n)
            coeff = np.arange(2 * n - 1, 0, -2, dtype=np.int64)
            return Fraction(int(arr @ coeff), 2)
        doubled = sum(v * (2 * (n - i) + 1) for i, v in enumerate(values, 1))
        return Fraction(doubled, 2)
    doubled = sum(v * (2 * (n - i) + 1) for i, v in enumerate(values, 1))
    return Fraction(doubled) / 2


def gini_index(b: OrderedDegreeVector) -> Fraction:
    """Gini index of the vector, exact.

    Zero iff all entries are equal; at most ``1 - 1/n``. Undefined (raises
    ValueError) when the total mass is zero.
    """
    total = b.total_mass
    if total <= 0:
        raise ValueError("gini index undefined for zero total mass")
    return 1 - 2 * rank_weighted_sum(b) / (b.n * total)


def sparsity_index(b: OrderedDegreeVector, reference: ReferenceTotal) -> Fraction:
    """Sparsity index of the vector against a reference total, exact.

    Equals the gini index when the reference is the actual total, and 1 for
    an all-zero vector under any positive reference. Raises
    ReferenceTotalError when the reference is below the actual total.
    """
    t1 = reference.resolved_value
    if t1 < b.total_mass:
        raise ReferenceTotalError(
            f"reference total {t1} is smaller than the actual total {b.total_mass}"
        )
    return 1 - 2 * rank_weighted_sum(b) / (b.n * t1)


def gini_mad_oracle(b: OrderedDegreeVector) -> Fraction:
    """Mean-absolute-difference route to the Gini index.

    ``sum_{i,j} |b_i - b_j| / (2 n^2 mu)`` with ``mu = T / n``, evaluated as
    the full pairwise double loop. Deliberately independent of the
    rank-weighted closed form so the two can cross-check each other.
    """
    total = b.total_mass
    if total <= 0:
        raise ValueError("gini index undefined for zero total mass")
    values = b.values
    n = b.n
    if all(type(v) is int for v in values) and values[-1] < 2**40:
        arr = np.fromiter(values, dtype=np.int64, count=n)
        pair_sum: Rational = int(np.abs(arr[:, None] - arr[None, :]).sum())
    else:
        pair_sum = sum(abs(x - y) for x in values for y in values)
    mu = Fraction(total) / n
    return Fraction(pair_sum) / (2 * n * n * mu)


@dataclass(frozen=True)
class LorenzCurve:
    """Piecewise-linear cumulative-share curve with ``n + 1`` points.

    Point i is ``(i/n, (b_1 + ... + b_i) / T1)``. The curve starts at the
    origin, is non-decreasing and convex, ends at ``T / T1``, and lies
    weakly below the diagonal whenever ``T1 >= T``.
    """

    points: Tuple[Tuple[Fraction, Fraction], ...]

    @property
    def final_share(self) -> Fraction:
        return self.points[-1][1]

    def to_csv(self) -> str:
        rows = ["fraction,share"]
        rows.extend(
            f"{float(x)!r},{float(y)!r}" for x, y in self.points
        )
        return "\n".join(rows) + "\n"


def lorenz_curve(b: OrderedDegreeVector, reference: ReferenceTotal) -> LorenzCurve:
    """Lorenz curve of the vector drawn against a reference total."""
    t1 = reference.resolved_value
    if t1 < b.total_mass:
        raise ReferenceTotalError(
            f"reference total {t1} is smaller than the actual total {b.total_mass}"
        )
    n = b.n
    scale = Fraction(t1)
    points = [(Fraction(0), Fraction(0))]
    running: Rational = 0
    for i, v in enumerate(b.values, 1):
        running += v
        points.append((Fraction(i, n), running / scale))
    return LorenzCurve(points=tuple(points))


def edge_density(g: Graph) -> Fraction:
    """Fraction of potential edges present: ``|E| / C(n, 2)``, weight-blind.

    Raises ValueError for graphs with fewer than two nodes.
    """
    n = g.node_count
    if n < 2:
        raise ValueError("edge density needs at least two nodes")
    return Fraction(2 * g.edge_count, n * (n - 1))


@dataclass(frozen=True)
class MetricsReport:
    """Bundle of the indices for one input, under one reference total.

    ``gini`` is None when the total mass is zero (the index is undefined
    there, while the sparsity index is 1). ``edge_density`` is None when no
    density is defined for the input; ``weight_blind_density`` flags that
    the density of a weighted graph ignores the weights.
    """

    n: int
    total_mass: Rational
    reference: ReferenceTotal
    gini: Optional[Fraction]
    sparsity: Fraction
    edge_density: Optional[Fraction] = None
    weight_blind_density: bool = False

    def to_json(self) -> str:
        payload = {
            "n": self.n,
            "T": _json_number(self.total_mass),
            "T1": _json_number(self.reference.resolved_value),
            "t1_policy": self.reference.policy.value,
            "gini": None if self.gini is None else _json_number(self.gini),
            "sparsity_index": _json_number(self.sparsity),
            "edge_density": None
            if self.edge_density is None
            else _json_number(self.edge_density),
        }
        if self.weight_blind_density:
            payload["edge_density_weight_blind"] = True
        return json.dumps(payload)

    def to_text(self, precision: Optional[int] = None) -> str:
        digits = text_precision() if precision is None else precision
        lines = [
            f"n: {self.n}",
            f"T: {_format_total(self.total_mass, digits)}",
            f"T1: {_format_total(self.reference.resolved_value, digits)}"
            f" ({self.reference.policy.value})",
            "gini: undefined"
            if self.gini is None
            else f"gini: {float(self.gini):.{digits}f}",
            f"sparsity_index: {float(self.sparsity):.{digits}f}",
        ]
        if self.edge_density is not None:
            suffix = " (weight-blind)" if self.weight_blind_density else ""
            lines.append(f"edge_density: {float(self.edge_density):.{digits}f}{suffix}")
        return "\n".join(lines) + "\n"


def build_report(
    source: Union[Graph, OrderedDegreeVector],
    policy: ReferencePolicy = ReferencePolicy.POTENTIAL_SIMPLE,
    custom_value=None,
) -> MetricsReport:
    """Assemble a MetricsReport for a graph or bare degree vector.

    Graph inputs report the weight-blind edge-count density; vector inputs
    report the degree-mass density ``T / (n (n - 1))``, which matches the
    edge-count density whenever the vector came from a simple graph.
    """
    if isinstance(source, Graph):
        graph: Optional[Graph] = source
        vec = degree_vector(source)
    else:
        graph = None
        vec = source
    reference = resolve_reference_total(policy, source, custom_value)
    sparsity = sparsity_index(vec, reference)
    gini = gini_index(vec) if vec.total_mass > 0 else None
    n = vec.n
    if graph is not None:
        density = edge_density(graph) if n >= 2 else None
        blind = graph.weighted and density is not None
    else:
        density = Fraction(vec.total_mass) / (n * (n - 1)) if n >= 2 else None
        blind = False
    return MetricsReport(
        n=n,
        total_mass=vec.total_mass,
        reference=reference,
        gini=gini,
        sparsity=sparsity,
        edge_density=density,
        weight_blind_density=blind,
    )


def text_precision() -> int:
    """Decimal places for text output, from NETSPARSITY_PRECISION (default 4)."""
    raw = os.environ.get("NETSPARSITY_PRECISION")
    if raw is None:
        return 4
    try:
        value = int(raw)
    except ValueError:
        return 4
    return max(value, 0)


def _json_number(value: Rational):
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return float(value)


def _format_total(value: Rational, digits: int) -> str:
    number = _json_number(value)
    if isinstance(number, int):
        return str(number)
    return f"{number:.{digits}f}"
