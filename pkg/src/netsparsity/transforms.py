"""Degree-vector transforms with exact sparsity-index deltas.

Each transform pairs the vectors before and after an edit with their
sparsity indices under the stated reference totals. A closed-form
``predicted_delta`` is attached only where it is exact; for rank-sensitive
edits that means the edit must leave the ascending order undisturbed,
otherwise the field is None and only the recomputed indices stand.

Ranks i, j are 1-based positions in the ascending vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from operator import le
from typing import Optional

from .graph_core import OrderedDegreeVector, _as_rational, degree_vector_from_sequence
from .metrics import (
    ReferencePolicy,
    ReferenceTotal,
    ReferenceTotalError,
    rank_weighted_sum,
    resolve_reference_total,
    sparsity_index,
)

__all__ = [
    "TransformOutcome",
    "append_zeros",
    "clone_concat",
    "enrich_entry",
    "rising_tide",
    "robin_hood",
    "scale",
]


@dataclass(frozen=True)
class TransformOutcome:
    before: OrderedDegreeVector
    after: OrderedDegreeVector
    reference_before: ReferenceTotal
    reference_after: ReferenceTotal
    si_before: Fraction
    si_after: Fraction
    predicted_delta: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.predicted_delta is not None and self.predicted_delta != self.delta:
            raise ValueError("closed-form delta disagrees with the recomputed indices")

    @property
    def delta(self) -> Fraction:
        return self.si_after - self.si_before


def _ascending(values) -> bool:
    return all(map(le, values, islice(values, 1, None)))


def _outcome(before, after, ref_before, ref_after, predicted) -> TransformOutcome:
    return TransformOutcome(
        before=before,
        after=after,
        reference_before=ref_before,
        reference_after=ref_after,
        si_before=sparsity_index(before, ref_before),
        si_after=sparsity_index(after, ref_after),
        predicted_delta=predicted,
    )


def robin_hood(
    b: OrderedDegreeVector, i: int, j: int, alpha, reference: ReferenceTotal
) -> TransformOutcome:
    """Move alpha from the entry at rank j down to the entry at rank i.

    Requires ``0 < alpha < (b_j - b_i) / 2`` so the pair stays ordered.
    Always strictly decreases the index; the delta is
    ``-2 alpha (j - i) / (n T1)`` whenever no rank shifts.
    """
    n = b.n
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= {n}, got i={i}, j={j}")
    alpha = _as_rational(alpha)
    gap = b.values[j - 1] - b.values[i - 1]
    if not 0 < 2 * alpha < gap:
        raise ValueError("alpha must satisfy 0 < alpha < (b_j - b_i) / 2")
    mutated = list(b.values)
    mutated[i - 1] += alpha
    mutated[j - 1] -= alpha
    predicted = None
    if _ascending(mutated):
        predicted = -Fraction(2 * (j - i)) * alpha / (n * reference.resolved_value)
    after = degree_vector_from_sequence(mutated)
    return _outcome(b, after, reference, reference, predicted)


def scale(
    b: OrderedDegreeVector,
    alpha,
    policy: ReferencePolicy = ReferencePolicy.POTENTIAL_SIMPLE,
    custom_value=None,
    max_edge_weight=None,
) -> TransformOutcome:
    """Multiply every entry by alpha, the reference total following its policy.

    Under a fixed reference (CUSTOM, POTENTIAL_SIMPLE) the index moves by
    ``2 (1 - alpha) W / (n T1)``; under NODE_MAX, POTENTIAL_WEIGHTED_MAX,
    and ACTUAL the reference rescales with the vector and the index is
    unchanged. POTENTIAL_WEIGHTED_MAX needs ``max_edge_weight``, the
    largest edge weight of the underlying graph.
    """
    alpha = _as_rational(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    after = degree_vector_from_sequence([v * alpha for v in b.values])
    n = b.n
    if policy in (ReferencePolicy.CUSTOM, ReferencePolicy.POTENTIAL_SIMPLE):
        ref_before = resolve_reference_total(policy, b, custom_value)
        ref_after = ref_before
        predicted = 2 * (1 - alpha) * rank_weighted_sum(b) / (n * ref_before.resolved_value)
    elif policy is ReferencePolicy.POTENTIAL_WEIGHTED_MAX:
        if max_edge_weight is None:
            raise ReferenceTotalError("weighted-max needs max_edge_weight")
        top = _as_rational(max_edge_weight)
        if top <= 0:
            raise ReferenceTotalError("max_edge_weight must be positive")
        ref_before = ReferenceTotal(policy, n * (n - 1) * top)
        ref_after = ReferenceTotal(policy, n * (n - 1) * (top * alpha))
        predicted = Fraction(0)
    else:  # ACTUAL, NODE_MAX: the reference rescales with the vector
        ref_before = resolve_reference_total(policy, b)
        ref_after = resolve_reference_total(policy, after)
        predicted = Fraction(0)
    return _outcome(b, after, ref_before, ref_after, predicted)


def rising_tide(
    b: OrderedDegreeVector, alpha, reference: ReferenceTotal
) -> TransformOutcome:
    """Add alpha to every entry under a fixed reference total.

    Ranks never move, so the delta is always exactly ``-alpha n / T1``.
    The reference must cover the lifted total ``T + n alpha``.
    """
    alpha = _as_rational(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    t1 = reference.resolved_value
    if t1 < b.total_mass + b.n * alpha:
        raise ReferenceTotalError(
            f"reference total {t1} cannot cover the lifted total "
            f"{b.total_mass + b.n * alpha}"
        )
    after = degree_vector_from_sequence([v + alpha for v in b.values])
    predicted = Fraction(-b.n * alpha, t1)
    return _outcome(b, after, reference, reference, predicted)


def clone_concat(
    b: OrderedDegreeVector,
    copies: int,
    policy: ReferencePolicy = ReferencePolicy.POTENTIAL_SIMPLE,
    custom_value=None,
) -> TransformOutcome:
    """Concatenate the vector with itself ``copies`` times.

    The reference is re-resolved for the enlarged vector, so under
    POTENTIAL_SIMPLE the index generally changes. Under ACTUAL the index
    is the gini index, which is replication-invariant, so the predicted
    delta is exactly zero there.
    """
    if copies < 2:
        raise ValueError("copies must be at least 2")
    after = degree_vector_from_sequence(b.values * copies)
    ref_before = resolve_reference_total(policy, b, custom_value)
    ref_after = resolve_reference_total(policy, after, custom_value)
    predicted = Fraction(0) if policy is ReferencePolicy.ACTUAL else None
    return _outcome(b, after, ref_before, ref_after, predicted)


def enrich_entry(
    b: OrderedDegreeVector, i: int, alpha, reference: ReferenceTotal
) -> TransformOutcome:
    """Add alpha to the entry at rank i under a fixed reference total.

    When the enriched entry keeps its rank the delta is exactly
    ``-2 alpha (n - i + 1/2) / (n T1)``, i.e. the index drops; growing one
    entry under a fixed reference moves mass toward the diagonal of the
    Lorenz picture. (The gini index, by contrast, rises when the top entry
    grows; recompute it under the ACTUAL policy to observe that.)
    """
    n = b.n
    if not 1 <= i <= n:
        raise ValueError(f"rank must be in 1..{n}, got {i}")
    alpha = _as_rational(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    mutated = list(b.values)
    mutated[i - 1] += alpha
    predicted = None
    if i == n or mutated[i - 1] <= b.values[i]:
        t1 = reference.resolved_value
        predicted = -2 * alpha * Fraction(2 * (n - i) + 1, 2) / (n * t1)
    after = degree_vector_from_sequence(mutated)
    return _outcome(b, after, reference, reference, predicted)


def append_zeros(
    b: OrderedDegreeVector,
    m: int,
    policy: ReferencePolicy = ReferencePolicy.POTENTIAL_SIMPLE,
    custom_value=None,
) -> TransformOutcome:
    """Grow the vector with m zero entries (isolated nodes).

    The zeros join at the bottom of the ascending order, which leaves every
    existing rank coefficient unchanged; the index strictly increases both
    under a fixed CUSTOM reference and under POTENTIAL_SIMPLE (where the
    reference grows with n), with exact closed forms for both.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    after = degree_vector_from_sequence((0,) * m + b.values)
    ref_before = resolve_reference_total(policy, b, custom_value)
    ref_after = resolve_reference_total(policy, after, custom_value)
    n = b.n
    w = rank_weighted_sum(b)
    if policy is ReferencePolicy.CUSTOM:
        predicted = 2 * w * Fraction(m, n * (n + m)) / ref_before.resolved_value
    elif policy is ReferencePolicy.POTENTIAL_SIMPLE:
        predicted = 2 * w * (
            Fraction(1, n * n * (n - 1))
            - Fraction(1, (n + m) * (n + m) * (n + m - 1))
        )
    else:
        predicted = None
    return _outcome(b, after, ref_before, ref_after, predicted)
