"""Power-law degree-frequency tables and Havel-Hakimi realization.

A power-law table assigns ``p(i) = C * i**-beta`` to degrees 1..k with C
normalizing the probabilities to 1, then apportions n nodes across the
degrees. Two apportionment modes exist: ``largest-remainder`` (the
reproducible rule implemented here) and ``fixture`` (embedded canonical
tables for four published (beta, n, k) combinations, whose original
rounding does not follow a single closed rule).

The Havel-Hakimi routines decide whether an integer sequence is the degree
sequence of some simple graph and, when it is, build one deterministically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Iterable, List, Optional, Sequence, Tuple, Union

from .graph_core import (
    Graph,
    InputFormatError,
    OrderedDegreeVector,
    degree_vector_from_sequence,
)

__all__ = [
    "DegreeFrequencyTable",
    "FIXTURE_KEYS",
    "PowerLawSpec",
    "RealizationError",
    "build_frequency_table",
    "frequency_to_sequence",
    "havel_hakimi_check",
    "havel_hakimi_realize",
    "normalization_constant",
    "parse_degree_sequence",
    "parse_frequency_table",
]


class RealizationError(ValueError):
    """A degree sequence cannot be realized as a simple graph."""


@dataclass(frozen=True)
class PowerLawSpec:
    """Parameters of a truncated power-law degree distribution.

    beta is the decay exponent (> 1), n the node count, k the maximal
    degree; n must be at least k so the top degree can exist.
    """

    beta: float
    n: int
    k: int

    def __post_init__(self) -> None:
        if not self.beta > 1:
            raise ValueError(f"beta must exceed 1, got {self.beta}")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.n < self.k:
            raise ValueError(f"n={self.n} must be at least k={self.k}")


@dataclass(frozen=True)
class DegreeFrequencyTable:
    """(degree, frequency) rows for contiguous degrees 1..k.

    ``constant`` and ``spec`` are set for generated tables and None for
    tables loaded from files (the exponent cannot be recovered from
    frequencies alone).
    """

    rows: Tuple[Tuple[int, int], ...]
    constant: Optional[float] = None
    spec: Optional[PowerLawSpec] = None

    def __post_init__(self) -> None:
        if not self.rows:
            raise ValueError("frequency table must have at least one row")
        for expected, (degree, freq) in enumerate(self.rows, 1):
            if degree != expected:
                raise ValueError(
                    f"degrees must run 1..k without gaps; row {expected} has degree {degree}"
                )
            if freq < 0 or not isinstance(freq, int):
                raise ValueError(f"frequency for degree {degree} must be a non-negative integer")
        if self.spec is not None and self.node_count != self.spec.n:
            raise ValueError(
                f"frequencies sum to {self.node_count}, expected n={self.spec.n}"
            )

    @property
    def max_degree(self) -> int:
        return self.rows[-1][0]

    @property
    def node_count(self) -> int:
        return sum(freq for _, freq in self.rows)

    @property
    def total_degree(self) -> int:
        return sum(degree * freq for degree, freq in self.rows)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "DegreeFrequencyTable":
        """Canonicalize loose (degree, frequency) pairs.

        Sorts by degree and fills missing degrees with frequency 0; rejects
        duplicates and degrees below 1.
        """
        seen: dict[int, int] = {}
        for degree, freq in pairs:
            if degree < 1:
                raise ValueError(f"degree must be at least 1, got {degree}")
            if degree in seen:
                raise ValueError(f"duplicate degree {degree}")
            seen[degree] = freq
        if not seen:
            raise ValueError("frequency table must have at least one row")
        top = max(seen)
        rows = tuple((d, seen.get(d, 0)) for d in range(1, top + 1))
        return cls(rows=rows)

    def to_csv(self) -> str:
        lines = ["degree,frequency"]
        lines.extend(f"{degree},{freq}" for degree, freq in self.rows)
        return "\n".join(lines) + "\n"


# Canonical published frequency tables, keyed by (beta, n, k). Their
# rounding predates this package and is not reproducible by a single rule,
# so they ship verbatim; the generator below uses largest-remainder.
FIXTURE_KEYS: Tuple[Tuple[float, int, int], ...] = (
    (1.7, 200, 11),
    (2.0, 200, 11),
    (2.5, 200, 11),
    (2.75, 200, 11),
)

_FIXTURE_FREQUENCIES = {
    (1.7, 200, 11): (112, 34, 18, 10, 6, 6, 4, 4, 2, 2, 2),
    (2.0, 200, 11): (128, 32, 14, 8, 4, 4, 2, 2, 2, 2, 2),
    (2.5, 200, 11): (150, 26, 10, 4, 3, 2, 1, 1, 1, 1, 1),
    (2.75, 200, 11): (160, 23, 8, 2, 1, 1, 1, 1, 1, 1, 1),
}

_MODE_ALIASES = {
    "largest-remainder": "largest-remainder",
    "fixture": "fixture",
    "paper-fixture": "fixture",
}


def normalization_constant(beta: float, k: int) -> float:
    """C with ``C * sum_{i=1..k} i**-beta == 1``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return 1.0 / sum(i ** -float(beta) for i in range(1, k + 1))


def build_frequency_table(
    spec: PowerLawSpec, mode: str = "largest-remainder"
) -> DegreeFrequencyTable:
    """Apportion ``spec.n`` nodes across degrees ``1..spec.k``.

    ``largest-remainder`` floors each quota ``n * C * i**-beta`` and hands
    the leftover nodes to the largest fractional remainders (ties broken
    toward the lower degree). ``fixture`` (alias ``paper-fixture``) returns
    the embedded canonical table and rejects unlisted specs.
    """
    try:
        resolved = _MODE_ALIASES[mode]
    except KeyError:
        raise ValueError(f"unknown mode '{mode}'") from None

    constant = normalization_constant(spec.beta, spec.k)
    if resolved == "fixture":
        key = (float(spec.beta), spec.n, spec.k)
        frequencies = _FIXTURE_FREQUENCIES.get(key)
        if frequencies is None:
            known = ", ".join(str(k_) for k_ in FIXTURE_KEYS)
            raise ValueError(f"no fixture for {key}; known: {known}")
    else:
        frequencies = _largest_remainder(spec, constant)
    rows = tuple(zip(range(1, spec.k + 1), frequencies))
    return DegreeFrequencyTable(rows=rows, constant=constant, spec=spec)


def _largest_remainder(spec: PowerLawSpec, constant: float) -> Tuple[int, ...]:
    quotas = [spec.n * constant * i ** -float(spec.beta) for i in range(1, spec.k + 1)]
    base = [math.floor(q) for q in quotas]
    leftover = spec.n - sum(base)
    if not 0 <= leftover <= spec.k:
        raise RuntimeError(f"apportionment leftover {leftover} out of range")
    by_remainder = sorted(range(spec.k), key=lambda i: (base[i] - quotas[i], i))
    for i in by_remainder[:leftover]:
        base[i] += 1
    return tuple(base)


def frequency_to_sequence(table: DegreeFrequencyTable) -> OrderedDegreeVector:
    """Expand the table into the ascending degree vector it describes."""
    values: List[int] = []
    for degree, freq in table.rows:
        values.extend([degree] * freq)
    return degree_vector_from_sequence(values)


def havel_hakimi_check(sequence: Sequence[int]) -> bool:
    """True iff the integer sequence is realizable as a simple graph.

    Iteratively sorts descending, removes the head d, and subtracts 1 from
    the next d entries; fails on a negative entry or too few entries, and
    succeeds when everything is zero. Total, so odd degree sums, negative
    entries, and oversized degrees all return False.
    """
    work = sorted((int(v) for v in sequence), reverse=True)
    if work and work[-1] < 0:
        return False
    while work and work[0] > 0:
        head = work.pop(0)
        if head > len(work):
            return False
        for idx in range(head):
            work[idx] -= 1
            if work[idx] < 0:
                return False
        work.sort(reverse=True)
    return True


def havel_hakimi_realize(sequence: Sequence[int]) -> Graph:
    """Build a simple graph with exactly the given degree multiset.

    At each step the node with the largest residual degree (ties broken by
    lowest original index) is saturated against the next-largest residuals
    under the same tie rule, which makes the output deterministic. Zero
    entries survive as isolated nodes. Raises RealizationError, naming the
    failing step, when the sequence is not realizable.
    """
    degrees = [int(v) for v in sequence]
    if not degrees:
        raise ValueError("empty sequence")
    if any(d < 0 for d in degrees):
        raise RealizationError("negative degree in sequence")

    residual = list(degrees)
    edges: dict[Tuple[int, int], int] = {}
    step = 0
    while True:
        order = sorted(range(len(residual)), key=lambda i: (-residual[i], i))
        head = order[0]
        need = residual[head]
        if need == 0:
            break
        step += 1
        partners = order[1 : need + 1]
        if len(partners) < need:
            raise RealizationError(
                f"step {step}: node {head} needs {need} edges but only "
                f"{len(partners)} other nodes remain"
            )
        if residual[partners[-1]] <= 0:
            raise RealizationError(
                f"step {step}: node {head} needs {need} edges but fewer "
                "unsaturated partners remain"
            )
        for other in partners:
            edges[(head, other) if head < other else (other, head)] = 1
            residual[other] -= 1
        residual[head] = 0
    return Graph(node_count=len(degrees), edges=edges, weighted=False)


def parse_degree_sequence(text: Union[str, IO[str], Iterable[str]]) -> List[int]:
    """Read one non-negative integer per line; '#' comments and blanks skipped."""
    if isinstance(text, str):
        lines: Iterable[str] = text.splitlines()
    else:
        lines = text
    entries: List[int] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            value = int(line)
        except ValueError:
            raise InputFormatError(
                f"line {lineno}: expected an integer, got '{line}'"
            ) from None
        if value < 0:
            raise InputFormatError(f"line {lineno}: negative degree {value}")
        entries.append(value)
    if not entries:
        raise InputFormatError("empty degree sequence")
    return entries


def parse_frequency_table(text: Union[str, IO[str], Iterable[str]]) -> DegreeFrequencyTable:
    """Read 'degree,frequency' CSV rows; a header line is optional."""
    if isinstance(text, str):
        lines: Iterable[str] = text.splitlines()
    else:
        lines = text
    pairs: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.lower().replace(" ", "") == "degree,frequency":
            continue
        parts = [part.strip() for part in line.split(",")]
        if len(parts) != 2:
            raise InputFormatError(f"line {lineno}: expected 'degree,frequency'")
        try:
            degree, freq = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputFormatError(
                f"line {lineno}: expected integers, got '{line}'"
            ) from None
        if freq < 0:
            raise InputFormatError(f"line {lineno}: negative frequency {freq}")
        pairs.append((degree, freq))
    try:
        return DegreeFrequencyTable.from_pairs(pairs)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from None
