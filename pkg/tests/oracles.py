"""Independent evaluation routes used to cross-check the library.

Everything here deliberately avoids the library's closed-form paths:
the gini rank formula sums positional products directly, the trapezoid
evaluator integrates the Lorenz polyline geometrically, and realizability
comes from exhaustive enumeration of labeled graphs.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np


def gini_rank_formula(values):
    """(2 * sum_i i*b_i) / (n * T) - (n + 1) / n over the ascending sort."""
    ordered = sorted(Fraction(v) for v in values)
    n = len(ordered)
    total = sum(ordered)
    ranked = sum(i * v for i, v in enumerate(ordered, 1))
    return 2 * ranked / (n * total) - Fraction(n + 1, n)


def si_trapezoid(values, t1):
    """Sparsity index via trapezoid quadrature of the Lorenz polyline."""
    ordered = sorted(Fraction(v) for v in values)
    n = len(ordered)
    t1 = Fraction(t1)
    shares = [Fraction(0)]
    running = Fraction(0)
    for v in ordered:
        running += v
        shares.append(running / t1)
    width = Fraction(1, n)
    area = sum(width * (shares[i - 1] + shares[i]) / 2 for i in range(1, n + 1))
    return 1 - 2 * area


def gini_trapezoid(values):
    return si_trapezoid(values, sum(Fraction(v) for v in values))


@lru_cache(maxsize=None)
def realizable_multisets(n):
    """Ascending degree tuples of every simple graph on n labeled nodes.

    Enumerates all 2**C(n, 2) edge subsets; practical up to n = 7.
    """
    if n == 0:
        return frozenset({()})
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    masks = np.arange(1 << m, dtype=np.int64)
    degrees = np.zeros((1 << m, n), dtype=np.int8)
    for bit, (u, v) in enumerate(pairs):
        hit = ((masks >> bit) & 1).astype(np.int8)
        degrees[:, u] += hit
        degrees[:, v] += hit
    degrees.sort(axis=1)
    radix = np.int64(n)
    codes = np.zeros(1 << m, dtype=np.int64)
    for col in range(n - 1, -1, -1):
        codes = codes * radix + degrees[:, col]
    out = set()
    for code in np.unique(codes).tolist():
        seq = []
        for _ in range(n):
            seq.append(code % n)
            code //= n
        out.add(tuple(seq))
    return frozenset(out)


def brute_force_realizable(sequence):
    """True iff some simple graph has exactly this degree multiset (n <= 7)."""
    seq = tuple(sorted(int(v) for v in sequence))
    n = len(seq)
    if n > 7:
        raise ValueError("enumeration oracle only supports n <= 7")
    if not seq:
        return True
    if any(d < 0 or d >= n for d in seq):
        return False
    return seq in realizable_multisets(n)
