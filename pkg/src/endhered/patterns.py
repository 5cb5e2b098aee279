"""Endhered pattern detection and brute-force distribution machinery.

An endhered pattern of size p is a permutational matching, identified with
the permutation formed by its ending points.  An occurrence in a matching
consists of p consecutive starting points whose partners form a consecutive
block arranged according to the pattern.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Iterable, List, Sequence, Tuple

from .matchings import Matching, enumerate_matchings, from_arcs, _random_matching


class PatternError(ValueError):
    """Raised for invalid patterns or guarded brute-force sizes."""


# (2*10-1)!! is ~6.5e8 matchings; anything larger needs an explicit override
BRUTEFORCE_MAX_N = 10


@dataclass(frozen=True)
class EndheredPattern:
    """A pattern given by a permutation of {1..p} in one-line notation."""

    perm: Tuple[int, ...]

    def __init__(self, perm: Iterable[int]):
        object.__setattr__(self, "perm", tuple(perm))
        p = len(self.perm)
        if p < 1 or sorted(self.perm) != list(range(1, p + 1)):
            raise PatternError(f"not a permutation of 1..{p}: {self.perm}")

    @classmethod
    def from_string(cls, text: str) -> "EndheredPattern":
        """Parse "21" or comma form "10,1,2,..."."""
        if "," in text:
            return cls(int(tok) for tok in text.split(","))
        if not text.isdigit():
            raise PatternError(f"bad pattern string {text!r}")
        return cls(int(ch) for ch in text)

    @property
    def size(self) -> int:
        return len(self.perm)

    @property
    def inverse(self) -> Tuple[int, ...]:
        inv = [0] * self.size
        for pos, val in enumerate(self.perm, start=1):
            inv[val - 1] = pos
        return tuple(inv)

    def reverse(self) -> "EndheredPattern":
        """Image under the right endhered twist."""
        return EndheredPattern(reversed(self.perm))

    def complement(self) -> "EndheredPattern":
        """Image under the left endhered twist."""
        p = self.size
        return EndheredPattern(p + 1 - v for v in self.perm)

    def __str__(self) -> str:
        if self.size < 10:
            return "".join(str(v) for v in self.perm)
        return ",".join(str(v) for v in self.perm)


@dataclass(frozen=True)
class Occurrence:
    """Position of a pattern occurrence: its first starting and ending point."""

    start: int
    end: int


def as_matching(pat: EndheredPattern) -> Matching:
    """The size-p matching whose unique occurrence of ``pat`` is at (1, p+1)."""
    p = pat.size
    inv = pat.inverse
    return from_arcs([(s, inv[s - 1] + p) for s in range(1, p + 1)], p)


def find_occurrences(m: Matching, pat: EndheredPattern) -> List[Occurrence]:
    """All occurrences of ``pat`` in ``m``, in ascending start order."""
    return [
        Occurrence(a, j + 1)
        for a, j in _iter_occurrences(m.partner_map, 2 * m.size, pat.inverse)
    ]


def _iter_occurrences(pt: Sequence[int], n2: int, inv: Tuple[int, ...]):
    p = len(inv)
    inv0 = inv[0]
    for a in range(1, n2 - p + 2):
        j = pt[a] - inv0
        # ending block must start after the p starting points
        if j < a + p - 1:
            continue
        if all(pt[a + s] == inv[s] + j for s in range(1, p)):
            yield a, j


def count_occurrences(m: Matching, pat: EndheredPattern) -> int:
    """Number of occurrences of ``pat`` in ``m``."""
    pt = m.partner_map
    return sum(1 for _ in _iter_occurrences(pt, 2 * m.size, pat.inverse))


def _check_guard(n: int, allow_large: bool) -> None:
    if n < 0:
        raise PatternError("size must be nonnegative")
    if n > BRUTEFORCE_MAX_N and not allow_large:
        raise PatternError(
            f"brute force over (2*{n}-1)!! matchings exceeds the n <= "
            f"{BRUTEFORCE_MAX_N} guard; pass allow_large=True to override"
        )


def distribution_bruteforce(
    n: int, pat: EndheredPattern, allow_large: bool = False
) -> Dict[int, int]:
    """Exact occurrence-count distribution of ``pat`` over all matchings of size n.

    Returns {k: number of matchings with exactly k occurrences}; the counts
    sum to (2n-1)!!.
    """
    _check_guard(n, allow_large)
    inv = pat.inverse
    p = len(inv)
    inv0 = inv[0]
    rest = tuple(enumerate(inv))[1:]
    n2 = 2 * n
    counts: Dict[int, int] = {}
    for m in enumerate_matchings(n):
        pt = m.partner_map
        k = 0
        for a in range(1, n2 - p + 2):
            j = pt[a] - inv0
            if j >= a + p - 1 and all(pt[a + s] == v + j for s, v in rest):
                k += 1
        counts[k] = counts.get(k, 0) + 1
    return counts


def joint_distribution_bruteforce(
    n: int,
    pat1: EndheredPattern,
    pat2: EndheredPattern,
    allow_large: bool = False,
) -> Dict[Tuple[int, int], int]:
    """Exact joint distribution of occurrence counts of two patterns."""
    _check_guard(n, allow_large)
    inv1, inv2 = pat1.inverse, pat2.inverse
    counts: Dict[Tuple[int, int], int] = {}
    n2 = 2 * n
    for m in enumerate_matchings(n):
        pt = m.partner_map
        key = (
            sum(1 for _ in _iter_occurrences(pt, n2, inv1)),
            sum(1 for _ in _iter_occurrences(pt, n2, inv2)),
        )
        counts[key] = counts.get(key, 0) + 1
    return counts


def distributions_bruteforce(
    n: int, pats: Sequence[EndheredPattern], allow_large: bool = False
) -> List[Dict[int, int]]:
    """Distributions of several patterns computed in a single enumeration pass."""
    _check_guard(n, allow_large)
    invs = [pat.inverse for pat in pats]
    results: List[Dict[int, int]] = [{} for _ in pats]
    n2 = 2 * n
    for m in enumerate_matchings(n):
        pt = m.partner_map
        for inv, counts in zip(invs, results):
            k = sum(1 for _ in _iter_occurrences(pt, n2, inv))
            counts[k] = counts.get(k, 0) + 1
    return results


def wilf_classes(
    p: int, max_n: int, allow_large_pattern: bool = False
) -> List[List[EndheredPattern]]:
    """Partition all p! patterns of size p by their distribution vectors for n <= max_n.

    Classes and their members are returned in lexicographic pattern order.
    """
    if p < 1:
        raise PatternError("pattern size must be positive")
    if p > 3 and not allow_large_pattern:
        raise PatternError(
            "wilf_classes is guarded to p <= 3; pass allow_large_pattern=True"
        )
    pats = [EndheredPattern(perm) for perm in permutations(range(1, p + 1))]
    signatures: Dict[Tuple, List[EndheredPattern]] = {}
    vectors = [[] for _ in pats]
    for n in range(1, max_n + 1):
        for vec, dist in zip(vectors, distributions_bruteforce(n, pats)):
            vec.append(tuple(sorted(dist.items())))
    for pat, vec in zip(pats, vectors):
        signatures.setdefault(tuple(vec), []).append(pat)
    classes = sorted(signatures.values(), key=lambda cls: cls[0].perm)
    return classes


def monte_carlo_distribution(
    n: int, pat: EndheredPattern, samples: int, seed: int
) -> Dict[int, float]:
    """Empirical occurrence-count distribution from uniform random matchings.

    Deterministic for a fixed seed; frequencies sum to 1.
    """
    if samples < 1:
        raise PatternError("need at least one sample")
    rng = random.Random(seed)
    inv = pat.inverse
    n2 = 2 * n
    counts: Dict[int, int] = {}
    for _ in range(samples):
        m = _random_matching(n, rng)
        k = sum(1 for _ in _iter_occurrences(m.partner_map, n2, inv))
        counts[k] = counts.get(k, 0) + 1
    return {k: c / samples for k, c in sorted(counts.items())}


def total_variation_to_poisson_half(freqs: Dict[int, float]) -> float:
    """Total-variation distance between an empirical pmf and Poisson(1/2)."""
    support = max(freqs, default=0) + 60
    half = math.exp(-0.5)
    tv = 0.0
    for k in range(support + 1):
        tv += abs(freqs.get(k, 0.0) - half)
        half = half / (2 * (k + 1))
    return tv / 2
