"""Extended dot-bracket structures: parsing, serialization, validation,
conversion to matchings, and shape collapse.

Positions are 1-based.  Crossing base pairs (pseudoknots) are first-class:
each bracket type gets its own stack when parsing, and serialization assigns
bracket types First-Come-First-Served.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Tuple

from .matchings import Matching, from_arcs


class StructureError(ValueError):
    """Raised for malformed dot-bracket text or impossible serializations."""


@dataclass(frozen=True)
class BracketAlphabet:
    """Ordered bracket types; index order is the FCFS preference order."""

    pairs: Tuple[Tuple[str, str], ...]

    def __post_init__(self) -> None:
        chars = [c for pair in self.pairs for c in pair]
        if len(set(chars)) != len(chars) or "." in chars:
            raise StructureError("bracket characters must be distinct and not '.'")

    @classmethod
    def default(cls, uppercase_opens: bool = False) -> "BracketAlphabet":
        """"()", "[]", "{}", "<>", then letter pairs; lowercase opens unless
        uppercase_opens flips the convention."""
        pairs = [("(", ")"), ("[", "]"), ("{", "}"), ("<", ">")]
        for lo, up in zip(string.ascii_lowercase, string.ascii_uppercase):
            pairs.append((up, lo) if uppercase_opens else (lo, up))
        return cls(tuple(pairs))

    @property
    def openers(self) -> Dict[str, int]:
        return {op: t for t, (op, _) in enumerate(self.pairs)}

    @property
    def closers(self) -> Dict[str, int]:
        return {cl: t for t, (_, cl) in enumerate(self.pairs)}


DEFAULT_ALPHABET = BracketAlphabet.default()


@dataclass(frozen=True)
class SecondaryStructure:
    """A set of base pairs (i, j), 1 <= i < j <= length; other positions are
    unpaired.  Monogamy is expected but verified only by the validator."""

    length: int
    pairs: FrozenSet[Tuple[int, int]]

    def __init__(self, length: int, pairs) -> None:
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "pairs", frozenset(tuple(p) for p in pairs))
        for i, j in self.pairs:
            if not 1 <= i < j <= length:
                raise StructureError(f"pair ({i}, {j}) out of range for length {length}")

    def sorted_pairs(self) -> List[Tuple[int, int]]:
        return sorted(self.pairs)


@dataclass
class ValidationReport:
    """Violations of the three secondary-structure well-formedness conditions
    (monogamy, minimum pairing distance theta, no crossings)."""

    theta: int
    monogamy_violations: List[Tuple[Tuple[int, int], Tuple[int, int]]] = field(default_factory=list)
    distance_violations: List[Tuple[int, int]] = field(default_factory=list)
    pseudoknot_violations: List[Tuple[Tuple[int, int], Tuple[int, int]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.monogamy_violations
            or self.distance_violations
            or self.pseudoknot_violations
        )


def parse_dotbracket(
    text: str, alphabet: BracketAlphabet = DEFAULT_ALPHABET
) -> SecondaryStructure:
    """Parse extended dot-bracket text using one stack per bracket type."""
    openers = alphabet.openers
    closers = alphabet.closers
    stacks: Dict[int, List[int]] = {}
    pairs = []
    for pos, ch in enumerate(text, start=1):
        if ch == ".":
            continue
        if ch in openers:
            stacks.setdefault(openers[ch], []).append(pos)
        elif ch in closers:
            stack = stacks.get(closers[ch], [])
            if not stack:
                raise StructureError(f"unmatched closing {ch!r} at position {pos}")
            pairs.append((stack.pop(), pos))
        else:
            raise StructureError(f"unknown character {ch!r} at position {pos}")
    dangling = sorted(pos for stack in stacks.values() for pos in stack)
    if dangling:
        raise StructureError(f"unmatched opening bracket(s) at position(s) {dangling}")
    return SecondaryStructure(len(text), pairs)


def _crosses(a: Tuple[int, int], b: Tuple[int, int]) -> bool:
    (i, j), (k, l) = sorted((a, b))
    return i < k < j < l


def serialize_dotbracket(
    s: SecondaryStructure, alphabet: BracketAlphabet = DEFAULT_ALPHABET
) -> str:
    """Render to extended dot-bracket text.

    Pairs are processed in ascending opener position and each one takes the
    first bracket type whose already-assigned pairs it does not cross.
    """
    out = ["."] * s.length
    live: List[List[Tuple[int, int]]] = [[] for _ in alphabet.pairs]
    for pair in s.sorted_pairs():
        for t, assigned in enumerate(live):
            if not any(_crosses(pair, other) for other in assigned):
                assigned.append(pair)
                out[pair[0] - 1], out[pair[1] - 1] = alphabet.pairs[t]
                break
        else:
            raise StructureError(
                f"bracket alphabet exhausted: pair {pair} crosses all "
                f"{len(alphabet.pairs)} types"
            )
    return "".join(out)


def validate_waterman_ponty(s: SecondaryStructure, theta: int) -> ValidationReport:
    """Report every violation of monogamy, minimum distance, and planarity."""
    if theta < 0:
        raise StructureError("theta must be nonnegative")
    report = ValidationReport(theta=theta)
    pairs = s.sorted_pairs()
    for i, j in pairs:
        if j - i < theta:
            report.distance_violations.append((i, j))
    for idx, a in enumerate(pairs):
        for b in pairs[idx + 1 :]:
            if set(a) & set(b):
                report.monogamy_violations.append((a, b))
            elif _crosses(a, b):
                report.pseudoknot_violations.append((a, b))
    return report


def to_matching(s: SecondaryStructure) -> Matching:
    """Drop unpaired positions and reindex the paired ones to 1..2m."""
    paired = sorted(p for pair in s.pairs for p in pair)
    rank = {p: r for r, p in enumerate(paired, start=1)}
    return from_arcs([(rank[i], rank[j]) for i, j in s.pairs], len(s.pairs))


def collapse_shape(m: Matching) -> Matching:
    """Reduce a matching to its shape: repeatedly drop every arc (i, j) with
    (i+1, j-1) also present, reindex, and stop at a fixed point.

    The fixed point is exactly the condition that no occurrence of pattern 21
    remains.
    """
    while True:
        arcs = [(a.left, a.right) for a in m.arcs()]
        present = set(arcs)
        kept = [(i, j) for i, j in arcs if (i + 1, j - 1) not in present]
        if len(kept) == len(arcs):
            return m
        points = sorted(p for arc in kept for p in arc)
        rank = {p: r for r, p in enumerate(points, start=1)}
        m = from_arcs([(rank[i], rank[j]) for i, j in kept], len(kept))


def structure_to_shape_text(
    text: str, alphabet: BracketAlphabet = DEFAULT_ALPHABET
) -> str:
    """Full pipeline: dot-bracket text -> matching -> shape -> dot-bracket."""
    m = collapse_shape(to_matching(parse_dotbracket(text, alphabet)))
    pairs = [(a.left, a.right) for a in m.arcs()]
    return serialize_dotbracket(SecondaryStructure(2 * m.size, pairs), alphabet)
