"""Permutations in one-line notation and the basic pattern machinery.

Permutations are 1-indexed in value (``Permutation((2, 4, 1, 3))`` is 2413) and
0-indexed in position, as usual for Python sequences.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class PermutationError(ValueError):
    """Raised for text or sequences that do not describe a permutation."""


class Permutation(tuple):
    """An immutable permutation of 1..n, n >= 1, stored as its one-line notation."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        values = tuple(values)
        if not values:
            raise PermutationError("permutations are non-empty")
        if sorted(values) != list(range(1, len(values) + 1)):
            raise PermutationError(f"{values!r} is not a rearrangement of 1..{len(values)}")
        return tuple.__new__(cls, values)

    @classmethod
    def _trusted(cls, values) -> Permutation:
        return tuple.__new__(cls, values)

    def __str__(self) -> str:
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({self.compact()})"

    def compact(self) -> str:
        """Digit-string form when every value is a single digit, spaced otherwise."""
        if len(self) <= 9:
            return "".join(map(str, self))
        return str(self)

    def inverse(self) -> Permutation:
        return inverse(self)

    def reverse(self) -> Permutation:
        return reverse(self)

    def complement(self) -> Permutation:
        return complement(self)


def perm(value) -> Permutation:
    """Coerce a Permutation, an int like 2413, a string, or a sequence of ints."""
    if isinstance(value, Permutation):
        return value
    if isinstance(value, int):
        return parse_permutation(str(value))
    if isinstance(value, str):
        return parse_permutation(value)
    return Permutation(value)


_TOKEN = re.compile(r"[\s,]+")


def parse_permutation(text: str) -> Permutation:
    """Parse ``"2413"``, ``"2 4 1 3"`` or ``"2,4,1,3"``.

    The compact digit form is only meaningful when n <= 9.
    """
    text = text.strip().strip("[]()").strip()
    if not text:
        raise PermutationError("empty permutation")
    tokens = [t for t in _TOKEN.split(text) if t]
    if len(tokens) == 1 and len(tokens[0]) > 1:
        tokens = list(tokens[0])
        if "0" in tokens:
            raise PermutationError(f"compact form {text!r} only allows digits 1-9")
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise PermutationError(f"malformed token in {text!r}") from None
    return Permutation(values)


def standardize(seq: Sequence[int]) -> Permutation:
    """The permutation order isomorphic to a sequence of distinct numbers."""
    rank = {v: i + 1 for i, v in enumerate(sorted(seq))}
    return Permutation._trusted(rank[v] for v in seq)


def delete_position(p: Sequence[int], i: int) -> Permutation:
    """Remove the entry at position i and renormalize."""
    v = p[i]
    return Permutation._trusted(x - (x > v) for j, x in enumerate(p) if j != i)


# ---------------------------------------------------------------- containment


def _value_neighbours(pattern: Sequence[int]) -> list[tuple[int, int]]:
    # For each pattern index t, the earlier indices holding the closest smaller
    # and closest larger value (-1 when absent).
    out = []
    for t, v in enumerate(pattern):
        below = [s for s in range(t) if pattern[s] < v]
        above = [s for s in range(t) if pattern[s] > v]
        lo = max(below, key=lambda s: pattern[s]) if below else -1
        hi = min(above, key=lambda s: pattern[s]) if above else -1
        out.append((lo, hi))
    return out


def find_occurrence(haystack: Sequence[int], pattern: Sequence[int],
                    pin: Optional[tuple[int, int]] = None) -> Optional[tuple[int, ...]]:
    """Positions of some occurrence of ``pattern`` in ``haystack``, or None.

    ``pin=(t, j)`` restricts the search to occurrences whose t-th entry sits at
    position j of the haystack.
    """
    n, k = len(haystack), len(pattern)
    if k > n:
        return None
    neigh = _value_neighbours(pattern)
    chosen = [0] * k

    def extend(t: int, start: int) -> bool:
        if t == k:
            return True
        lo_idx, hi_idx = neigh[t]
        lo = haystack[chosen[lo_idx]] if lo_idx >= 0 else 0
        hi = haystack[chosen[hi_idx]] if hi_idx >= 0 else n + 1
        if pin is not None and pin[0] == t:
            candidates = (pin[1],) if pin[1] >= start else ()
        else:
            stop = n - (k - t) + 1
            if pin is not None and t < pin[0]:
                stop = min(stop, pin[1])
            candidates = range(start, stop)
        for j in candidates:
            if lo < haystack[j] < hi:
                chosen[t] = j
                if extend(t + 1, j + 1):
                    return True
        return False

    if extend(0, 0):
        return tuple(chosen)
    return None


def contains(haystack: Sequence[int], pattern: Sequence[int]) -> bool:
    return find_occurrence(haystack, pattern) is not None


def avoids_all(p: Sequence[int], basis: Iterable[Sequence[int]]) -> bool:
    return not any(contains(p, b) for b in basis)


# ----------------------------------------------------------------- symmetries


def inverse(p: Sequence[int]) -> Permutation:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return Permutation._trusted(out)


def reverse(p: Sequence[int]) -> Permutation:
    return Permutation._trusted(reversed(p))


def complement(p: Sequence[int]) -> Permutation:
    n = len(p) + 1
    return Permutation._trusted(n - v for v in p)


_GENERATORS = {"inverse": inverse, "reverse": reverse, "complement": complement}

# The 8 symmetries as generator words, applied left to right.
SYMMETRIES: tuple[tuple[str, ...], ...] = (
    (),
    ("inverse",),
    ("reverse",),
    ("complement",),
    ("reverse", "complement"),
    ("inverse", "reverse"),
    ("inverse", "complement"),
    ("inverse", "reverse", "complement"),
)


def apply_symmetry(p: Sequence[int], op) -> Permutation:
    """Apply a generator name (``"inverse"``) or a sequence of them, in order.

    A string may also chain generators with ``"+"``, e.g. ``"reverse+complement"``.
    """
    if isinstance(op, str):
        op = [o for o in op.split("+") if o]
    out = Permutation._trusted(p)
    for name in op:
        try:
            out = _GENERATORS[name](out)
        except KeyError:
            raise ValueError(f"unknown symmetry {name!r}") from None
    return out


# ----------------------------------------------------------- intervals/simple


def nontrivial_intervals(p: Sequence[int]) -> list[tuple[int, int]]:
    """All (start, end) position ranges, inclusive, of proper intervals of length >= 2."""
    n = len(p)
    out = []
    for s in range(n):
        lo = hi = p[s]
        for e in range(s + 1, n):
            v = p[e]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == e - s and e - s + 1 < n:
                out.append((s, e))
    return out


def is_simple(p: Sequence[int]) -> bool:
    n = len(p)
    if n <= 2:
        return True
    for s in range(n):
        lo = hi = p[s]
        for e in range(s + 1, n if s else n - 1):
            v = p[e]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == e - s:
                return False
    return True


def _sum_cut(p: Sequence[int]) -> int:
    # Smallest k with p[:k] holding exactly the values 1..k, 0 if none is proper.
    hi = 0
    for k in range(1, len(p)):
        hi = max(hi, p[k - 1])
        if hi == k:
            return k
    return 0


def _skew_cut(p: Sequence[int]) -> int:
    n = len(p)
    lo = n + 1
    for k in range(1, n):
        lo = min(lo, p[k - 1])
        if lo == n - k + 1:
            return k
    return 0


def is_sum_decomposable(p: Sequence[int]) -> bool:
    return _sum_cut(p) > 0


def is_skew_decomposable(p: Sequence[int]) -> bool:
    return _skew_cut(p) > 0


def is_increasing(p: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(p, p[1:]))


def is_decreasing(p: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(p, p[1:]))


# ------------------------------------------------------------------ inflation


def inflate(skeleton: Sequence[int], blocks: Sequence[Sequence[int]]) -> Permutation:
    """The inflation skeleton[blocks[0], ..., blocks[m-1]]."""
    if len(skeleton) != len(blocks):
        raise ValueError(f"{len(blocks)} blocks given for a skeleton of length {len(skeleton)}")
    if any(len(b) == 0 for b in blocks):
        raise ValueError("blocks must be non-empty")
    # offset[v] = number of values used by blocks at skeleton values below v
    sizes_by_value = [0] * (len(skeleton) + 1)
    for v, b in zip(skeleton, blocks):
        sizes_by_value[v] = len(b)
    offset = [0] * (len(skeleton) + 1)
    for v in range(2, len(skeleton) + 1):
        offset[v] = offset[v - 1] + sizes_by_value[v - 1]
    out = []
    for v, b in zip(skeleton, blocks):
        out.extend(offset[v] + x for x in b)
    return Permutation._trusted(out)


def direct_sum(a: Sequence[int], b: Sequence[int]) -> Permutation:
    return inflate((1, 2), (a, b))


def skew_sum(a: Sequence[int], b: Sequence[int]) -> Permutation:
    return inflate((2, 1), (a, b))


@dataclass(frozen=True)
class Decomposition:
    """A simple skeleton together with one block per skeleton entry."""

    skeleton: Permutation
    blocks: tuple[Permutation, ...]

    def inflate(self) -> Permutation:
        return inflate(self.skeleton, self.blocks)

    def __str__(self) -> str:
        return f"{self.skeleton.compact()}[{', '.join(b.compact() for b in self.blocks)}]"


_ONE = Permutation._trusted((1,))


def decompose(p: Sequence[int]) -> Decomposition:
    """The substitution decomposition of p.

    For sum (skew) decomposable p the skeleton is 12 (21) and the first block is
    sum (skew) indecomposable; otherwise the blocks are the maximal proper
    intervals and the skeleton is simple of length >= 4.
    """
    n = len(p)
    if n == 1:
        return Decomposition(_ONE, (Permutation._trusted(p),))
    k = _sum_cut(p)
    if k:
        return Decomposition(Permutation._trusted((1, 2)),
                             (standardize(p[:k]), standardize(p[k:])))
    k = _skew_cut(p)
    if k:
        return Decomposition(Permutation._trusted((2, 1)),
                             (standardize(p[:k]), standardize(p[k:])))
    # Neither sum nor skew decomposable: maximal proper intervals partition p,
    # so the longest proper interval starting at each cut is the next block.
    longest = list(range(n))
    for s, e in nontrivial_intervals(p):
        if e > longest[s]:
            longest[s] = e
    segments = []
    s = 0
    while s < n:
        segments.append(p[s:longest[s] + 1])
        s = longest[s] + 1
    skeleton = standardize([seg[0] for seg in segments])
    return Decomposition(skeleton, tuple(standardize(seg) for seg in segments))
