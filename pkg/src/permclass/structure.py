"""Structure and enumeration of the class Av(2143, 4231).

Brute-force side: membership by pattern avoidance and level-by-level
enumeration.  Structural side: classification of the simple members, the
a/b/c word encoding of the single-column grid class D, the per-point inflation
rules, and a membership test that only uses the substitution decomposition.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .grid import D_MATRIX, all_griddings, in_grid_class
from .perm import (Decomposition, Permutation, avoids_all, decompose, delete_position,
                   find_occurrence, inverse, is_decreasing, is_increasing, is_simple,
                   perm, standardize)

BASIS = (perm(2143), perm(4231))
E_BASIS = (perm(2143), perm(312))
F_BASIS = (perm(2143), perm(231))

SPORADIC_42513 = perm(42513)
SPORADIC_35142 = perm(35142)


class NotInClassError(ValueError):
    """A permutation fails a structural description of the class."""


class NotInDError(ValueError):
    """A permutation has no gridding in the column class D."""


def is_member(p: Sequence[int]) -> bool:
    return avoids_all(p, BASIS)


# ---------------------------------------------------------------- enumeration


def _extensions(level: Sequence[tuple[int, ...]], basis: tuple[tuple[int, ...], ...]) -> list:
    # Insert the new maximum at each position.  The parent is already a member,
    # so only occurrences using the new maximum need to be ruled out.
    out = []
    if not level:
        return out
    n = len(level[0]) + 1
    pins = [(b, b.index(len(b))) for b in basis]
    for p in level:
        for k in range(n):
            q = p[:k] + (n,) + p[k:]
            if all(find_occurrence(q, b, pin=(t, k)) is None for b, t in pins):
                out.append(q)
    return out


def default_threads() -> int:
    env = os.environ.get("PERMCLASS_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def extend_level(level: list[tuple[int, ...]], basis: Sequence[Sequence[int]],
                 threads: Optional[int] = None) -> list[tuple[int, ...]]:
    """Members one longer than those in ``level``, sorted; the result is independent of threads."""
    basis = tuple(tuple(b) for b in basis)
    threads = threads or 1
    if threads > 1 and len(level) > 2000:
        size = -(-len(level) // threads)
        chunks = [level[i:i + size] for i in range(0, len(level), size)]
        with ProcessPoolExecutor(threads) as pool:
            parts = pool.map(_extensions, chunks, [basis] * len(chunks))
            out = [q for part in parts for q in part]
    else:
        out = _extensions(level, basis)
    out.sort()
    return out


def class_levels(n_max: int, basis: Sequence[Sequence[int]] = BASIS,
                 threads: Optional[int] = None) -> Iterator[list[tuple[int, ...]]]:
    """Yield the members of Av(basis) of length 1, 2, ..., n_max, each level sorted."""
    level = [(1,)] if all(len(b) > 1 for b in basis) else []
    for n in range(1, n_max + 1):
        if n > 1:
            level = extend_level(level, basis, threads)
        yield level


_LEVEL_CACHE: dict[tuple, list[list[tuple[int, ...]]]] = {}


def members(n: int, basis: Sequence[Sequence[int]] = BASIS,
            threads: Optional[int] = None) -> list[tuple[int, ...]]:
    """All members of length n, as plain tuples, in lexicographic order (cached)."""
    key = tuple(tuple(b) for b in basis)
    levels = _LEVEL_CACHE.setdefault(key, [])
    if not levels:
        levels.append([(1,)] if all(len(b) > 1 for b in key) else [])
    while len(levels) < n:
        levels.append(extend_level(levels[-1], key, threads or default_threads()))
    return levels[n - 1]


@dataclass
class CountReport:
    """Counts for lengths 1..len(counts)."""

    counts: list[int]
    method: str
    reference: Optional[list[int]] = None
    agreement: Optional[list[bool]] = None

    @property
    def ok(self) -> bool:
        return self.agreement is None or all(self.agreement)

    def rows(self) -> list[dict]:
        out = []
        for n, c in enumerate(self.counts, 1):
            row = {"length": n, "count": c, "method": self.method}
            if self.agreement is not None:
                row["reference"] = self.reference[n - 1]
                row["agree"] = self.agreement[n - 1]
            out.append(row)
        return out


def enumerate_class(n_max: int, basis: Sequence[Sequence[int]] = BASIS,
                    threads: Optional[int] = None) -> CountReport:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    counts = [len(members(n, basis, threads)) for n in range(1, n_max + 1)]
    return CountReport(counts, "brute")


def compare_counts(brute: Sequence[int], reference: Sequence[int]) -> CountReport:
    agreement = [a == b for a, b in zip(brute, reference)]
    return CountReport(list(brute), "both", list(reference), agreement)


def simple_members(n: int, threads: Optional[int] = None) -> list[Permutation]:
    if n < 4:
        raise ValueError("simple members are only considered from length 4")
    return [Permutation._trusted(p) for p in members(n, BASIS, threads) if is_simple(p)]


# ------------------------------------------------------------- classification


class SimpleType(enum.Enum):
    SPORADIC_42513 = "Sporadic42513"
    SPORADIC_35142 = "Sporadic35142"
    TYPE1 = "Type1"
    TYPE2 = "Type2"
    TYPE3 = "Type3"
    TYPE4 = "Type4"
    INV_TYPE1 = "InvType1"
    INV_TYPE2 = "InvType2"
    INV_TYPE3 = "InvType3"
    INV_TYPE4 = "InvType4"

    @property
    def base(self) -> SimpleType:
        """The Type k underlying InvType k (identity on the others)."""
        return _INV_BASE.get(self, self)

    def __str__(self) -> str:
        return self.value


_TYPES = (SimpleType.TYPE1, SimpleType.TYPE2, SimpleType.TYPE3, SimpleType.TYPE4)
_INV_TYPES = (SimpleType.INV_TYPE1, SimpleType.INV_TYPE2, SimpleType.INV_TYPE3,
              SimpleType.INV_TYPE4)
_INV_BASE = dict(zip(_INV_TYPES, _TYPES))
_TO_INV = dict(zip(_TYPES, _INV_TYPES))


def extremal_points(p: Sequence[int]) -> tuple[int, int, int, int]:
    """Positions of the leftmost, rightmost, highest and lowest points."""
    n = len(p)
    return 0, n - 1, p.index(n), p.index(1)


def extremal_pattern(p: Sequence[int]) -> Permutation:
    """Pattern of the four extremal points read left to right (needs all distinct)."""
    positions = sorted(set(extremal_points(p)))
    if len(positions) != 4:
        raise ValueError("extremal points are not distinct")
    return standardize([p[i] for i in positions])


@dataclass(frozen=True)
class _Frame:
    """Region bookkeeping for a simple member whose extremal pattern is 3142."""

    a_point: Optional[int]   # position of the point left of d, above l
    g_point: Optional[int]   # position of the point right of u, below r
    upper: tuple[int, ...]   # between d and u, above l (increasing)
    middle: tuple[int, ...]  # between d and u, between r and l (decreasing)
    lower: tuple[int, ...]   # between d and u, below r (increasing)


def _frame_3142(p: Sequence[int]) -> Optional[_Frame]:
    # Checks the shape forced on a simple member with extremal pattern 3142;
    # returns None when p does not have it.
    n = len(p)
    left, right, top, bottom = extremal_points(p)
    vl, vr = p[left], p[right]
    a_pts, g_pts, upper, middle, lower = [], [], [], [], []
    for i in range(1, n - 1):
        if i in (top, bottom):
            continue
        v = p[i]
        if i < bottom:
            if v > vl:
                a_pts.append(i)
            else:
                return None
        elif i < top:
            (upper if v > vl else middle if v > vr else lower).append(i)
        elif v < vr:
            g_pts.append(i)
        else:
            return None
    if len(a_pts) > 1 or len(g_pts) > 1:
        return None
    up_vals = [p[i] for i in upper] + [n]
    low_vals = [1] + [p[i] for i in lower]
    if not (is_increasing(up_vals) and is_increasing(low_vals)
            and is_decreasing([p[i] for i in middle])):
        return None
    if a_pts and not (len(up_vals) >= 2 and up_vals[0] < p[a_pts[0]] < up_vals[1]):
        return None
    if g_pts and not (len(low_vals) >= 2 and low_vals[-2] < p[g_pts[0]] < low_vals[-1]):
        return None
    return _Frame(a_pts[0] if a_pts else None, g_pts[0] if g_pts else None,
                  tuple(upper), tuple(middle), tuple(lower))


def _require_simple(p: Sequence[int]) -> None:
    if len(p) < 4:
        raise ValueError("classification needs length at least 4")
    if not is_simple(p):
        raise ValueError(f"{Permutation._trusted(p).compact()} is not simple")


def classify_simple(p: Sequence[int]) -> SimpleType:
    """Type of a simple member of length >= 4.

    Raises NotInClassError when p has none of the shapes available to simple
    members, which happens exactly when p is not in the class.
    """
    _require_simple(p)
    return _classify(tuple(p))


def _classify(p: tuple[int, ...]) -> SimpleType:
    pattern = extremal_pattern(p)
    if pattern == (3, 4, 1, 2):
        if p == SPORADIC_42513:
            return SimpleType.SPORADIC_42513
        if p == SPORADIC_35142:
            return SimpleType.SPORADIC_35142
        raise NotInClassError("extremal pattern 3412 outside the two sporadic members")
    if pattern == (2, 4, 1, 3):
        return _TO_INV[_classify(tuple(inverse(p)))]
    if pattern != (3, 1, 4, 2):
        raise NotInClassError(f"extremal pattern {pattern.compact()}")
    frame = _frame_3142(p)
    if frame is None:
        raise NotInClassError("extremal pattern 3142 without the required cell shape")
    # The cell sizes of A and G fix the type; the D-membership test that
    # defines the type must agree, and disagreement rules out membership.
    expected = _TYPES[(frame.a_point is not None) + 2 * (frame.g_point is not None)]
    if _type_by_d_membership(p) is not expected:
        raise NotInClassError(f"cell sizes say {expected} but D-membership disagrees")
    return expected


def _type_by_d_membership(p: Sequence[int]) -> Optional[SimpleType]:
    if in_grid_class(p, D_MATRIX):
        return SimpleType.TYPE1
    n = len(p)
    if in_grid_class(delete_position(p, 0), D_MATRIX):
        return SimpleType.TYPE2
    if in_grid_class(delete_position(p, n - 1), D_MATRIX):
        return SimpleType.TYPE3
    if in_grid_class(delete_position(delete_position(p, n - 1), 0), D_MATRIX):
        return SimpleType.TYPE4
    return None


# ------------------------------------------------------------------ D words

LETTERS = "abc"


def encode_D(p: Sequence[int]) -> str:
    """Left-to-right cell letters of p in D, preferring the middle cell (b).

    Points are read left to right and each gets b whenever some gridding that
    agrees with the letters already chosen puts it in the middle cell, so the
    word always comes from an actual gridding.
    """
    griddings = [g.row_cuts for g in all_griddings(p, D_MATRIX)]
    if not griddings:
        raise NotInDError(f"{Permutation._trusted(p).compact()} is not in D")
    word = []
    for v in p:
        by_letter: dict[str, list] = {}
        for lo, hi in griddings:
            by_letter.setdefault("a" if v <= lo else "b" if v <= hi else "c", []).append((lo, hi))
        if "b" in by_letter:
            letter = "b"
        elif len(by_letter) == 1:
            (letter,) = by_letter
        else:
            raise RuntimeError(f"value {v} is encodable as both a and c")
        griddings = by_letter[letter]
        word.append(letter)
    return "".join(word)


def decode_word(w: str) -> Permutation:
    """The D-member whose a, b, c points fill the bottom, middle and top bands."""
    if not w or set(w) - set(LETTERS):
        raise ValueError(f"not a non-empty word over a, b, c: {w!r}")
    na, nb = w.count("a"), w.count("b")
    nxt = {"a": 1, "b": na + nb, "c": na + nb + 1}
    out = []
    for ch in w:
        out.append(nxt[ch])
        nxt[ch] += -1 if ch == "b" else 1
    return Permutation._trusted(out)


def has_repeated_letter(w: str) -> bool:
    return any(x == y for x, y in zip(w, w[1:]))


def valid_simple_word(w: str, kind: SimpleType) -> bool:
    if kind not in _TYPES:
        raise ValueError(f"words describe Type1..Type4 only, not {kind}")
    if set(w) - set(LETTERS) or has_repeated_letter(w):
        return False
    if kind is SimpleType.TYPE1:
        return w.startswith("ba") and w.endswith("cb")
    if kind is SimpleType.TYPE2:
        return w.endswith("cb")
    if kind is SimpleType.TYPE3:
        return w.startswith("ba")
    return True


WORD_LENGTH_OFFSET = {SimpleType.TYPE1: 0, SimpleType.TYPE2: 4, SimpleType.TYPE3: 4,
                      SimpleType.TYPE4: 8}


def words_without_repeats(m: int) -> Iterator[str]:
    if m == 0:
        yield ""
        return
    stack = list(LETTERS)
    while stack:
        w = stack.pop()
        if len(w) == m:
            yield w
        else:
            stack.extend(w + ch for ch in LETTERS if ch != w[-1])


def enumerate_words(kind: SimpleType, n: int) -> list[str]:
    """Valid words for simple permutations of length n of the given type."""
    m = n - WORD_LENGTH_OFFSET[kind]
    if m < 0:
        return []
    return sorted(w for w in words_without_repeats(m) if valid_simple_word(w, kind))


def count_words(kind: SimpleType, n: int) -> int:
    """Number of simple members of length n of the given type, from the counting rules."""
    kind = kind.base
    if kind is SimpleType.TYPE1:
        if n < 4:
            return 0
        if n <= 5:
            return 1
        prev, cur = 1, 1
        for _ in range(6, n + 1):
            prev, cur = cur, cur + 2 * prev
        return cur
    if kind in (SimpleType.TYPE2, SimpleType.TYPE3):
        return 2 ** (n - 6) if n >= 6 else 0
    if kind is SimpleType.TYPE4:
        if n == 8:
            return 1
        return 3 * 2 ** (n - 9) if n >= 9 else 0
    raise ValueError(f"no word count for {kind}")


# ----------------------------------------------------------------- inflation


class BlockClass(enum.Enum):
    FIXED = "Fixed"
    INCR = "Incr"
    DECR = "Decr"
    CLASS_E = "ClassE"
    CLASS_F = "ClassF"

    def admits(self, block: Sequence[int]) -> bool:
        if self is BlockClass.FIXED:
            return len(block) == 1
        if self is BlockClass.INCR:
            return is_increasing(block)
        if self is BlockClass.DECR:
            return is_decreasing(block)
        if self is BlockClass.CLASS_E:
            return avoids_all(block, E_BASIS)
        return avoids_all(block, F_BASIS)

    def inverted(self) -> BlockClass:
        """The class of inverses; only E = Av(2143, 312) and F = Av(2143, 231) move."""
        return _SWAP_EF.get(self, self)

    def __str__(self) -> str:
        return self.value


_SWAP_EF = {BlockClass.CLASS_E: BlockClass.CLASS_F, BlockClass.CLASS_F: BlockClass.CLASS_E}

InflationProfile = tuple  # tuple[BlockClass, ...], one entry per skeleton point

_E, _F, _I, _D, _X = (BlockClass.CLASS_E, BlockClass.CLASS_F, BlockClass.INCR,
                      BlockClass.DECR, BlockClass.FIXED)

_SPORADIC_PROFILES = {
    SPORADIC_42513: (_E, _X, _I, _F, _I),
    # reverse-complement image: positions reversed, E and F exchanged
    SPORADIC_35142: (_I, _E, _I, _X, _F),
}


def inflation_profile(p: Sequence[int]) -> InflationProfile:
    """Allowed block class at each point of a simple member of length >= 4."""
    _require_simple(p)
    return _profile(tuple(p), _classify(tuple(p)))


def _profile(p: tuple[int, ...], kind: SimpleType) -> InflationProfile:
    if kind in (SimpleType.SPORADIC_42513, SimpleType.SPORADIC_35142):
        return _SPORADIC_PROFILES[p]
    if kind in _INV_TYPES:
        q = tuple(inverse(p))
        base = _profile(q, kind.base)
        return tuple(base[v - 1].inverted() for v in p)
    frame = _frame_3142(p)
    n = len(p)
    _, _, top, bottom = extremal_points(p)
    prof = [_I] * n
    for i in frame.middle:
        prof[i] = _D
    prof[0] = _I if frame.a_point is not None else _E
    prof[n - 1] = _I if frame.g_point is not None else _F
    if frame.a_point is not None:
        prof[frame.a_point] = _E
        prof[frame.upper[0]] = _X
    if frame.g_point is not None:
        prof[frame.g_point] = _F
        prof[frame.lower[-1]] = _X
    prof[top] = prof[bottom] = _I
    return tuple(prof)


def check_inflation(d: Decomposition) -> bool:
    """Whether every block of d lies in the class allowed at its skeleton point."""
    profile = inflation_profile(d.skeleton)
    return all(c.admits(b) for c, b in zip(profile, d.blocks))


def is_member_structural(p: Sequence[int]) -> bool:
    """Membership from the substitution decomposition alone (no 2143/4231 search)."""
    while True:
        if len(p) == 1:
            return True
        dec = decompose(p)
        sk = dec.skeleton
        if sk == (1, 2):
            first, rest = dec.blocks
            if len(first) == 1:
                p = rest
                continue
            return is_increasing(rest) and is_member_structural(first)
        if sk == (2, 1):
            first, rest = dec.blocks
            return avoids_all(first, E_BASIS) and avoids_all(rest, F_BASIS)
        try:
            kind = _classify(tuple(sk))
        except NotInClassError:
            return False
        profile = _profile(tuple(sk), kind)
        return all(c.admits(b) for c, b in zip(profile, dec.blocks))
