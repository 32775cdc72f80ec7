"""Cross-checks between brute-force enumeration and the structural/GF results.

Each check returns a :class:`CheckResult`; :func:`run_all` runs the whole
battery at a size bound and is what ``permclass verify`` prints.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterable

from . import genfunc as gf
from .grid import (D_MATRIX, EXAMPLE_MATRIX, Gridding, find_gridding, in_grid_class,
                   random_gridded_permutation, validate_gridding)
from .perm import Permutation, decompose, delete_position, inflate, is_simple
from .structure import (E_BASIS, F_BASIS, SimpleType, classify_simple, count_words,
                        decode_word, encode_D, enumerate_words, is_member,
                        is_member_structural, members, simple_members, valid_simple_word,
                        words_without_repeats)

EXAMPLE_PERMUTATION = Permutation((6, 12, 11, 7, 10, 4, 5, 9, 3, 8, 2, 1))
SIMPLE_COUNTS = {4: 2, 5: 4, 6: 10, 7: 18, 8: 40, 9: 80, 10: 162}

Lookup = Callable[[str], gf.RationalGF]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def _first_mismatch(got: Iterable[int], want: Iterable[int], start: int) -> str:
    for n, (a, b) in enumerate(zip(got, want), start):
        if a != b:
            return f"series mismatch at n={n}: brute force {a}, generating function {b}"
    return ""


def check_simple_counts(to: int, lookup: Lookup = gf.named) -> CheckResult:
    top = max(to, 4)
    brute = [len(simple_members(n)) for n in range(4, top + 1)]
    coeffs = gf.series(lookup("s"), top)[4:]
    bad = _first_mismatch(brute, coeffs, 4)
    known = [SIMPLE_COUNTS[n] for n in range(4, min(top, 10) + 1)]
    if not bad and brute[:len(known)] != known:
        bad = f"counts {brute[:len(known)]} differ from 2, 4, 10, 18, 40, 80, 162"
    return CheckResult("simple member counts", not bad,
                       bad or f"n=4..{top}: {', '.join(map(str, brute))}")


def check_class_counts(to: int, lookup: Lookup = gf.named) -> CheckResult:
    brute = [len(members(n)) for n in range(1, to + 1)]
    coeffs = gf.series(lookup("f"), to)[1:]
    bad = _first_mismatch(brute, coeffs, 1)
    if not bad and brute[:4] != [1, 2, 6, 22][:to]:
        bad = f"small counts {brute[:4]} differ from 1, 2, 6, 22"
    return CheckResult("class counts vs f(x)", not bad,
                       bad or f"n=1..{to}: {', '.join(map(str, brute))}")


def check_aux_counts(to: int, lookup: Lookup = gf.named) -> CheckResult:
    top = min(to, 10)
    coeffs = gf.series(lookup("e"), top)[1:]
    for label, basis in (("E", E_BASIS), ("F", F_BASIS)):
        brute = [len(members(n, basis)) for n in range(1, top + 1)]
        bad = _first_mismatch(brute, coeffs, 1)
        if bad:
            return CheckResult("E and F counts vs e(x)", False, f"{label}: {bad}")
    return CheckResult("E and F counts vs e(x)", True,
                       f"n=1..{top}: {', '.join(map(str, coeffs))}")


def check_structural(to: int) -> CheckResult:
    top = min(to, 9)
    checked = 0
    for n in range(1, top + 1):
        for p in itertools.permutations(range(1, n + 1)):
            checked += 1
            if is_member_structural(p) != is_member(p):
                return CheckResult("structural membership", False,
                                   f"disagrees with avoidance on {Permutation(p)}")
    return CheckResult("structural membership", True,
                       f"agrees with avoidance on all {checked} permutations of length <= {top}")


def _block_tuples(parts: int, total: int) -> Iterable[tuple[Permutation, ...]]:
    for sizes in itertools.product(range(1, total - parts + 2), repeat=parts):
        if sum(sizes) > total:
            continue
        choices = [[Permutation(q) for q in itertools.permutations(range(1, s + 1))]
                   for s in sizes]
        yield from itertools.product(*choices)


def check_decomposition(to: int) -> CheckResult:
    top = min(to, 7)
    for n in range(1, top + 1):
        for p in itertools.permutations(range(1, n + 1)):
            if decompose(p).inflate() != p:
                return CheckResult("decomposition", False, f"roundtrip fails on {Permutation(p)}")
    total = min(to, 8)
    cases = 0
    for m in range(4, total + 1):
        for sk in itertools.permutations(range(1, m + 1)):
            if not is_simple(sk):
                continue
            for blocks in _block_tuples(m, total):
                cases += 1
                d = decompose(inflate(sk, blocks))
                if d.skeleton != sk or d.blocks != blocks:
                    return CheckResult("decomposition", False,
                                       f"{Permutation(sk)}{list(map(str, blocks))} decomposed as {d}")
    return CheckResult("decomposition", True,
                       f"roundtrip for length <= {top}; uniqueness on {cases} inflations of size <= {total}")


def check_encoding(to: int) -> CheckResult:
    name = "D encoding and word counts"
    if encode_D(Permutation((5, 1, 6, 4, 7, 2, 8, 3))) != "bacbcacb":
        return CheckResult(name, False, "51647283 does not encode as bacbcacb")
    top = min(to, 12)
    for m in range(1, top + 1):
        for w in words_without_repeats(m):
            p = decode_word(w)
            if is_simple(p) and decode_word(encode_D(p)) != p:
                return CheckResult(name, False, f"decode(encode({p})) != {p}")
            if valid_simple_word(w, SimpleType.TYPE1) and encode_D(p) != w:
                return CheckResult(name, False, f"encode(decode({w})) != {w}")
    for n in range(4, 16):
        for kind in (SimpleType.TYPE1, SimpleType.TYPE2, SimpleType.TYPE3, SimpleType.TYPE4):
            rule, direct = count_words(kind, n), len(enumerate_words(kind, n))
            if rule != direct:
                return CheckResult(name, False, f"{kind} n={n}: rule {rule}, words {direct}")
        s1 = [count_words(SimpleType.TYPE1, k) for k in (n - 2, n - 1, n)]
        if n >= 6 and s1[2] != s1[1] + 2 * s1[0]:
            return CheckResult(name, False, f"Type1 recurrence fails at n={n}")
        if n >= 6 and count_words(SimpleType.TYPE2, n) != 2 ** (n - 6):
            return CheckResult(name, False, f"Type2 count at n={n} is not 2^(n-6)")
        if n >= 9 and count_words(SimpleType.TYPE4, n) != 3 * 2 ** (n - 9):
            return CheckResult(name, False, f"Type4 count at n={n} is not 3*2^(n-9)")
    tally_top = min(to, 11)
    for n in range(4, tally_top + 1):
        tally: dict[SimpleType, int] = {}
        for p in simple_members(n):
            kind = classify_simple(p)
            tally[kind] = tally.get(kind, 0) + 1
        for kind in SimpleType:
            c = tally.get(kind, 0)
            if kind.name.startswith("SPORADIC"):
                if c != (n == 5):
                    return CheckResult(name, False, f"{c} members of {kind} at n={n}")
                continue
            if count_words(kind, n) != c:
                return CheckResult(name, False, f"{c} simple members of {kind} at n={n}, "
                                                f"rule gives {count_words(kind, n)}")
    return CheckResult(name, True, f"roundtrips to length {top}, word counts to 15, "
                                   f"type tallies to {tally_top}")


def check_identities(lookup: Lookup = gf.named) -> CheckResult:
    eq = gf.equal
    pipe = gf.pipeline(lookup)
    x = gf.X
    named = lookup
    failures = []
    if not eq(pipe.f, named("f")):
        failures.append("pipeline f != closed form f")
    if not eq(named("f_skew"), named("e_notskew") * named("e")):
        failures.append("f_skew != e_notskew * e")
    if not eq(pipe.e_notskew, named("e_notskew")):
        failures.append("e_notskew relation")
    if not eq(named("sporadic"), 2 * x * named("e") ** 2 * named("d") ** 2):
        failures.append("sporadic != 2 x e^2 d^2")
    s_sum = named("s1") + named("s2") + named("s3") + named("s4")
    if not eq(named("s"), 2 * x ** 5 + 2 * s_sum):
        failures.append("s != 2x^5 + 2(s1+s2+s3+s4)")
    for k, fk in enumerate(pipe.f_types, 1):
        if not eq(fk, named(f"f{k}")):
            failures.append(f"f{k} != its substitution form")
    d = named("d")
    plus_rhs = x * pipe.f + (pipe.f - pipe.f_plus - x) * d
    if not eq(pipe.f_plus, plus_rhs):
        failures.append("f_plus relation")
    return CheckResult("generating-function identities", not failures,
                       "; ".join(failures) or "all exact identities hold")


def check_grid(trials: int = 1000, seed: int = 0) -> CheckResult:
    name = "grid classes"
    witness = Gridding((5,), (3, 7))
    if not validate_gridding(EXAMPLE_PERMUTATION, EXAMPLE_MATRIX, witness):
        return CheckResult(name, False, "example witness rejected")
    found = find_gridding(EXAMPLE_PERMUTATION, EXAMPLE_MATRIX)
    if found is None or not validate_gridding(EXAMPLE_PERMUTATION, EXAMPLE_MATRIX, found):
        return CheckResult(name, False, "no valid gridding found for the 3x2 example permutation")
    rng = random.Random(seed)
    for label, m in (("3x2 example matrix", EXAMPLE_MATRIX), ("D", D_MATRIX)):
        for _ in range(trials):
            p = random_gridded_permutation(m, rng.randint(2, 12), rng)
            if not in_grid_class(p, m):
                return CheckResult(name, False, f"generated {p} rejected by {label}")
            q = delete_position(p, rng.randrange(len(p)))
            if not in_grid_class(q, m):
                return CheckResult(name, False, f"{label}: deleting from {p} leaves the class")
    return CheckResult(name, True, f"example witness valid; {trials} delete-one trials per matrix")


def run_all(to: int, lookup: Lookup = gf.named, grid_trials: int = 1000) -> list[CheckResult]:
    jobs = [
        lambda: check_identities(lookup),
        lambda: check_class_counts(to, lookup),
        lambda: check_simple_counts(to, lookup),
        lambda: check_aux_counts(to, lookup),
        lambda: check_structural(to),
        lambda: check_decomposition(to),
        lambda: check_encoding(to),
        lambda: check_grid(grid_trials),
    ]
    results = []
    for job in jobs:
        t = time.perf_counter()
        res = job()
        res.seconds = time.perf_counter() - t
        results.append(res)
    return results
