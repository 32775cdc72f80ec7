"""Acceptance criteria 1-8, each at full size.

Every test records one PASS/FAIL line; the lines are printed in pytest's
terminal summary (see conftest.py) and when this file is run as a script.
"""

import itertools
import random
import sys
import time

from permclass import genfunc as gf
from permclass.grid import (D_MATRIX, EXAMPLE_MATRIX, Gridding, find_gridding, in_grid_class,
                            random_gridded_permutation, validate_gridding)
from permclass.perm import Permutation, decompose, delete_position, inflate, is_simple, perm
from permclass.structure import (E_BASIS, F_BASIS, SimpleType, count_words, decode_word,
                                 encode_D, enumerate_words, is_member, is_member_structural,
                                 members, simple_members, words_without_repeats)

RESULTS = []

PAPER_SIMPLE_COUNTS = [2, 4, 10, 18, 40, 80, 162]
EXAMPLE = Permutation((6, 12, 11, 7, 10, 4, 5, 9, 3, 8, 2, 1))


def record(number, title, budget):
    """Decorator: time the criterion, store its PASS/FAIL line, enforce its runtime budget."""
    def wrap(fn):
        def run():
            t = time.perf_counter()
            try:
                detail = fn()
                ok, err = True, None
            except AssertionError as exc:
                ok, err, detail = False, exc, str(exc) or "assertion failed"
            took = time.perf_counter() - t
            if ok and took > budget:
                ok, detail = False, f"took {took:.1f}s, budget {budget}s"
                err = AssertionError(detail)
            RESULTS.append(f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: "
                           f"{detail} ({took:.1f}s)")
            print(RESULTS[-1])
            if err is not None:
                raise err
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


@record(1, "simple member counts", 120)
def test_criterion_1_simple_counts():
    brute = [len(simple_members(n)) for n in range(4, 11)]
    assert brute == PAPER_SIMPLE_COUNTS, brute
    assert gf.series(gf.named("s"), 10)[4:] == brute
    return "n=4..10: " + ", ".join(map(str, brute))


@record(2, "class counts vs f(x)", 300)
def test_criterion_2_class_counts():
    brute = [len(members(n)) for n in range(1, 12)]
    assert brute[:4] == [1, 2, 6, 22], brute[:4]
    coeffs = gf.series(gf.named("f"), 11)[1:]
    assert brute == coeffs, (brute, coeffs)
    return "n=1..11: " + ", ".join(map(str, brute))


@record(3, "E and F counts vs e(x)", 60)
def test_criterion_3_aux_counts():
    coeffs = gf.series(gf.named("e"), 10)[1:]
    for label, basis in (("Av(2143,312)", E_BASIS), ("Av(2143,231)", F_BASIS)):
        brute = [len(members(n, basis)) for n in range(1, 11)]
        assert brute == coeffs, (label, brute, coeffs)
    return "both classes n=1..10: " + ", ".join(map(str, coeffs))


@record(4, "structural membership equals avoidance", 600)
def test_criterion_4_structural():
    checked = mismatches = 0
    for n in range(1, 10):
        for p in itertools.permutations(range(1, n + 1)):
            checked += 1
            mismatches += is_member_structural(p) != is_member(p)
    assert checked == 409113
    assert mismatches == 0, f"{mismatches} mismatches"
    return f"0 mismatches over {checked} permutations"


def _blocks(parts, total):
    for sizes in itertools.product(range(1, total - parts + 2), repeat=parts):
        if sum(sizes) <= total:
            yield from itertools.product(*[[Permutation(q) for q in itertools.permutations(range(1, s + 1))]
                                           for s in sizes])


@record(5, "substitution decomposition", 60)
def test_criterion_5_decomposition():
    for n in range(1, 8):
        for p in itertools.permutations(range(1, n + 1)):
            assert decompose(p).inflate() == p, p
    cases = 0
    for m in range(4, 9):
        for sk in itertools.permutations(range(1, m + 1)):
            if not is_simple(sk):
                continue
            for blocks in _blocks(m, 8):
                d = decompose(inflate(sk, blocks))
                assert (d.skeleton, d.blocks) == (sk, blocks), (sk, blocks)
                cases += 1
    return f"roundtrip for all lengths <= 7; {cases} inflations decomposed uniquely"


@record(6, "D encoding and word counts", 60)
def test_criterion_6_encoding():
    assert encode_D(perm(51647283)) == "bacbcacb"
    roundtrips = 0
    for m in range(1, 13):
        for w in words_without_repeats(m):
            p = decode_word(w)
            if is_simple(p):
                assert decode_word(encode_D(p)) == p, p
                roundtrips += 1
    for n in range(4, 16):
        s1 = count_words(SimpleType.TYPE1, n)
        assert s1 == len(enumerate_words(SimpleType.TYPE1, n))
        if n >= 6:
            assert s1 == count_words(SimpleType.TYPE1, n - 1) + 2 * count_words(SimpleType.TYPE1, n - 2)
            assert count_words(SimpleType.TYPE2, n) == 2 ** (n - 6) == len(enumerate_words(SimpleType.TYPE2, n))
        if n >= 9:
            assert count_words(SimpleType.TYPE4, n) == 3 * 2 ** (n - 9) == len(enumerate_words(SimpleType.TYPE4, n))
    return f"bacbcacb; {roundtrips} simple D-members roundtrip; counting rules hold to n=15"


@record(7, "generating-function identities", 1)
def test_criterion_7_identities():
    named, x = gf.named, gf.X
    e, d = named("e"), named("d")
    assert gf.equal(gf.pipeline_f(), named("f"))
    assert gf.equal(named("f_skew"), named("e_notskew") * e)
    assert gf.equal(named("sporadic"), 2 * x * e ** 2 * d ** 2)
    assert gf.equal(named("s"), 2 * x ** 5 + 2 * (named("s1") + named("s2") + named("s3") + named("s4")))
    corrections = [e ** 2 / d ** 2, x * e ** 2 / d ** 3, x * e ** 2 / d ** 3, x ** 2 * e ** 2 / d ** 4]
    for k, c in enumerate(corrections, 1):
        assert gf.equal(named(f"f{k}"), gf.compose(named(f"s{k}"), d) * c), f"f{k}"
    return "all exact identities hold"


@record(8, "grid class membership", 60)
def test_criterion_8_grid():
    witness = Gridding((5,), (3, 7))
    assert validate_gridding(EXAMPLE, EXAMPLE_MATRIX, witness)
    found = find_gridding(EXAMPLE, EXAMPLE_MATRIX)
    assert found is not None and validate_gridding(EXAMPLE, EXAMPLE_MATRIX, found)
    rng = random.Random(2024)
    for m in (EXAMPLE_MATRIX, D_MATRIX):
        for _ in range(1000):
            p = random_gridded_permutation(m, rng.randint(2, 12), rng)
            assert in_grid_class(p, m), p
            q = delete_position(p, rng.randrange(len(p)))
            assert in_grid_class(q, m), (p, q)
    return "example witness validated; 1000 delete-one trials per matrix"


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().copy().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
