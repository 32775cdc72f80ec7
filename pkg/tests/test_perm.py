import itertools

import pytest
from hypothesis import given, settings, strategies as hst

from permclass.perm import (Permutation, PermutationError, SYMMETRIES, apply_symmetry,
                            avoids_all, complement, contains, decompose, delete_position,
                            direct_sum, find_occurrence, inflate, inverse, is_simple,
                            is_skew_decomposable, is_sum_decomposable, nontrivial_intervals,
                            parse_permutation, perm, reverse, skew_sum)

from conftest import all_perms, brute_contains, permutations

BASIS = [perm(2143), perm(4231)]


@pytest.mark.parametrize("text, expected", [
    ("2413", (2, 4, 1, 3)),
    ("2 4 1 3", (2, 4, 1, 3)),
    ("2,4,1,3", (2, 4, 1, 3)),
    ("6 12 11 7 10 4 5 9 3 8 2 1", (6, 12, 11, 7, 10, 4, 5, 9, 3, 8, 2, 1)),
    ("1", (1,)),
])
def test_parse(text, expected):
    assert parse_permutation(text) == expected


@pytest.mark.parametrize("text", ["2 2 1", "", "   ", "1 x 2", "0123", "1 3"])
def test_parse_rejects(text):
    with pytest.raises(PermutationError):
        parse_permutation(text)


def test_text_forms():
    p = parse_permutation("6 12 11 7 10 4 5 9 3 8 2 1")
    assert str(p) == "6 12 11 7 10 4 5 9 3 8 2 1"
    assert parse_permutation(str(p)) == p
    assert perm(2413).compact() == "2413"


def test_contains_subsequence_5362():
    # 5362 is order isomorphic to 3241; 1573462 has no 3142 at all
    # (both confirmed by the subsequence oracle).
    host = perm(1573462)
    occ = find_occurrence(host, perm(3241))
    assert occ is not None and [host[i] for i in occ] == [5, 3, 6, 2]
    assert brute_contains(host, perm(3241))
    assert not contains(host, perm(3142))
    assert not brute_contains(host, perm(3142))
    assert contains(perm(1573462), perm(2413))


def test_contains_examples():
    assert contains(perm(42513), perm(42513))
    assert not contains(perm(42513), perm(4231))
    assert not contains(perm(42513), perm(2143))
    assert avoids_all(perm(42513), BASIS)
    assert not avoids_all(perm(2143), BASIS)
    assert avoids_all(perm(1), BASIS)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_contains_matches_brute_force(n):
    patterns = all_perms(3) + all_perms(4)
    for p in all_perms(n):
        for q in patterns:
            assert contains(p, q) == brute_contains(p, q), (p, q)


@pytest.mark.parametrize("q", [perm(261435), perm(4627153), perm(53281746)])
def test_pinned_occurrence(q):
    for pattern in (perm(2143), perm(4231), perm(312)):
        for t, j in itertools.product(range(len(pattern)), range(len(q))):
            pinned = find_occurrence(q, pattern, pin=(t, j))
            brute = any(idx[t] == j and brute_contains([q[i] for i in idx], pattern)
                        for idx in itertools.combinations(range(len(q)), len(pattern)))
            assert (pinned is not None) == brute, (q, pattern, t, j)
            if pinned is not None:
                assert pinned[t] == j


@given(permutations(max_size=9), hst.sampled_from(BASIS + [perm(312), perm(231), perm(21)]),
       hst.data())
@settings(max_examples=200, deadline=None)
def test_downward_closure(sigma, q, data):
    i = data.draw(hst.integers(0, len(sigma) - 1)) if len(sigma) > 1 else None
    if i is None:
        return
    tau = delete_position(sigma, i)
    if not contains(sigma, q):
        assert not contains(tau, q)


@given(permutations(max_size=9), permutations(max_size=4))
@settings(max_examples=200, deadline=None)
def test_symmetry_equivariance(sigma, q):
    for s in SYMMETRIES:
        assert contains(sigma, q) == contains(apply_symmetry(sigma, s), apply_symmetry(q, s))


def test_symmetry_examples():
    assert inverse(perm(3142)) == perm(2413)
    assert reverse(perm(42513)) == perm(31524)
    assert apply_symmetry(perm(42513), ("reverse", "complement")) == perm(35142)
    assert apply_symmetry(perm(42513), "reverse+complement") == perm(35142)
    p = perm(526413)
    for g in (inverse, reverse, complement):
        assert g(g(p)) == p
    with pytest.raises(ValueError):
        apply_symmetry(p, "rotate")


def test_symmetry_orbits():
    assert len({apply_symmetry(perm(12453), s) for s in SYMMETRIES}) == 8
    assert {apply_symmetry(perm(2413), s) for s in SYMMETRIES} == {perm(2413), perm(3142)}
    for p in all_perms(5):
        assert len({apply_symmetry(p, s) for s in SYMMETRIES}) in (1, 2, 4, 8)


def test_intervals_examples():
    p = perm(3154627)
    assert (2, 4) in nontrivial_intervals(p)  # 546
    assert nontrivial_intervals(perm(2413)) == []
    assert sorted(nontrivial_intervals(perm(123))) == [(0, 1), (1, 2)]


def brute_intervals(p):
    n = len(p)
    return sorted((s, e) for s in range(n) for e in range(s + 1, n)
                  if e - s + 1 < n and
                  sorted(p[s:e + 1]) == list(range(min(p[s:e + 1]), max(p[s:e + 1]) + 1)))


def test_intervals_match_definition(perms_upto_6):
    for p in perms_upto_6:
        assert sorted(nontrivial_intervals(p)) == brute_intervals(p)
        assert is_simple(p) == (not brute_intervals(p))


def test_simple_examples():
    assert is_simple(perm(2413))
    assert is_simple(perm(35142))
    assert all(not is_simple(p) for p in all_perms(3))
    assert is_simple(perm(1)) and is_simple(perm(12)) and is_simple(perm(21))
    assert [sum(map(is_simple, all_perms(n))) for n in range(4, 8)] == [2, 6, 46, 338]


def test_sum_skew():
    assert is_sum_decomposable(perm(123)) and not is_skew_decomposable(perm(123))
    assert not is_skew_decomposable(perm(42513))
    assert not is_sum_decomposable(perm(1))
    assert direct_sum(perm(1), perm(1)) == perm(12)
    assert skew_sum(perm(1), perm(1)) == perm(21)
    assert skew_sum(perm(132), perm(21)) == perm(35421)


def test_inflate_examples():
    assert inflate(perm(3142), [perm(21), perm(132), perm(1), perm(123)]) == \
        Permutation((8, 7, 1, 3, 2, 9, 4, 5, 6))
    assert inflate(perm(42513), [perm(1)] * 2 + [perm(12)] + [perm(1)] * 2) == perm(425613)
    sigma = perm(35142)
    assert inflate(sigma, [perm(1)] * 5) == sigma
    with pytest.raises(ValueError):
        inflate(sigma, [perm(1)] * 4)


@given(permutations(min_size=1, max_size=5),
       hst.lists(permutations(max_size=4), min_size=5, max_size=5))
def test_inflation_length_law(sigma, blocks):
    blocks = blocks[:len(sigma)]
    assert len(inflate(sigma, blocks)) == sum(map(len, blocks))


def test_decompose_examples():
    d = decompose(Permutation((8, 7, 1, 3, 2, 9, 4, 5, 6)))
    assert d.skeleton == perm(3142)
    assert d.blocks == (perm(21), perm(132), perm(1), perm(123))
    d = decompose(perm(123))
    assert (d.skeleton, d.blocks) == (perm(12), (perm(1), perm(12)))
    d = decompose(perm(2413))
    assert (d.skeleton, d.blocks) == (perm(2413), (perm(1),) * 4)
    d = decompose(perm(1))
    assert (d.skeleton, d.blocks) == (perm(1), (perm(1),))


def test_decompose_roundtrip_and_conventions():
    for n in range(1, 8):
        for p in all_perms(n):
            d = decompose(p)
            assert d.inflate() == p
            assert len(d.blocks) == len(d.skeleton)
            assert is_simple(d.skeleton)
            if d.skeleton == (1, 2):
                assert not is_sum_decomposable(d.blocks[0])
            elif d.skeleton == (2, 1):
                assert not is_skew_decomposable(d.blocks[0])
            if n >= 4:
                assert is_simple(p) == (d.skeleton == p)


@pytest.mark.parametrize("sigma", [perm(2413), perm(3142), perm(42513), perm(246135)])
def test_decompose_uniqueness(sigma):
    small = [p for n in (1, 2, 3) for p in all_perms(n)]
    for blocks in itertools.product(small, repeat=len(sigma)):
        if sum(map(len, blocks)) > 9:
            continue
        d = decompose(inflate(sigma, blocks))
        assert d.skeleton == sigma and d.blocks == blocks
