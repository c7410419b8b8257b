from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import D0_ROWS
from dppbij.bijection import (
    check_preservation,
    dpp_to_perm,
    levels_to_paths,
    levels_to_word,
    paths_to_levels,
    perm_to_dpp,
    word_to_levels,
    zigzag_code,
    zigzag_decode,
)
from dppbij.enumeration import enumerate_dpps
from dppbij.errors import DimensionMismatch, DimensionTooSmall, HasSpecialParts, SizeOutOfRange
from dppbij.model import (
    Dpp,
    Permutation,
    asm_stats,
    dpp_stats,
    identity,
    inversion_word,
    perm_inversions,
    perm_to_matrix,
    special_positions,
    validate_dpp,
)
from dppbij.paths import check_nonintersecting, dpp_to_paths


@pytest.mark.parametrize(
    "w, rows",
    [
        ((1, 2, 3), ()),
        ((3, 1, 2), ((3, 3),)),
        ((3, 2, 1), ((3, 3), (2,))),
        ((2, 3, 1), ((3, 2),)),
    ],
)
def test_small_examples(w, rows):
    d = perm_to_dpp(Permutation(w), 3)
    assert d.rows == rows
    assert dpp_to_perm(d, 3) == Permutation(w)


@pytest.mark.parametrize("n", [1, 2, 4, 7])
def test_identity_maps_to_empty(n):
    assert perm_to_dpp(identity(n), n) == Dpp()
    assert dpp_to_perm(Dpp(), n) == identity(n)


def test_errors():
    with pytest.raises(HasSpecialParts):
        dpp_to_perm(validate_dpp(D0_ROWS), 6)
    with pytest.raises(DimensionMismatch):
        perm_to_dpp(identity(3), 4)
    with pytest.raises(DimensionTooSmall):
        dpp_to_perm(validate_dpp([[3, 3], [2]]), 2)
    with pytest.raises(SizeOutOfRange):
        dpp_to_perm(Dpp(), 0)


def test_preservation_examples():
    r = check_preservation(Permutation((3, 2, 1)), 3)
    assert r.equal and r.asm_side == r.dpp_side == (2, 0, 3, 2)
    assert all(r.components.values())
    r = check_preservation(identity(4), 4)
    assert r.asm_side == r.dpp_side == (0, 0, 0, 0)


def test_preservation_all_of_s5():
    for w in itertools.permutations(range(1, 6)):
        assert check_preservation(Permutation(w), 5).equal


def test_zigzag_code_properties():
    for n in range(1, 7):
        for w in itertools.permutations(range(1, n + 1)):
            s = Permutation(w)
            c = zigzag_code(s)
            assert zigzag_decode(c, n) == s
            assert sum(c) == perm_inversions(s)
            if n >= 2:
                assert c[0] == w[0] - 1
            if n >= 3:
                assert c[1] == n - w[-1] - (w[0] > w[-1])


def test_stages_compose():
    s = Permutation((3, 5, 2, 4, 6, 1))
    w = inversion_word(s)
    levels = word_to_levels(w)
    assert levels_to_word(levels, 6) == w
    f = levels_to_paths(levels, 6)
    assert check_nonintersecting(f)
    assert paths_to_levels(f, 6) == levels
    assert paths_to_levels(dpp_to_paths(perm_to_dpp(s, 6)), 6) == levels


def test_level_word_counts_parts():
    for d in enumerate_dpps(5, no_special=True):
        levels = paths_to_levels(dpp_to_paths(d), 5)
        parts = [x for r in d.rows for x in r]
        assert levels == tuple(parts.count(v) for v in range(5, 1, -1))
        assert levels_to_paths(levels, 5) == dpp_to_paths(d)


@given(st.integers(1, 9).flatmap(lambda n: st.permutations(list(range(1, n + 1)))))
def test_random_permutations(w):
    s = Permutation(tuple(w))
    n = s.n
    d = perm_to_dpp(s, n)
    assert not special_positions(d)
    assert dpp_stats(d, n) == asm_stats(perm_to_matrix(s))
    assert dpp_to_perm(d, n) == s
