"""Permutations of size n <-> DPPs of dimension n without special parts.

The map runs through four stages, each usable on its own::

    permutation -> inversion word -> level word -> path family -> DPP

*Level word.*  A DPP without special parts is determined by how many of its
parts equal each value, and the count of parts equal to ``v`` is at most
``v - 1``.  Listing these counts from the top value down,
``(#n, #(n-1), ..., #2)``, gives a word with the same bounds as an inversion
word, ``0 <= c_k <= n - k``.

*Zigzag code.*  The level word of a permutation is read off by peeling its
letters alternately from the left and the right end: a letter peeled on the
left records how many of the letters still present are smaller, a letter
peeled on the right how many are larger.  Every inverted pair is counted once,
when its first letter is peeled, so the entries sum to the number of
inversions; the first entry is ``s(1) - 1`` and the second is
``n - s(n) - [s(1) > s(n)]``, which is what makes the four statistics match.

*Paths.*  The level word is turned into the unique non-intersecting family in
which every east step starts strictly above the diagonal and exactly ``c_k``
east steps sit at height ``n + 1 - k``: each path starts at the highest level
still unused and keeps taking the highest remaining east step while the row
stays shorter than its first part and the step stays above the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, DimensionTooSmall, HasSpecialParts, SizeOutOfRange, WordOutOfBounds
from .model import (
    Dpp,
    InversionWord,
    Permutation,
    StatQuadruple,
    asm_stats,
    dpp_stats,
    inversion_word,
    perm_to_matrix,
    special_positions,
    validate_word,
    word_to_perm,
)
from .paths import EAST, SOUTH, LatticePath, PathFamily, check_nonintersecting, dpp_to_paths, paths_to_dpp


def zigzag_code(s: Permutation) -> tuple[int, ...]:
    """
    >>> zigzag_code(Permutation((3, 2, 1)))
    (2, 1)
    """
    rest = list(s.word)
    out = []
    from_left = True
    while len(rest) > 1:
        if from_left:
            x = rest.pop(0)
            out.append(sum(1 for y in rest if y < x))
        else:
            x = rest.pop()
            out.append(sum(1 for y in rest if y > x))
        from_left = not from_left
    return tuple(out)


def zigzag_decode(code: tuple[int, ...], n: int) -> Permutation:
    validate_word(code, n)
    values = list(range(1, n + 1))
    left: list[int] = []
    right: list[int] = []
    for k, c in enumerate(code):
        if k % 2 == 0:
            left.append(values.pop(c))
        else:
            right.append(values.pop(len(values) - 1 - c))
    return Permutation(tuple(left + values + right[::-1]))


def word_to_levels(w: InversionWord) -> tuple[int, ...]:
    return zigzag_code(word_to_perm(w))


def levels_to_word(levels: tuple[int, ...], n: int) -> InversionWord:
    return inversion_word(zigzag_decode(levels, n))


def levels_to_paths(levels: tuple[int, ...], n: int) -> PathFamily:
    """Route the unique special-free family with the given east-step counts."""
    try:
        validate_word(levels, n)
    except WordOutOfBounds as e:
        raise WordOutOfBounds(f"level word: {e}") from None
    remaining = {n - k: c for k, c in enumerate(levels) if c}

    def top() -> int:
        return max(remaining, default=0)

    def take(h: int) -> None:
        remaining[h] -= 1
        if not remaining[h]:
            del remaining[h]

    paths = []
    while remaining:
        first = cur = top()
        take(first)
        steps = [EAST]
        length = 1
        while remaining:
            h = top()
            # next part: row stays shorter than its first part, part not special
            if length + 1 >= first or h < length + 1:
                break
            steps.append(SOUTH * (cur - h) + EAST)
            take(h)
            cur = h
            length += 1
        steps.append(SOUTH * cur)
        paths.append(LatticePath((0, first), "".join(steps)))
    return PathFamily(tuple(paths))


def paths_to_levels(f: PathFamily, n: int) -> tuple[int, ...]:
    counts = [0] * (n - 1)
    for path in f.paths:
        for h in path.east_heights():
            if h > n:
                raise DimensionTooSmall(f"part {h} exceeds the dimension {n}")
            if h < 2:
                raise WordOutOfBounds(f"east step at height {h} has no level")
            counts[n - h] += 1
    return tuple(counts)


def perm_to_dpp(s: Permutation, n: int) -> Dpp:
    if n != s.n:
        raise DimensionMismatch(f"permutation has size {s.n}, dimension requested is {n}")
    family = levels_to_paths(word_to_levels(inversion_word(s)), n)
    assert check_nonintersecting(family)
    return paths_to_dpp(family)


def dpp_to_perm(d: Dpp, n: int) -> Permutation:
    if n < 1:
        raise SizeOutOfRange(f"dimension must be at least 1, got {n}")
    special = special_positions(d)
    if special:
        raise HasSpecialParts(f"special parts at {special}")
    if d.max_part > n:
        raise DimensionTooSmall(f"part {d.max_part} exceeds the dimension {n}")
    levels = paths_to_levels(dpp_to_paths(d), n)
    return word_to_perm(levels_to_word(levels, n))


@dataclass(frozen=True)
class PreservationReport:
    perm: Permutation
    dpp: Dpp
    asm_side: StatQuadruple
    dpp_side: StatQuadruple

    @property
    def components(self) -> dict[str, bool]:
        return {k: getattr(self.asm_side, k) == getattr(self.dpp_side, k) for k in "pmtb"}

    @property
    def equal(self) -> bool:
        return self.asm_side == self.dpp_side


def check_preservation(s: Permutation, n: int) -> PreservationReport:
    d = perm_to_dpp(s, n)
    return PreservationReport(s, d, asm_stats(perm_to_matrix(s)), dpp_stats(d, n))
