"""Descending plane partitions, alternating sign matrices and permutations.

The dataclasses here do not check their arguments; build them from untrusted
data with :func:`validate_dpp`, :func:`validate_asm`,
:func:`validate_permutation` and :func:`validate_word`, which raise the
subclass of :class:`~dppbij.errors.DomainError` naming the first violated
condition.

Indices in docstrings are 1-based like the usual notation; storage is
0-based.  Row ``i`` of a DPP is stored densely, so its ``c``-th entry sits in
shifted column ``j = i + c - 1`` and has ``j - i = c - 1`` parts to its left.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import (
    AlternationViolated,
    BadEntryValue,
    ColSumNot1,
    ColumnNotStrictlyDecreasing,
    Condition3Violated,
    Condition4Violated,
    DimensionTooSmall,
    EmptyRow,
    NonPositivePart,
    NotAPermutation,
    NotAPermutationMatrix,
    NotSquare,
    RowNotWeaklyDecreasing,
    RowSumNot1,
    SizeOutOfRange,
    WordOutOfBounds,
)

Rows = tuple[tuple[int, ...], ...]


class StatQuadruple(NamedTuple):
    """The four statistics shared by ASMs and DPPs.

    ``m`` counts the -1 entries of an ASM / the special parts of a DPP, ``t``
    counts inversions / all parts.
    """

    p: int
    m: int
    t: int
    b: int

    def triplet(self) -> tuple[int, int, int]:
        return (self.p, self.m, self.t)

    def as_dict(self) -> dict[str, int]:
        return {"p": self.p, "m": self.m, "t": self.t, "b": self.b}


# --------------------------------------------------------------------------
# descending plane partitions


@dataclass(frozen=True)
class Dpp:
    rows: Rows = ()

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def parts(self) -> list[int]:
        """All parts in descending order."""
        return sorted((x for r in self.rows for x in r), reverse=True)

    @property
    def max_part(self) -> int:
        return max((r[0] for r in self.rows), default=0)

    def is_empty(self) -> bool:
        return not self.rows

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


def validate_dpp(rows: Sequence[Sequence[int]]) -> Dpp:
    """Check the defining conditions of a DPP and return it.

    Conditions are checked in their customary order (positivity, weakly
    decreasing rows, strictly decreasing columns, then the two first-part
    conditions) and the first failure is raised.

    >>> validate_dpp([[6, 6, 6, 4, 2], [5, 3, 2, 1], [2]]).row_lengths
    (5, 4, 1)
    >>> validate_dpp([[1]])
    Traceback (most recent call last):
    ...
    dppbij.errors.Condition3Violated: row 1: first part 1 is not greater than the row length 1
    """
    t = tuple(tuple(int(x) for x in r) for r in rows)
    for i, r in enumerate(t, 1):
        if not r:
            raise EmptyRow(f"row {i} is empty")
    for i, r in enumerate(t, 1):
        for c, x in enumerate(r, 1):
            if x <= 0:
                raise NonPositivePart(f"row {i}, entry {c}: part {x} is not positive")
    for i, r in enumerate(t, 1):
        for c in range(len(r) - 1):
            if r[c] < r[c + 1]:
                raise RowNotWeaklyDecreasing(
                    f"row {i}: entry {c + 1} ({r[c]}) < entry {c + 2} ({r[c + 1]})"
                )
    for i in range(len(t) - 1):
        upper, lower = t[i], t[i + 1]
        # lower[q] shares its column with upper[q + 1]
        for q in range(min(len(lower), len(upper) - 1)):
            if upper[q + 1] <= lower[q]:
                raise ColumnNotStrictlyDecreasing(
                    f"column {i + q + 2}: row {i + 1} has {upper[q + 1]}, "
                    f"row {i + 2} has {lower[q]}"
                )
    for i, r in enumerate(t, 1):
        if r[0] <= len(r):
            raise Condition3Violated(
                f"row {i}: first part {r[0]} is not greater than the row length {len(r)}"
            )
    for i in range(1, len(t)):
        if t[i][0] > len(t[i - 1]):
            raise Condition4Violated(
                f"row {i + 1}: first part {t[i][0]} exceeds the length "
                f"{len(t[i - 1])} of row {i}"
            )
    return Dpp(t)


def special_positions(d: Dpp) -> list[tuple[int, int]]:
    """Positions ``(i, j)`` (1-based, shifted column) of the special parts.

    A part is special when it does not exceed the number of parts to its left.

    >>> special_positions(Dpp(((3, 1),)))
    [(1, 2)]
    """
    out = []
    for i, r in enumerate(d.rows, 1):
        for c, x in enumerate(r, 1):
            if x <= c - 1:
                out.append((i, i + c - 1))
    return out


def dpp_stats(d: Dpp, n: int) -> StatQuadruple:
    """Statistics of ``d`` viewed as a DPP of dimension ``n``.

    ``p`` is the number of parts equal to ``n``, ``m`` the number of special
    parts, ``t`` the number of parts and ``b`` the number of parts equal to
    ``n - 1`` plus the number of rows of length ``n - 1``.
    """
    if n < 1:
        raise SizeOutOfRange(f"dimension must be at least 1, got {n}")
    if d.max_part > n:
        raise DimensionTooSmall(f"part {d.max_part} exceeds the dimension {n}")
    parts = [x for r in d.rows for x in r]
    return StatQuadruple(
        p=parts.count(n),
        m=len(special_positions(d)),
        t=len(parts),
        b=parts.count(n - 1) + sum(1 for r in d.rows if len(r) == n - 1),
    )


# --------------------------------------------------------------------------
# alternating sign matrices


@dataclass(frozen=True)
class Asm:
    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.entries)


def validate_asm(matrix: Sequence[Sequence[int]]) -> Asm:
    """Check that ``matrix`` is an alternating sign matrix.

    Alternation is tested through partial sums: along every row and column
    each prefix sum must be 0 or 1.
    """
    a = tuple(tuple(int(x) for x in r) for r in matrix)
    n = len(a)
    if n == 0:
        raise NotSquare("matrix is empty")
    for i, r in enumerate(a, 1):
        if len(r) != n:
            raise NotSquare(f"row {i} has {len(r)} entries, expected {n}")
    for i, r in enumerate(a, 1):
        for j, x in enumerate(r, 1):
            if x not in (-1, 0, 1):
                raise BadEntryValue(f"entry ({i}, {j}) is {x}")
    for i, r in enumerate(a, 1):
        if sum(r) != 1:
            raise RowSumNot1(f"row {i} sums to {sum(r)}")
    for j in range(n):
        s = sum(a[i][j] for i in range(n))
        if s != 1:
            raise ColSumNot1(f"column {j + 1} sums to {s}")
    for i, r in enumerate(a, 1):
        s = 0
        for j, x in enumerate(r, 1):
            s += x
            if s not in (0, 1):
                raise AlternationViolated(f"row {i}: prefix sum {s} at column {j}")
    for j in range(n):
        s = 0
        for i in range(n):
            s += a[i][j]
            if s not in (0, 1):
                raise AlternationViolated(f"column {j + 1}: prefix sum {s} at row {i + 1}")
    return Asm(a)


def asm_inversions(a: Asm) -> int:
    """Sum of ``A[i][j] * A[k][l]`` over ``i < k`` and ``l < j``.

    Runs in O(n^2): each entry is multiplied by the sum of the block strictly
    below and to its left.
    """
    n = a.n
    below = [0] * n  # column sums over the rows already passed (further down)
    total = 0
    for i in range(n - 1, -1, -1):
        row = a.entries[i]
        left = 0
        for j in range(n):
            if row[j]:
                total += row[j] * left
            left += below[j]
        for j in range(n):
            below[j] += row[j]
    return total


def asm_stats(a: Asm) -> StatQuadruple:
    first, last = a.entries[0], a.entries[-1]
    return StatQuadruple(
        p=first.index(1),
        m=sum(r.count(-1) for r in a.entries),
        t=asm_inversions(a),
        b=a.n - 1 - last.index(1),
    )


# --------------------------------------------------------------------------
# permutations and inversion words


@dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation ``(s(1), ..., s(n))``."""

    word: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return " ".join(map(str, self.word))


@dataclass(frozen=True)
class InversionWord:
    """``entries[k-1]`` is the number of smaller letters right of position ``k``."""

    entries: tuple[int, ...]
    n: int

    def __str__(self) -> str:
        return " ".join(map(str, self.entries))


def validate_permutation(word: Sequence[int]) -> Permutation:
    w = tuple(int(x) for x in word)
    if not w:
        raise SizeOutOfRange("permutation must have at least one letter")
    if sorted(w) != list(range(1, len(w) + 1)):
        raise NotAPermutation(f"{w} is not a rearrangement of 1..{len(w)}")
    return Permutation(w)


def validate_word(entries: Sequence[int], n: int | None = None) -> InversionWord:
    """Check ``0 <= a_k <= n - k``; ``n`` defaults to ``len(entries) + 1``."""
    e = tuple(int(x) for x in entries)
    if n is None:
        n = len(e) + 1
    if n < 1 or len(e) != n - 1:
        raise WordOutOfBounds(f"a word for size {n} needs {max(n - 1, 0)} entries, got {len(e)}")
    for k, x in enumerate(e, 1):
        if not 0 <= x <= n - k:
            raise WordOutOfBounds(f"entry a_{k} = {x} not in [0, {n - k}]")
    return InversionWord(e, n)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def perm_to_matrix(s: Permutation) -> Asm:
    n = s.n
    return Asm(tuple(tuple(int(s.word[i] == j + 1) for j in range(n)) for i in range(n)))


def matrix_to_perm(a: Asm) -> Permutation:
    if any(-1 in r for r in a.entries):
        raise NotAPermutationMatrix("matrix has -1 entries")
    return Permutation(tuple(r.index(1) + 1 for r in a.entries))


def inversion_word(s: Permutation) -> InversionWord:
    """Entry ``a_k`` counts the letters right of position ``k`` that are smaller.

    This positional code has the bounds ``0 <= a_k <= n - k`` and sums to the
    number of inversions.

    >>> inversion_word(Permutation((3, 5, 2, 4, 6, 1))).entries
    (2, 3, 1, 1, 1)
    """
    w = s.word
    entries = tuple(sum(1 for y in w[k + 1 :] if y < w[k]) for k in range(s.n - 1))
    return InversionWord(entries, s.n)


def word_to_perm(w: InversionWord) -> Permutation:
    """Position ``k`` takes the remaining value with ``a_k`` smaller ones left.

    >>> word_to_perm(InversionWord((2, 3, 1, 1, 1), 6)).word
    (3, 5, 2, 4, 6, 1)
    """
    validate_word(w.entries, w.n)
    values = list(range(1, w.n + 1))
    word = [values.pop(a) for a in w.entries]
    return Permutation(tuple(word + values))


def perm_inversions(s: Permutation) -> int:
    w = s.word
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
