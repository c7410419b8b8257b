"""DPPs as families of non-intersecting lattice paths.

Row ``i`` with parts ``x_1 >= ... >= x_l`` becomes the path that starts at
``(0, x_1)`` on the vertical axis, takes one east step ``E`` at height
``x_c`` for every part and between parts drops with south steps ``S``; after
the last part it drops to the horizontal axis, ending at ``(l, 0)``::

    E S^(x_1 - x_2) E S^(x_2 - x_3) ... E S^(x_l)

So a path starts at its row's first part and ends at its row's length, and
the two first-part conditions read ``x^(1)_1 > l_1 >= x^(2)_1 > l_2 >= ...``
along the axes.  Strictly decreasing columns keep the paths of consecutive
rows vertex-disjoint.  A part is special exactly when its east step starts on
or below the diagonal ``y = x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import DecodedObjectInvalid, DomainError, MalformedFamily
from .model import Dpp, validate_dpp

EAST = "E"
SOUTH = "S"


@dataclass(frozen=True)
class LatticePath:
    start: tuple[int, int]
    steps: str

    def points(self) -> Iterator[tuple[int, int]]:
        x, y = self.start
        yield x, y
        for s in self.steps:
            if s == EAST:
                x += 1
            elif s == SOUTH:
                y -= 1
            else:
                raise MalformedFamily(f"unknown step letter {s!r}")
            yield x, y

    @property
    def end(self) -> tuple[int, int]:
        x, y = self.start
        return x + self.steps.count(EAST), y - self.steps.count(SOUTH)

    def east_heights(self) -> list[int]:
        """Heights of the east steps, in order."""
        y = self.start[1]
        out = []
        for s in self.steps:
            if s == EAST:
                out.append(y)
            else:
                y -= 1
        return out


@dataclass(frozen=True)
class PathFamily:
    paths: tuple[LatticePath, ...] = ()

    def __len__(self) -> int:
        return len(self.paths)


def row_to_path(row: tuple[int, ...]) -> LatticePath:
    steps = []
    for c, x in enumerate(row):
        nxt = row[c + 1] if c + 1 < len(row) else 0
        steps.append(EAST + SOUTH * (x - nxt))
    return LatticePath((0, row[0]), "".join(steps))


def dpp_to_paths(d: Dpp) -> PathFamily:
    return PathFamily(tuple(row_to_path(r) for r in d.rows))


def check_nonintersecting(f: PathFamily) -> bool:
    seen: set[tuple[int, int]] = set()
    for path in f.paths:
        pts = set(path.points())
        if seen & pts:
            return False
        seen |= pts
    return True


def _check_conventions(i: int, path: LatticePath) -> None:
    if set(path.steps) - {EAST, SOUTH}:
        raise MalformedFamily(f"path {i}: steps must use only {EAST!r} and {SOUTH!r}")
    x, y = path.start
    if x != 0 or y < 1:
        raise MalformedFamily(f"path {i}: start {path.start} is not (0, y) with y >= 1")
    if not path.steps.startswith(EAST):
        raise MalformedFamily(f"path {i}: must begin with an east step")
    if not path.steps.endswith(SOUTH):
        raise MalformedFamily(f"path {i}: must end with a south step")
    if path.end[1] != 0:
        raise MalformedFamily(f"path {i}: ends at {path.end}, not on the horizontal axis")


def paths_to_dpp(f: PathFamily) -> Dpp:
    """Inverse of :func:`dpp_to_paths`."""
    for i, path in enumerate(f.paths, 1):
        _check_conventions(i, path)
    if not check_nonintersecting(f):
        raise MalformedFamily("two paths share a lattice point")
    rows = [tuple(p.east_heights()) for p in f.paths]
    try:
        return validate_dpp(rows)
    except DomainError as e:
        raise DecodedObjectInvalid(f"{type(e).__name__}: {e}") from e


def render_ascii(f: PathFamily) -> str:
    """Debug picture: path ``i`` is drawn with the digit ``i`` (mod 10)."""
    if not f.paths:
        return ""
    cells: dict[tuple[int, int], str] = {}
    for i, path in enumerate(f.paths, 1):
        for pt in path.points():
            cells[pt] = str(i % 10)
    width = max(x for x, _ in cells) + 1
    height = max(y for _, y in cells) + 1
    lines = []
    for y in range(height - 1, -1, -1):
        lines.append(" ".join(cells.get((x, y), ".") for x in range(width)).rstrip())
    return "\n".join(lines)
