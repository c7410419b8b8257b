"""Text and JSON formats.

Text formats (one object per input):

* ``dpp``: one row per line, parts separated by spaces; empty input is the
  empty DPP.  ``/`` may replace line breaks (``3 3 / 2``).
* ``asm``: one matrix row per line (``/`` also accepted).
* ``perm``: the one-line word, ``3 5 2 4 6 1``.
* ``invword``: the entries ``a_1 ... a_{n-1}``; ``n`` is one more than the
  number of entries, so the empty input is the word of size 1.
* ``paths``: one path per line, ``x y STEPS`` (steps over ``E``/``S``).

JSON formats: DPP and ASM as arrays of arrays, permutation and inversion word
as arrays, path family as ``[{"start": [x, y], "steps": "ES..."}]``,
statistics as ``{"p": .., "m": .., "t": .., "b": ..}``.  Input whose first
non-blank character is ``[`` or ``{`` is read as JSON.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import ParseError
from .model import Asm, Dpp, InversionWord, Permutation, StatQuadruple
from .paths import LatticePath, PathFamily

KINDS = ("dpp", "asm", "perm", "invword", "paths")


def _ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as e:
        raise ParseError(f"not an integer: {e}") from None


def _lines(text: str) -> list[str]:
    return [ln for ln in text.replace("/", "\n").splitlines() if ln.strip()]


def _is_json(text: str) -> bool:
    s = text.lstrip()
    return s.startswith("[") or s.startswith("{")


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None


def _int_matrix(obj: Any, what: str) -> list[list[int]]:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise ParseError(f"{what} must be an array of arrays")
    if not all(isinstance(x, int) and not isinstance(x, bool) for r in obj for x in r):
        raise ParseError(f"{what} entries must be integers")
    return obj


def _int_list(obj: Any, what: str) -> list[int]:
    if not isinstance(obj, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in obj):
        raise ParseError(f"{what} must be an array of integers")
    return obj


def parse_raw(kind: str, text: str) -> Any:
    """Parse ``text`` into plain Python data for ``kind``.

    Returns rows (``dpp``), a square matrix (``asm``), a list (``perm``,
    ``invword``) or a :class:`PathFamily` (``paths``).  Only the shape is
    checked here; the defining conditions are left to the validators.
    """
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}")
    js = _is_json(text)
    if kind == "dpp":
        rows = _int_matrix(_load_json(text), "DPP") if js else [_ints(ln) for ln in _lines(text)]
        if any(not r for r in rows):
            raise ParseError("DPP rows must be nonempty")
        return rows
    if kind == "asm":
        rows = _int_matrix(_load_json(text), "ASM") if js else [_ints(ln) for ln in _lines(text)]
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ParseError("matrix is not square")
        return rows
    if kind in ("perm", "invword"):
        return _int_list(_load_json(text), kind) if js else _ints(text)
    return _parse_paths(text, js)


def _parse_paths(text: str, js: bool) -> PathFamily:
    paths = []
    if js:
        obj = _load_json(text)
        if not isinstance(obj, list):
            raise ParseError("path family must be an array")
        for item in obj:
            try:
                x, y = item["start"]
                steps = item["steps"]
            except (TypeError, KeyError, ValueError):
                raise ParseError(f"bad path object {item!r}") from None
            if not (isinstance(x, int) and isinstance(y, int) and isinstance(steps, str)):
                raise ParseError(f"bad path object {item!r}")
            paths.append(LatticePath((x, y), steps))
    else:
        for ln in _lines(text):
            toks = ln.split()
            if len(toks) not in (2, 3):
                raise ParseError(f"expected 'x y STEPS', got {ln!r}")
            x, y = _ints(" ".join(toks[:2]))
            paths.append(LatticePath((x, y), toks[2] if len(toks) == 3 else ""))
    return PathFamily(tuple(paths))


# --------------------------------------------------------------------------
# output


def to_json_obj(obj: Any) -> Any:
    if isinstance(obj, Dpp):
        return [list(r) for r in obj.rows]
    if isinstance(obj, Asm):
        return [list(r) for r in obj.entries]
    if isinstance(obj, Permutation):
        return list(obj.word)
    if isinstance(obj, InversionWord):
        return list(obj.entries)
    if isinstance(obj, StatQuadruple):
        return obj.as_dict()
    if isinstance(obj, PathFamily):
        return [{"start": list(p.start), "steps": p.steps} for p in obj.paths]
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(to_json_obj(obj), separators=(",", ":"))


def to_text(obj: Any, *, one_line: bool = False) -> str:
    if isinstance(obj, (Dpp, Asm)):
        rows = obj.rows if isinstance(obj, Dpp) else obj.entries
        sep = " / " if one_line else "\n"
        return sep.join(" ".join(map(str, r)) for r in rows)
    if isinstance(obj, StatQuadruple):
        return " ".join(f"{k}={v}" for k, v in obj.as_dict().items())
    if isinstance(obj, PathFamily):
        sep = " / " if one_line else "\n"
        return sep.join(f"{p.start[0]} {p.start[1]} {p.steps}" for p in obj.paths)
    return str(obj)
