"""Command-line interface.

Exit codes: 0 success / PASS, 1 domain failure / FAIL, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import enumeration as en
from .bijection import dpp_to_perm, perm_to_dpp
from .errors import DomainError, ParseError
from .io import dumps, parse_raw, to_json_obj, to_text
from .model import (
    asm_stats,
    dpp_stats,
    inversion_word,
    matrix_to_perm,
    perm_to_matrix,
    validate_asm,
    validate_dpp,
    validate_permutation,
    validate_word,
    word_to_perm,
)
from .paths import dpp_to_paths, paths_to_dpp

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_N_ENV = "DPP_MAX_N"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    max_n: int = max(en.BOUNDS.values())
    format: str = "text"
    parallel: bool = False
    seed: int = 0

    def __post_init__(self) -> None:
        if self.format not in ("text", "json"):
            raise UsageError(f"format must be 'text' or 'json', got {self.format!r}")
        if not 1 <= self.max_n <= max(en.BOUNDS.values()):
            raise UsageError(f"max-n must lie in 1..{max(en.BOUNDS.values())}, got {self.max_n}")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        max_n = args.max_n
        if max_n is None and os.environ.get(MAX_N_ENV):
            try:
                max_n = int(os.environ[MAX_N_ENV])
            except ValueError:
                raise UsageError(f"{MAX_N_ENV} must be an integer") from None
        kw = {"format": args.format, "parallel": args.parallel, "seed": args.seed}
        if max_n is not None:
            kw["max_n"] = max_n
        return cls(**kw)

    def check_n(self, n: int) -> None:
        if n > self.max_n:
            raise UsageError(f"n={n} exceeds the configured bound {self.max_n}")


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(str(e)) from None


def _load(kind: str, path: str | None):
    raw = parse_raw(kind, _read_input(path))
    if kind == "dpp":
        return validate_dpp(raw)
    if kind == "asm":
        return validate_asm(raw)
    if kind == "perm":
        return validate_permutation(raw)
    if kind == "invword":
        return validate_word(raw)
    paths_to_dpp(raw)  # validates the family
    return raw


def _emit(obj, cfg: CliConfig) -> None:
    print(dumps(obj) if cfg.format == "json" else to_text(obj))


def _need_dim(args: argparse.Namespace) -> int:
    if args.dim is None:
        raise UsageError("--dim is required here")
    if args.dim < 1:
        raise UsageError("--dim must be positive")
    return args.dim


# --------------------------------------------------------------------------
# commands


def cmd_validate(args: argparse.Namespace, cfg: CliConfig) -> int:
    try:
        _load(args.kind, args.input)
    except DomainError as e:
        name = type(e).__name__
        if cfg.format == "json":
            print(json.dumps({"valid": False, "error": name, "message": str(e)}))
        else:
            print(f"invalid: {name}: {e}")
        return EXIT_FAIL
    print(json.dumps({"valid": True}) if cfg.format == "json" else "valid")
    return EXIT_OK


def cmd_stats(args: argparse.Namespace, cfg: CliConfig) -> int:
    if args.kind == "dpp":
        n = _need_dim(args)
        q = dpp_stats(_load("dpp", args.input), n)
    elif args.kind == "asm":
        q = asm_stats(_load("asm", args.input))
    elif args.kind == "perm":
        q = asm_stats(perm_to_matrix(_load("perm", args.input)))
    else:
        raise UsageError(f"no statistics for kind {args.kind!r}")
    _emit(q, cfg)
    return EXIT_OK


_ALIASES = {"matrix": "asm"}


def _convert_table() -> dict[tuple[str, str], tuple[str, Callable]]:
    return {
        ("perm", "asm"): ("perm", lambda x, n: perm_to_matrix(x)),
        ("asm", "perm"): ("asm", lambda x, n: matrix_to_perm(x)),
        ("perm", "invword"): ("perm", lambda x, n: inversion_word(x)),
        ("invword", "perm"): ("invword", lambda x, n: word_to_perm(x)),
        ("dpp", "paths"): ("dpp", lambda x, n: dpp_to_paths(x)),
        ("paths", "dpp"): ("paths", lambda x, n: paths_to_dpp(x)),
        ("perm", "dpp"): ("perm", lambda x, n: perm_to_dpp(x, n)),
        ("dpp", "perm"): ("dpp", lambda x, n: dpp_to_perm(x, n)),
    }


def cmd_convert(args: argparse.Namespace, cfg: CliConfig) -> int:
    src = _ALIASES.get(args.source, args.source)
    dst = _ALIASES.get(args.target, args.target)
    table = _convert_table()
    if (src, dst) not in table:
        pairs = ", ".join(f"{a}->{b}" for a, b in table)
        raise UsageError(f"unsupported conversion {src}->{dst}; supported: {pairs}")
    kind, fn = table[(src, dst)]
    n = _need_dim(args) if "dpp" in (src, dst) and "paths" not in (src, dst) else None
    obj = _load(kind, args.input)
    _emit(fn(obj, n), cfg)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, cfg: CliConfig) -> int:
    kind = _ALIASES.get(args.kind, args.kind)
    cfg.check_n(args.n)
    if kind == "perm":
        stream = en.enumerate_perms(args.n)
    elif kind == "dpp":
        stream = en.enumerate_dpps(args.n, no_special=args.no_special)
    elif kind == "asm":
        stream = en.enumerate_asms(args.n)
    else:
        raise UsageError(f"cannot enumerate kind {kind!r}")
    if args.count_only:
        c = en.count(stream)
        print(json.dumps({"kind": kind, "n": args.n, "count": c}) if cfg.format == "json" else c)
        return EXIT_OK
    for obj in stream:
        print(dumps(obj) if cfg.format == "json" else to_text(obj, one_line=True))
    return EXIT_OK


def _equidistribution_text(r: en.EquidistributionReport) -> str:
    lines = [
        f"equidistribution n={r.n} projection={r.projection}: "
        f"asm={r.asm_count} dpp={r.dpp_count} {'PASS' if r.passed else 'FAIL'}"
    ]
    names = "p m t b" if r.projection == "quadruple" else "p m t"
    lines.append(f"  {names:<12} {'asm':>6} {'dpp':>6}")
    keys = sorted(set(r.asm_histogram.counts) | set(r.dpp_histogram.counts))
    for key in keys:
        a, d = r.asm_histogram.counts[key], r.dpp_histogram.counts[key]
        mark = "" if a == d else "  <-- differs"
        lines.append(f"  {' '.join(map(str, key)):<12} {a:>6} {d:>6}{mark}")
    if r.first_mismatch is not None:
        lines.append(f"first mismatch: {json.dumps(r.first_mismatch, sort_keys=True)}")
    lines.append(
        "literal labelling (special parts <-> inversions minus -1 count): "
        + ("holds" if r.literal_reading_holds else "does not hold")
    )
    return "\n".join(lines)


def cmd_verify(args: argparse.Namespace, cfg: CliConfig) -> int:
    if args.target != "words":
        cfg.check_n(args.n)
    if args.target == "equidistribution":
        r = en.verify_equidistribution(args.n, args.projection, parallel=cfg.parallel)
        out = json.dumps(r.to_json(), sort_keys=True) if cfg.format == "json" else _equidistribution_text(r)
        ok = r.passed
    elif args.target == "bijection":
        b = en.verify_bijection_exhaustive(args.n)
        if cfg.format == "json":
            out = json.dumps(b.to_json(), sort_keys=True)
        else:
            out = (
                f"bijection n={args.n}: {b.checked} permutations, image {b.image_size} of "
                f"{b.target_size} special-free DPPs {'PASS' if b.passed else 'FAIL'}"
            )
            if b.counterexample:
                out += f"\nfirst counterexample: {json.dumps(b.counterexample, sort_keys=True)}"
        ok = b.passed
    else:
        ok, out = _verify_words(args.n, args.samples, cfg)
    print(out)
    return EXIT_OK if ok else EXIT_FAIL


def _verify_words(n: int, samples: int, cfg: CliConfig) -> tuple[bool, str]:
    """Random inversion words of size ``n`` must round-trip through permutations."""
    if n < 1:
        raise UsageError("n must be positive")
    rng = random.Random(cfg.seed)
    bad = None
    for _ in range(samples):
        w = validate_word([rng.randint(0, n - k) for k in range(1, n)], n)
        if inversion_word(word_to_perm(w)) != w:
            bad = list(w.entries)
            break
    ok = bad is None
    if cfg.format == "json":
        rep = {"n": n, "samples": samples, "seed": cfg.seed, "pass": ok}
        if bad is not None:
            rep["counterexample"] = bad
        return ok, json.dumps(rep, sort_keys=True)
    msg = f"word round-trip n={n}: {samples} samples seed={cfg.seed} {'PASS' if ok else 'FAIL'}"
    return ok, msg if ok else f"{msg}\ncounterexample: {bad}"


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--parallel", action="store_true", help="split enumeration across processes")
    common.add_argument("--max-n", type=int, default=None, help=f"enumeration bound (env {MAX_N_ENV})")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")

    p = argparse.ArgumentParser(
        prog="dppbij",
        description="Descending plane partitions, alternating sign matrices and permutations.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[common], help="check an object's defining conditions")
    v.add_argument("kind", choices=("dpp", "asm", "matrix", "perm", "invword", "paths"))
    v.add_argument("input", nargs="?", help="file to read (default: stdin)")
    v.set_defaults(func=cmd_validate)

    s = sub.add_parser("stats", parents=[common], help="print the statistics p, m, t, b")
    s.add_argument("kind", choices=("dpp", "asm", "matrix", "perm"))
    s.add_argument("input", nargs="?")
    s.add_argument("--dim", type=int, help="dimension n (required for DPPs)")
    s.set_defaults(func=cmd_stats)

    c = sub.add_parser("convert", parents=[common], help="convert between representations")
    c.add_argument("source", choices=("perm", "asm", "matrix", "invword", "dpp", "paths"))
    c.add_argument("target", choices=("perm", "asm", "matrix", "invword", "dpp", "paths"))
    c.add_argument("input", nargs="?")
    c.add_argument("--dim", type=int, help="dimension n (required for perm <-> dpp)")
    c.set_defaults(func=cmd_convert)

    e = sub.add_parser("enumerate", parents=[common], help="list all objects of size n")
    e.add_argument("kind", choices=("perm", "dpp", "asm", "matrix"))
    e.add_argument("n", type=int)
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--no-special", action="store_true", help="DPPs without special parts only")
    e.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("verify", parents=[common], help="exhaustive checks")
    r.add_argument("target", choices=("equidistribution", "bijection", "words"))
    r.add_argument("n", type=int)
    r.add_argument("--projection", choices=("triplet", "quadruple"), default="quadruple")
    r.add_argument("--samples", type=int, default=1000, help="sample count for 'words'")
    r.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        cfg = CliConfig.from_args(args)
        return args.func(args, cfg)
    except (ParseError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
