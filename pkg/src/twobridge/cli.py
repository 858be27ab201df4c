"""Command-line front end: ``twobridge {colorings,quiver,export,verify}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .export import certificate_table, quiver_to_dot, quiver_to_json
from .homset import coloring_count_closed_form, enumerate_colorings_bruteforce, orbit_decomposition
from .quiver import (
    NonUniformMultiplicityError,
    build_quiver_bruteforce,
    build_quiver_closed_form,
    certificate,
    certificate_of_closed_form,
)
from .tangle import (
    FractionOrderError,
    LinkSpecError,
    NegativeWordError,
    NonCoprimeFractionError,
    TangleWord,
    determinant,
    parse_link,
    word_to_fraction,
)
from .verify import CHECKS, run_verification

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BAD_LINK = 3
EXIT_FRACTION_ORDER = 4
EXIT_NOT_COPRIME = 5
EXIT_NEGATIVE_WORD = 6


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class RunConfig:
    command: str
    word: Optional[TangleWord] = None
    n: Optional[int] = None
    fmt: str = "table"
    out: Optional[str] = None
    expand_edges: bool = False
    max_sum: Optional[int] = None
    max_n: Optional[int] = None
    workers: int = 1


def _link_error_code(exc: LinkSpecError) -> int:
    if isinstance(exc, FractionOrderError):
        return EXIT_FRACTION_ORDER
    if isinstance(exc, NonCoprimeFractionError):
        return EXIT_NOT_COPRIME
    if isinstance(exc, NegativeWordError):
        return EXIT_NEGATIVE_WORD
    return EXIT_BAD_LINK


def _use_color(out: Optional[str]) -> bool:
    return out is None and "NO_COLOR" not in os.environ and sys.stdout.isatty()


def _mark(ok: bool, color: bool) -> str:
    text = "ok" if ok else "FAIL"
    if not color:
        return text
    return f"\x1b[32m{text}\x1b[0m" if ok else f"\x1b[31m{text}\x1b[0m"


def _link_label(word: TangleWord) -> str:
    return f"{word} = {word_to_fraction(word)}"


def cmd_colorings(cfg: RunConfig) -> tuple[str, int]:
    word, n = cfg.word, cfg.n
    delta = determinant(word)
    colorings = enumerate_colorings_bruteforce(word, n)
    closed = coloring_count_closed_form(delta, n)
    decomp = orbit_decomposition(colorings, n)
    agree = closed == len(colorings)
    if cfg.fmt == "json":
        doc = {
            "link": str(word),
            "fraction": str(word_to_fraction(word)),
            "n": n,
            "determinant": delta,
            "count_closed_form": closed,
            "count_bruteforce": len(colorings),
            "colorings": [c.to_json() for c in colorings],
            "orbits": decomp.to_json(),
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        color = _use_color(cfg.out)
        lines = [
            f"link        {_link_label(word)}",
            f"modulus     {n}",
            f"determinant {delta}",
            f"colorings   closed form {closed}, brute force {len(colorings)}  [{_mark(agree, color)}]",
            "",
            f"{'divisor':>8} {'size':>6}  representative",
        ]
        for orb in decomp.orbits:
            lines.append(f"{orb.divisor:>8} {orb.size:>6}  {orb.representative}")
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if agree else EXIT_MISMATCH


def cmd_quiver(cfg: RunConfig) -> tuple[str, int]:
    word, n = cfg.word, cfg.n
    delta = determinant(word)
    q = build_quiver_bruteforce(word, n)
    decomp = orbit_decomposition(q.vertices, n)
    closed_cert = certificate_of_closed_form(build_quiver_closed_form(delta, n))
    try:
        cert = certificate(q, decomp)
    except NonUniformMultiplicityError as exc:
        raise CliError(str(exc), EXIT_MISMATCH) from None
    iso = cert == closed_cert
    if cfg.fmt == "json":
        text = quiver_to_json(q, decomp, cert, link=str(word), isomorphic=iso)
    elif cfg.fmt == "dot":
        text = quiver_to_dot(q, decomp, expand_edges=cfg.expand_edges)
    else:
        color = _use_color(cfg.out)
        lines = [
            f"link        {_link_label(word)}",
            f"modulus     {n}",
            f"determinant {delta}",
            f"vertices    {len(q.vertices)}",
            f"edges       {q.total_edges}",
            f"orbits      {len(decomp.orbits)}",
            "",
            *certificate_table(cert),
            "",
            f"matches closed form: {_mark(iso, color)}",
        ]
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if iso else EXIT_MISMATCH


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    results = run_verification(cfg.max_sum, cfg.max_n, workers=cfg.workers)
    color = _use_color(cfg.out)
    lines = [f"verify: words with entry sum <= {cfg.max_sum}, 1 <= n <= {cfg.max_n}", ""]
    lines.append(f"{'n':>4} " + " ".join(f"{c:>12}" for c in CHECKS))
    all_ok = True
    for res in results:
        cells = []
        for check in CHECKS:
            if not res.checked[check]:
                cells.append(f"{'-':>12}")
                continue
            ok = not res.failed(check)
            all_ok &= ok
            # pad on the plain text so colored cells still line up
            cells.append(" " * (12 - len(_mark(ok, False))) + _mark(ok, color))
        lines.append(f"{res.n:>4} " + " ".join(cells))
    failures = [msg for res in results for msg in res.failures]
    if failures:
        lines.append("")
        lines.extend(failures)
    lines.append("")
    lines.append("all checks passed" if all_ok else f"{len(failures)} failure(s)")
    return "\n".join(lines) + "\n", EXIT_OK if all_ok else EXIT_MISMATCH


COMMANDS = {"colorings": cmd_colorings, "quiver": cmd_quiver, "export": cmd_quiver, "verify": cmd_verify}


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twobridge",
        description="Dihedral quandle colorings and coloring quivers of 2-bridge links.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def link_args(p, formats, default=None):
        p.add_argument("--link", required=True, help='fraction "N/M" or word "[p1 p2 ...]"')
        p.add_argument("--n", type=_positive, required=True, help="order of the dihedral quandle")
        p.add_argument("--format", dest="fmt", choices=formats, default=default, required=default is None)
        p.add_argument("--out", help="write to PATH instead of standard output")

    p = sub.add_parser("colorings", help="count and list colorings with their orbits")
    link_args(p, ("table", "json"), "table")

    p = sub.add_parser("quiver", help="build the full coloring quiver and check it against the closed form")
    link_args(p, ("table", "json", "dot"), "table")
    p.add_argument("--expand-edges", action="store_true", help="emit parallel DOT edges instead of labels")

    p = sub.add_parser("export", help="same as quiver, but --format must be json or dot")
    link_args(p, ("json", "dot"))
    p.add_argument("--expand-edges", action="store_true", help="emit parallel DOT edges instead of labels")

    p = sub.add_parser("verify", help="sweep words and moduli, cross-checking every closed form")
    p.add_argument("--max-sum", type=_positive, default=8)
    p.add_argument("--max-n", type=_positive, default=12)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--out", help="write to PATH instead of standard output")
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(command=args.command, out=args.out)
    if args.command == "verify":
        cfg.max_sum, cfg.max_n, cfg.workers = args.max_sum, args.max_n, args.workers
        cfg.fmt = "table"
        return cfg
    try:
        cfg.word = parse_link(args.link)
    except LinkSpecError as exc:
        raise CliError(str(exc), _link_error_code(exc)) from None
    cfg.n = args.n
    cfg.fmt = args.fmt
    cfg.expand_edges = getattr(args, "expand_edges", False)
    return cfg


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = parse_config(argv)
        text, code = COMMANDS[cfg.command](cfg)
    except CliError as exc:
        print(f"twobridge: error: {exc}", file=sys.stderr)
        return exc.code
    except SystemExit as exc:  # argparse usage errors and --help
        return int(exc.code or 0)
    _emit(text, cfg.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
