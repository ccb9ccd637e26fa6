"""Command-line interface.

Exit codes: 0 success, 2 unreadable or malformed input, 3 internal
invariant violation, 4 barrier cap exceeded (partial output is written).
"""

from __future__ import annotations

import argparse
import io
import logging
import os
import sys
import time
from dataclasses import dataclass
from typing import Sequence, TextIO

from . import export
from .barriers import DEFAULT_MAX_BARRIERS, BarrierLimitExceeded, enumerate_maximal_barriers
from .basilica import AttachmentError, from_structure
from .bipartite import BtfError, BtfInvariantError, btf_from_pattern, pattern_graph
from .dmposet import TfrInvariantError, from_decomposition
from .factor import analyse
from .graph import Graph, GraphError, random_graph
from .io import InputError, parse_edge_list, read_matrix_market
from .matching import MatchingInvariantError

log = logging.getLogger("matchstruct")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INVARIANT = 3
EXIT_CAP = 4


@dataclass(frozen=True)
class CliConfig:
    command: str
    input: str | None = None
    format: str = "edgelist"
    emit: str = "json"
    output: str | None = None
    max_barriers: int = DEFAULT_MAX_BARRIERS
    random: tuple[int, int] | None = None
    seed: int = 0


def _read_text(cfg: CliConfig, stdin: TextIO | None) -> str:
    if cfg.input is None or cfg.input == "-":
        return (stdin or sys.stdin).read()
    try:
        with open(cfg.input, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {cfg.input}: {e}") from None


def _load_pattern(cfg: CliConfig, stdin: TextIO | None) -> tuple[int, int, list[tuple[int, int]]]:
    return read_matrix_market(io.StringIO(_read_text(cfg, stdin)))


def load_graph(cfg: CliConfig, stdin: TextIO | None = None) -> Graph:
    if cfg.random is not None:
        return random_graph(cfg.random[0], cfg.random[1], cfg.seed)
    if cfg.format == "matrixmarket":
        r, c, entries = _load_pattern(cfg, stdin)
        return pattern_graph(r, c, entries)
    return parse_edge_list(_read_text(cfg, stdin))


def _timed(label: str, fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    log.info("%s: %.3fs", label, time.perf_counter() - t)
    return out


def cmd_decompose(cfg: CliConfig, stdin: TextIO | None = None) -> tuple[int, str]:
    g = load_graph(cfg, stdin)
    log.info("graph with %d vertices and %d edges", g.n, g.m)
    ms = _timed("matching, Gallai-Edmonds, factor-components", analyse, g)
    b = _timed("basilica", from_structure, ms)
    p = _timed("DM poset", from_decomposition, b)
    if cfg.emit == "dot":
        return EXIT_OK, export.poset_to_dot(p)
    if cfg.emit == "text":
        return EXIT_OK, export.decomposition_to_text(p)
    return EXIT_OK, export.dumps(export.decomposition_to_json(p))


def cmd_barriers(cfg: CliConfig, stdin: TextIO | None = None) -> tuple[int, str]:
    g = load_graph(cfg, stdin)
    code = EXIT_OK
    try:
        barriers = _timed("barrier enumeration", enumerate_maximal_barriers, g, cfg.max_barriers)
        inter: list[int] | None = None
        if barriers:
            common = set(barriers[0].vertices)
            for bar in barriers[1:]:
                common &= set(bar.vertices)
            inter = sorted(common)
        truncated = False
    except BarrierLimitExceeded as e:
        print(f"warning: {e}; output is partial", file=sys.stderr)
        barriers, inter, truncated, code = e.partial, None, True, EXIT_CAP
    if cfg.emit == "text":
        return code, export.barriers_to_text(barriers, inter)
    return code, export.dumps(export.barriers_to_json(barriers, inter, truncated))


def cmd_btf(cfg: CliConfig, stdin: TextIO | None = None) -> tuple[int, str]:
    if cfg.format != "matrixmarket":
        raise InputError("btf reads Matrix Market input only")
    r, c, entries = _load_pattern(cfg, stdin)
    rep = _timed("block triangular form", btf_from_pattern, r, c, entries)
    if cfg.emit == "text":
        return EXIT_OK, export.btf_to_text(rep)
    return EXIT_OK, export.dumps(export.btf_to_json(rep))


COMMANDS = {"decompose": cmd_decompose, "barriers": cmd_barriers, "btf": cmd_btf}


def _size_pair(text: str) -> tuple[int, int]:
    try:
        n, m = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N,M, got {text!r}") from None
    if n < 0 or m < 0:
        raise argparse.ArgumentTypeError("N and M must be non-negative")
    return n, m


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchstruct",
        description="Canonical matching decompositions: Gallai-Edmonds, basilica, DM poset, maximal barriers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, emits: Sequence[str], default_format: str) -> None:
        p.add_argument("--input", help="input file (default: stdin)")
        p.add_argument("--format", choices=("edgelist", "matrixmarket"), default=default_format)
        p.add_argument("--emit", choices=emits, default="json")
        p.add_argument("--output", help="output file (default: stdout)")

    def synth(p: argparse.ArgumentParser) -> None:
        p.add_argument("--random", type=_size_pair, metavar="N,M", help="use a random graph instead of input")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("decompose", help="full decomposition")
    common(p, ("json", "dot", "text"), "edgelist")
    synth(p)
    p = sub.add_parser("barriers", help="enumerate maximal barriers")
    common(p, ("json", "text"), "edgelist")
    synth(p)
    p.add_argument("--max-barriers", type=_positive, default=DEFAULT_MAX_BARRIERS)
    p = sub.add_parser("btf", help="block triangular form of a sparse pattern")
    common(p, ("json", "text"), "matrixmarket")
    return parser


def _config(ns: argparse.Namespace) -> CliConfig:
    return CliConfig(
        command=ns.command,
        input=ns.input,
        format=ns.format,
        emit=ns.emit,
        output=ns.output,
        max_barriers=getattr(ns, "max_barriers", DEFAULT_MAX_BARRIERS),
        random=getattr(ns, "random", None),
        seed=getattr(ns, "seed", 0),
    )


def _setup_logging() -> None:
    level = os.environ.get("MATCHSTRUCT_LOG")
    if level:
        logging.basicConfig(level=level.upper(), stream=sys.stderr, format="%(name)s %(levelname)s %(message)s")


def main(argv: Sequence[str] | None = None) -> int:
    _setup_logging()
    cfg = _config(build_parser().parse_args(argv))
    try:
        code, text = COMMANDS[cfg.command](cfg)
    except (InputError, GraphError, BtfError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (MatchingInvariantError, AttachmentError, TfrInvariantError, BtfInvariantError, AssertionError) as e:
        print(f"internal invariant violated: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
