"""Command-line front end.

    sombor gen      --spec "cycle(6)|splitting(m=1)" [--out FILE]
    sombor index    --spec S | --file FILE [--format json]
    sombor spectrum --spec S | --file FILE [--matrix sombor]
    sombor energy   --spec S | --file FILE [--matrix sombor]
    sombor verify   [--spec S ...] [--m 1..3] [--convention C] [--tol T] [--format F] [--strict]
    sombor table    --n N [--m 1..3] [--convention C] [--format F]

Exit status: 0 on success, 1 on usage or I/O errors, 2 when ``verify
--strict`` sees a mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .claims import (
    ERROR,
    MISMATCH,
    report_to_csv,
    report_to_json,
    report_to_markdown,
    run_suite,
    summarize,
    table_report,
)
from .constructors import GraphSpec, ShadowConvention, generate, parse_spec
from .errors import SomborError
from .graph import Graph, format_edgelist, parse_edgelist
from .invariants import adjacency_matrix, energy, sombor_index, sombor_matrix, symmetric_eigenvalues

DEFAULT_VERIFY_SPECS = ("cycle(6)", "complete(4)", "complete_bipartite(3,3)", "hypercube(3)")
DEFAULT_M = (1, 2, 3)

COMMANDS = ("gen", "index", "spectrum", "energy", "verify", "table")
FORMATS = {
    "gen": ("edgelist",),
    "index": ("text", "json"),
    "spectrum": ("text", "json"),
    "energy": ("text", "json"),
    "verify": ("markdown", "json", "csv"),
    "table": ("markdown", "json", "csv"),
}

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    specs: list[GraphSpec] = field(default_factory=list)
    file: Optional[str] = None
    m_values: tuple[int, ...] = DEFAULT_M
    convention: Optional[ShadowConvention] = None
    tol: Optional[float] = None
    format: str = "text"
    out: Optional[str] = None
    strict: bool = False
    matrix: str = "adjacency"
    n: Optional[int] = None

    @property
    def spec(self) -> Optional[GraphSpec]:
        return self.specs[0] if self.specs else None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_m_range(text: str) -> tuple[int, ...]:
    """``"2"`` or inclusive ``"1..3"``."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"--m: expected an integer or a range a..b, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"--m: need 1 <= a <= b, got {text!r}")
    return tuple(range(lo, hi + 1))


def _build_parser() -> _Parser:
    parser = _Parser(prog="sombor", description="Sombor index and energy of m-splitting / m-shadow graphs.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p, graph=True):
        if graph:
            p.add_argument("--spec", action="append", help="graph spec, e.g. 'cycle(6)|shadow(m=2)'")
            p.add_argument("--file", help="edge-list file")
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("gen", help="write a graph as an edge list")
    common(p)
    p.add_argument("--format", default="edgelist")

    for name, what in (("index", "Sombor index"), ("spectrum", "eigenvalues"), ("energy", "energy")):
        p = sub.add_parser(name, help=what)
        common(p)
        p.add_argument("--format", default="text")
        if name != "index":
            p.add_argument("--matrix", choices=("adjacency", "sombor"), default="adjacency")
            p.add_argument("--tol", help="eigensolver tolerance")

    for name in ("verify", "table"):
        p = sub.add_parser(name, help="check claims" if name == "verify" else "table cells vs direct values")
        common(p, graph=(name == "verify"))
        if name == "table":
            p.add_argument("--n", required=True, help="family parameter")
        p.add_argument("--m", default="1..3")
        p.add_argument("--convention", choices=[c.value for c in ShadowConvention])
        p.add_argument("--tol")
        p.add_argument("--format", default="markdown")
        p.add_argument("--strict", action="store_true")
    return parser


def _positive_float(text: str, flag: str) -> float:
    try:
        val = float(text)
    except ValueError:
        raise UsageError(f"{flag}: expected a number, got {text!r}") from None
    if not val > 0:
        raise UsageError(f"{flag}: must be > 0, got {text!r}")
    return val


def parse_args(argv: Sequence[str]) -> CliConfig:
    ns = _build_parser().parse_args(list(argv))
    if ns.command is None:
        raise UsageError(f"sombor: a command is required, one of {', '.join(COMMANDS)}")
    cfg = CliConfig(command=ns.command, format=ns.format, out=ns.out)
    if cfg.format not in FORMATS[cfg.command]:
        raise UsageError(
            f"--format: {cfg.format!r} not valid for {cfg.command}; choose from {', '.join(FORMATS[cfg.command])}"
        )

    raw_specs = getattr(ns, "spec", None) or []
    try:
        cfg.specs = [parse_spec(s) for s in raw_specs]
    except SomborError as exc:
        raise UsageError(f"--spec: {exc}") from None
    cfg.file = getattr(ns, "file", None)
    if cfg.file is not None and not os.access(cfg.file, os.R_OK):
        raise UsageError(f"--file: cannot read {cfg.file!r}")

    if cfg.command in ("gen", "index", "spectrum", "energy"):
        if bool(cfg.specs) == bool(cfg.file):
            raise UsageError(f"{cfg.command}: give exactly one of --spec or --file")
        if len(cfg.specs) > 1:
            raise UsageError(f"{cfg.command}: --spec given more than once")
    if cfg.command == "verify":
        if cfg.file:
            raise UsageError("verify: --file is not supported, use --spec")
        if not cfg.specs:
            cfg.specs = [parse_spec(s) for s in DEFAULT_VERIFY_SPECS]

    if hasattr(ns, "matrix"):
        cfg.matrix = ns.matrix
    if getattr(ns, "tol", None) is not None:
        cfg.tol = _positive_float(ns.tol, "--tol")
    if hasattr(ns, "m"):
        cfg.m_values = parse_m_range(ns.m)
    if getattr(ns, "convention", None):
        cfg.convention = ShadowConvention(ns.convention)
    cfg.strict = getattr(ns, "strict", False)
    if cfg.command == "table":
        try:
            cfg.n = int(ns.n)
        except ValueError:
            raise UsageError(f"--n: expected an integer, got {ns.n!r}") from None
        if cfg.n < 1:
            raise UsageError(f"--n: must be >= 1, got {cfg.n}")
    return cfg


def _load_graph(cfg: CliConfig) -> Graph:
    if cfg.file is not None:
        with open(cfg.file) as fh:
            return parse_edgelist(fh.read())
    return generate(cfg.spec)


def _source(cfg: CliConfig) -> str:
    return str(cfg.spec) if cfg.spec is not None else cfg.file


def _scalar_output(cfg: CliConfig, name: str, value: float) -> str:
    if cfg.format == "json":
        return json.dumps({"source": _source(cfg), name: float(f"{value:.12g}")}) + "\n"
    return f"{value:.12g}\n"


def _report_output(cfg: CliConfig, report) -> str:
    if cfg.format == "json":
        return report_to_json(report)
    if cfg.format == "csv":
        return report_to_csv(report)
    return report_to_markdown(report)


def execute(cfg: CliConfig) -> tuple[int, str]:
    """Run a parsed command; return ``(exit status, output text)``."""
    status = EXIT_OK
    if cfg.command == "gen":
        text = format_edgelist(_load_graph(cfg))
    elif cfg.command == "index":
        text = _scalar_output(cfg, "sombor_index", sombor_index(_load_graph(cfg)))
    elif cfg.command in ("spectrum", "energy"):
        G = _load_graph(cfg)
        M = adjacency_matrix(G) if cfg.matrix == "adjacency" else sombor_matrix(G)
        tol = cfg.tol if cfg.tol is not None else 1e-12
        if cfg.command == "energy":
            text = _scalar_output(cfg, f"{cfg.matrix}_energy", energy(M, tol))
        else:
            values = symmetric_eigenvalues(M, tol).values
            if cfg.format == "json":
                payload = {"source": _source(cfg), "matrix": cfg.matrix, "eigenvalues": [float(f"{v:.12g}") for v in values]}
                text = json.dumps(payload) + "\n"
            else:
                text = "".join(f"{v:.12g}\n" for v in values)
    else:
        conventions = None if cfg.convention is None else [cfg.convention]
        if cfg.command == "verify":
            report = run_suite(cfg.specs, cfg.m_values, cfg.tol, conventions)
        else:
            report = table_report(cfg.n, cfg.m_values, conventions)
        text = _report_output(cfg, report)
        counts = summarize(report)
        if cfg.strict and (counts[MISMATCH] or counts[ERROR]):
            status = EXIT_MISMATCH
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
        return status, ""
    return status, text


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_args(argv)
        status, text = execute(cfg)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (SomborError, OSError) as exc:
        print(f"sombor: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
