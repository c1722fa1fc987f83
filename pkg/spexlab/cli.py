#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Command line entry point.

    python -m spexlab params --F clique:4 --p 10
    python -m spexlab verify --F matching:2 --p 3 --n-from 5 --n-to 8 --format text
    python -m spexlab spectral --graph6 'H~~~~~~' --tol 1e-10

Results go to stdout (or `--out`, any fsspec URL), logs and messages to
stderr. Exit status: 0 on success, 1 when an asserted check fails, 2 on a
usage error, 3 when a size budget is exceeded (the partial result is still
written).
"""

# Built-in modules
import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass, field

# Third-party modules
import fsspec
from rich.panel import Panel

# Internal modules
from spexlab import __version__, project_url, schema_version
from spexlab.common import console, setup_logging
from spexlab.construct.family import build_H_family, h_base, h_edge_count
from spexlab.errors import (
    BudgetExceeded,
    InvalidParameters,
    LemmaInapplicable,
    SpexlabError,
)
from spexlab.graphs.graph import Graph
from spexlab.graphs.graph6 import graph6_decode, graph6_encode
from spexlab.graphs.named import parse_graph
from spexlab.report.golden import golden_table
from spexlab.report.tables import FORMATS, emit_table, key_value_rows
from spexlab.search.oracle import SPEX_MAX_VERTICES, ex_bruteforce, spex_bruteforce
from spexlab.search.verify import containment_trail, hillclimb_check, verify_instance
from spexlab.spectral.radius import DEFAULT_TOL, spectral_radius
from spexlab.theory.blowup import (
    BlowupSpec,
    decomposition_family,
    decomposition_family_oracle,
)
from spexlab.theory.params import (
    ParamProfile,
    compute_profile,
    theorem_conditions,
    turan_regime,
)

logger = logging.getLogger(__name__)

COMMANDS = (
    "blowup",
    "decompose",
    "params",
    "construct",
    "spectral",
    "search",
    "verify",
    "report",
)


###############################################################################
@dataclass
class JobConfig:
    command: str
    F: str | None = None
    graph6: str | None = None
    p: int | None = None
    n: int | None = None
    n_from: int | None = None
    n_to: int | None = None
    tol: float = DEFAULT_TOL
    seed: int = 0
    seeds: int = 8
    max_n: int = SPEX_MAX_VERTICES
    iters: int = 2000
    t_max: int = 3
    m_vertex_max: int = 8
    oracle: bool = False
    format: str = "json"
    workers: int | None = None
    out: str | None = None
    verbose: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InvalidParameters(f"unknown command {self.command!r}")

    @property
    def seed_list(self) -> list[int]:
        return list(range(self.seed, self.seed + self.seeds))

    @property
    def n_range(self) -> list[int]:
        if self.n is not None:
            return [self.n]
        if self.n_from is None or self.n_to is None:
            raise InvalidParameters(
                f"{self.command} needs --n or both --n-from and --n-to"
            )
        if self.n_from > self.n_to:
            raise InvalidParameters(f"empty range {self.n_from}..{self.n_to}")
        return list(range(self.n_from, self.n_to + 1))

    def forbidden(self) -> Graph:
        if self.F is None:
            raise InvalidParameters(f"{self.command} needs --F")
        return parse_graph(self.F)

    def profile(self) -> ParamProfile:
        """Profile of --F, through the decomposition oracle with --oracle."""
        return compute_profile(
            self.forbidden(),
            self.p,
            oracle=self.oracle,
            t_max=self.t_max,
            m_vertex_max=self.m_vertex_max,
        )

    def require(self, *names: str) -> None:
        missing = [
            f"--{name.replace('_', '-')}"
            for name in names
            if getattr(self, name) is None
        ]
        if missing:
            raise InvalidParameters(f"{self.command} needs {', '.join(missing)}")


###############################################################################
@dataclass
class Outcome:
    """What a command produced, with its table rows and the asserted verdict."""

    result: dict
    ok: bool = True
    rows: list = field(default_factory=list)


###############################################################################
def cmd_blowup(config: JobConfig) -> Outcome:
    config.require("p")
    spec = BlowupSpec.of(config.forbidden(), config.p)
    blowup = spec.blowup
    result = {
        "F": graph6_encode(spec.F),
        "p": spec.p,
        "blowup": graph6_encode(blowup),
        "vertices": blowup.n,
        "edges": blowup.num_edges,
    }
    return Outcome(result)


def cmd_decompose(config: JobConfig) -> Outcome:
    config.require("p")
    spec = BlowupSpec.of(config.forbidden(), config.p)
    result = {"F": graph6_encode(spec.F), "p": spec.p}
    if not config.oracle:
        result["members"] = decomposition_family(spec).to_graph6()
        return Outcome(result)
    found = decomposition_family_oracle(
        spec, t_max=config.t_max, m_vertex_max=config.m_vertex_max
    )
    result["oracle_members"] = found.to_graph6()
    try:
        family = decomposition_family(spec)
    except LemmaInapplicable:
        # Splits say nothing here, the oracle is the only answer
        result["members"] = found.to_graph6()
        result["oracle_agrees"] = None
        return Outcome(result)
    ok = found == family
    result["members"] = family.to_graph6()
    result["oracle_agrees"] = ok
    return Outcome(result, ok)


def cmd_params(config: JobConfig) -> Outcome:
    config.require("p")
    profile = config.profile()
    result = profile.to_dict()
    result["theorem"] = theorem_conditions(profile)
    result["regime"] = turan_regime(profile)
    return Outcome(result)


def cmd_construct(config: JobConfig) -> Outcome:
    config.require("p", "n")
    profile = config.profile()
    n, p, q = config.n, profile.p, profile.q
    base = h_base(n, p, q)
    lower = build_H_family(n, p, q, 1, profile.B)
    upper = build_H_family(n, p, q, profile.lam, profile.B)
    result = {
        "H_base_edges": base.num_edges,
        "lower": lower.to_dict(),
        "upper": upper.to_dict(),
        "upper_edge_count": h_edge_count(n, p, q, profile.lam, profile.B),
    }
    return Outcome(result)


def cmd_spectral(config: JobConfig) -> Outcome:
    if config.graph6 is not None:
        g = graph6_decode(config.graph6)
    else:
        g = config.forbidden()
    found = spectral_radius(g, config.tol)
    result = {"graph6": graph6_encode(g), "n": g.n, "edges": g.num_edges}
    result.update(found.to_dict(verbose=config.verbose))
    return Outcome(result)


def cmd_search(config: JobConfig) -> Outcome:
    config.require("p", "n")
    n = config.n
    if n <= config.max_n:
        spec = BlowupSpec.of(config.forbidden(), config.p)
        ex_value, ex_classes = ex_bruteforce(n, spec, config.workers)
        spex, spex_classes = spex_bruteforce(
            n, spec, config.tol, allow_ten=config.max_n >= 10, workers=config.workers
        )
        result = {
            "n": n,
            "p": spec.p,
            "method": "exhaustive",
            "ex": ex_value,
            "EX": ex_classes.to_graph6(),
            "spex": spex.to_dict(),
            "SPEX": spex_classes.to_graph6(),
        }
        return Outcome(result)
    profile = config.profile()
    result = hillclimb_check(
        n,
        profile,
        config.seed_list,
        iters=config.iters,
        tol=config.tol,
        workers=config.workers,
    )
    result["method"] = "hillclimb"
    return Outcome(result)


def cmd_verify(config: JobConfig) -> Outcome:
    config.require("p")
    profile = config.profile()
    reports = []
    for n in config.n_range:
        try:
            report = verify_instance(n, profile, config.tol, workers=config.workers)
            reports.append(report)
        except BudgetExceeded as error:
            partial = {"reports": [r.to_dict() for r in reports], "stopped_at": n}
            raise BudgetExceeded(str(error), partial=partial)
    result = {
        "reports": [r.to_dict() for r in reports],
        "containment_since": containment_trail(reports),
    }
    return Outcome(result, all(r.asserted_ok for r in reports), rows=reports)


def cmd_report(config: JobConfig) -> Outcome:
    rows = golden_table()
    return Outcome({"rows": rows}, all(row["match"] for row in rows), rows=rows)


HANDLERS = {
    "blowup": cmd_blowup,
    "decompose": cmd_decompose,
    "params": cmd_params,
    "construct": cmd_construct,
    "spectral": cmd_spectral,
    "search": cmd_search,
    "verify": cmd_verify,
    "report": cmd_report,
}


###############################################################################
def render(config: JobConfig, outcome: Outcome) -> str:
    if config.format == "json":
        document = {
            "schema": schema_version,
            "command": config.command,
            "result": outcome.result,
        }
        return json.dumps(document, sort_keys=True, indent=2) + "\n"
    if outcome.rows:
        return emit_table(outcome.rows, config.format)
    return emit_table(key_value_rows(outcome.result), config.format)


def write(config: JobConfig, text: str) -> None:
    if config.out is None:
        sys.stdout.write(text)
        return
    with fsspec.open(config.out, "wt", auto_mkdir=True) as handle:
        handle.write(text)
    logger.info("Wrote %s", config.out)


def run(config: JobConfig) -> int:
    """Dispatch one command and write its artifact, returning the exit status."""
    try:
        outcome = HANDLERS[config.command](config)
    except BudgetExceeded as error:
        console.print(f"[bold yellow]budget exceeded:[/] {error}")
        partial = error.partial if error.partial is not None else {}
        document = {
            "schema": schema_version,
            "command": config.command,
            "error": str(error),
            "partial": partial,
        }
        write(config, json.dumps(document, sort_keys=True, indent=2) + "\n")
        return 3
    except SpexlabError as error:
        console.print(Panel(str(error), title=type(error).__name__, border_style="red"))
        return 2

    write(config, render(config, outcome))
    if not outcome.ok:
        console.print(f"[bold red]{config.command}: an asserted check failed[/]")
        return 1
    return 0


###############################################################################
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spexlab",
        description="Spectral extremal problems for edge blow-ups of small graphs.",
        epilog=f"Documentation: {project_url}",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument(
        "--F",
        dest="F",
        help="graph6 string or path:t, cycle:t, star:t, matching:t, clique:t",
    )
    parser.add_argument("--graph6", help="graph for the spectral command")
    parser.add_argument("--p", type=int)
    parser.add_argument("--n", type=int)
    parser.add_argument("--n-from", type=int)
    parser.add_argument("--n-to", type=int)
    parser.add_argument("--tol", type=float, default=DEFAULT_TOL)
    parser.add_argument("--seed", type=int, default=0, help="first hill climbing seed")
    parser.add_argument(
        "--seeds", type=int, default=8, help="number of hill climbing seeds"
    )
    parser.add_argument(
        "--max-n",
        type=int,
        default=SPEX_MAX_VERTICES,
        help="largest n searched exhaustively, hill climbing beyond",
    )
    parser.add_argument("--iters", type=int, default=2000)
    parser.add_argument("--t-max", type=int, default=3)
    parser.add_argument("--m-vertex-max", type=int, default=8)
    parser.add_argument(
        "--oracle",
        action="store_true",
        help="take the decomposition family from its definition",
    )
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument("--workers", type=int)
    parser.add_argument("--out", help="output path or fsspec URL, stdout by default")
    parser.add_argument("--verbose", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return stop.code if isinstance(stop.code, int) else 2
    setup_logging("INFO" if args.verbose else None)
    config = JobConfig(**vars(args))
    if config.workers is not None and config.workers < 1:
        console.print("[bold red]--workers must be positive[/]")
        return 2
    if config.command in ("verify", "report"):
        subtitle = str(config.F or "golden")
        console.print(Panel(f"spexlab {config.command}", subtitle=subtitle))
    logger.info("Job: %s", asdict(config))
    return run(config)
