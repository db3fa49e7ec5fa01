"""Command-line entry point: ``sdimlab {compute,product,srgraph,family,verify}``.

Graph arguments accept either a path to an edge-list file or the inline
family syntax ``name:p1,p2`` (``cycle:7``, ``gq:4``, ``petersen``).

Exit codes: 0 on success, 1 on domain errors (the message starts with the
typed error code), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional, TextIO

from . import families
from .errors import SdimlabError
from .graph import Graph
from .io import read_graph, render_dot, render_edge_list, write_graph
from .optimize import invariant_report, max_matching, sdim, sdim_f, sl_f, vertex_cover_number
from .products import PRODUCTS
from .resolving import strong_resolving_graph
from .verify import VerifyConfig, fmt, render_results, run_suite

FORMATS = ("json", "table", "dot", "edgelist")

# one-line source descriptor per reported quantity
CITATIONS = {
    "sdim_f": "minimum weight strong resolving function (LP over all vertex pairs)",
    "sdim_f_reduced": "fractional vertex cover of the strong resolving graph",
    "sdim": "vertex cover number of the strong resolving graph",
    "sl_f": "minimum weight strong locating function (LP over SL supports)",
    "nu": "maximum matching of the input graph",
    "alpha": "minimum vertex cover of the input graph",
    "report": "sandwich max(nu(G_SR), sdim/2, 1) <= sdim_f <= min(|M|/2, sdim)",
}

PARAMS = tuple(CITATIONS)


@dataclass
class CommandConfig:
    subcommand: str
    graph: Optional[str] = None
    params: list[str] = field(default_factory=list)
    fmt: Optional[str] = None
    allow_reduced_lp: bool = False
    kind: Optional[str] = None
    left: Optional[str] = None
    right: Optional[str] = None
    output: Optional[Path] = None
    suite: str = "paper"
    only: Optional[list[int]] = None
    seed: int = 1
    random_graphs: int = 500
    fixture_dir: Path = Path("verify-failures")


class _CliError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")


def load_graph(source: str) -> Graph:
    """Read ``source`` as an edge-list file if it exists, else as a family spec."""
    path = Path(source)
    if path.is_file():
        return read_graph(path)
    if ":" not in source and (path.suffix or "/" in source):
        raise _CliError("FILE_NOT_FOUND", f"no such file {source!r}")
    return families.generate(source)


def _rational_json(value: Fraction | int) -> dict[str, str]:
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _compute_values(g: Graph, params: list[str], reduced: bool) -> dict[str, object]:
    out: dict[str, object] = {}
    for p in params:
        if p == "sdim_f":
            out[p] = sdim_f(g, reduced=reduced)[0]
        elif p == "sdim_f_reduced":
            out[p] = sdim_f(g, reduced=True)[0]
        elif p == "sdim":
            out[p] = sdim(g)
        elif p == "sl_f":
            out[p] = sl_f(g)
        elif p == "nu":
            out[p] = max_matching(g)
        elif p == "alpha":
            out[p] = vertex_cover_number(g)
        elif p == "report":
            r = invariant_report(g, reduced=reduced)
            out.update({
                "n": r.n, "boundary_size": r.boundary_size, "sdim_f": r.sdim_f, "sdim": r.sdim,
                "sr_matching_number": r.sr_matching_number,
                "sr_vertex_cover_number": r.sr_vertex_cover_number,
                "leaves": r.leaves, "diameter": r.diameter,
                "sr_component_orders": [c.order for c in r.sr_components],
            })
    return out


def render_json(graph: Graph, source: str, params: list[str], values: dict[str, object]) -> str:
    """Schema: ``{graph, params, values, citations}``; numbers as ``{num, den}`` strings."""
    encoded = {k: [int(x) for x in v] if isinstance(v, list) else _rational_json(v)  # type: ignore[arg-type]
               for k, v in values.items()}
    doc = {
        "graph": {"source": source, "n": graph.n, "m": graph.edge_count},
        "params": params,
        "values": encoded,
        "citations": {p: CITATIONS[p] for p in params},
    }
    return json.dumps(doc, indent=2) + "\n"


def render_table(values: dict[str, object]) -> str:
    width = max(len(k) for k in values)
    return "".join(f"{k.ljust(width)}  {fmt(v) if not isinstance(v, list) else v}\n"
                   for k, v in values.items())


def _emit_graph(g: Graph, cfg: CommandConfig, out: TextIO, extra: Optional[dict] = None,
               default: str = "edgelist") -> None:
    if cfg.output is not None:
        write_graph(g, cfg.output)
        out.write(f"wrote {cfg.output} ({g.n} vertices, {g.edge_count} edges)\n")
        return
    style = cfg.fmt or default
    if style == "dot":
        out.write(render_dot(g))
    elif style == "json":
        doc = extra if extra is not None else {
            "n": g.n, "edges": [list(e) for e in g.edges()],
            "labels": [g.label(v) for v in g.vertices()],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    elif style == "table":
        out.write("".join(f"{g.label(u)} -- {g.label(v)}\n" for u, v in g.edges()))
    else:
        out.write(render_edge_list(g))


def _cmd_compute(cfg: CommandConfig, out: TextIO) -> int:
    assert cfg.graph is not None
    g = load_graph(cfg.graph)
    params = cfg.params or ["report"]
    values = _compute_values(g, params, cfg.allow_reduced_lp)
    style = cfg.fmt
    if style in ("dot", "edgelist"):
        raise _CliError("USAGE", f"compute does not support --{style}")
    if style == "json":
        out.write(render_json(g, cfg.graph, params, values))
    elif style is None and len(values) == 1:
        out.write(fmt(next(iter(values.values()))) + "\n")
    else:
        out.write(render_table(values))
    return 0


def _cmd_product(cfg: CommandConfig, out: TextIO) -> int:
    assert cfg.kind and cfg.left and cfg.right
    g, _ = PRODUCTS[cfg.kind](load_graph(cfg.left), load_graph(cfg.right))
    _emit_graph(g, cfg, out)
    return 0


def _cmd_srgraph(cfg: CommandConfig, out: TextIO) -> int:
    assert cfg.graph is not None
    sr = strong_resolving_graph(load_graph(cfg.graph))
    _emit_graph(sr.graph, cfg, out, extra=sr.to_dict(), default="json")
    return 0


def _cmd_family(cfg: CommandConfig, out: TextIO) -> int:
    assert cfg.graph is not None
    _emit_graph(families.generate(cfg.graph), cfg, out)
    return 0


def _cmd_verify(cfg: CommandConfig, out: TextIO) -> int:
    vcfg = VerifyConfig(seed=cfg.seed, random_graphs=cfg.random_graphs, fixture_dir=cfg.fixture_dir)
    results = run_suite(vcfg, cfg.only)
    if cfg.fmt == "json":
        doc = [{"id": r.check_id, "title": r.title, "passed": r.passed,
                "expected": r.summary()[0], "computed": r.summary()[1], "citation": r.citation}
               for r in results]
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(render_results(results))
    return 0 if all(r.passed for r in results) else 1


_COMMANDS: dict[str, Callable[[CommandConfig, TextIO], int]] = {
    "compute": _cmd_compute,
    "product": _cmd_product,
    "srgraph": _cmd_srgraph,
    "family": _cmd_family,
    "verify": _cmd_verify,
}


def run(cfg: CommandConfig, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    try:
        return _COMMANDS[cfg.subcommand](cfg, out)
    except (SdimlabError, _CliError) as exc:
        err.write(f"{exc}\n")
        return 2 if str(exc).startswith("USAGE") else 1
    except OSError as exc:
        err.write(f"IO_ERROR: {exc}\n")
        return 1


def _add_format(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group()
    for name in FORMATS:
        group.add_argument(f"--{name}", dest="fmt", action="store_const", const=name,
                           help=f"emit {name} output")


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--input", help="edge-list file (labels from <file>.labels.json if present)")
    group.add_argument("--family", help="inline family spec, e.g. cycle:7 or gq:4")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sdimlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("compute", help="compute invariants of a graph")
    _add_graph_source(p)
    p.add_argument("--param", action="append", choices=PARAMS, dest="params",
                   help="quantity to compute (repeatable; default: report)")
    p.add_argument("--allow-reduced-lp", action="store_true",
                   help="solve sdim_f over the strong resolving graph edges only")
    _add_format(p)

    p = sub.add_parser("product", help="build a graph product")
    p.add_argument("--kind", required=True, choices=sorted(PRODUCTS))
    p.add_argument("--left", required=True, help="file or family spec")
    p.add_argument("--right", required=True, help="file or family spec")
    p.add_argument("--output", type=Path, help="write edge list and label sidecar here")
    _add_format(p)

    p = sub.add_parser("srgraph", help="dump the strong resolving graph")
    _add_graph_source(p)
    p.add_argument("--output", type=Path)
    _add_format(p)

    p = sub.add_parser("family", help="emit a named family member")
    p.add_argument("--name", required=True, choices=families.family_names() + ["gq", "multipartite"])
    p.add_argument("--params", default="", help="comma-separated integers, e.g. 3,4")
    p.add_argument("--output", type=Path)
    _add_format(p)

    p = sub.add_parser("verify", help="run the acceptance battery")
    p.add_argument("--suite", choices=["paper"], default="paper")
    p.add_argument("--only", type=int, nargs="+", help="restrict to these check ids")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--random-graphs", type=int, default=500)
    p.add_argument("--fixture-dir", type=Path, default=Path("verify-failures"))
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", dest="fmt", action="store_const", const="json")
    group.add_argument("--table", dest="fmt", action="store_const", const="table")
    return parser


def parse_config(argv: Optional[list[str]] = None) -> CommandConfig:
    ns = build_parser().parse_args(argv)
    cfg = CommandConfig(subcommand=ns.subcommand, fmt=getattr(ns, "fmt", None))
    if ns.subcommand in ("compute", "srgraph"):
        cfg.graph = ns.input if ns.input is not None else ns.family
    if ns.subcommand == "compute":
        cfg.params = ns.params or []
        cfg.allow_reduced_lp = ns.allow_reduced_lp
    if ns.subcommand == "product":
        cfg.kind, cfg.left, cfg.right = ns.kind, ns.left, ns.right
    if ns.subcommand == "family":
        cfg.graph = f"{ns.name}:{ns.params}" if ns.params else ns.name
    if ns.subcommand in ("product", "srgraph", "family"):
        cfg.output = ns.output
    if ns.subcommand == "verify":
        cfg.suite, cfg.only, cfg.seed = ns.suite, ns.only, ns.seed
        cfg.random_graphs, cfg.fixture_dir = ns.random_graphs, ns.fixture_dir
    return cfg


def main(argv: Optional[list[str]] = None) -> int:
    return run(parse_config(argv))


if __name__ == "__main__":
    sys.exit(main())
