"""Command-line surface.

Subcommands: spectrum, starsets, invariants, isocheck, verify, corpus.
Graphs are accepted as file paths (graph6, edge list, or JSON), corpus
names, small family names (K5, C6, P4, K1,4), or literal graph6 text.
Exit codes: 0 success/inconclusive, 1 failed check or non-isomorphism
witness, 2 error.  Rationals are printed as "p" or "p/q", never as
decimals; pass negative eigenvalues as --lambda=-2.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import constructions, invariants, isocheck, spectral, starsets
from .errors import ParseError, StarkitError
from .exactla import format_rational, parse_rational
from .graphio import (
    CORPUS_NAMES,
    Graph,
    complete_graph,
    corpus,
    cycle_graph,
    empty_graph,
    from_graph6,
    join,
    path_graph,
    read_graph,
    star_graph,
    write_graph,
)

ENV_CAP = "STARKIT_CAP"

_FAMILY_RE = re.compile(r"^(K|C|P)(\d+)$")
_STAR_RE = re.compile(r"^K1,(\d+)$")


@dataclass(frozen=True)
class RunConfig:
    inputs: tuple[str, ...]
    graph_format: str | None
    value: Fraction | None
    cap: int | None
    output: str
    tableaux: bool
    seed_star_set: tuple[str, ...] | None
    batch: bool
    check: str | None
    co_star: tuple[str, ...] | None


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    value = None
    raw = getattr(args, "lam", None)
    if raw is None:
        raw = getattr(args, "lam_positional", None)
    if raw is not None:
        try:
            value = parse_rational(raw)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    cap = getattr(args, "cap", None)
    if cap is None and os.environ.get(ENV_CAP):
        try:
            cap = int(os.environ[ENV_CAP])
        except ValueError:
            raise ParseError(f"bad {ENV_CAP} value {os.environ[ENV_CAP]!r}")
    if cap is not None and cap < 1:
        raise ParseError("cap must be at least 1")
    seed = getattr(args, "seed_star_set", None)
    co_star = getattr(args, "co_star", None)
    return RunConfig(
        inputs=tuple(getattr(args, "inputs", ()) or ()),
        graph_format=getattr(args, "fmt", None),
        value=value,
        cap=cap,
        output=getattr(args, "output", "ascii"),
        tableaux=getattr(args, "tableaux", False),
        seed_star_set=tuple(seed.split(",")) if seed else None,
        batch=getattr(args, "batch", False),
        check=getattr(args, "check", None),
        co_star=tuple(co_star.split(",")) if co_star else None,
    )


def _sniff_format(text: str) -> str:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return "json"
    for line in text.splitlines():
        if line.strip():
            return "edges" if line.strip().startswith("n=") else "graph6"
    return "graph6"


def _family_graph(token: str) -> Graph | None:
    m = _STAR_RE.match(token)
    if m:
        return star_graph(int(m.group(1)))
    m = _FAMILY_RE.match(token)
    if not m:
        return None
    kind, size = m.group(1), int(m.group(2))
    if kind == "K":
        return complete_graph(size)
    if kind == "C":
        return cycle_graph(size)
    return path_graph(size)


def _load_graph(token: str, fmt: str | None) -> Graph:
    """Resolve a graph argument: path, corpus name, family name, or
    literal graph6 text."""
    path = Path(token)
    if path.is_file():
        text = path.read_text()
        use = fmt or {".g6": "graph6", ".json": "json",
                      ".edges": "edges"}.get(path.suffix) or _sniff_format(text)
        return read_graph(text, use)
    if token in CORPUS_NAMES:
        return corpus(token)
    family = _family_graph(token)
    if family is not None:
        return family
    if fmt and fmt != "graph6":
        return read_graph(token, fmt)
    try:
        return from_graph6(token)
    except ParseError:
        raise ParseError(
            f"could not resolve graph argument {token!r}: not a file, "
            f"corpus name, family name, or valid graph6") from None


def _resolve_vertices(graph: Graph, names) -> tuple[int, ...]:
    return tuple(graph.vertex_named(name.strip()) for name in names)


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _set_str(graph: Graph, members) -> str:
    return "{" + ", ".join(graph.label(v) for v in members) + "}"


# ---------------------------------------------------------------------------
# spectrum

def _spectrum_line(report: spectral.SpectrumReport) -> str:
    parts = []
    for e in report.entries:
        text = format_rational(e.value)
        if e.multiplicity > 1:
            text += f"^{e.multiplicity}"
        if e.is_main:
            text += " (main)"
        parts.append(text)
    line = ", ".join(parts) if parts else "(no rational eigenvalues)"
    if report.residual_degree:
        line += f"  [irrational part of degree {report.residual_degree}]"
    return line


def _spectrum_json(report: spectral.SpectrumReport) -> dict:
    return {
        "entries": [
            {"lambda": format_rational(e.value),
             "multiplicity": e.multiplicity,
             "main": e.is_main}
            for e in report.entries],
        "residual_degree": report.residual_degree,
    }


def _batch_lines(token: str) -> list[str]:
    text = sys.stdin.read() if token == "-" else Path(token).read_text()
    return [ln.strip() for ln in text.splitlines() if ln.strip()]


def _run_batch(cfg: RunConfig, per_graph) -> int:
    """Apply per_graph to each graph6 line independently; a bad line
    reports its error and the batch continues."""
    results = []
    any_error = False
    for line in _batch_lines(cfg.inputs[0]):
        try:
            results.append((line, per_graph(from_graph6(line)), None))
        except StarkitError as exc:
            any_error = True
            results.append((line, None, str(exc)))
    if cfg.output == "json":
        _print_json([
            {"input": line, "ok": err is None,
             **({"result": res} if err is None else {"error": err})}
            for line, res, err in results])
    else:
        for line, res, err in results:
            print(f"{line} -> {res if err is None else 'error: ' + err}")
    return 2 if any_error else 0


def cmd_spectrum(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    if cfg.batch:
        if cfg.output == "json":
            return _run_batch(cfg, lambda g: _spectrum_json(
                spectral.rational_spectrum(g)))
        return _run_batch(cfg, lambda g: _spectrum_line(
            spectral.rational_spectrum(g)))
    graph = _load_graph(cfg.inputs[0], cfg.graph_format)
    report = spectral.rational_spectrum(graph)
    if cfg.output == "json":
        _print_json(_spectrum_json(report))
    else:
        print(_spectrum_line(report))
    return 0


# ---------------------------------------------------------------------------
# starsets

def _require_value(cfg: RunConfig) -> Fraction:
    if cfg.value is None:
        raise ParseError("this command needs --lambda (use --lambda=-2 for "
                         "negative values)")
    return cfg.value


def _starsets_catalog(cfg: RunConfig, graph: Graph) -> starsets.StarSetCatalog:
    seed = None
    if cfg.seed_star_set:
        seed = _resolve_vertices(graph, cfg.seed_star_set)
    return starsets.enumerate_star_sets(
        graph, _require_value(cfg), cap=cfg.cap, seed=seed)


def cmd_starsets(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    graph = _load_graph(cfg.inputs[0], cfg.graph_format)
    catalog = _starsets_catalog(cfg, graph)
    if cfg.output == "json":
        obj = {
            "lambda": format_rational(catalog.value),
            "k_lambda": catalog.k_lambda,
            "complete": catalog.complete,
            "star_sets": [],
        }
        for item in catalog.items:
            entry = {
                "X": [graph.label(v) for v in item.star_set.members],
                "main": [graph.label(v) for v in item.main_vertices],
            }
            if cfg.tableaux:
                entry["tableau"] = starsets.tableau_to_json(
                    starsets.build_tableau(graph, catalog.value,
                                           item.star_set.members))
            obj["star_sets"].append(entry)
        _print_json(obj)
        return 0
    print(f"lambda = {format_rational(catalog.value)} "
          f"(multiplicity {catalog.k_lambda}): {len(catalog.items)} star sets")
    for item in catalog.items:
        print(f"{_set_str(graph, item.star_set.members)}  "
              f"main: {_set_str(graph, item.main_vertices)}")
        if cfg.tableaux:
            tab = starsets.build_tableau(graph, catalog.value,
                                         item.star_set.members)
            print(starsets.render_tableau(tab))
            print()
    return 0


def cmd_invariants(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    graph = _load_graph(cfg.inputs[0], cfg.graph_format)
    catalog = _starsets_catalog(cfg, graph)
    rep = invariants.report(catalog, graph)
    if cfg.output == "json":
        _print_json(invariants.report_to_json(rep, graph))
    else:
        print(invariants.render_report(rep, graph))
    return 0


# ---------------------------------------------------------------------------
# isocheck

def cmd_isocheck(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    g = _load_graph(cfg.inputs[0], cfg.graph_format)
    h = _load_graph(cfg.inputs[1], cfg.graph_format)
    verdict = isocheck.compare(g, h, cap=cfg.cap)
    if cfg.output == "json":
        _print_json(isocheck.verdict_to_json(verdict))
    else:
        for w in verdict.witnesses:
            tag = "ok  " if w.passed else "FAIL"
            where = f" @ lambda={w.eigenvalue}" if w.eigenvalue is not None else ""
            print(f"[{tag}] {w.condition}{where}: {w.left} vs {w.right}")
        for note in verdict.notes:
            print(f"note: {note}")
        if verdict.regular_caveat:
            print("note: both graphs are regular; these conditions cannot "
                  "separate cospectral regular pairs")
        print(f"verdict: {verdict.status}")
    return 1 if verdict.status == isocheck.NOT_ISOMORPHIC else 0


# ---------------------------------------------------------------------------
# verify

def _verify_cone(cfg: RunConfig, graph: Graph) -> int:
    params = constructions.srg_params(graph)
    if params is None:
        raise StarkitError("input graph is not strongly regular")
    print(f"srg parameters: n={params.n} k={params.k} "
          f"lambda_adj={params.lambda_adj} mu_adj={params.mu_adj}")
    ok = constructions.cone_three_eigenvalue_check(graph)
    spec = spectral.rational_spectrum(graph)
    nu, _, lam = (e.value for e in spec.entries)
    l, v = format_rational(lam), format_rational(nu)
    product = format_rational(lam * (nu - lam))
    relation = "=" if ok else "!="
    print(f"identity: ({l})({v}-({l})) = {product} {relation} -n")
    if ok:
        cone = join(empty_graph(1), graph)
        print(f"cone spectrum: {_spectrum_line(spectral.rational_spectrum(cone))}")
    print(f"verdict: {'pass' if ok else 'fail'}")
    return 0 if ok else 1


def _verify_aleph_max(cfg: RunConfig, graph: Graph) -> int:
    value = _require_value(cfg)
    catalog = starsets.enumerate_star_sets(graph, value, cap=cfg.cap)
    amax = max(len(item.main_vertices) for item in catalog.items)
    ok = amax == catalog.k_lambda
    print(f"aleph_max({format_rational(value)}) = {amax}, "
          f"multiplicity = {catalog.k_lambda}")
    print(f"verdict: {'pass' if ok else 'fail'}")
    return 0 if ok else 1


def _verify_complement_check(cfg: RunConfig, graph: Graph, kind: str) -> int:
    value = _require_value(cfg)
    if not cfg.co_star:
        raise ParseError("this check needs --co-star v1,v2,...")
    co = _resolve_vertices(graph, cfg.co_star)
    if kind == "tk1":
        ok = constructions.check_tk1_proposition(graph, value, co)
        shape = f"edgeless on {len(co)} vertices"
    else:
        ok = constructions.check_kt_proposition(graph, value, co)
        shape = f"complete on {len(co)} vertices"
    print(f"star complement: {_set_str(graph, co)} ({shape})")
    print(f"lambda = {format_rational(value)}")
    print(f"every star vertex main: {'yes' if ok else 'no'}")
    print(f"verdict: {'pass' if ok else 'fail'}")
    return 0 if ok else 1


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    graph = _load_graph(cfg.inputs[0], cfg.graph_format)
    if cfg.check == "cone":
        return _verify_cone(cfg, graph)
    if cfg.check == "aleph-max":
        return _verify_aleph_max(cfg, graph)
    if cfg.check in ("tk1", "kt"):
        return _verify_complement_check(cfg, graph, cfg.check)
    raise ParseError(f"unknown check {cfg.check!r}")


# ---------------------------------------------------------------------------
# corpus

def cmd_corpus(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    if not cfg.inputs:
        for name in CORPUS_NAMES:
            g = corpus(name)
            print(f"{name:<10} n={g.n:<3} edges={g.edge_count()}")
        return 0
    g = corpus(cfg.inputs[0])
    sys.stdout.write(write_graph(g, cfg.graph_format or "graph6"))
    return 0


# ---------------------------------------------------------------------------
# parser

def _add_common(p: argparse.ArgumentParser, graphs: int, lam: bool = False,
                batch: bool = False) -> None:
    p.add_argument("inputs", nargs=graphs, metavar="GRAPH",
                   help="file path, corpus name, family name (K5, C6, P4, "
                        "K1,4), or literal graph6")
    p.add_argument("--format", dest="fmt", choices=["graph6", "edges", "json"],
                   help="input format (default: sniffed)")
    p.add_argument("--output", choices=["ascii", "json"], default="ascii")
    p.add_argument("--cap", type=int, help="star-set enumeration cap "
                   f"(default C(n, k); env {ENV_CAP} overrides the default)")
    if lam:
        p.add_argument("--lambda", dest="lam", metavar="P/Q",
                       help="eigenvalue, e.g. 0 or --lambda=-2")
    if batch:
        p.add_argument("--batch", action="store_true",
                       help="treat GRAPH as a file of graph6 lines")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starkit",
        description="Exact star-set toolkit: star complements, main-vertex "
                    "classification, star-set invariants, and a cospectral "
                    "non-isomorphism screen.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="rational spectrum with mainness flags")
    _add_common(p, 1, batch=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("starsets", help="enumerate the star sets of an eigenvalue")
    _add_common(p, 1, lam=True)
    p.add_argument("--tableaux", action="store_true",
                   help="print each star set's tableau")
    p.add_argument("--seed-star-set", metavar="V1,V2,...",
                   help="start the enumeration from this star set")
    p.set_defaults(func=cmd_starsets)

    p = sub.add_parser("invariants", help="star-set invariant report")
    _add_common(p, 1, lam=True)
    p.add_argument("--seed-star-set", metavar="V1,V2,...")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("isocheck", help="non-isomorphism screen for two graphs")
    _add_common(p, 2)
    p.set_defaults(func=cmd_isocheck)

    p = sub.add_parser("verify", help="structural checks: cone, tk1, kt, aleph-max")
    p.add_argument("check", choices=["cone", "tk1", "kt", "aleph-max"])
    _add_common(p, 1, lam=True)
    p.add_argument("lam_positional", nargs="?", metavar="LAMBDA",
                   help="eigenvalue (alternative to --lambda)")
    p.add_argument("--co-star", dest="co_star", metavar="V1,V2,...",
                   help="vertices of the candidate star complement")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="list or emit the named corpus graphs")
    p.add_argument("inputs", nargs="*", metavar="NAME")
    p.add_argument("--format", dest="fmt", choices=["graph6", "edges", "json"])
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StarkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
