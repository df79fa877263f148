"""Command-line front end: d^2 checks, cohomology tables, comparisons, top-loop and bar checks.

Exit codes: 0 pass, 1 check failure, 2 usage error, 3 budget exceeded.
Data goes to stdout (or --out); progress goes to stderr.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from typing import Optional

import click

from . import algebra as A
from . import bar as Z
from . import chains
from . import decorated as DG
from .complexes import GraphComplex
from .enumerate import BudgetExceeded
from .graphs import Ambient, Graph, GraphError
from .invariants import three_loop_dim, two_loop_dim
from .toploop import graph_side_top_dim

log = logging.getLogger("graphcx")

GRAPH_KINDS = ("pgc", "pgc'", "hh", "hgc")
ALL_KINDS = GRAPH_KINDS + ("dgc", "a", "z")
HIDDEN_FACE_KINDS = ("dgc", "a", "z")

EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    complexes: tuple[str, ...] = ("pgc",)
    n: int = 7
    j: int = 5
    ks: tuple[int, ...] = (1,)
    gs: tuple[int, ...] = (1,)
    degree_min: Optional[int] = None
    degree_max: Optional[int] = None
    budget: Optional[int] = None
    out: Optional[str] = None
    fmt: str = "csv"
    threads: int = 1
    literal: bool = False

    @property
    def amb(self) -> Ambient:
        return Ambient(self.n, self.j)

    def pairs(self):
        return [(k, g) for k in self.ks for g in self.gs]

    def in_window(self, d: int) -> bool:
        return (self.degree_min is None or d >= self.degree_min) and (
            self.degree_max is None or d <= self.degree_max)


class UsageError(click.UsageError):
    pass


def parse_range(text) -> tuple[int, ...]:
    """'2', '1-3', '1..3' or '1,3' -> sorted tuple of ints."""
    if isinstance(text, int):
        return (text,)
    out = set()
    for part in str(text).split(","):
        part = part.strip()
        for sep in ("..", "-"):
            if sep in part[1:]:
                lo, hi = part.split(sep, 1) if sep == ".." else part.rsplit("-", 1)
                out.update(range(int(lo), int(hi) + 1))
                break
        else:
            out.add(int(part))
    return tuple(sorted(out))


def read_config_file(path: str) -> dict[str, str]:
    """Plain `key = value` lines; '#' starts a comment."""
    out = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"bad config line: {raw.rstrip()!r}")
            key, val = (s.strip() for s in line.split("=", 1))
            out[key.replace("-", "_")] = val
    return out


def build_config(ctx: click.Context, command: str, **opts) -> RunConfig:
    """Merge defaults, the config file, then explicitly given flags."""
    cfg = RunConfig(command)
    values: dict = {}
    if opts.get("config"):
        for key, val in read_config_file(opts["config"]).items():
            values[key] = val
    for key, val in opts.items():
        if key == "config" or val is None:
            continue
        src = ctx.get_parameter_source(key)
        if src is not None and src.name == "DEFAULT" and key in values:
            continue
        values[key] = val
    names = {f.name for f in fields(RunConfig)}
    conv: dict = {}
    for key, val in values.items():
        if key == "complex":
            conv["complexes"] = tuple(c.strip().lower() for c in str(val).split(",") if c.strip())
        elif key == "k":
            conv["ks"] = parse_range(val)
        elif key == "g":
            conv["gs"] = parse_range(val)
        elif key == "format":
            conv["fmt"] = str(val)
        elif key in ("n", "j", "threads", "degree_min", "degree_max", "budget"):
            conv[key] = int(val)
        elif key == "literal":
            conv[key] = val if isinstance(val, bool) else str(val).lower() in ("1", "true", "yes")
        elif key in names:
            conv[key] = val
        else:
            raise UsageError(f"unknown config key {key!r}")
    cfg = replace(cfg, **conv)
    validate(cfg)
    return cfg


def validate(cfg: RunConfig) -> None:
    try:
        cfg.amb
    except GraphError as e:
        raise UsageError(str(e))
    if cfg.fmt not in ("csv", "json"):
        raise UsageError("--format must be csv or json")
    for c in cfg.complexes:
        if c not in ALL_KINDS:
            raise UsageError(f"unknown complex {c!r}; choose from {', '.join(ALL_KINDS)}")
    if cfg.command in ("compare",) and len(cfg.complexes) < 2:
        raise UsageError("compare needs at least two complexes")
    if cfg.command not in ("toploop",) and not cfg.complexes:
        raise UsageError("no complex given")
    if cfg.threads < 1:
        raise UsageError("--threads must be positive")
    hidden = cfg.command == "barcheck" or any(c in HIDDEN_FACE_KINDS for c in cfg.complexes)
    if cfg.j == 2 and hidden and cfg.command != "toploop" and max(cfg.gs) > 3:
        raise UsageError("j = 2 is supported for A, Z and DGC only up to loop order g <= 3")
    if min(cfg.ks) < 0 or min(cfg.gs) < 0:
        raise UsageError("k and g must be non-negative")


# -- complexes by name ------------------------------------------------------------

def make_complex(kind: str, cfg: RunConfig, k: int, g: int):
    if kind in GRAPH_KINDS:
        return GraphComplex(kind, cfg.n, cfg.j, k, g, cfg.budget)
    if kind == "dgc":
        cx = DG.DecoratedComplex(cfg.n, cfg.j, k, g)
    elif kind == "a":
        cx = A.AlgebraComplex(cfg.amb, k, g)
    elif kind == "z":
        cx = Z.BarComplex(cfg.amb, k, g)
    else:
        raise UsageError(f"unknown complex {kind!r}")
    if cfg.budget is not None:
        size = sum(len(cx.basis(d)) for d in cx.degrees())
        if size > cfg.budget:
            raise BudgetExceeded(f"{kind} (k={k}, g={g}) has {size} basis elements > budget {cfg.budget}")
    return cx


def element_json(kind: str, x) -> object:
    if kind in GRAPH_KINDS:
        return Graph(*x).to_json()
    if kind == "dgc":
        return DG.to_json(x)
    if kind == "a":
        return A.seq_to_json(x)
    return Z.word_to_json(x)


# -- output -----------------------------------------------------------------------

def emit(cfg: RunConfig, header: list[str], rows: list[list], payload: Optional[object] = None) -> None:
    if cfg.fmt == "json":
        obj = payload if payload is not None else [dict(zip(header, r)) for r in rows]
        text = json.dumps(obj, indent=1, sort_keys=True) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        text = buf.getvalue()
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cohomology_rows(cfg: RunConfig, kind: str) -> list[list]:
    rows = []
    for k, g in cfg.pairs():
        log.info("cohomology %s (n=%d, j=%d, k=%d, g=%d)", kind, cfg.n, cfg.j, k, g)
        cx = make_complex(kind, cfg, k, g)
        for info in chains.cohomology(cx, cfg.threads):
            if cfg.in_window(info.degree):
                rows.append([kind, cfg.n, cfg.j, k, g, info.degree, info.dim_basis, info.dim_cohomology])
    return rows


# -- commands ---------------------------------------------------------------------

def run_d2check(cfg: RunConfig) -> int:
    failed = False
    rows = []
    for kind in cfg.complexes:
        for k, g in cfg.pairs():
            log.info("d2check %s (k=%d, g=%d)", kind, k, g)
            cx = make_complex(kind, cfg, k, g)
            bad = [(d, x) for d, x in chains.d2_check(cx, cfg.threads) if cfg.in_window(d)]
            size = sum(len(cx.basis(d)) for d in cx.degrees() if cfg.in_window(d))
            rows.append([kind, cfg.n, cfg.j, k, g, size, len(bad), "PASS" if not bad else "FAIL"])
            for d, x in bad[:5]:
                click.echo(f"d^2 != 0 on {kind} degree {d}: {json.dumps(element_json(kind, x))}", err=True)
            failed |= bool(bad)
    emit(cfg, ["complex", "n", "j", "k", "g", "basis_size", "failures", "result"], rows)
    return EXIT_FAIL if failed else 0


def run_cohomology(cfg: RunConfig) -> int:
    rows = []
    for kind in cfg.complexes:
        rows.extend(cohomology_rows(cfg, kind))
    emit(cfg, ["complex", "n", "j", "k", "g", "degree", "dim_basis", "dim_cohomology"], rows)
    return 0


def run_compare(cfg: RunConfig) -> int:
    tables = {kind: {} for kind in cfg.complexes}
    for kind in cfg.complexes:
        for r in cohomology_rows(cfg, kind):
            tables[kind][(r[3], r[4], r[5])] = r[7]
    keys = sorted({key for t in tables.values() for key in t})
    rows, ok = [], True
    for key in keys:
        dims = [tables[kind].get(key, 0) for kind in cfg.complexes]
        equal = len(set(dims)) == 1
        ok &= equal
        rows.append([cfg.n, cfg.j, *key, *dims, "equal" if equal else "DIFFERENT"])
    emit(cfg, ["n", "j", "k", "g", "degree", *cfg.complexes, "result"], rows)
    return 0 if ok else EXIT_FAIL


def run_toploop(cfg: RunConfig) -> int:
    parity = cfg.amb.parity
    if parity not in ("odd-odd", "even-even"):
        raise UsageError("the top-loop comparison needs n and j of the same parity")
    rows, ok = [], True
    lo = 1 if cfg.degree_min is None else max(1, cfg.degree_min)
    for g in cfg.gs:
        if g not in (2, 3):
            raise UsageError("top-loop oracles exist for g = 2 and g = 3")
        if g == 3 and parity != "odd-odd":
            raise UsageError("the g = 3 oracle is stated for the odd-odd case")
        hi = cfg.degree_max if cfg.degree_max is not None else (8 if g == 2 else 6)
        for h in range(lo, hi + 1):
            log.info("toploop g=%d hairs=%d", g, h)
            oracle = two_loop_dim(parity, h) if g == 2 else three_loop_dim(parity, h)
            graph = graph_side_top_dim(g, cfg.amb, h, cfg.budget)
            ok &= oracle == graph
            rows.append([g, parity, h, oracle, graph])
    emit(cfg, ["g", "parity", "degree", "dim_oracle", "dim_graph"], rows)
    return 0 if ok else EXIT_FAIL


def bar_identity_failures(amb: Ambient, k: int, g: int, literal: bool) -> tuple[int, int]:
    """(basis size, failures) of the homotopy identity on the basis of Z(k, g).

    Graded form: h d + d h = pi - id.  Literal form: h d - d h = id.
    """
    size = fails = 0
    for d, ws in Z.basis(amb, k, g).items():
        for w in ws:
            size += 1
            x = {w: Fraction(1)}
            hd = Z.homotopy(Z.diff(x, amb), amb)
            dh = Z.diff(Z.homotopy(x, amb), amb)
            acc = dict(hd)
            for key, c in dh.items():
                acc[key] = acc.get(key, 0) + (-c if literal else c)
            target = {w: Fraction(1)} if literal else {w: Fraction(-1)}
            if not literal:
                for key, c in Z.augmentation_projection(x).items():
                    target[key] = target.get(key, 0) + c
            diff = {key: acc.get(key, 0) - target.get(key, 0) for key in set(acc) | set(target)}
            if any(diff.values()):
                fails += 1
    return size, fails


def bar_acyclicity(amb: Ambient, k: int, g: int, threads: int = 1) -> dict[int, int]:
    """Nonzero cohomology dims of the sum of Z(k', g') over k' <= k, g' <= g."""
    cx = Z.BarComplex(amb, k, g, cumulative=True)
    return {i.degree: i.dim_cohomology for i in chains.cohomology(cx, threads) if i.dim_cohomology}


def run_barcheck(cfg: RunConfig) -> int:
    rows, ok = [], True
    for k, g in cfg.pairs():
        log.info("barcheck (k=%d, g=%d)", k, g)
        size, fails = bar_identity_failures(cfg.amb, k, g, cfg.literal)
        h = bar_acyclicity(cfg.amb, k, g, cfg.threads)
        acyclic = h == {0: 1}
        ok &= not fails and acyclic
        rows.append([cfg.n, cfg.j, k, g, "hd-dh=id" if cfg.literal else "hd+dh=pi-id", size, fails,
                     json.dumps(h, sort_keys=True), "PASS" if not fails and acyclic else "FAIL"])
    emit(cfg, ["n", "j", "k", "g", "identity", "basis_size", "failures", "cohomology", "result"], rows)
    return 0 if ok else EXIT_FAIL


def run_enumerate(cfg: RunConfig) -> int:
    payload = []
    for kind in cfg.complexes:
        for k, g in cfg.pairs():
            cx = make_complex(kind, cfg, k, g)
            for d in cx.degrees():
                if cfg.in_window(d):
                    payload.append({"complex": kind, "n": cfg.n, "j": cfg.j, "k": k, "g": g, "degree": d,
                                    "basis": [element_json(kind, x) for x in cx.basis(d)]})
    if cfg.fmt == "csv":
        rows = [[p["complex"], p["n"], p["j"], p["k"], p["g"], p["degree"], len(p["basis"])] for p in payload]
        emit(cfg, ["complex", "n", "j", "k", "g", "degree", "dim_basis"], rows)
    else:
        emit(cfg, [], [], payload)
    return 0


RUNNERS = {
    "d2check": run_d2check, "cohomology": run_cohomology, "compare": run_compare,
    "toploop": run_toploop, "barcheck": run_barcheck, "enumerate": run_enumerate,
}


# -- click wiring -----------------------------------------------------------------

def shared(fn):
    opts = [
        click.option("--config", type=click.Path(exists=True, dir_okay=False), help="key = value config file"),
        click.option("--complex", "complex", help="comma-separated: " + ", ".join(ALL_KINDS)),
        click.option("--n", type=int), click.option("--j", type=int),
        click.option("--k", help="order: 2, 1-3 or 1,3"), click.option("--g", help="loop order, same syntax"),
        click.option("--degree-min", type=int), click.option("--degree-max", type=int),
        click.option("--budget", type=int, help="maximum basis size"),
        click.option("--threads", type=int), click.option("--format", "format", type=click.Choice(["json", "csv"])),
        click.option("--out", type=click.Path(dir_okay=False)),
    ]
    for o in reversed(opts):
        fn = o(fn)
    return fn


def _run(ctx: click.Context, command: str, opts: dict) -> None:
    try:
        cfg = build_config(ctx, command, **opts)
        code = RUNNERS[command](cfg)
    except click.UsageError:
        raise
    except BudgetExceeded as e:
        click.echo(f"budget exceeded: {e}", err=True)
        ctx.exit(EXIT_BUDGET)
    except (ValueError, GraphError) as e:
        raise UsageError(str(e))
    ctx.exit(code)


@click.group()
@click.option("--quiet", is_flag=True, help="no progress messages")
def main(quiet: bool) -> None:
    """Exact graph-complex homology engine."""
    logging.basicConfig(level=logging.WARNING if quiet else logging.INFO,
                        format="%(message)s", stream=sys.stderr)


def _command(name: str, help_text: str, extra=()):
    def body(**opts):
        _run(click.get_current_context(), name, opts)

    body.__name__ = name
    body.__doc__ = help_text
    fn = shared(body)
    for o in extra:
        fn = o(fn)
    return main.command(name)(fn)


_command("d2check", "Verify d^2 = 0 on every basis element.")
_command("cohomology", "Cohomology dimension table.")
_command("compare", "Check that cohomology dimensions agree across complexes.")
_command("toploop", "Top-loop oracle vs graph-side dimensions (g = 2, 3).")
_command("barcheck", "Homotopy identity and acyclicity of the bar complex.",
         extra=[click.option("--literal", is_flag=True, default=None,
                             help="check h d - d h = id as printed instead of the graded identity")])
_command("enumerate", "Dump basis elements as JSON (counts as CSV).")


if __name__ == "__main__":  # pragma: no cover
    main()
