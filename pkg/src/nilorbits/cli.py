"""Command-line interface.

Usage:
    nilorbits orbits list --type G2
    nilorbits orbit info --type C --rank 3 --partition 2,2,1,1
    nilorbits ideals --type D --rank 5 --classify --jobs 4
    nilorbits verify --suite lonely --max-rank 5

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 internal
assertion (genericity or identification failure).
"""
from __future__ import annotations

import csv
import io
import sys

import click

from . import __version__
from .analysis import analyze, type_payload
from .cache import PayloadCache, content_hash, dumps
from .centralizers import CentralizerError
from .chevalley import DEFAULT_SEED, ChevalleyError, GenericityError, UnsupportedOperation
from .ideals import LARGE_TYPES, ClassificationError, enumerate_ideals, generalized_catalan
from .orbits import LabelError, OrbitError, Partition, WeightedDynkinDiagram
from .rootsys import RootSystemError, SimpleType, build_root_system, root_str
from .suites import SUITES, SuiteConfig, run_suites

EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 1, 2, 3
INTERNAL_ERRORS = (GenericityError, OrbitError, CentralizerError, ClassificationError, ChevalleyError)

ORBIT_COLUMNS = [
    ("orbit", "text"),
    ("dim", "dim"),
    ("wDd", "wddString"),
    ("even", "even"),
    ("Richardson", "richardson"),
    ("rigid", "rigid"),
    ("extreme", "extreme"),
    ("lonely", "lonely"),
    ("d_min", "dMin"),
    ("d_Dy", "dDy"),
    ("d_max", "dMax"),
]


class _Group(click.Group):
    """Maps library errors onto the documented exit codes."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (LabelError, RootSystemError, UnsupportedOperation) as exc:
            raise click.UsageError(str(exc), ctx) from exc
        except INTERNAL_ERRORS as exc:
            click.echo(f"internal error: {type(exc).__name__}: {exc}", err=True)
            ctx.exit(EXIT_INTERNAL)


# --- helpers ----------------------------------------------------------------------


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "-"
    if v is None:
        return ""
    return str(v)


def render_table(headers: list[str], rows: list[list]) -> str:
    cells = [[_fmt(v) for v in r] for r in rows]
    widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines)


def render_csv(headers: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(headers)
    for r in rows:
        w.writerow(["" if v is None else v for v in r])
    return buf.getvalue().rstrip("\n")


def emit(fmt: str, obj, headers: list[str], rows: list[list], preamble: str = ""):
    if fmt == "json":
        click.echo(dumps(obj), nl=False)
    elif fmt == "csv":
        click.echo(render_csv(headers, rows))
    else:
        if preamble:
            click.echo(preamble)
        click.echo(render_table(headers, rows))


def parse_type(type_: str, rank: int | None) -> SimpleType:
    try:
        t = SimpleType.parse(type_, rank)
        build_root_system(t)
    except (RootSystemError, ValueError) as exc:
        raise click.BadParameter(str(exc), param_hint="--type/--rank") from exc
    if rank is not None and t.rank != rank:
        raise click.BadParameter(f"{type_} conflicts with --rank {rank}", param_hint="--rank")
    return t


def _int_list(text: str, name: str) -> list[int]:
    parts = text.split(",") if "," in text else list(text) if name == "--wdd" else [text]
    try:
        return [int(p) for p in parts if p.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}", param_hint=name) from None


def _refuse_large(t: SimpleType, allow_large: bool):
    if t in LARGE_TYPES and not allow_large:
        raise click.UsageError(
            f"{t} has {generalized_catalan(t)} ideals and its classification is out of desk range; "
            "pass --allow-large to run it anyway"
        )


class Context:
    def __init__(self, fmt: str, no_cache: bool, cache_dir: str | None):
        self.fmt = fmt
        self.cache = PayloadCache(cache_dir, enabled=not no_cache)

    def payload(self, t: SimpleType, seed: int, jobs: int, allow_large: bool = False) -> dict:
        digest = content_hash(family=t.family, rank=t.rank, seed=seed, version=__version__)
        return self.cache.get_or_compute(
            t.family, t.rank, digest, lambda: type_payload(analyze(t, seed, jobs, allow_large=allow_large))
        )


def _common(f):
    f = click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True, help="Global seed for generic elements.")(f)
    f = click.option("--rank", type=int, default=None, help="Rank, if --type is a bare family letter.")(f)
    f = click.option("--type", "type_", required=True, help="Type such as G2, F4, or a family letter with --rank.")(f)
    return f


# --- commands ---------------------------------------------------------------------


@click.group(cls=_Group)
@click.version_option(__version__, prog_name="nilorbits")
@click.option("--format", "fmt", type=click.Choice(["table", "json", "csv"]), default="table", show_default=True)
@click.option("--no-cache", is_flag=True, help="Neither read nor write the on-disk cache.")
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None, envvar="ORBITS_CACHE_DIR",
              help="Cache directory (default: $ORBITS_CACHE_DIR or ~/.cache/nilorbits).")
@click.pass_context
def cli(ctx, fmt, no_cache, cache_dir):
    """Nilpotent orbits and ad-nilpotent ideals in simple Lie algebras."""
    ctx.obj = Context(fmt, no_cache, cache_dir)


@cli.group()
def orbits():
    """Orbit tables."""


@orbits.command("list")
@_common
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--allow-large", is_flag=True, help="Permit E7/E8 (very slow).")
@click.pass_obj
def orbits_list(obj: Context, type_, rank, seed, jobs, allow_large):
    """One row per nilpotent orbit with its extreme/lonely flags and d_min, d_Dy, d_max."""
    t = parse_type(type_, rank)
    _refuse_large(t, allow_large)
    p = obj.payload(t, seed, jobs, allow_large)
    headers = [h for h, _ in ORBIT_COLUMNS]
    rows = [[o[k] for _, k in ORBIT_COLUMNS] for o in p["orbits"]]
    r = p["roles"]
    note = f"{t}: {len(rows)} orbits, {p['idealCount']} ad-nilpotent ideals; O_min = {r['minimal']}, O_pr = {r['principal']}"
    if r["intermediate"]:
        note += f", O_imd = {r['intermediate']}"
    emit(obj.fmt, {"type": t.family, "rank": t.rank, "seed": seed, "roles": r, "orbits": p["orbits"]}, headers, rows, note)


@cli.group()
def orbit():
    """Single-orbit queries."""


@orbit.command("info")
@_common
@click.option("--partition", default=None, help="Jordan type, e.g. 2,2,1,1 (classical types).")
@click.option("--family", type=click.Choice(["I", "II"]), default=None, help="Very even class in type D.")
@click.option("--wdd", default=None, help="Weighted Dynkin diagram, e.g. 1,0,1,2 or 1012.")
@click.option("--jobs", type=int, default=1, show_default=True)
@click.pass_obj
def orbit_info(obj: Context, type_, rank, seed, partition, family, wdd, jobs):
    """Grading, centralizer and ideal-class data of one orbit."""
    t = parse_type(type_, rank)
    _refuse_large(t, False)
    if (partition is None) == (wdd is None):
        raise click.UsageError("give exactly one of --partition and --wdd")
    if partition is not None:
        if not t.is_classical:
            raise click.UsageError(f"{t} is exceptional; use --wdd")
        target = Partition.of(_int_list(partition, "--partition"))
        key = ("partition", list(target.parts), family)
    else:
        labels = _int_list(wdd, "--wdd")
        WeightedDynkinDiagram(tuple(labels))
        key = ("wdd", "".join(map(str, labels)), None)
    p = obj.payload(t, seed, jobs)
    idx = _find_orbit(p, key)
    if idx is None:
        raise click.UsageError(f"no nilpotent orbit of {t} with {key[0]} {partition or wdd}"
                               + (f" family {family}" if family else ""))
    row, cls, det = p["orbits"][idx], p["classes"][idx], p["details"][idx]
    info = {"orbit": row, "class": {k: v for k, v in cls.items() if k != "ideals"}, **{k: v for k, v in det.items() if k != "text"}}
    if obj.fmt == "json":
        click.echo(dumps(info), nl=False)
        return
    c = det["centralizer"]
    pairs = [(h, _fmt(row[k])) for h, k in ORBIT_COLUMNS]
    pairs += [
        ("grading dims g(h;i)", ", ".join(f"{i}:{n}" for i, n in det["gradingDims"].items())),
        ("dim g_e", c["dimGe"]),
        ("dim reductive part", c["dimGeRed"]),
        ("rk G_e", c["rkGe"]),
        ("dim unipotent part", c["dimGeU"]),
        ("dim B(G_e)", c["dimBGe"]),
        ("dim B - dim B(G_e)", c["dMinFormula"]),
        ("Dynkin ideal generators", " ".join(det["dynkinIdeal"]) or "(empty)"),
        ("polarisations (S)", "; ".join(",".join(map(str, S)) for S in det["polarisations"]) or "none"),
        ("class size", cls["idealCount"]),
        ("class dims", " ".join(map(str, cls["dims"]))),
        ("Hasse connected", _fmt(cls["hasseConnected"])),
    ]
    emit(obj.fmt, info, ["field", "value"], [list(x) for x in pairs])


def _find_orbit(p: dict, key) -> int | None:
    kind, value, family = key
    for i, o in enumerate(p["orbits"]):
        lab = o["label"]
        if kind == "wdd" and o["wddString"] == value:
            return i
        if kind == "partition" and lab.get("partition") == value:
            if lab.get("family") == family or (family is None and lab.get("family") is None):
                return i
    return None


@cli.command()
@_common
@click.option("--classify", is_flag=True, help="Group ideals by associated orbit.")
@click.option("--list", "list_", is_flag=True, help="List every ideal by its generators.")
@click.option("--jobs", type=int, default=1, show_default=True, help="Worker processes for classification.")
@click.option("--allow-large", is_flag=True, help="Permit E7/E8 (hours of computation).")
@click.pass_obj
def ideals(obj: Context, type_, rank, seed, classify, list_, jobs, allow_large):
    """Enumerate ad-nilpotent ideals, optionally classified by orbit."""
    t = parse_type(type_, rank)
    _refuse_large(t, allow_large)
    if t in LARGE_TYPES:
        click.echo(f"warning: classifying {t} takes a very long time", err=True)
    if not classify:
        rs = build_root_system(t)
        ids = enumerate_ideals(rs)
        gens = [[root_str(rs.positive_roots[k].coords) for k in I.generators] for I in ids]
        obj_ = {"type": t.family, "rank": t.rank, "idealCount": len(ids), "catalan": generalized_catalan(t)}
        if list_:
            obj_["ideals"] = [{"dim": I.dim, "generators": g} for I, g in zip(ids, gens)]
        note = f"{t}: {len(ids)} ad-nilpotent ideals"
        if not list_ and obj.fmt == "table":
            click.echo(note)
            return
        rows = [[I.dim, " ".join(g) or "(empty)"] for I, g in zip(ids, gens)]
        emit(obj.fmt, obj_, ["dim", "generators"], rows, note)
        return
    p = obj.payload(t, seed, jobs, allow_large)
    classes = p["classes"] if list_ else [{k: v for k, v in c.items() if k != "ideals"} for c in p["classes"]]
    headers = ["orbit", "ideals", "dims", "d_min", "d_max", "#maximal", "minimal dims", "Hasse connected"]
    rows = []
    for c, o in zip(p["classes"], p["orbits"]):
        dims = c["dims"]
        span = f"{dims[0]}..{dims[-1]}" if dims[0] != dims[-1] else str(dims[0])
        rows.append([c["text"], c["idealCount"], span, o["dMin"], o["dMax"], len(c["maximal"]),
                     " ".join(map(str, c["minimalDims"])), c["hasseConnected"]])
    emit(obj.fmt, {"type": t.family, "rank": t.rank, "seed": seed, "idealCount": p["idealCount"], "classes": classes},
         headers, rows, f"{t}: {p['idealCount']} ad-nilpotent ideals in {len(rows)} classes")
    if list_ and obj.fmt == "table":
        for c in p["classes"]:
            click.echo(f"\n{c['text']}:")
            for g in c["ideals"]:
                click.echo("  " + (" ".join(g) or "(empty)"))


@cli.command()
@click.option("--suite", "suites", multiple=True, type=click.Choice(("all",) + SUITES), default=("all",), show_default=True)
@click.option("--max-rank", type=int, default=5, show_default=True)
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--allow-large", is_flag=True, envvar="NILORBITS_E6", help="Also classify E6 (env NILORBITS_E6=1).")
@click.pass_obj
def verify(obj: Context, suites, max_rank, seed, jobs, allow_large):
    """Run verification suites; exit 1 if any check fails."""
    cfg = SuiteConfig(max_rank=max_rank if not allow_large else max(max_rank, 6), seed=seed, jobs=jobs, include_e6=allow_large)
    checks = run_suites(suites, cfg)
    failed = [c for c in checks if not c.ok]
    if obj.fmt == "json":
        click.echo(dumps({"passed": len(checks) - len(failed), "failed": len(failed),
                          "checks": [{"suite": c.suite, "name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]}), nl=False)
    elif obj.fmt == "csv":
        click.echo(render_csv(["suite", "check", "ok", "detail"], [[c.suite, c.name, c.ok, c.detail] for c in checks]))
    else:
        for c in checks:
            line = f"{'PASS' if c.ok else 'FAIL'}  [{c.suite}] {c.name}"
            if not c.ok and c.detail:
                line += f"  ({c.detail})"
            click.echo(line)
        click.echo(f"\n{len(checks) - len(failed)} passed, {len(failed)} failed")
    if failed:
        sys.exit(EXIT_FAIL)


def main():
    cli(prog_name="nilorbits")


if __name__ == "__main__":
    main()
