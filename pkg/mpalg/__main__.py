"""Entry point for mpalg CLI."""

from __future__ import annotations

import csv
import functools
import io
import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Optional

import rich_click as click
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from mpalg import __version__
from mpalg.core import multiset_algebra as mp
from mpalg.core import partition_algebra as pa
from mpalg.core import symmetric_functions as sf
from mpalg.core.combinatorics import IntegerPartition, count_syt, enumerate_partitions
from mpalg.core.config import OUTPUT_FORMATS, SIZES, Config, ConfigError, ConfigLoader
from mpalg.core.errors import MpalgError, OracleDataError, WireFormatError
from mpalg.core.exact import PolyXi
from mpalg.core.rsk import inverse_rsk, rsk_of_diagram, symmetry_check
from mpalg.core.schur_weyl import (
    centralizer_dimension,
    commutant_dimension,
    module_basis,
    phi,
    structure_count_table,
)
from mpalg.core.suites import SuiteManager
from mpalg.models.diagram import (
    MPDiagramModel,
    MPElementModel,
    PAElementModel,
    load_json,
    parse_mp_diagram,
    parse_mp_element,
    parse_pa_element,
    validate_model,
)
from mpalg.models.tableau import TableauModel, TableauPairModel
from mpalg.utils.log import configure_logging

click.rich_click.TEXT_MARKUP = "rich"
click.rich_click.SHOW_ARGUMENTS = True


@dataclass
class CliState:
    """Objects shared by every subcommand through ``ctx.obj``."""

    config: Config
    console: Console


def _state(ctx: click.Context) -> CliState:
    return ctx.find_object(CliState)


def handle_errors(fn: Callable) -> Callable:
    """Map MpalgError and pydantic failures to a red diagnostic and exit code 2."""

    @functools.wraps(fn)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        ctx = click.get_current_context()
        try:
            return fn(*args, **kwargs)
        except (MpalgError, ValidationError) as e:
            _state(ctx).console.print(f"[red]Error:[/red] {escape(str(e))}")
            ctx.exit(2)

    return wrapper


# Option parsing


def _parse_lambda(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> Optional[tuple[int, ...]]:
    if value is None:
        return None
    text = value.strip()
    if text in ("", "0"):
        return (0,)
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")
    if any(p < 0 for p in parts):
        raise click.BadParameter(f"entries must be non-negative, got {value!r}")
    return parts


def _parse_partition(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> Optional[IntegerPartition]:
    parts = _parse_lambda(ctx, param, value)
    if parts is None:
        return None
    try:
        return IntegerPartition(parts)
    except ValueError as e:
        raise click.BadParameter(str(e))


def lambda_option(required: bool = True, help: str = "Weight vector lambda, e.g. 2,1.") -> Callable:
    return click.option("--lambda", "lam", required=required, callback=_parse_lambda, help=help)


def format_option(*choices: str) -> Callable:
    return click.option(
        "--format",
        "output_format",
        type=click.Choice(choices),
        default=None,
        help="Output format (defaults to output.format from config).",
    )


def _resolve_format(ctx: click.Context, given: Optional[str], allowed: tuple[str, ...] = ("json", "text")) -> str:
    if given:
        return given
    configured = _state(ctx).config.output.format
    return configured if configured in allowed else "text"


def _json_argument(value: str) -> str:
    """JSON given inline, or ``@path`` to read it from a file."""
    if value.startswith("@"):
        path = Path(value[1:])
        try:
            return path.read_text(encoding="utf-8")
        except OSError as e:
            raise WireFormatError(f"cannot read {path}: {e.strerror}", field=str(path)) from e
    return value


# Output helpers


def _emit_json(data: Any) -> None:
    click.echo(json.dumps(data, indent=2))


def _emit_csv(header: list[str], rows: list[list[str]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    click.echo(buf.getvalue(), nl=False)


def _poly_text(p: PolyXi) -> str:
    return str(p)


def _lam_text(lam: tuple[int, ...]) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def _print_terms(console: Console, title: str, items: list[tuple[Any, PolyXi]]) -> None:
    if not items:
        console.print(f"{title}: 0")
        return
    table = Table(title=title)
    table.add_column("Coefficient", style="green", justify="right")
    table.add_column("Diagram", style="cyan")
    for label, coeff in items:
        table.add_row(escape(_poly_text(coeff)), escape(str(label)))
    console.print(table)


def _mp_json(a: mp.MPElement) -> dict:
    return MPElementModel.from_element(a).model_dump(by_alias=True)


def _pa_json(a: pa.PAElement) -> dict:
    return PAElementModel.from_element(a).model_dump()


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, "--version", prog_name="mpalg", message="%(prog)s %(version)s")
@click.option("-v", "--verbose", count=True, help="Increase log verbosity (-v info, -vv debug).")
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Read configuration from this TOML file instead of discovering one.",
)
@click.pass_context
def cli(ctx: click.Context, verbose: int, config_path: Optional[Path]) -> None:
    """mpalg - exact computation in the multiset partition algebra.

    Diagrams are passed as JSON, inline or as [cyan]@file[/cyan]; lambda as
    comma-separated integers.
    """
    configure_logging(verbose)
    loader = ConfigLoader()
    try:
        config = loader.load(config_path) if config_path else loader.load_merged()
    except (ConfigError, FileNotFoundError) as e:
        Console().print(f"[red]Error:[/red] {escape(str(e))}")
        ctx.exit(2)
    ctx.obj = CliState(config=config, console=Console(no_color=not config.output.color))


@cli.command()
@lambda_option()
@click.option("--balanced", is_flag=True, help="Only diagrams whose edges all have |I| = |J|.")
@click.option("--max-rank", type=click.IntRange(min=0), default=None, help="Only diagrams of rank at most this.")
@format_option("json", "text")
@click.pass_context
@handle_errors
def basis(ctx: click.Context, lam: tuple[int, ...], balanced: bool, max_rank: Optional[int], output_format: Optional[str]) -> None:
    """List the diagram basis of MP_lambda."""
    diagrams = mp.enumerate_basis(lam, _state(ctx).config.limits.max_enumeration)
    if balanced:
        diagrams = [g for g in diagrams if mp.is_balanced(g)]
    if max_rank is not None:
        diagrams = [g for g in diagrams if g.rank <= max_rank]

    if _resolve_format(ctx, output_format) == "json":
        _emit_json({
            "lambda": list(lam),
            "count": len(diagrams),
            "diagrams": [{"edges": MPDiagramModel.from_diagram(g).model_dump()["edges"]} for g in diagrams],
        })
        return

    table = Table(title=f"Basis of MP_{_lam_text(lam)} ({len(diagrams)} diagrams)")
    table.add_column("#", justify="right", style="dim")
    table.add_column("Diagram", style="cyan")
    table.add_column("Rank", justify="right")
    table.add_column("Balanced")
    for index, g in enumerate(diagrams):
        table.add_row(str(index), escape(str(g)), str(g.rank), "yes" if mp.is_balanced(g) else "")
    _state(ctx).console.print(table)


@cli.command()
@lambda_option(required=False, help="Weight vector lambda for MP elements.")
@click.option("--a", "a_json", required=True, help="Left factor (JSON or @file).")
@click.option("--b", "b_json", required=True, help="Right factor (JSON or @file).")
@click.option(
    "--algebra",
    type=click.Choice(["mp", "pa"]),
    default="mp",
    help="Multiset partition algebra, or the partition algebra P_k.",
)
@click.option(
    "--basis",
    "pa_basis",
    type=click.Choice(["diagram", "orbit"]),
    default="diagram",
    help="Basis of single partition diagrams given with --algebra pa.",
)
@format_option("json", "text")
@click.pass_context
@handle_errors
def mul(
    ctx: click.Context,
    lam: Optional[tuple[int, ...]],
    a_json: str,
    b_json: str,
    algebra: str,
    pa_basis: str,
    output_format: Optional[str],
) -> None:
    """Multiply two elements, the second placed on top of the first."""
    fmt = _resolve_format(ctx, output_format)
    if algebra == "pa":
        basis_ = pa.Basis(pa_basis)
        product = pa.multiply(
            parse_pa_element(_json_argument(a_json), basis_, what="a"),
            parse_pa_element(_json_argument(b_json), basis_, what="b"),
        )
        if fmt == "json":
            _emit_json(_pa_json(product))
        else:
            _print_terms(_state(ctx).console, f"Product in P_{product.k} ({product.basis.value} basis)", product.items())
        return

    a = parse_mp_element(_json_argument(a_json), lam, what="a")
    b = parse_mp_element(_json_argument(b_json), lam, what="b")
    product = mp.multiply(a, b)
    if fmt == "json":
        _emit_json(_mp_json(product))
    else:
        _print_terms(_state(ctx).console, f"Product in MP_{_lam_text(product.lam)}", product.items())


@cli.command("structure-poly")
@lambda_option(required=False)
@click.option("--g1", "g1_json", required=True, help="Lower factor diagram, placed below --g2.")
@click.option("--g2", "g2_json", required=True, help="Upper factor diagram, placed on top of --g1.")
@click.option("--g", "g_json", required=True, help="Target diagram.")
@click.option("--n", type=click.IntRange(min=1), default=None, help="Also evaluate at xi = n.")
@format_option("json", "text")
@click.pass_context
@handle_errors
def structure_poly(
    ctx: click.Context,
    lam: Optional[tuple[int, ...]],
    g1_json: str,
    g2_json: str,
    g_json: str,
    n: Optional[int],
    output_format: Optional[str],
) -> None:
    """Coefficient of [g] in [g1][g2] as a polynomial in xi."""
    g1 = parse_mp_diagram(_json_argument(g1_json), lam, what="g1")
    g2 = parse_mp_diagram(_json_argument(g2_json), lam, what="g2")
    g = parse_mp_diagram(_json_argument(g_json), lam, what="g")
    poly = mp.structure_poly(g1, g2, g)

    data: dict[str, Any] = {"coeffs": poly.to_strings()}
    if n is not None:
        data["n"] = n
        data["value"] = str(poly(n))
    if _resolve_format(ctx, output_format) == "json":
        _emit_json(data)
        return
    console = _state(ctx).console
    console.print(f"Phi = {escape(_poly_text(poly))}")
    if n is not None:
        console.print(f"Phi({n}) = {data['value']}")


@cli.command()
@lambda_option(required=False)
@click.option("--a", "a_json", required=True, help="MP element (JSON or @file).")
@click.option(
    "--basis",
    "out_basis",
    type=click.Choice(["orbit", "diagram"]),
    default="orbit",
    help="Basis of P_|lambda| to report the image in.",
)
@format_option("json", "text")
@click.pass_context
@handle_errors
def embed(
    ctx: click.Context,
    lam: Optional[tuple[int, ...]],
    a_json: str,
    out_basis: str,
    output_format: Optional[str],
) -> None:
    """Embed an MP element into the partition algebra P_|lambda|."""
    image = mp.embed(parse_mp_element(_json_argument(a_json), lam, what="a"))
    if out_basis == "diagram":
        image = pa.diagram_from_orbit(image)
    if _resolve_format(ctx, output_format) == "json":
        _emit_json(_pa_json(image))
    else:
        _print_terms(_state(ctx).console, f"Image in P_{image.k} ({image.basis.value} basis)", image.items())


@cli.command()
@lambda_option()
@click.option("--check", is_flag=True, help="Also verify e*e = e and i(e) = e.")
@format_option("json", "text")
@click.pass_context
@handle_errors
def idempotent(ctx: click.Context, lam: tuple[int, ...], check: bool, output_format: Optional[str]) -> None:
    """The idempotent e of P_|lambda| whose corner algebra is MP_lambda."""
    e = mp.idempotent_e(lam)
    data: dict[str, Any] = {"element": _pa_json(e), "size": len(e.items())}
    if check:
        data["idempotent"] = pa.multiply(e, e) == e
        data["involution_fixed"] = pa.involution(e) == e

    if _resolve_format(ctx, output_format) == "json":
        _emit_json(data)
    else:
        console = _state(ctx).console
        _print_terms(console, f"e for lambda = {_lam_text(lam)} (orbit basis)", e.items())
        if check:
            console.print(f"e*e = e: {data['idempotent']}")
            console.print(f"i(e) = e: {data['involution_fixed']}")
    if check and not (data["idempotent"] and data["involution_fixed"]):
        ctx.exit(1)


@cli.command("phi")
@lambda_option(required=False)
@click.option("--a", "a_json", required=True, help="MP element (JSON or @file).")
@click.option("--n", type=click.IntRange(min=1), required=True, help="Number of columns n.")
@format_option(*OUTPUT_FORMATS)
@click.option("--dense-csv", is_flag=True, help="Alias for --format csv.")
@click.pass_context
@handle_errors
def phi_command(
    ctx: click.Context,
    lam: Optional[tuple[int, ...]],
    a_json: str,
    n: int,
    output_format: Optional[str],
    dense_csv: bool,
) -> None:
    """Matrix of an MP element acting on F[M(n, lambda)]."""
    a = parse_mp_element(_json_argument(a_json), lam, what="a")
    m = phi(a, n, max_dim=_state(ctx).config.limits.max_matrix_dim)
    labels = ["|".join(",".join(map(str, row)) for row in b.rows) for b in m.basis]
    cells = [[str(m.entries[i, j]) for j in range(m.dim)] for i in range(m.dim)]

    fmt = "csv" if dense_csv else _resolve_format(ctx, output_format, OUTPUT_FORMATS)
    if fmt == "json":
        _emit_json({"n": n, "lambda": list(m.lam), "dim": m.dim, "basis": labels, "entries": cells})
    elif fmt == "csv":
        _emit_csv([""] + labels, [[label] + row for label, row in zip(labels, cells)])
    else:
        table = Table(title=f"phi on F[M({n}, {_lam_text(m.lam)})], dim {m.dim}")
        table.add_column("", style="dim")
        for label in labels:
            table.add_column(label, justify="right")
        for label, row in zip(labels, cells):
            table.add_row(label, *[c if c != "0" else "." for c in row])
        _state(ctx).console.print(table)


@cli.command("duality-check")
@lambda_option()
@click.option("--n", type=click.IntRange(min=1), required=True, help="Number of columns n.")
@click.option("--g1", "g1_json", default=None, help="Single triple: lower factor, placed below --g2.")
@click.option("--g2", "g2_json", default=None, help="Single triple: upper factor, placed on top of --g1.")
@click.option("--g", "g_json", default=None, help="Single triple: target diagram.")
@format_option("json", "text")
@click.pass_context
@handle_errors
def duality_check(
    ctx: click.Context,
    lam: tuple[int, ...],
    n: int,
    g1_json: Optional[str],
    g2_json: Optional[str],
    g_json: Optional[str],
    output_format: Optional[str],
) -> None:
    """Compare structure polynomials at xi = n with brute-force counts on M(n, lambda).

    Without a triple every basis triple of rank at most n is compared.
    """
    given = [g1_json, g2_json, g_json]
    if any(given) and not all(given):
        raise click.UsageError("--g1, --g2 and --g must be given together")
    module_basis(n, lam, max_dim=_state(ctx).config.limits.max_matrix_dim)

    if all(given):
        g1, g2, g = (
            parse_mp_diagram(_json_argument(text), lam, what=name)
            for text, name in zip(given, ("g1", "g2", "g"))
            if text is not None
        )
        triples = [(g1, g2, g)]
    else:
        diagrams = [d for d in mp.enumerate_basis(lam) if d.rank <= n]
        triples = [(g1, g2, g) for g in diagrams for g1, g2 in itertools.product(diagrams, repeat=2)]

    mismatches = []
    tallies: dict = {}
    for g1, g2, g in triples:
        if max(g1.rank, g2.rank, g.rank) > n:
            raise OracleDataError(f"every diagram needs rank at most n={n}", field="g")
        if g not in tallies:
            tallies[g] = structure_count_table(g, n)
        expected = tallies[g].get((g1, g2), 0)
        got = mp.structure_poly(g1, g2, g)(n)
        if got != expected:
            mismatches.append({"g1": str(g1), "g2": str(g2), "g": str(g), "poly": str(got), "count": expected})

    data = {"lambda": list(lam), "n": n, "compared": len(triples), "mismatches": mismatches}
    if _resolve_format(ctx, output_format) == "json":
        _emit_json(data)
    else:
        console = _state(ctx).console
        if mismatches:
            for m in mismatches:
                console.print(f"[red]MISMATCH[/red] {escape(m['g1'])} * {escape(m['g2'])} at {escape(m['g'])}: {m['poly']} != {m['count']}")
        console.print(f"{len(triples)} triples compared, {len(mismatches)} mismatches")
    if mismatches:
        ctx.exit(1)


@cli.command("centralizer-dim")
@lambda_option()
@click.option("--n", type=click.IntRange(min=1), required=True, help="Number of columns n.")
@click.option("--commutant", is_flag=True, help="Also solve for the full commutant over Q.")
@format_option("json", "text")
@click.pass_context
@handle_errors
def centralizer_dim(ctx: click.Context, lam: tuple[int, ...], n: int, commutant: bool, output_format: Optional[str]) -> None:
    """Dimension of End_{S_n}(F[M(n, lambda)])."""
    cap = _state(ctx).config.limits.max_matrix_dim
    data: dict[str, Any] = {
        "lambda": list(lam),
        "n": n,
        "orbits": centralizer_dimension(n, lam, cap),
        "diagrams_rank_at_most_n": sum(1 for g in mp.enumerate_basis(lam) if g.rank <= n),
    }
    if commutant:
        data["commutant"] = commutant_dimension(n, lam, cap)

    if _resolve_format(ctx, output_format) == "json":
        _emit_json(data)
        return
    console = _state(ctx).console
    console.print(f"centralizer dimension: {data['orbits']}")
    console.print(f"basis diagrams of rank <= {n}: {data['diagrams_rank_at_most_n']}")
    if commutant:
        console.print(f"commutant dimension: {data['commutant']}")


@cli.command("a-coeff")
@lambda_option(help="Weight vector lambda of Sym^lambda.")
@click.option("--nu", callback=_parse_partition, default=None, help="Partition nu, e.g. 4,1.")
@click.option("--n", type=click.IntRange(min=1), default=None, help="Tabulate over every partition of n.")
@click.option(
    "--method",
    type=click.Choice(["ssmt", "plethysm", "both"]),
    default="ssmt",
    help="Tableau count, plethysm extraction, or both.",
)
@click.option("--as-table", is_flag=True, help="Tabulate over every partition of n.")
@format_option(*OUTPUT_FORMATS)
@click.pass_context
@handle_errors
def a_coeff(
    ctx: click.Context,
    lam: tuple[int, ...],
    nu: Optional[IntegerPartition],
    n: Optional[int],
    method: str,
    as_table: bool,
    output_format: Optional[str],
) -> None:
    """Multiplicity of the Specht module V_nu in Sym^lambda(F^n)."""
    if nu is None and n is None:
        raise click.UsageError("give --nu, or --n with --as-table")
    shapes = enumerate_partitions(n) if (as_table or nu is None) and n is not None else [nu]  # type: ignore[list-item]

    rows = []
    for shape in shapes:
        row: dict[str, Any] = {"nu": list(shape.parts), "dim": count_syt(shape)}
        if method in ("ssmt", "both"):
            row["ssmt"] = sf.a_coeff_ssmt(shape, lam)
        if method in ("plethysm", "both"):
            row["plethysm"] = sf.a_coeff_plethysm(shape, lam)
        rows.append(row)
    value_key = "ssmt" if method != "plethysm" else "plethysm"
    total = sum(r[value_key] * r["dim"] for r in rows)
    disagree = method == "both" and any(r["ssmt"] != r["plethysm"] for r in rows)

    fmt = _resolve_format(ctx, output_format, OUTPUT_FORMATS)
    keys = ["dim"] + [k for k in ("ssmt", "plethysm") if k in rows[0]]
    if fmt == "json":
        _emit_json({"lambda": list(lam), "rows": rows, "weighted_total": total})
    elif fmt == "csv":
        _emit_csv(["nu"] + keys, [[str(IntegerPartition(tuple(r["nu"])))] + [str(r[k]) for k in keys] for r in rows])
    else:
        table = Table(title=f"a(nu, {_lam_text(lam)})")
        table.add_column("nu", style="cyan")
        for k in keys:
            table.add_column(k, justify="right")
        for r in rows:
            table.add_row(str(IntegerPartition(tuple(r["nu"]))), *[str(r[k]) for k in keys])
        console = _state(ctx).console
        console.print(table)
        if len(rows) > 1:
            console.print(f"sum of a * dim = {total}")
    if disagree:
        ctx.exit(1)


@cli.command("lambda-set")
@click.option("--k", type=click.IntRange(min=0), required=True, help="Degree k.")
@click.option("--n", type=click.IntRange(min=1), required=True, help="Size n.")
@format_option("json", "text")
@click.pass_context
@handle_errors
def lambda_set(ctx: click.Context, k: int, n: int, output_format: Optional[str]) -> None:
    """Partitions nu of n with sum (i - 1) nu_i <= k; exactly those in Sym^k(F^n)."""
    shapes = sf.lambda_set(k, n)
    if _resolve_format(ctx, output_format) == "json":
        _emit_json({"k": k, "n": n, "partitions": [list(nu.parts) for nu in shapes]})
        return
    table = Table(title=f"Partitions of {n} with b <= {k}")
    table.add_column("nu", style="cyan")
    table.add_column("b", justify="right")
    table.add_column("a(nu, (k))", justify="right")
    for nu in shapes:
        table.add_row(str(nu), str(nu.b_statistic()), str(sf.a_coeff_ssmt(nu, (k,))))
    _state(ctx).console.print(table)


@cli.command("r-coeff")
@click.option("--lambda", "lam", required=True, callback=_parse_partition, help="Partition lambda, e.g. 1,1.")
@click.option("--n", type=click.IntRange(min=1), required=True, help="Size n.")
@click.option("--nu", callback=_parse_partition, default=None, help="Only this partition of n.")
@click.option("--oracle", is_flag=True, help="Also compute by the character inner product.")
@format_option(*OUTPUT_FORMATS)
@click.pass_context
@handle_errors
def r_coeff(
    ctx: click.Context,
    lam: IntegerPartition,
    n: int,
    nu: Optional[IntegerPartition],
    oracle: bool,
    output_format: Optional[str],
) -> None:
    """Multiplicity of V_nu in the polynomial GL_n-module W_lambda restricted to S_n."""
    if nu is not None and nu.size != n:
        raise click.BadParameter(f"{nu} is not a partition of {n}", param_hint="--nu")
    cap = _state(ctx).config.limits.max_character_n
    shapes = [nu] if nu is not None else enumerate_partitions(n)
    rows = []
    for shape in shapes:
        row: dict[str, Any] = {"nu": list(shape.parts), "r": sf.r_coeff(lam, shape)}
        if oracle:
            row["oracle"] = sf.r_coeff_character_oracle(lam, shape, n, cap)
        rows.append(row)
    disagree = oracle and any(r["r"] != r["oracle"] for r in rows)

    fmt = _resolve_format(ctx, output_format, OUTPUT_FORMATS)
    keys = ["r"] + (["oracle"] if oracle else [])
    if fmt == "json":
        _emit_json({"lambda": list(lam.parts), "n": n, "rows": rows})
    elif fmt == "csv":
        _emit_csv(["nu"] + keys, [[str(IntegerPartition(tuple(r["nu"])))] + [str(r[k]) for k in keys] for r in rows])
    else:
        table = Table(title=f"r(nu, {lam}) at n = {n}")
        table.add_column("nu", style="cyan")
        for k in keys:
            table.add_column(k, justify="right")
        for r in rows:
            table.add_row(str(IntegerPartition(tuple(r["nu"]))), *[str(r[k]) for k in keys])
        _state(ctx).console.print(table)
    if disagree:
        ctx.exit(1)


@cli.command("rsk")
@lambda_option(required=False)
@click.option("--n", type=click.IntRange(min=1), default=None, help="Number of columns n (forward direction).")
@click.option("--partition", "partition_json", default=None, help="Multiset partition as an MP diagram (JSON or @file).")
@click.option("--invert", is_flag=True, help="Run inverse RSK on --pair.")
@click.option("--pair", "pair_json", default=None, help='Tableau pair {"T": ..., "S": ...} (JSON or @file).')
@click.option("--symmetry", is_flag=True, help="Also report the transpose symmetry check.")
@format_option("json", "text")
@click.pass_context
@handle_errors
def rsk_command(
    ctx: click.Context,
    lam: Optional[tuple[int, ...]],
    n: Optional[int],
    partition_json: Optional[str],
    invert: bool,
    pair_json: Optional[str],
    symmetry: bool,
    output_format: Optional[str],
) -> None:
    """RSK between multiset partitions and pairs of multiset tableaux."""
    fmt = _resolve_format(ctx, output_format)
    console = _state(ctx).console

    if invert:
        if pair_json is None:
            raise click.UsageError("--invert needs --pair")
        pair = validate_model(TableauPairModel, load_json(_json_argument(pair_json), "pair"))
        weights = lam if lam is not None else (tuple(pair.lam) if pair.lam is not None else None)
        d = inverse_rsk(pair.T.to_tableau(), pair.S.to_tableau(), weights)
        if fmt == "json":
            _emit_json(MPDiagramModel.from_diagram(d).model_dump(by_alias=True))
        else:
            console.print(f"partition: {escape(str(d))}")
        return

    if partition_json is None or n is None:
        raise click.UsageError("forward RSK needs --partition and --n")
    d = parse_mp_diagram(_json_argument(partition_json), lam, what="partition")
    t, s = rsk_of_diagram(d, n)
    data = TableauPairModel(
        T=TableauModel.from_tableau(t), S=TableauModel.from_tableau(s), lam=list(d.lam)
    ).model_dump(by_alias=True)
    report = symmetry_check(d, n) if symmetry else None
    if report is not None:
        data["symmetry"] = {
            "transpose_swaps": report.transpose_swaps,
            "symmetric": report.symmetric,
            "odd_columns": report.odd_columns,
            "fixed_blocks": report.fixed_blocks,
            "ok": report.ok,
        }

    if fmt == "json":
        _emit_json(data)
    else:
        for name, tableau in (("T", t), ("S", s)):
            console.print(f"[bold]{name}[/bold] (shape {tableau.shape})")
            for row in tableau.rows:
                console.print("  " + " ".join("{" + ",".join(map(str, cell)) + "}" for cell in row))
        if report is not None:
            console.print(escape(f"symmetry: {data['symmetry']}"))
    if report is not None and not report.ok:
        ctx.exit(1)


@cli.command()
@click.option(
    "--suite",
    "suites",
    multiple=True,
    default=("all",),
    show_default=True,
    help="Suite to run; repeat for several. 'all' runs every suite.",
)
@click.option("--max-size", type=click.Choice(SIZES), default=None, help="Sweep size (defaults to verify.size).")
@click.option("--seed", type=int, default=None, help="Seed for sampled checks.")
@click.option("--threads", type=click.IntRange(min=1), default=None, help="Worker threads (overrides MPA_THREADS).")
@click.option("--samples", type=click.IntRange(min=1), default=None, help="Samples per sampled check.")
@click.option(
    "--report",
    "report_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write the report to this file (.toml for TOML, otherwise JSON).",
)
@click.option("--list", "list_suites", is_flag=True, help="List available suites and exit.")
@format_option("json", "text")
@click.pass_context
@handle_errors
def verify(
    ctx: click.Context,
    suites: tuple[str, ...],
    max_size: Optional[str],
    seed: Optional[int],
    threads: Optional[int],
    samples: Optional[int],
    report_path: Optional[Path],
    list_suites: bool,
    output_format: Optional[str],
) -> None:
    """Run the acceptance suites; exit 1 if any check fails."""
    state = _state(ctx)
    manager = SuiteManager()
    manager.register_builtins()
    manager.discover()

    if list_suites:
        table = Table(title="Available Suites")
        table.add_column("Name", style="cyan", no_wrap=True)
        table.add_column("Version", style="green")
        table.add_column("Description")
        for name in manager.list_suites():
            info = manager.get_suite_info(name) or {}
            table.add_row(name, info.get("version", "unknown"), info.get("description", ""))
        state.console.print(table)
        return

    verify_config = state.config.verify
    if max_size is not None:
        verify_config.size = max_size
    if seed is not None:
        verify_config.seed = seed
    if threads is not None:
        verify_config.threads = threads
    if samples is not None:
        verify_config.samples = samples

    report = manager.run(suites, verify_config, state.config.limits)
    if report_path is not None:
        report.write(report_path)

    if _resolve_format(ctx, output_format) == "json":
        _emit_json(report.to_dict())
    else:
        table = Table(title=f"Verification ({report.size}, seed {report.seed})")
        table.add_column("Check", style="cyan")
        table.add_column("Result")
        table.add_column("Time", justify="right", style="dim")
        table.add_column("Detail")
        for r in report.results:
            status = "[green]PASS[/green]" if r.passed else "[red]FAIL[/red]"
            table.add_row(f"{r.suite}:{r.name}", status, f"{r.elapsed:.2f}s", escape(r.detail))
        state.console.print(table)
        summary = report.summary()
        state.console.print(f"{summary['passed']}/{summary['total']} checks passed")
    if not report.passed:
        ctx.exit(1)


if __name__ == "__main__":
    cli()
