"""
Command-line surface: generate, analyze, batch, count-distinct, correlate, sequence, bench.

Exit codes: 0 success, 2 parameter error, 3 input-format error.
"""
import json
import logging
import sys
from pathlib import Path
from typing import Annotated, List, Optional, Tuple

from cyclopts import App, CycloptsError, Parameter
from rich.console import Console
from rich.table import Table

from mecsbox import __version__, sboxgen, stats
from mecsbox.boolcrypt import BicReading
from mecsbox.curve import CurveParams
from mecsbox.exceptions import (
    InvalidInvocation,
    MecSboxError,
    ParameterError,
    ParameterOutOfRange,
    UnwritableOutput,
)
from mecsbox.formats import SboxFormat, dumps, read_sbox
from mecsbox.log import configure_logging
from mecsbox.ordering import OrderingKind
from mecsbox.reference import load_fixture
from mecsbox.report import AnalysisReport, analyze, parse_metrics, summary_row
from mecsbox.runner import run_jobs
from mecsbox.settings import Settings

logger = logging.getLogger(__name__)

app = App(name="mecsbox", help="Mordell-curve S-box generation and analysis.", version=__version__)

_BATCH_CHUNK = 64


class _Context:
    settings: Optional[Settings] = None


def _settings() -> Settings:
    """
    Settings for the current invocation; read from the environment unless global flags already set them.
    """
    if _Context.settings is None:
        _Context.settings = Settings.from_env()
        configure_logging(_Context.settings.log_level)
    return _Context.settings


def _emit(payload: bytes, out: Optional[Path] = None) -> None:
    if out is not None:
        try:
            out.write_bytes(payload)
        except OSError as exc:
            raise UnwritableOutput(f"Cannot write {out}: {exc.strerror or exc}.")
        return
    sys.stdout.buffer.write(payload)
    sys.stdout.flush()


def _emit_text(text: str, out: Optional[Path] = None) -> None:
    _emit(text.encode(), out)


def _split(text: str) -> List[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _parse_b_range(b_range: str, p: int) -> range:
    """
    "lo..hi", inclusive on both ends; a bare "lo" is a single curve. lo > hi is empty.
    """
    lo, sep, hi = b_range.partition("..")
    try:
        lo = int(lo) if lo.strip() else 1
        hi = (int(hi) if hi.strip() else p - 1) if sep else lo
    except ValueError:
        raise ParameterOutOfRange(f"Invalid b-range {b_range!r}; expected lo..hi.")
    if lo > hi:
        return range(0)
    if lo < 0 or hi > p - 1:
        raise ParameterOutOfRange(f"b-range {b_range!r} leaves [0, {p - 1}].")
    return range(lo, hi + 1)


def _print_report(report: AnalysisReport) -> None:
    source = report.source
    title = "external S-box" if source.p is None else f"S^{source.ordering}_{{{source.p},{source.b}}}"
    table = Table(title=title)
    table.add_column("metric")
    table.add_column("value", justify="right")
    table.add_column("published", justify="right")

    published = report.published or {}
    rows = [
        ("bijective", str(report.bijective)),
        ("nl", str(report.nl)),
        ("nl_full", str(report.nl_full)),
        ("lap", report.lap.rendered),
        ("dap", report.dap.rendered),
        ("sac_max", report.sac_max.rendered),
        ("sac_min", report.sac_min.rendered),
        ("bic_max", report.bic_max.rendered),
        ("bic_min", report.bic_min.rendered),
        ("ac", str(report.ac)),
    ]
    for name, value in rows:
        table.add_row(name, value, str(published[name]) if name in published else "")
    Console().print(table)


@app.meta.default
def launcher(
    *tokens: Annotated[str, Parameter(show=False, allow_leading_hyphen=True)],
    log_level: Optional[str] = None,
    workers: Optional[int] = None,
):
    """
    Parameters
    ----------
    log_level
        DEBUG, INFO, WARNING or ERROR. Defaults to MECSBOX_LOG_LEVEL, then WARNING.
    workers
        Worker processes for batch and count-distinct. Defaults to MECSBOX_WORKERS, then 1.
    """
    settings = Settings.from_env().override(log_level=log_level.upper() if log_level else None, workers=workers)
    configure_logging(settings.log_level)
    _Context.settings = settings
    return app(tokens, exit_on_error=False, print_error=False)


@app.command
def generate(
    *,
    prime: int,
    b: int,
    ordering: str = "N",
    fmt: Annotated[str, Parameter(name="--format")] = "grid",
    out: Optional[Path] = None,
):
    """
    Build the S-box of E(prime, b) under an ordering and write it as grid, json or bin.
    """
    _settings()
    params = sboxgen.validate_generation_params(prime, b)
    kind = OrderingKind.parse(ordering)
    fmt = SboxFormat.parse(fmt)
    _emit(dumps(sboxgen.generate(params, kind), fmt), out)


@app.command(name="analyze")
def analyze_sbox(
    *,
    in_: Annotated[Optional[Path], Parameter(name="--in")] = None,
    fmt: Annotated[Optional[str], Parameter(name="--format")] = None,
    fixture: Optional[str] = None,
    prime: Optional[int] = None,
    b: Optional[int] = None,
    ordering: str = "N",
    bic: str = "pair",
    as_json: Annotated[bool, Parameter(name="--json")] = False,
    out: Optional[Path] = None,
):
    """
    Report NL, LAP, DAP, SAC, BIC and AC for an S-box file, a bundled fixture or a curve.
    """
    _settings()
    reading = BicReading.parse(bic)
    if in_ is not None:
        sbox = read_sbox(in_, fmt)
    elif fixture is not None:
        sbox = load_fixture(fixture)
    elif prime is not None and b is not None:
        sbox = sboxgen.generate(sboxgen.validate_generation_params(prime, b), OrderingKind.parse(ordering))
    else:
        raise ParameterError("Pass --in, --fixture, or --prime with --b.")

    report = analyze(sbox, bic_reading=reading)
    if as_json or out is not None:
        _emit_text(report.model_dump_json(indent=2) + "\n", out)
    else:
        _print_report(report)


def _batch_lines(p: int, bs: Tuple[int, ...], kind: OrderingKind, metrics: Tuple[str, ...]) -> List[str]:
    prime = sboxgen.validate_generation_params(p, 0).prime
    lines = []
    for b in bs:
        sbox = sboxgen.generate(CurveParams(prime, b), kind)
        row = {"tag": sbox.provenance.tag, **summary_row(analyze(sbox, list(metrics)), list(metrics))}
        lines.append(json.dumps(row, separators=(",", ":")))
    return lines


@app.command
def batch(*, prime: int, ordering: str = "N", b_range: str = "1..", metrics: str = "nl,dap"):
    """
    One JSON line per curve, grouped by ordering and sorted by b.

    Parameters
    ----------
    prime
        Field characteristic, at least 257.
    ordering
        One ordering or a comma-separated list, e.g. N,D,M.
    b_range
        Inclusive "lo..hi"; either end may be omitted. Defaults to every b in [1, prime - 1].
    metrics
        Comma-separated subset of nl, lap, dap, sac, bic, ac.
    """
    settings = _settings()
    wanted = tuple(parse_metrics(_split(metrics)))
    sboxgen.validate_generation_params(prime, 0)
    kinds = [OrderingKind.parse(code) for code in _split(ordering)]
    bs = _parse_b_range(b_range, prime)

    jobs = [
        (prime, tuple(bs[i : i + _BATCH_CHUNK]), kind, wanted)
        for kind in kinds
        for i in range(0, len(bs), _BATCH_CHUNK)
    ]
    for lines in run_jobs(_batch_lines, jobs, settings.workers):
        for line in lines:
            _emit_text(line + "\n")


@app.command
def count_distinct(*, prime: int, ordering: str = "N"):
    """
    Number of distinct S-boxes over b in [1, prime - 1].
    """
    settings = _settings()
    sboxgen.validate_generation_params(prime, 0)
    count = stats.count_distinct_sboxes(prime, OrderingKind.parse(ordering), settings.workers)
    _emit_text(f"{count}\n")


@app.command
def correlate(*, prime: int, b: int, as_json: Annotated[bool, Parameter(name="--json")] = False):
    """
    Pearson correlation between the y-sequences of the three orderings over the whole curve.
    """
    _settings()
    record = stats.all_correlations(CurveParams.create(prime, b))
    if as_json:
        _emit_text(record.model_dump_json() + "\n")
        return

    table = Table(title=f"E({prime}, {b})")
    table.add_column("pair")
    table.add_column("rho", justify="right")
    for pair, value in (("ND", record.rho_nd), ("NM", record.rho_nm), ("DM", record.rho_dm), ("NN", record.rho_self)):
        table.add_row(pair, f"{value:.4f}")
    Console().print(table)


@app.command
def sequence(*, prime: int, b: int):
    """
    The y-coordinates of every affine point sorted under each ordering, one line per ordering.
    """
    _settings()
    params = CurveParams.create(prime, b)
    for kind in OrderingKind:
        values = stats.ordered_y_sequence(params, kind).values
        _emit_text(f"{kind.value}: {' '.join(map(str, values))}\n")


@app.command
def bench(*, primes: str = "257,521,1013,2027,4229", ordering: str = "N", repeats: Optional[int] = None):
    """
    Time the scanning and cube-root generators and report the peak number of stored points.
    """
    settings = _settings()
    try:
        values = [int(p) for p in _split(primes)]
    except ValueError:
        raise ParameterOutOfRange(f"Invalid prime list {primes!r}.")
    repeats = repeats if repeats is not None else settings.bench_repeats
    if repeats < 1:
        raise ParameterOutOfRange("--repeats must be at least 1.")
    rows = stats.benchmark_generation(values, OrderingKind.parse(ordering), repeats)

    table = Table(title="generation time")
    for column in ("p", "loop s", "cube-root s", "peak points"):
        table.add_column(column, justify="right")
    for row in rows:
        table.add_row(str(row.p), f"{row.loop_seconds:.4f}", f"{row.fast_seconds:.5f}", str(row.peak_points))
    console = Console()
    console.print(table)
    if len(rows) >= 2:
        console.print(f"growth exponent of the scanning generator: {stats.fit_growth_exponent(rows):.2f}")


def _dispatch(argv: List[str]) -> None:
    try:
        app.meta(argv, exit_on_error=False, print_error=False)
    except CycloptsError as exc:
        raise InvalidInvocation(str(exc).strip())


def main(argv: Optional[List[str]] = None) -> int:
    _Context.settings = None
    try:
        _dispatch(sys.argv[1:] if argv is None else argv)
    except MecSboxError as exc:
        logger.debug("Command failed with %s", exc.code)
        Console(stderr=True, soft_wrap=True).print(f"error: {exc.detail}", markup=False, highlight=False)
        return exc.exit_code
    return 0


def run() -> None:
    sys.exit(main())
