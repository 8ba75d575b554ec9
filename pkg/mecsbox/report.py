import logging
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Union

from pydantic import BaseModel

from mecsbox import boolcrypt, gf256poly
from mecsbox.boolcrypt import BicReading
from mecsbox.exceptions import ParameterOutOfRange
from mecsbox.reference import published_metrics
from mecsbox.sboxgen import SBox

logger = logging.getLogger(__name__)

METRICS = ("nl", "lap", "dap", "sac", "bic", "ac")
METRIC_FIELDS = {
    "nl": ("nl",),
    "lap": ("lap",),
    "dap": ("dap",),
    "sac": ("sac_max", "sac_min"),
    "bic": ("bic_max", "bic_min"),
    "ac": ("ac",),
}
_FOUR_PLACES = Decimal("0.0001")


def parse_metrics(names: Iterable[str]) -> List[str]:
    wanted = [name.strip().lower() for name in names if name.strip()]
    unknown = [name for name in wanted if name not in METRICS]
    if unknown:
        raise ParameterOutOfRange(f"Unknown metrics {', '.join(unknown)}; expected some of {', '.join(METRICS)}.")
    return wanted


def render(value: Fraction) -> str:
    """
    Four decimals, halves rounded up as in the published tables.
    """
    exact = Decimal(value.numerator) / Decimal(value.denominator)
    return str(exact.quantize(_FOUR_PLACES, rounding=ROUND_HALF_UP))


class Rational(BaseModel):
    numerator: int
    denominator: int
    rendered: str

    @classmethod
    def of(cls, value: Fraction) -> "Rational":
        return cls(numerator=value.numerator, denominator=value.denominator, rendered=render(value))

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


class SourceInfo(BaseModel):
    p: Optional[int] = None
    b: Optional[int] = None
    ordering: str = "external"


class AnalysisReport(BaseModel):
    source: SourceInfo
    bijective: bool
    nl: Optional[int] = None
    nl_full: Optional[int] = None
    lap: Optional[Rational] = None
    dap: Optional[Rational] = None
    sac: Optional[List[List[int]]] = None
    sac_max: Optional[Rational] = None
    sac_min: Optional[Rational] = None
    bic_reading: Optional[str] = None
    bic_max: Optional[Rational] = None
    bic_min: Optional[Rational] = None
    ac: Optional[int] = None
    published: Optional[Dict[str, Union[int, float]]] = None


def _source(sbox: SBox) -> SourceInfo:
    provenance = sbox.provenance
    if provenance is None:
        return SourceInfo()
    return SourceInfo(p=provenance.p, b=provenance.b, ordering=provenance.ordering.value)


def analyze(
    sbox: SBox, metrics: Optional[List[str]] = None, bic_reading: BicReading = BicReading.PER_PAIR
) -> AnalysisReport:
    """
    Runs the requested metrics (all of them by default). `nl` is the coordinate-function minimum and
    `nl_full` the minimum over every nonzero output mask. The SAC matrix is reported as counts out of 256.
    """
    wanted = set(METRICS if metrics is None else parse_metrics(metrics))
    bijective = sbox.is_bijective
    if not bijective:
        logger.warning("Analysing a table that is not a permutation of 0..255")

    report = AnalysisReport(source=_source(sbox), bijective=bijective)
    if wanted & {"nl", "lap"}:
        spectrum = boolcrypt.walsh_spectrum(sbox)
        report.nl_full = spectrum.nonlinearity()
        if "nl" in wanted:
            report.nl = min(spectrum.coordinate_nonlinearities())
        if "lap" in wanted:
            report.lap = Rational.of(spectrum.lap())
    if "dap" in wanted:
        report.dap = Rational.of(boolcrypt.dap(sbox))
    if "sac" in wanted:
        report.sac = boolcrypt.sac_matrix(sbox).counts.tolist()
        sac_max, sac_min = boolcrypt.sac_minmax(sbox)
        report.sac_max, report.sac_min = Rational.of(sac_max), Rational.of(sac_min)
    if "bic" in wanted:
        bic_max, bic_min = boolcrypt.bic_minmax(sbox, bic_reading)
        report.bic_reading = BicReading.parse(bic_reading).value
        report.bic_max, report.bic_min = Rational.of(bic_max), Rational.of(bic_min)
    if "ac" in wanted:
        report.ac = gf256poly.algebraic_complexity(sbox)

    published = published_metrics(sbox)
    if published is not None:
        report.published = dict(vars(published))
    return report


def summary_row(report: AnalysisReport, metrics: List[str]) -> Dict[str, object]:
    """
    Flat record for line-oriented output: provenance, bijectivity and the requested metrics, rationals rendered.
    """
    source = report.source
    row: Dict[str, object] = {"p": source.p, "b": source.b, "ordering": source.ordering, "bijective": report.bijective}
    for metric in parse_metrics(metrics):
        for name in METRIC_FIELDS[metric]:
            value = getattr(report, name)
            row[name] = value.rendered if isinstance(value, Rational) else value
    return row
