import logging
from fractions import Fraction

import numpy as np
import pytest

from mecsbox.boolcrypt import bic_minmax, coordinate_nonlinearity, dap, lap, nonlinearity, sac_minmax, walsh_spectrum
from mecsbox.curve import CurveParams
from mecsbox.reference import COMPARISON_ROWS, PUBLISHED_SBOXES, load_fixture
from mecsbox.report import render
from mecsbox.sboxgen import SBox, generate
from tests.utils import naive_ddt, naive_lat

logger = logging.getLogger(__name__)

FIXTURED = [entry for entry in PUBLISHED_SBOXES if entry.fixture is not None]
TIE_ORDER_MATCHES = [entry for entry in PUBLISHED_SBOXES if entry.tie_order_matches]
TIE_ORDER_DIFFERS = [entry for entry in PUBLISHED_SBOXES if not entry.tie_order_matches]


def _ids(entry) -> str:
    return f"{entry.ordering.value}-{entry.p}-{entry.b}"


def _generated(entry) -> SBox:
    return generate(CurveParams.create(entry.p, entry.b), entry.ordering)


"""
Rows reproduced exactly by the generator
"""


@pytest.mark.parametrize("entry", TIE_ORDER_MATCHES, ids=_ids)
def test_generated_rows_match_published(entry):
    sbox = _generated(entry)
    published = entry.published
    sac_max, sac_min = sac_minmax(sbox)
    bic_max, bic_min = bic_minmax(sbox)

    assert coordinate_nonlinearity(sbox) == published.nl == 106
    assert float(render(lap(sbox))) == published.lap
    assert dap(sbox) == Fraction(10, 256)
    assert float(render(sac_max)) == published.sac_max
    assert float(render(sac_min)) == published.sac_min
    assert float(bic_max) == pytest.approx(published.bic_max, abs=0.004)
    assert float(bic_min) == pytest.approx(published.bic_min, abs=0.004)


@pytest.mark.parametrize("entry", TIE_ORDER_MATCHES, ids=_ids)
def test_published_lap_is_full_spectrum_nonlinearity(entry):
    sbox = _generated(entry)

    assert lap(sbox) == Fraction(128 - nonlinearity(sbox), 256)
    assert render(Fraction(128 - nonlinearity(sbox), 256)) == f"{entry.published.lap:.4f}"


"""
Rows whose published table orders tied points differently
"""


@pytest.mark.parametrize("entry", TIE_ORDER_DIFFERS, ids=_ids)
def test_generated_rows_near_published(entry):
    sbox = _generated(entry)
    published = entry.published
    nl = coordinate_nonlinearity(sbox)
    sac_max, sac_min = sac_minmax(sbox)
    bic_max, bic_min = bic_minmax(sbox)
    logger.info(
        "%s: nl=%d dap=%s sac=(%s, %s) bic=(%s, %s)",
        _ids(entry),
        nl,
        render(dap(sbox)),
        render(sac_max),
        render(sac_min),
        render(bic_max),
        render(bic_min),
    )

    assert 100 <= nl <= 112
    assert Fraction(8, 256) <= dap(sbox) <= Fraction(14, 256)
    assert lap(sbox) * 512 == 2 * (128 - nonlinearity(sbox))
    assert float(sac_max) == pytest.approx(published.sac_max, abs=0.0625)
    assert float(sac_min) == pytest.approx(published.sac_min, abs=0.0625)
    assert float(bic_max) == pytest.approx(published.bic_max, abs=0.03)
    assert float(bic_min) == pytest.approx(published.bic_min, abs=0.03)


"""
Printed tables
"""


@pytest.mark.parametrize("entry", FIXTURED, ids=_ids)
def test_printed_tables_match_published_nl_and_lap(entry):
    sbox = load_fixture(entry.fixture)

    assert coordinate_nonlinearity(sbox) == 106
    assert render(lap(sbox)) == f"{entry.published.lap:.4f}"


@pytest.mark.parametrize("name", ["S_N_1667_351", "S_M_4229_2422"])
def test_printed_tables_match_published_sac(name: str):
    entry = next(entry for entry in FIXTURED if entry.fixture == name)
    sac_max, sac_min = sac_minmax(load_fixture(name))

    assert float(render(sac_max)) == entry.published.sac_max
    assert float(render(sac_min)) == entry.published.sac_min


def test_printed_diffusion_table_sac_is_logged():
    entry = next(entry for entry in FIXTURED if entry.fixture == "S_D_3299_1451")
    sac_max, sac_min = sac_minmax(load_fixture("S_D_3299_1451"))
    logger.info(
        "S_D_3299_1451: sac=(%s, %s), published (%s, %s)",
        render(sac_max),
        render(sac_min),
        entry.published.sac_max,
        entry.published.sac_min,
    )

    assert float(sac_max) == pytest.approx(entry.published.sac_max, abs=0.0625)
    assert float(sac_min) == pytest.approx(entry.published.sac_min, abs=0.0625)


def test_coordinate_nonlinearities_of_printed_natural_table():
    values = walsh_spectrum(load_fixture("S_N_1667_351")).coordinate_nonlinearities()

    assert len(values) == 8
    assert min(values) == 106
    assert all(106 <= value <= 118 for value in values)


"""
AES
"""


def test_aes_row(aes_sbox: SBox):
    published = COMPARISON_ROWS["aes"]

    assert coordinate_nonlinearity(aes_sbox) == nonlinearity(aes_sbox) == published.nl == 112
    assert lap(aes_sbox) == Fraction(1, 16)
    assert dap(aes_sbox) == Fraction(4, 256)


def test_aes_bic_per_pair(aes_sbox: SBox):
    bic_max, bic_min = bic_minmax(aes_sbox)
    logger.info("AES bic=(%s, %s), published (0.504, 0.480)", render(bic_max), render(bic_min))

    assert (render(bic_max), render(bic_min)) == ("0.5254", "0.4805")
    assert float(bic_min) == pytest.approx(COMPARISON_ROWS["aes"].bic_min, abs=0.004)


"""
Oracles on the golden tables
"""


@pytest.mark.slow
@pytest.mark.parametrize("name", ["S_N_1667_351", "S_D_3299_1451", "S_M_4229_2422", "aes"])
def test_metrics_agree_with_brute_force(name: str):
    sbox = load_fixture(name)
    worst = int(np.abs(naive_lat(sbox)[:, 1:]).max())
    ddt = naive_ddt(sbox)

    assert nonlinearity(sbox) == 128 - worst
    assert lap(sbox) == Fraction(worst, 256)
    assert dap(sbox) == Fraction(max(max(row) for row in ddt[1:]), 256)


@pytest.mark.parametrize("name", ["S_N_1667_351", "S_D_3299_1451", "S_M_4229_2422", "aes"])
def test_parseval_on_golden_tables(name: str):
    assert walsh_spectrum(load_fixture(name)).parseval_holds() is True
