import logging

import pytest

from mecsbox.reference import load_fixture
from mecsbox.sboxgen import SBox


@pytest.fixture
def aes_sbox() -> SBox:
    return load_fixture("aes")


@pytest.fixture
def natural_sbox() -> SBox:
    return load_fixture("S_N_1667_351")


@pytest.fixture
def identity_sbox() -> SBox:
    return SBox.identity()


@pytest.fixture(autouse=True)
def package_logger():
    """
    configure_logging detaches the package logger from the root; reattach it so caplog sees records.
    """
    logger = logging.getLogger("mecsbox")
    yield logger
    logger.handlers.clear()
    logger.propagate = True
    logger.setLevel(logging.NOTSET)
