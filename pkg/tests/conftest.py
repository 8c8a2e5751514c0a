import pytest

from pacfast.code import CodeConfig

from _helpers import PAC_8_4


@pytest.fixture
def pac84():
    return PAC_8_4


@pytest.fixture(scope="session")
def pac64():
    return CodeConfig.rm(64, 32)


@pytest.fixture(scope="session")
def pac128():
    return CodeConfig.rm(128, 64)
