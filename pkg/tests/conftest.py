import pytest

from minshift.language import build_language
from minshift.sturmian import sturmian_language
from minshift.words import FIBONACCI, THUE_MORSE, parse_rules

ACB_RULES = "a -> acb\nb -> aba\nc -> aca"


@pytest.fixture(scope="session")
def acb_theta():
    return parse_rules(ACB_RULES)


@pytest.fixture(scope="session")
def acb_table(acb_theta):
    return build_language(acb_theta, 35)


@pytest.fixture(scope="session")
def fib_table():
    return build_language(FIBONACCI, 20)


@pytest.fixture(scope="session")
def tm_table():
    return build_language(THUE_MORSE, 16)


@pytest.fixture(scope="session")
def sturmian_table():
    return sturmian_language((1,) * 25, 20)
