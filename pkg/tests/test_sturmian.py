from fractions import Fraction

import pytest

from minshift.errors import BudgetError, DomainError
from minshift.language import complexity, special_words
from minshift.sturmian import as_quotients, characteristic_word, sturmian_language


def _slope(quotients):
    # the standard-word recursion over (a1, a2, ...) generates the
    # mechanical word of slope [0; 1+a1, a2, a3, ...]
    value = Fraction(0)
    for a in reversed((quotients[0] + 1,) + tuple(quotients[1:])):
        value = Fraction(1, a + value)
    return value


def _mechanical(alpha, length):
    p, q = alpha.numerator, alpha.denominator
    return "".join(
        "1" if (n + 1) * p // q - n * p // q else "0" for n in range(1, length + 1))


@pytest.mark.parametrize("quotients", [
    (1,) * 25,
    (2,) + (1,) * 24,
    (3, 2) + (1, 2) * 10,
])
def test_matches_mechanical_word(quotients):
    # floor-arithmetic oracle, independent of the recursion
    assert characteristic_word(quotients, 300) == _mechanical(_slope(quotients), 300)


def test_characteristic_word_values():
    assert characteristic_word((1, 1, 1, 1, 1, 1), 10) == "0100101001"
    assert characteristic_word((2, 1, 1), 7) == "0010001"


def test_quotient_exhaustion_names_reached_length():
    with pytest.raises(DomainError) as err:
        characteristic_word((1, 1), 50)
    assert "length 3" in str(err.value)
    with pytest.raises(DomainError):
        characteristic_word((1, 1, 1), 0)


def test_as_quotients_validation():
    assert as_quotients(["2", "1"]) == (2, 1)
    with pytest.raises(DomainError):
        as_quotients([])
    with pytest.raises(DomainError):
        as_quotients([1, 0, 1])


def test_language_is_sturmian(sturmian_table):
    for n in range(1, 21):
        assert complexity(sturmian_table, n) == n + 1
    for n in range(1, 20):
        assert len(special_words(sturmian_table, n, "left")) == 1
    assert sturmian_table.exact
    assert sturmian_table.provenance["quotients"] == [1] * 25


def test_balance_property(sturmian_table):
    # any two equal-length factors carry almost the same number of 1s
    for n in range(1, 21):
        weights = {w.count("1") for w in sturmian_table.factors(n)}
        assert max(weights) - min(weights) <= 1


def test_short_quotients_cannot_fill_a_table():
    with pytest.raises((DomainError, BudgetError)):
        sturmian_language((1, 1), 10)
    with pytest.raises(DomainError):
        sturmian_language((1,) * 25, 0)
