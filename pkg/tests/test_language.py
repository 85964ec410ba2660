import io
import json

import pytest

from minshift.errors import DomainError, ValidationError
from minshift.language import (
    build_language, build_language_from_sequence, cassaigne_K, complexity,
    complexity_diff, dump_table, left_extensions, load_table, right_extensions,
    special_words, table_from_json_dict, to_json_dict,
)
from minshift.words import FIBONACCI, Substitution, iterate


def test_fibonacci_complexity(fib_table):
    # the Fibonacci substitution generates a Sturmian system
    for n in range(1, 20):
        assert complexity(fib_table, n) == n + 1
        if n < 19:
            assert complexity_diff(fib_table, n) == 1


def test_factors_are_sorted_and_indexed(fib_table):
    assert fib_table.factors(1) == ("0", "1")
    assert fib_table.factors(2) == ("00", "01", "10")
    assert "010" in fib_table
    assert "11" not in fib_table
    assert "x" not in fib_table
    assert fib_table.counts()[:4] == (2, 3, 4, 5)
    assert fib_table.exact
    with pytest.raises(DomainError):
        fib_table.factors(0)
    with pytest.raises(DomainError):
        fib_table.factors(21)
    with pytest.raises(DomainError):
        complexity_diff(fib_table, 20)


def test_build_language_rejects_bad_input():
    with pytest.raises(DomainError):
        build_language(FIBONACCI, 0)
    with pytest.raises(ValidationError):
        build_language(Substitution({"a": "ab", "b": "b"}), 4)


def test_build_matches_long_prefix_harvest(acb_theta, acb_table):
    # every factor set must coincide with raw subwords of a long iterate
    prefix = iterate(acb_theta, "a", 9)
    for n in range(1, 13):
        brute = {prefix[i : i + n] for i in range(len(prefix) - n + 1)}
        assert set(acb_table.factors(n)) == brute


def test_extensions(fib_table):
    assert right_extensions(fib_table, "0") == {"0", "1"}
    assert left_extensions(fib_table, "1") == {"0"}
    assert left_extensions(fib_table, "010") == {"0", "1"}
    with pytest.raises(DomainError):
        left_extensions(fib_table, "11")
    with pytest.raises(DomainError):
        right_extensions(fib_table, fib_table.factors(20)[0])


def test_special_word_counting_identity(acb_table):
    # sum over left-special words of (#extensions - 1) equals s(n)
    for n in range(1, 21):
        total = sum(len(ext) - 1 for _, ext in special_words(acb_table, n, "left"))
        assert total == complexity_diff(acb_table, n)
    with pytest.raises(DomainError):
        special_words(acb_table, 35, "left")
    with pytest.raises(DomainError):
        special_words(acb_table, 3, "middle")


def test_periodic_prefix_is_accepted_when_not_exact():
    table = build_language_from_sequence("a" * 40, 4)
    assert not table.exact
    assert table.counts() == (1, 1, 1, 1)
    assert table.provenance["extendable"]
    with pytest.raises(DomainError):
        build_language_from_sequence("ab", 4)


def test_strict_validation_rejects_periodic_tables():
    doc = to_json_dict(build_language_from_sequence("ab" * 20, 4))
    doc["provenance"]["exact"] = True  # claim exactness for a periodic source
    with pytest.raises(ValidationError) as err:
        table_from_json_dict(doc)
    assert "strictly increasing" in str(err.value)


def test_json_round_trip(fib_table):
    doc = to_json_dict(fib_table)
    again = table_from_json_dict(json.loads(json.dumps(doc)))
    assert again.alphabet == fib_table.alphabet
    assert again.counts() == fib_table.counts()
    for n in range(1, 21):
        assert again.factors(n) == fib_table.factors(n)
    buf = io.StringIO()
    dump_table(fib_table, buf)
    buf.seek(0)
    assert load_table(buf).counts() == fib_table.counts()


def test_tampered_table_is_rejected(fib_table):
    doc = to_json_dict(fib_table)
    doc["factors"]["2"].remove("01")  # break factor closure
    with pytest.raises(ValidationError):
        table_from_json_dict(doc)
    with pytest.raises(ValidationError):
        table_from_json_dict({"alphabet": ["0"]})


def test_cassaigne_probe(acb_table):
    probe = cassaigne_K(acb_table, 30)
    assert (probe.l_hat, probe.k) == (4, 4)
    assert tuple(probe) == (4, 4)
    assert probe.empirical
    assert not cassaigne_K(acb_table, 30, certified_bounded=True).empirical
    with pytest.raises(DomainError):
        cassaigne_K(acb_table, 35)
    with pytest.raises(DomainError):
        cassaigne_K(acb_table, 0)
