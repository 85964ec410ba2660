import json

import pytest

from minshift.blockcodes import (
    apply, code_from_json_dict, compose, enumerate_endomorphisms, equals,
    find_inverse, find_root_relation, make_code, morse_mirror_system,
    shift_power, verify_endomorphism,
)
from minshift.branching import (
    aut_upper_bound, branch_census, certify_branch_periodic,
    certify_branch_suffix, left_special_tree,
)
from minshift.errors import BudgetError, DomainError, ValidationError
from minshift.language import complexity


def _exchange(table):
    return make_code(table, 0, 0, {"0": "1", "1": "0"})


def test_make_code_validates_domain(fib_table):
    with pytest.raises(ValidationError):
        make_code(fib_table, 0, 1, {"00": "0", "01": "1"})  # missing "10"
    with pytest.raises(ValidationError):
        make_code(fib_table, 0, 0, {"0": "1", "1": "0", "2": "0"})
    with pytest.raises(ValidationError):
        make_code(fib_table, 0, 0, {"0": "x", "1": "0"})
    with pytest.raises(DomainError):
        make_code(fib_table, -1, 0, {})
    with pytest.raises(DomainError):
        make_code(fib_table, 0, 25, {})


def test_apply_and_windows(fib_table):
    sigma = shift_power(1, fib_table)
    assert sigma.window == 2
    assert apply(sigma, "010010") == "10010"
    ident = shift_power(0, fib_table)
    assert apply(ident, "010") == "010"
    with pytest.raises(DomainError):
        apply(sigma, "0")
    with pytest.raises(DomainError):
        sigma.output("11")


def test_shift_power_algebra(fib_table):
    s1 = shift_power(1, fib_table)
    s2 = shift_power(2, fib_table)
    s3 = shift_power(3, fib_table)
    assert equals(compose(s1, s2), s3, fib_table)
    assert equals(compose(s2, s1), s3, fib_table)
    assert not equals(s1, s2, fib_table)
    with pytest.raises(DomainError):
        shift_power(-1, fib_table)
    with pytest.raises(DomainError):
        shift_power(20, fib_table)


def test_equality_pads_to_common_window(fib_table):
    narrow = shift_power(1, fib_table)
    wide = make_code(fib_table, 0, 2, {w: w[1] for w in fib_table.factors(3)})
    assert narrow.window != wide.window
    assert equals(narrow, wide, fib_table)


def test_composition_is_function_composition(tm_table):
    ex = _exchange(tm_table)
    s1 = shift_power(1, tm_table)
    both = compose(ex, s1)
    for w in tm_table.factors(6):
        assert apply(both, w) == apply(ex, apply(s1, w))
    # associativity on the induced maps
    assert equals(compose(ex, compose(s1, s1)),
                  compose(compose(ex, s1), s1), tm_table)
    # the exchange is an involution
    assert equals(compose(ex, ex), shift_power(0, tm_table), tm_table)


def test_verify_reports_witness(tm_table):
    constant = make_code(tm_table, 0, 0, {"0": "0", "1": "0"})
    report = verify_endomorphism(constant, tm_table, 6)
    assert not report.ok
    word, image = report.witness
    assert apply(constant, word) == image
    assert image not in tm_table
    assert report.verified_depth < 6
    good = verify_endomorphism(_exchange(tm_table), tm_table, 10)
    assert good.ok and good.verified_depth == 10
    with pytest.raises(DomainError):
        verify_endomorphism(constant, tm_table, 0)
    with pytest.raises(DomainError):
        verify_endomorphism(constant, tm_table, 17)


def test_thue_morse_radius0_search(tm_table):
    reports = enumerate_endomorphisms(tm_table, 0, 12)
    rules = [dict(r.code.rule) for r in reports]
    assert rules == [{"0": "0", "1": "1"}, {"0": "1", "1": "0"}]
    assert [r.shift_power_equivalent for r in reports] == [0, None]
    assert all(r.invertible for r in reports)


def test_search_respects_node_budget(acb_table):
    with pytest.raises(BudgetError) as err:
        enumerate_endomorphisms(acb_table, 2, 12, node_budget=40)
    assert err.value.spent == 41
    # a generous budget changes nothing
    full = enumerate_endomorphisms(acb_table, 1, 8)
    capped = enumerate_endomorphisms(acb_table, 1, 8, node_budget=10 ** 9)
    assert [r.code for r in full] == [r.code for r in capped]


def test_invertible_codes_within_branch_bound(acb_theta, acb_table):
    reports = enumerate_endomorphisms(acb_table, 1, 8)
    invertible = [r for r in reports if r.invertible]
    certs = tuple(certify_branch_periodic(acb_theta, acb_table, 2)
                  + certify_branch_suffix(acb_theta, acb_table, 2))
    census = branch_census(left_special_tree(acb_table, 30), certs)
    assert len(invertible) <= aut_upper_bound(census)
    assert [r.shift_power_equivalent for r in invertible] == [0]


def test_find_inverse(fib_table, tm_table):
    ident = shift_power(0, fib_table)
    inv = find_inverse(ident, fib_table, 2)
    assert inv is not None and equals(inv, ident, fib_table)
    # the one-sided shift drops information, so no inverse exists
    assert find_inverse(shift_power(1, fib_table), fib_table, 4) is None
    ex = _exchange(tm_table)
    assert equals(find_inverse(ex, tm_table, 2), ex, tm_table)


def test_root_relations(fib_table, tm_table):
    assert find_root_relation(shift_power(2, fib_table), fib_table, 3, 4) == (1, 2)
    ex = _exchange(tm_table)
    assert find_root_relation(ex, tm_table, 4, 4) == (2, 0)
    assert find_root_relation(ex, tm_table, 1, 0) is None
    with pytest.raises(DomainError):
        find_root_relation(ex, tm_table, 0, 4)
    with pytest.raises(DomainError):
        find_root_relation(shift_power(8, fib_table), fib_table, 3, 4)


def test_code_json_round_trip(fib_table):
    sigma = shift_power(1, fib_table)
    doc = json.loads(json.dumps(sigma.to_json_dict()))
    again = code_from_json_dict(doc, fib_table)
    assert again == sigma
    assert equals(again, sigma, fib_table)
    doc["rule"] = doc["rule"][:-1]
    with pytest.raises(ValidationError):
        code_from_json_dict(doc, fib_table)
    with pytest.raises(ValidationError):
        code_from_json_dict({"memory": 0}, fib_table)


def test_mirror_system_shape():
    table, code = morse_mirror_system(10)
    assert code.window == 4
    assert [complexity(table, n) for n in range(1, 9)] == [2, 4, 6, 8, 10, 12, 14, 16]
    assert not table.exact
    assert table.provenance["extendable"]
    with pytest.raises(DomainError):
        morse_mirror_system(9)
