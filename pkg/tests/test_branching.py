import pytest

from minshift.branching import (
    BranchCensus, CommonSuffixLimitCertificate, PeriodicFixedPointCertificate,
    asymptotic_upper_bound, aut_upper_bound, branch_census,
    certify_branch_periodic, certify_branch_suffix, left_special_tree,
    substitution_root_bound,
)
from minshift.errors import DomainError, ValidationError
from minshift.words import FIBONACCI, THUE_MORSE, iterate


def test_tree_structure(acb_table):
    tree = left_special_tree(acb_table, 30)
    assert len(tree.chains) == 3
    for w in tree.chains:
        # every prefix of a chain is itself a recorded left-special word
        for k in range(1, 31):
            assert w[:k] in tree.nodes
        # extension sets only shrink along the chain
        for k in range(1, 30):
            assert tree.nodes[w[: k + 1]] <= tree.nodes[w[:k]]
    assert set(tree.chain_orders().values()) == {2}


def test_tree_depth_bounds(fib_table):
    with pytest.raises(DomainError):
        left_special_tree(fib_table, 0)
    with pytest.raises(DomainError):
        left_special_tree(fib_table, 20)


def test_acb_certificates(acb_theta, acb_table):
    periodic = certify_branch_periodic(acb_theta, acb_table, 2)
    assert len(periodic) == 1
    cert = periodic[0]
    assert (cert.seed, cert.period, cert.extension_letters) == ("a", 2, ("a", "b"))
    cert.verify(acb_table)
    assert cert.limit_prefix(64) == iterate(acb_theta, "a", 8)[:64]

    suffix = certify_branch_suffix(acb_theta, acb_table, 2)
    assert len(suffix) == 1
    cert = suffix[0]
    assert (cert.seed_word, cert.period) == ("a", 1)
    assert cert.extension_letters == ("b", "c")
    cert.verify(acb_table)
    # the two certificates name different limit words
    assert periodic[0].limit_prefix(30) != cert.limit_prefix(30)


def test_two_letter_certificates(fib_table, tm_table):
    fib = certify_branch_periodic(FIBONACCI, fib_table, 2)
    assert [(c.seed, c.period) for c in fib] == [("0", 2)]
    tm = certify_branch_periodic(THUE_MORSE, tm_table, 2)
    assert [(c.seed, c.period) for c in tm] == [("0", 2), ("1", 2)]
    assert certify_branch_suffix(FIBONACCI, fib_table, 2) == []
    with pytest.raises(DomainError):
        certify_branch_periodic(FIBONACCI, fib_table, 0)


def test_tampered_certificates_fail_replay(acb_theta, acb_table):
    with pytest.raises(ValidationError):
        # theta^2(b) does not begin with b
        PeriodicFixedPointCertificate(
            theta=acb_theta, seed="b", period=2,
            extension_letters=("a", "b")).verify(acb_table)
    good = certify_branch_periodic(acb_theta, acb_table, 2)[0]
    with pytest.raises(ValidationError):
        PeriodicFixedPointCertificate(
            theta=acb_theta, seed=good.seed, period=good.period,
            extension_letters=("a",)).verify(acb_table)
    with pytest.raises(ValidationError):
        CommonSuffixLimitCertificate(
            theta=acb_theta, letters=("b", "c"), period=1,
            seed_word="b", extension_letters=("b", "c")).verify(acb_table)


def test_census_with_certificates(acb_theta, acb_table):
    tree = left_special_tree(acb_table, 30)
    certs = (certify_branch_periodic(acb_theta, acb_table, 2)
             + certify_branch_suffix(acb_theta, acb_table, 2))
    census = branch_census(tree, tuple(certs))
    assert census.counts == {2: 2}
    assert census.certified == {2: True}
    assert census.unconfirmed == {2: 1}
    assert census.total() == 2
    assert len(census.matches) == 2
    assert {m[1] for m in census.matches} == {
        "periodic-fixed-point", "common-suffix-limit"}
    doc = census.to_json_dict()
    assert doc["counts"] == {"2": 2}
    assert doc["certified"] == {"2": True}


def test_certified_counts_stable_across_depths(acb_theta, acb_table):
    certs = tuple(certify_branch_periodic(acb_theta, acb_table, 2)
                  + certify_branch_suffix(acb_theta, acb_table, 2))
    for depth in (10, 20, 30):
        census = branch_census(left_special_tree(acb_table, depth), certs)
        assert census.counts == {2: 2}


def test_census_without_certificates(acb_table):
    census = branch_census(left_special_tree(acb_table, 30))
    assert census.counts == {2: 3}  # raw depth-30 chains, upper-bound material
    assert census.certified == {2: False}
    assert census.unconfirmed == {}


def test_foreign_certificate_is_a_contradiction(fib_table, acb_theta, acb_table):
    cert = certify_branch_periodic(acb_theta, acb_table, 2)[0]
    tree = left_special_tree(fib_table, 10)
    with pytest.raises(ValidationError):
        branch_census(tree, (cert,))


def test_bounds_from_census(acb_theta, acb_table):
    tree = left_special_tree(acb_table, 30)
    certs = tuple(certify_branch_periodic(acb_theta, acb_table, 2)
                  + certify_branch_suffix(acb_theta, acb_table, 2))
    census = branch_census(tree, certs)
    assert aut_upper_bound(census) == 2
    asym = asymptotic_upper_bound(census)
    assert asym.upper_bound_total == 4
    assert asym.two_sided_bound == 2
    assert not asym.exact
    empty = BranchCensus(counts={}, depth=30, certified={})
    with pytest.raises(DomainError):
        aut_upper_bound(empty)


def test_substitution_root_bound():
    assert substitution_root_bound(2) == 4
    assert substitution_root_bound(3) == 9
    with pytest.raises(DomainError):
        substitution_root_bound(1)
