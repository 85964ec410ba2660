"""Built-in verification suite over the worked examples.

Each check group replays one family of claims at desk scale: Sturmian
complexity, the bounded-radius endomorphism searches, the three-letter
substitution census, the Thue-Morse mirror system, the closed-form
bounds, the chain-count inequalities, and equivalence of the optimized
paths against naive reference implementations kept in this module.  The
CLI runs groups through ``run_checks``; the test suite drives the same
functions, so a green suite and a clean CLI report mean the same thing.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .blockcodes import (
    compose, enumerate_endomorphisms, equals, find_root_relation,
    morse_mirror_system, shift_power, verify_endomorphism,
)
from .branching import (
    asymptotic_upper_bound, aut_upper_bound, branch_census,
    certify_branch_periodic, certify_branch_suffix, left_special_tree,
    substitution_root_bound,
)
from .errors import DomainError, MinshiftError
from .language import build_language, complexity, complexity_diff, special_words
from .recurrence import cassaigne_s_bound, lr_aut_bound
from .sturmian import sturmian_language
from .words import FIBONACCI, THUE_MORSE, iterate, parse_rules

ACB_RULES = "a -> acb\nb -> aba\nc -> aca"

FIBONACCI_QUOTIENTS = (1,) * 25
SECOND_QUOTIENTS = (2,) + (1,) * 24    # tail of ones so the word reaches length 1672

THUE_MORSE_P10 = (2, 4, 6, 10, 12, 16, 20, 22, 24, 28)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str

    def line(self):
        return "%s %-34s %s" % ("PASS" if self.ok else "FAIL", self.name, self.detail)


def _result(name, ok, detail):
    return CheckResult(name=name, ok=bool(ok), detail=detail)


@lru_cache(maxsize=None)
def _acb():
    return parse_rules(ACB_RULES)


@lru_cache(maxsize=None)
def _sub_table(which, n_max):
    theta = {"acb": _acb, "fib": lambda: FIBONACCI, "tm": lambda: THUE_MORSE}[which]()
    return build_language(theta, n_max)


@lru_cache(maxsize=None)
def _sturmian_table(quotients, n_max):
    return sturmian_language(quotients, n_max)


@lru_cache(maxsize=None)
def _mirror(exponent):
    return morse_mirror_system(exponent)


# ---------------------------------------------------------------------------
# reference implementations: deliberately naive, used only for cross-checks

def naive_endomorphisms(table, radius, depth):
    """Unpruned search: try every rule table, keep full verification passers.

    Returns the surviving rule dicts as a sorted list of tuples.
    """
    win = radius + 1
    windows = table.factors(win)
    survivors = []
    for outputs in product(table.alphabet, repeat=len(windows)):
        rule = dict(zip(windows, outputs))
        ok = True
        for m in range(1, depth + 1):
            for v in table.factors(m + win - 1):
                img = "".join(rule[v[i : i + win]] for i in range(m))
                if img not in table:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            survivors.append(tuple(sorted(rule.items())))
    return sorted(survivors)


def brute_force_factors(theta, seed, n_max):
    """Subword sets of an iterate prefix of provably sufficient length."""
    max_img = max(len(v) for v in theta.images.values())
    target = 4 * (n_max + max_img)
    k = 0
    while len(iterate(theta, seed, k)) < target:
        k += 1
    prefix = iterate(theta, seed, k)
    out = {n: set() for n in range(1, n_max + 1)}
    for n in range(1, n_max + 1):
        for i in range(len(prefix) - n + 1):
            out[n].add(prefix[i : i + n])
    return out


# ---------------------------------------------------------------------------
# check groups

def check_sturmian_complexity():
    out = []
    for label, q in (("fibonacci", FIBONACCI_QUOTIENTS), ("quotients-2111", SECOND_QUOTIENTS)):
        table = _sturmian_table(q, 201)
        bad_p = [n for n in range(1, 201) if complexity(table, n) != n + 1]
        out.append(_result(
            "sturmian-p[%s]" % label, not bad_p,
            "p(n)=n+1 for n<=200" if not bad_p else "fails at n=%s" % bad_p[:5]))
        bad_ls = [n for n in range(1, 201)
                  if len(special_words(table, n, "left")) != 1]
        out.append(_result(
            "sturmian-left-special[%s]" % label, not bad_ls,
            "exactly one left-special word per length" if not bad_ls
            else "count != 1 at n=%s" % bad_ls[:5]))
    return out


def check_sturmian_automorphisms():
    table = _sturmian_table(FIBONACCI_QUOTIENTS, 20)
    reports = enumerate_endomorphisms(table, radius=2, depth=12)
    powers = [r.shift_power_equivalent for r in reports]
    ok_set = powers == [0, 1, 2]
    confirmed = ok_set and all(
        equals(r.code, shift_power(n, table), table)
        for r, n in zip(reports, powers))
    invertible = [r.shift_power_equivalent for r in reports if r.invertible]
    return [
        _result("sturmian-endomorphisms", confirmed,
                "radius-2 depth-12 search finds exactly the shift powers 0,1,2"
                if confirmed else "found %s" % powers),
        _result("sturmian-invertible", invertible == [0],
                "invertible subset is the identity only"
                if invertible == [0] else "invertible: %s" % invertible),
    ]


def check_substitution_example():
    theta = _acb()
    table = _sub_table("acb", 35)
    tree = left_special_tree(table, 30)
    periodic = certify_branch_periodic(theta, table, 2)
    suffix = certify_branch_suffix(theta, table, 2)
    out = []
    ok_p = len(periodic) == 1 and periodic[0].seed == "a"
    out.append(_result(
        "acb-periodic-certificate", ok_p,
        "one periodic fixed point certificate, seed a, period %d"
        % (periodic[0].period if periodic else -1)))
    ok_s = len(suffix) == 1 and suffix[0].seed_word == "a" and suffix[0].period == 1
    detail = "no certificate"
    if ok_s:
        try:
            suffix[0].verify(table, depth=table.max_length)
            detail = "identity seed.theta(y)=y replayed to depth %d" % table.max_length
        except MinshiftError as exc:
            ok_s = False
            detail = str(exc)
    out.append(_result("acb-suffix-certificate", ok_s, detail))
    census = branch_census(tree, periodic + suffix)
    ok_census = census.counts == {2: 2} and census.certified == {2: True}
    out.append(_result(
        "acb-census", ok_census,
        "census {2: 2}, certified; unconfirmed depth-30 candidates: %s"
        % (census.unconfirmed or "none")))
    bound = aut_upper_bound(census) if ok_census else None
    out.append(_result("acb-aut-bound", bound == 2, "automorphism bound %s" % bound))
    reports = enumerate_endomorphisms(table, radius=2, depth=12)
    powers = [r.shift_power_equivalent for r in reports]
    ok_shift = all(p is not None for p in powers)
    out.append(_result(
        "acb-search", ok_shift,
        "radius-2 depth-12 endomorphisms are shift powers %s" % powers
        if ok_shift else "non-shift code found"))
    return out


def check_mirror():
    table, phi = _mirror(14)
    out = []
    rep = verify_endomorphism(phi, table, 20)
    out.append(_result("mirror-endomorphism", rep.ok,
                       "window-4 rule verified to depth 20" if rep.ok
                       else "witness %s" % (rep.witness,)))
    ok_sq = equals(compose(phi, phi), shift_power(2, table), table)
    out.append(_result("mirror-square", ok_sq, "code^2 equals shift^2"))
    mismatches = [n for n in range(7) if equals(phi, shift_power(n, table), table)]
    out.append(_result("mirror-not-a-power", not mismatches,
                       "differs from shift^n for n<=6" if not mismatches
                       else "equals shift^%s" % mismatches))
    rel = find_root_relation(phi, table, 2, 2)
    out.append(_result("mirror-root-relation", rel == (2, 2), "relation %s" % (rel,)))
    return out


def check_bounds():
    out = []
    lr = tuple(lr_aut_bound(k) for k in (1, 2, 3))
    out.append(_result("bounds-lr", lr == (100, 294, 648), "2(K+1)(2K+3)^2 at K=1,2,3: %s" % (lr,)))
    cs = tuple(cassaigne_s_bound(k) for k in (1, 2, 3, 4))
    out.append(_result("bounds-s", cs == (18, 100, 294, 648), "2K(2K+1)^2 at K=1..4: %s" % (cs,)))
    coherent = all(lr_aut_bound(k) == cassaigne_s_bound(k + 1) for k in range(1, 101))
    out.append(_result("bounds-coherence", coherent,
                       "lr_aut_bound(K) = cassaigne_s_bound(K+1) for K<=100"))
    out.append(_result("bounds-root", substitution_root_bound(3) == 9,
                       "three-letter root bound %d" % substitution_root_bound(3)))
    return out


def _census_for(label):
    if label == "sturmian":
        table = _sturmian_table(FIBONACCI_QUOTIENTS, 32)
        theta = None
    elif label == "mirror":
        table = _mirror(14)[0]
        theta = None
    else:
        table = _sub_table(label, 32 if label != "acb" else 35)
        theta = {"acb": _acb(), "fib": FIBONACCI, "tm": THUE_MORSE}[label]
    depth = min(30, table.max_length - 1)
    tree = left_special_tree(table, depth)
    certs = ()
    if theta is not None:
        certs = tuple(certify_branch_periodic(theta, table, 2)
                      + certify_branch_suffix(theta, table, 2))
    census = branch_census(tree, certs)
    return table, depth, tree, census


def check_census_chain():
    out = []
    for label in ("acb", "fib", "tm", "sturmian", "mirror"):
        table, depth, tree, census = _census_for(label)
        s_max = max(complexity_diff(table, n) for n in range(1, depth + 1))
        chains = len(tree.chains)
        out.append(_result(
            "chain-bound[%s]" % label, chains <= s_max,
            "%d chain(s) at depth %d <= max s = %d" % (chains, depth, s_max)))
        if census.counts:
            asym = asymptotic_upper_bound(census)
            ok = asym.upper_bound_total >= census.total()
            out.append(_result(
                "order-sum[%s]" % label, ok,
                "order sum %d >= census total %d" % (asym.upper_bound_total, census.total())))
    return out


def check_oracle_equivalence():
    out = []
    for label in ("tm", "fib"):
        table = _sub_table(label, 16)
        for radius in (0, 1):
            got = sorted(r.code.rule for r in
                         enumerate_endomorphisms(table, radius, 8, test_invertibility=False))
            want = naive_endomorphisms(table, radius, 8)
            out.append(_result(
                "search-oracle[%s,r=%d]" % (label, radius), got == want,
                "%d code(s), pruned = naive" % len(want) if got == want
                else "pruned %d vs naive %d" % (len(got), len(want))))
    for label, theta, seed in (("acb", _acb(), "a"), ("fib", FIBONACCI, "0"),
                               ("tm", THUE_MORSE, "0")):
        table = _sub_table(label, 16)
        brute = brute_force_factors(theta, seed, 12)
        same = all(set(table.factors(n)) == brute[n] for n in range(1, 13))
        out.append(_result(
            "language-oracle[%s]" % label, same,
            "factor sets equal brute-force subwords for n<=12"))
    return out


def check_thue_morse():
    out = []
    table = _sub_table("tm", 16)
    golden = tuple(complexity(table, n) for n in range(1, 11))
    brute = brute_force_factors(THUE_MORSE, "0", 10)
    recomputed = tuple(len(brute[n]) for n in range(1, 11))
    ok_p = golden == THUE_MORSE_P10 == recomputed
    out.append(_result("tm-complexity", ok_p,
                       "p(1..10) = %s, table and brute force agree" % (golden,)))
    reports = enumerate_endomorphisms(table, radius=0, depth=12)
    exchange = [r.code for r in reports
                if dict(r.code.rule) == {"0": "1", "1": "0"}]
    out.append(_result("tm-exchange-found", len(exchange) == 1,
                       "0<->1 exchange passes the radius-0 search"))
    rel = find_root_relation(exchange[0], table, 4, 4) if exchange else None
    out.append(_result("tm-exchange-root", rel == (2, 0), "relation %s" % (rel,)))
    return out


GROUPS = (
    ("sturmian-complexity", check_sturmian_complexity),
    ("sturmian-automorphisms", check_sturmian_automorphisms),
    ("substitution-example", check_substitution_example),
    ("mirror", check_mirror),
    ("bounds", check_bounds),
    ("census-chain", check_census_chain),
    ("oracle-equivalence", check_oracle_equivalence),
    ("thue-morse", check_thue_morse),
)

_ALIASES = {
    "hedlund": "mirror",
    "acb": "substitution-example",
}


def run_checks(only=None):
    """Run all groups, or those matching ``only`` by name, alias, or prefix."""
    if only is not None:
        key = _ALIASES.get(only, only)
        selected = [(n, f) for n, f in GROUPS if n == key or n.startswith(key)]
        if not selected:
            raise DomainError(
                "no check group matches %r; groups: %s"
                % (only, ", ".join(n for n, _ in GROUPS)))
    else:
        selected = list(GROUPS)
    results = []
    for _, func in selected:
        results.extend(func())
    return results
