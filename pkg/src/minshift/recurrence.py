"""Return words, recurrence-constant probes, and the closed-form bounds.

A return word to a factor u is a word w with u as a prefix, wu in the
language, and exactly two occurrences of u inside wu; the gap between
consecutive occurrence starts of u in a long enough probe realizes every
return word.  The largest ratio length(w)/length(u) over probed u
estimates the linear-recurrence constant from below, and the constant
feeds two closed-form bounds: one for the complexity difference s(n), one
for the size of the automorphism group of a linearly recurrent system.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError


def _occurrences(probe, u):
    starts = []
    i = probe.find(u)
    while i != -1:
        starts.append(i)
        i = probe.find(u, i + 1)
    return starts


def return_words(table, probe, u):
    """Distinct return words to ``u`` realized inside ``probe``.

    Gap words between consecutive occurrence starts are candidates; each
    is kept only if it satisfies the definition: u is a prefix (gaps
    shorter than u, from overlapping occurrences, fail this and are
    dropped), wu is in the language, and u occurs exactly twice in wu.
    wu is always a contiguous piece of the probe, so when it is too long
    for the table its membership is witnessed by the probe itself.
    """
    if not u:
        raise DomainError("empty factor has no return words")
    if u not in table:
        raise DomainError("%r is not in the language" % u)
    starts = _occurrences(probe, u)
    if len(starts) < 2:
        raise DomainError(
            "probe too short: %d occurrence(s) of %r" % (len(starts), u))
    found = set()
    for i, j in zip(starts, starts[1:]):
        w = probe[i:j]
        if not w.startswith(u):
            continue
        wu = probe[i : j + len(u)]
        if len(wu) <= table.max_length and wu not in table:
            continue
        if len(_occurrences(wu, u)) != 2:
            continue
        found.add(w)
    return frozenset(found)


@dataclass(frozen=True)
class ReturnWordIndex:
    """Return-word sets for every factor up to a length, from one probe."""

    per_factor: dict
    probe_length: int

    def words_for(self, u):
        if u not in self.per_factor:
            raise DomainError("%r was not probed" % u)
        return self.per_factor[u]


def return_word_index(table, probe, max_u_length):
    if max_u_length < 1:
        raise DomainError("max_u_length must be >= 1")
    per = {}
    for n in range(1, max_u_length + 1):
        for u in table.factors(n):
            per[u] = return_words(table, probe, u)
    return ReturnWordIndex(per_factor=per, probe_length=len(probe))


@dataclass(frozen=True)
class RecurrenceEstimate:
    """Empirical recurrence constant, reported as an exact rational.

    ``k_hat`` is max over probed u of (longest return word)/length(u).
    A finite probe can only miss return words, so the value is a lower
    bound on the true constant; ``lower_bound_only`` records that.
    """

    k_hat: Fraction
    probe_max_u: int
    witness_u: str
    witness_w: str
    lower_bound_only: bool = True

    def ceiling(self):
        return -((-self.k_hat.numerator) // self.k_hat.denominator)

    def to_json_dict(self):
        return {
            "k_hat": [self.k_hat.numerator, self.k_hat.denominator],
            "probe_max_u": self.probe_max_u,
            "witness_u": self.witness_u,
            "witness_w": self.witness_w,
            "lower_bound_only": self.lower_bound_only,
        }


def recurrence_constant(table, probe, max_u_length):
    """Probe every factor up to ``max_u_length`` and take the worst ratio."""
    index = return_word_index(table, probe, max_u_length)
    best = None
    for u, ws in sorted(index.per_factor.items()):
        for w in sorted(ws):
            ratio = Fraction(len(w), len(u))
            if best is None or ratio > best[0]:
                best = (ratio, u, w)
    if best is None:
        raise DomainError("no return words found up to length %d" % max_u_length)
    ratio, u, w = best
    return RecurrenceEstimate(
        k_hat=ratio, probe_max_u=max_u_length, witness_u=u, witness_w=w)


def lr_aut_bound(K):
    """Automorphism-count bound 2(K+1)(2K+3)^2 for recurrence constant K.

    The same quantity bounds the index k in any root relation
    code^k = shift^n of an endomorphism of a linearly recurrent system.

    >>> lr_aut_bound(1)
    100
    """
    K = _positive_int(K)
    return 2 * (K + 1) * (2 * K + 3) ** 2


def cassaigne_s_bound(K):
    """Complexity-difference bound 2K(2K+1)^2 when p(n) <= Kn + 1.

    Holds for all large n; small n can exceed it.

    >>> cassaigne_s_bound(2)
    100
    """
    K = _positive_int(K)
    return 2 * K * (2 * K + 1) ** 2


def _positive_int(K):
    if K != int(K) or K < 1:
        raise DomainError("K must be an integer >= 1, got %r" % (K,))
    return int(K)
