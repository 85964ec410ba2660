"""Sturmian words from continued-fraction data.

The generator is the standard-word recursion over the partial quotients
(a1, a2, ...): starting from s[-1] = "1" and s[0] = "0", each step takes
s[k] = s[k-1]^(a_k) s[k-2].  The limit is the characteristic word of the
irrational with those quotients; its language has complexity p(n) = n+1,
which the table builder verifies rather than assumes.

>>> characteristic_word((1, 1, 1, 1, 1, 1), 10)
'0100101001'
"""

from .errors import BudgetError, DomainError
from .kernels import subword_sets
from .language import LanguageTable, _validate, complexity

_DOUBLING_CAP = 8


def as_quotients(cf):
    q = tuple(int(a) for a in cf)
    if not q:
        raise DomainError("need at least one partial quotient")
    if any(a < 1 for a in q):
        raise DomainError("partial quotients must be positive, got %s" % (q,))
    return q


def characteristic_word(cf, length):
    """Length-``length`` prefix of the standard word for the quotients ``cf``.

    Raises DomainError when the quotients run out before the requested
    length is reached, naming the length that was available.
    """
    q = as_quotients(cf)
    if length < 1:
        raise DomainError("length must be >= 1")
    prev, cur = "1", "0"
    for a in q:
        if len(cur) >= length:
            break
        prev, cur = cur, cur * a + prev
    if len(cur) < length:
        raise DomainError(
            "quotients exhausted at length %d, need %d; supply a longer tail"
            % (len(cur), length))
    return cur[:length]


def sturmian_language(cf, n_max):
    """Exact factor table of the Sturmian system for the given quotients.

    Cuts factors from a characteristic-word prefix, then checks that the
    table really is Sturmian-complete: p(n) = n+1 for every n <= n_max
    and every factor two-sidedly extendable.  A failing check means the
    prefix was too short to witness all factors, so it is doubled and the
    cut retried; running out of quotients or retries is an error, never a
    silently thin table.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    q = as_quotients(cf)
    target = 8 * n_max + 64
    for _ in range(_DOUBLING_CAP):
        prefix = characteristic_word(q, target)
        table = LanguageTable(
            ("0", "1"),
            subword_sets(prefix, n_max),
            {
                "source": "sturmian",
                "quotients": list(q),
                "construction": "standard-word recursion",
                "prefix_length": len(prefix),
                "n_max": n_max,
                "exact": True,
            })
        if all(complexity(table, n) == n + 1 for n in range(1, n_max + 1)):
            _validate(table, strict=True)
            return table
        target *= 2
    raise BudgetError(
        "prefix doubled %d times without reaching p(n) = n+1" % _DOUBLING_CAP,
        spent=_DOUBLING_CAP)
