"""Factor languages of minimal sequence systems, stored length by length.

A LanguageTable holds, for each length 1..max_length, the canonically
sorted set of words of that length occurring in the system, plus
provenance describing how the table was produced.  Tables from exact
sources (primitive substitutions, Sturmian generators) are validated
against the structural facts that hold for infinite minimal systems:
factor closure, two-sided extendability, and strictly increasing
complexity.  Tables cut from an explicit finite prefix are only a lower
approximation of a language, so they get the closure check alone and are
flagged non-exact in their provenance.
"""

import json
from dataclasses import dataclass

from .errors import BudgetError, DomainError, StabilizationError, ValidationError
from .kernels import subword_sets
from .words import is_primitive, substitute

_STABILIZATION_CAP = 64


class LanguageTable:
    """Per-length factor sets with membership indexes.

    Construct through :func:`build_language`,
    :func:`build_language_from_sequence`, or :func:`table_from_json_dict`
    rather than directly; those enforce the structural checks appropriate
    to the source.
    """

    __slots__ = ("alphabet", "max_length", "provenance", "_levels", "_sets")

    def __init__(self, alphabet, levels, provenance):
        self.alphabet = tuple(alphabet)
        self.max_length = max(levels)
        self.provenance = dict(provenance)
        self._levels = {n: tuple(sorted(levels[n])) for n in levels}
        self._sets = {n: frozenset(self._levels[n]) for n in levels}

    @property
    def exact(self):
        return bool(self.provenance.get("exact", False))

    def factors(self, n):
        """Sorted tuple of the length-n words."""
        if n not in self._levels:
            raise DomainError("length %d outside table range 1..%d" % (n, self.max_length))
        return self._levels[n]

    def __contains__(self, w):
        s = self._sets.get(len(w))
        return s is not None and w in s

    def counts(self):
        return tuple(len(self._levels[n]) for n in range(1, self.max_length + 1))


def _validate(table, strict):
    for n in range(2, table.max_length + 1):
        shorter = table._sets[n - 1]
        for w in table._levels[n]:
            if w[:-1] not in shorter or w[1:] not in shorter:
                raise ValidationError(
                    "factor closure fails at %r: a length-%d subword is missing" % (w, n - 1))
    if not strict:
        return
    letters = table.alphabet
    for n in range(1, table.max_length):
        longer = table._sets[n + 1]
        for w in table._levels[n]:
            if not any(w + a in longer for a in letters):
                raise ValidationError("%r has no right extension" % w)
            if not any(a + w in longer for a in letters):
                raise ValidationError("%r has no left extension" % w)
        if len(table._levels[n + 1]) < len(table._levels[n]) + 1:
            raise ValidationError(
                "complexity not strictly increasing at length %d "
                "(an infinite minimal system cannot do this; "
                "the source is periodic or the table is truncated)" % n)


def _is_extendable(table):
    letters = table.alphabet
    for n in range(1, table.max_length):
        longer = table._sets[n + 1]
        for w in table._levels[n]:
            if not any(w + a in longer for a in letters):
                return False
            if not any(a + w in longer for a in letters):
                return False
    return True


def _merge(dst, src):
    grew = False
    for n, words in src.items():
        if n in dst and not words <= dst[n]:
            dst[n] |= words
            grew = True
        elif n not in dst:
            dst[n] = set(words)
            grew = bool(words)
    return grew


def build_language(theta, n_max):
    """Exact factor sets of the system generated by a primitive substitution.

    Iterates the substitution on every letter, harvesting subwords of
    length at most ``n_max``, until a full pass adds nothing new and every
    single-letter image is at least ``n_max`` long.  Once images are long,
    each pass works on per-letter factor sets plus boundary windows
    instead of the full iterated strings, so the cost per pass stays flat.

    Raises StabilizationError if the fixed point is not reached within the
    iteration cap, rather than returning a truncated table.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    if not is_primitive(theta):
        raise ValidationError(
            "substitution is not primitive; its system need not be minimal")
    letters = theta.alphabet
    edge = max(n_max - 1, 1)

    strings = {a: a for a in letters}        # full iterates, while short
    sets = {a: {1: {a}} for a in letters}    # per-letter subword sets
    prefs = {a: a for a in letters}
    sufs = {a: a for a in letters}
    lens = {a: 1 for a in letters}

    total = {}
    for a in letters:
        _merge(total, sets[a])

    for iteration in range(1, _STABILIZATION_CAP + 1):
        long_blocks = all(lens[a] >= edge for a in letters)
        new_strings, new_sets = {}, {}
        new_prefs, new_sufs, new_lens = {}, {}, {}
        for a in letters:
            blocks = theta.images[a]
            new_lens[a] = sum(lens[b] for b in blocks)
            if long_blocks:
                merged = {}
                for b in blocks:
                    _merge(merged, sets[b])
                for b1, b2 in zip(blocks, blocks[1:]):
                    _merge(merged, subword_sets(sufs[b1] + prefs[b2], n_max))
                new_sets[a] = merged
                new_prefs[a] = prefs[blocks[0]][:edge]
                new_sufs[a] = sufs[blocks[-1]][-edge:]
            else:
                s = "".join(strings[b] for b in blocks)
                new_strings[a] = s
                new_sets[a] = subword_sets(s, n_max)
                new_prefs[a] = s[:edge]
                new_sufs[a] = s[-edge:]
        strings, sets = new_strings, new_sets
        prefs, sufs, lens = new_prefs, new_sufs, new_lens

        grew = False
        for a in letters:
            grew |= _merge(total, sets[a])
        # boundary windows across every adjacent pair seen so far, until
        # the set of pairs stops producing anything new within this pass
        while True:
            pair_growth = False
            for pair in sorted(total.get(2, ())):
                win = sufs[pair[0]] + prefs[pair[1]]
                pair_growth |= _merge(total, subword_sets(win, n_max))
            if not pair_growth:
                break
            grew = True

        if not grew and min(lens.values()) >= n_max:
            levels = {n: total.get(n, set()) for n in range(1, n_max + 1)}
            table = LanguageTable(
                theta.alphabet, levels,
                {
                    "source": "substitution",
                    "rules": theta.rules_text(),
                    "n_max": n_max,
                    "passes": iteration,
                    "exact": True,
                })
            _validate(table, strict=True)
            return table

    raise StabilizationError(
        "factor harvest did not stabilize within %d passes" % _STABILIZATION_CAP,
        spent=_STABILIZATION_CAP)


def build_language_from_sequence(prefix, n_max):
    """Table of all subwords of an explicit prefix, lengths 1..n_max.

    The result is a lower approximation of whatever language the prefix
    was cut from; provenance marks it non-exact and records whether every
    short factor happened to be two-sidedly extendable within the prefix.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    if len(prefix) < n_max:
        raise DomainError(
            "prefix of length %d is shorter than n_max %d" % (len(prefix), n_max))
    levels = subword_sets(prefix, n_max)
    table = LanguageTable(
        sorted(levels[1]), levels,
        {
            "source": "sequence",
            "prefix_length": len(prefix),
            "n_max": n_max,
            "exact": False,
        })
    _validate(table, strict=False)
    table.provenance["extendable"] = _is_extendable(table)
    return table


def complexity(table, n):
    """p(n): the number of length-n factors."""
    return len(table.factors(n))


def complexity_diff(table, n):
    """s(n) = p(n+1) - p(n)."""
    if n + 1 > table.max_length:
        raise DomainError("need length %d, table stops at %d" % (n + 1, table.max_length))
    return complexity(table, n + 1) - complexity(table, n)


def _extensions(table, w, left):
    if w not in table:
        raise DomainError("%r is not in the language" % w)
    if len(w) >= table.max_length:
        raise DomainError("cannot extend %r: table stops at length %d" % (w, table.max_length))
    longer = table._sets[len(w) + 1]
    if left:
        return frozenset(a for a in table.alphabet if a + w in longer)
    return frozenset(a for a in table.alphabet if w + a in longer)


def left_extensions(table, w):
    """Letters a with a + w in the language."""
    return _extensions(table, w, left=True)


def right_extensions(table, w):
    """Letters a with w + a in the language."""
    return _extensions(table, w, left=False)


def special_words(table, n, side="left"):
    """Length-n words with at least two one-letter extensions on ``side``.

    Returns (word, extension set) pairs in canonical word order.  The
    extension sets satisfy the counting identity
    sum over special words of (|extensions| - 1) = s(n).
    """
    if side not in ("left", "right"):
        raise DomainError("side must be 'left' or 'right'")
    if not 1 <= n < table.max_length:
        raise DomainError("need 1 <= n < %d, got %d" % (table.max_length, n))
    out = []
    for w in table.factors(n):
        ext = _extensions(table, w, left=(side == "left"))
        if len(ext) >= 2:
            out.append((w, ext))
    return out


@dataclass(frozen=True)
class CassaigneProbe:
    """Empirical complexity-difference ceiling and the derived constant.

    ``l_hat`` is the largest s(n) seen up to the probe depth; ``k`` is
    max(l_hat, p(1)).  Unless the caller certifies that s is bounded,
    ``empirical`` stays True: l_hat is then only a lower bound on the
    true supremum of s, and k inherits that status.
    """

    l_hat: int
    k: int
    probe_depth: int
    empirical: bool = True

    def __iter__(self):
        return iter((self.l_hat, self.k))


def cassaigne_K(table, probe_depth, certified_bounded=False):
    """Probe s(n) for n <= probe_depth and form K = max(max s, p(1))."""
    if probe_depth + 1 > table.max_length:
        raise DomainError(
            "probe depth %d needs table length %d" % (probe_depth, probe_depth + 1))
    if probe_depth < 1:
        raise DomainError("probe depth must be >= 1")
    l_hat = max(complexity_diff(table, n) for n in range(1, probe_depth + 1))
    return CassaigneProbe(
        l_hat=l_hat,
        k=max(l_hat, complexity(table, 1)),
        probe_depth=probe_depth,
        empirical=not certified_bounded,
    )


def to_json_dict(table):
    """Serializable form: alphabet, max_length, factors keyed by length, provenance."""
    return {
        "alphabet": list(table.alphabet),
        "max_length": table.max_length,
        "factors": {str(n): list(table.factors(n)) for n in range(1, table.max_length + 1)},
        "provenance": dict(table.provenance),
    }


def table_from_json_dict(doc):
    """Rebuild a table from its JSON form, re-running the structural checks."""
    try:
        levels = {int(k): set(v) for k, v in doc["factors"].items()}
        table = LanguageTable(doc["alphabet"], levels, doc.get("provenance", {}))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError("malformed language table document: %s" % exc)
    _validate(table, strict=table.exact)
    return table


def dump_table(table, fp):
    json.dump(to_json_dict(table), fp, indent=2, sort_keys=True)


def load_table(fp):
    return table_from_json_dict(json.load(fp))
