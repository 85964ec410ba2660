"""Sliding-block codes over a fixed language: algebra and search.

A code is a local rule over a window of consecutive symbols, defined on
exactly the window-length factors of a language table.  Applying it to a
factor slides the window across and emits one output letter per
position.  Two codes induce the same map on the whole system exactly
when their rules agree on every admissible window after padding to a
common window, which makes equality decidable from the table alone.

The endomorphism search enumerates every rule table at a given window
length by assigning outputs window word by window word in canonical
order, pruning any partial assignment that already maps some factor
outside the language; survivors are re-verified in full.  Pruning never
changes the result set, only the work, and its exactness is pinned
against a naive enumeration in the tests.
"""

from dataclasses import dataclass, field, replace

from .errors import BudgetError, DomainError, ValidationError
from .kernels import search_rules
from .language import build_language_from_sequence
from .words import THUE_MORSE, iterate


@dataclass(frozen=True)
class SlidingBlockCode:
    """Local rule over ``memory + 1 + anticipation`` consecutive symbols.

    ``rule`` is a sorted tuple of (window word, output letter) pairs
    covering exactly the window-length factors of ``table_ref``.
    One-sided systems admit only memory 0; compose keeps memories
    additive so the invariant is preserved there.
    """

    memory: int
    anticipation: int
    rule: tuple
    table_ref: object = field(compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_map", dict(self.rule))

    @property
    def window(self):
        return self.memory + 1 + self.anticipation

    def output(self, window_word):
        try:
            return self._map[window_word]
        except KeyError:
            raise DomainError("window %r is outside the rule's domain" % window_word)

    def to_json_dict(self):
        return {
            "memory": self.memory,
            "anticipation": self.anticipation,
            "rule": [[w, out] for w, out in self.rule],
        }


def make_code(table, memory, anticipation, assignments):
    """Build a code after checking the rule covers exactly the window factors."""
    if memory < 0 or anticipation < 0:
        raise DomainError("memory and anticipation must be >= 0")
    window = memory + 1 + anticipation
    if window > table.max_length:
        raise DomainError("window %d exceeds table length %d" % (window, table.max_length))
    domain = set(table.factors(window))
    given = set(assignments)
    if given != domain:
        missing = sorted(domain - given)[:3]
        extra = sorted(given - domain)[:3]
        raise ValidationError(
            "rule domain mismatch: missing %s, extraneous %s" % (missing, extra))
    for w, out in assignments.items():
        if out not in table.alphabet:
            raise ValidationError("output %r for window %r is not a letter" % (out, w))
    return SlidingBlockCode(
        memory=memory,
        anticipation=anticipation,
        rule=tuple(sorted(assignments.items())),
        table_ref=table,
    )


def code_from_json_dict(doc, table):
    try:
        assignments = {w: out for w, out in doc["rule"]}
        return make_code(table, int(doc["memory"]), int(doc["anticipation"]), assignments)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError("malformed code document: %s" % exc)


def apply(code, w):
    """Slide the rule across ``w``; output length is len(w) - window + 1."""
    win = code.window
    if len(w) < win:
        raise DomainError("word of length %d is shorter than window %d" % (len(w), win))
    return "".join(code.output(w[i : i + win]) for i in range(len(w) - win + 1))


def shift_power(n, table):
    """The n-th shift power as a code: window n+1, output the last symbol.

    >>> import minshift.language, minshift.words
    >>> t = minshift.language.build_language(minshift.words.FIBONACCI, 4)
    >>> apply(shift_power(1, t), "0100")
    '100'
    """
    if n < 0:
        raise DomainError("shift power must be >= 0")
    if n + 1 > table.max_length:
        raise DomainError("shift power %d needs table length %d" % (n, n + 1))
    return make_code(table, 0, n, {w: w[n] for w in table.factors(n + 1)})


def compose(outer, inner, table=None):
    """The code acting as outer-after-inner; windows and memories add."""
    table = table if table is not None else outer.table_ref
    window = outer.window + inner.window - 1
    if window > table.max_length:
        raise DomainError(
            "composition window %d exceeds table length %d" % (window, table.max_length))
    assignments = {w: outer.output(apply(inner, w)) for w in table.factors(window)}
    return make_code(
        table, outer.memory + inner.memory,
        outer.anticipation + inner.anticipation, assignments)


def _aligned_output(code, w, common_memory):
    lo = common_memory - code.memory
    return code.output(w[lo : lo + code.window])


def equals(c1, c2, table=None):
    """Whether the two codes induce the same map on the whole system.

    Pads both rules to a common window and compares outputs on every
    admissible window word; agreement there decides equality of the
    induced maps exactly.
    """
    table = table if table is not None else c1.table_ref
    m = max(c1.memory, c2.memory)
    a = max(c1.anticipation, c2.anticipation)
    window = m + 1 + a
    if window > table.max_length:
        raise DomainError(
            "common window %d exceeds table length %d" % (window, table.max_length))
    return all(
        _aligned_output(c1, w, m) == _aligned_output(c2, w, m)
        for w in table.factors(window))


@dataclass(frozen=True)
class EndomorphismReport:
    """Outcome of checking a code against a language to a depth.

    ``ok`` means every factor with image length at most ``verified_depth``
    mapped back into the language; containment beyond that depth is not
    claimed.  Surjectivity is not checked separately: for a minimal
    system a shift-commuting map with image inside the system is
    automatically onto.  ``shift_power_equivalent``, ``root_relation``
    and ``invertible`` are filled by the operations that compute them and
    stay None when untested.
    """

    code: SlidingBlockCode
    verified_depth: int
    ok: bool
    witness: tuple = None
    shift_power_equivalent: int = None
    root_relation: tuple = None
    invertible: bool = None

    def to_json_dict(self):
        return {
            "code": self.code.to_json_dict(),
            "verified_depth": self.verified_depth,
            "ok": self.ok,
            "witness": list(self.witness) if self.witness else None,
            "shift_power_equivalent": self.shift_power_equivalent,
            "root_relation": list(self.root_relation) if self.root_relation else None,
            "invertible": self.invertible,
        }


def verify_endomorphism(code, table, depth):
    """Check image containment for every factor with image length <= depth."""
    win = code.window
    if depth < 1:
        raise DomainError("depth must be >= 1")
    if depth + win - 1 > table.max_length:
        raise DomainError(
            "depth %d with window %d needs table length %d"
            % (depth, win, depth + win - 1))
    for n in range(1, depth + 1):
        for w in table.factors(n + win - 1):
            img = apply(code, w)
            if img not in table:
                return EndomorphismReport(
                    code=code, verified_depth=n - 1, ok=False, witness=(w, img))
    return EndomorphismReport(code=code, verified_depth=depth, ok=True)


def _shift_power_match(code, table):
    for n in range(code.window):
        if all(code.output(w) == w[n] for w in table.factors(code.window)):
            return n
    return None


def find_inverse(code, table, max_anticipation):
    """A code composing with ``code`` to the identity both ways, or None.

    Scans candidate windows up to ``max_anticipation + 1``.  For each, the
    requirement g(image of v) = first symbol of v over all long enough
    factors v pins down g completely; any conflict, gap, or failure of
    the reverse composition rejects the candidate size.  Sound but only
    complete up to the scanned window sizes.
    """
    identity = shift_power(0, table)
    for wg in range(1, max_anticipation + 2):
        big = wg + code.window - 1
        if big > table.max_length:
            break
        assignments = {}
        consistent = True
        for v in table.factors(big):
            u = apply(code, v)
            if assignments.setdefault(u, v[0]) != v[0]:
                consistent = False
                break
        if not consistent or set(assignments) != set(table.factors(wg)):
            continue
        g = make_code(table, 0, wg - 1, assignments)
        if equals(compose(code, g, table), identity, table):
            return g
    return None


def enumerate_endomorphisms(table, radius, depth, node_budget=None,
                            test_invertibility=True):
    """All window-(radius+1) rules that keep the language inside itself.

    Every code of anticipation up to ``radius`` is induced by exactly one
    such rule (pad shorter windows on the right), so this is the full
    memory-0 endomorphism search at the radius.  Assignments are explored
    in canonical order with language pruning and a node budget; survivors
    are re-verified factor by factor, compared against shift powers, and
    probed for an inverse at anticipation up to 2 * radius.

    Returns reports sorted by rule table; deterministic.
    """
    if radius < 0:
        raise DomainError("radius must be >= 0")
    if depth < 1:
        raise DomainError("depth must be >= 1")
    win = radius + 1
    if depth + radius > table.max_length:
        raise DomainError(
            "depth %d at radius %d needs table length %d"
            % (depth, radius, depth + radius))
    windows = table.factors(win)
    rank = {w: i for i, w in enumerate(windows)}
    letters = table.alphabet
    letter_index = {a: i for i, a in enumerate(letters)}

    buckets = [[] for _ in windows]
    targets = {}
    for m in range(1, depth + 1):
        targets[m] = {
            bytes(letter_index[c] for c in w) for w in table.factors(m)
        }
        for v in table.factors(m + win - 1):
            ranks = tuple(rank[v[i : i + win]] for i in range(m))
            buckets[max(ranks)].append((ranks, m))

    tables, _nodes = search_rules(
        len(windows), len(letters), buckets, targets, node_budget)

    reports = []
    for assignment in tables:
        code = make_code(
            table, 0, radius,
            {w: letters[assignment[i]] for i, w in enumerate(windows)})
        report = verify_endomorphism(code, table, depth)
        if not report.ok:
            raise ValidationError(
                "pruned search accepted a rule that full verification rejects: %r"
                % (report.witness,))
        report = replace(report, shift_power_equivalent=_shift_power_match(code, table))
        if test_invertibility:
            inverse = find_inverse(code, table, 2 * radius)
            report = replace(report, invertible=inverse is not None)
        reports.append(report)
    return reports


def find_root_relation(code, table, k_max, n_max):
    """Least (k, n) lexicographically with code^k = shift^n, or None.

    >>> import minshift.language, minshift.words
    >>> t = minshift.language.build_language(minshift.words.FIBONACCI, 8)
    >>> find_root_relation(shift_power(3, t), t, 2, 4)
    (1, 3)
    """
    if k_max < 1 or n_max < 0:
        raise DomainError("need k_max >= 1 and n_max >= 0")
    deepest = max(k_max * (code.window - 1) + 1, n_max + 1)
    if deepest > table.max_length:
        raise DomainError(
            "relation search needs table length %d, have %d"
            % (deepest, table.max_length))
    powers = [shift_power(n, table) for n in range(n_max + 1)]
    current = None
    for k in range(1, k_max + 1):
        current = code if current is None else compose(current, code, table)
        for n, sigma_n in enumerate(powers):
            if equals(current, sigma_n, table):
                return (k, n)
    return None


_MIRROR_BLOCKS = {"0": "1001", "1": "1101"}
_MIRROR_TABLE_DEPTH = 24


def morse_mirror_system(depth_exponent):
    """Blockwise coding of the Thue-Morse word and its four-symbol rule.

    Codes a Thue-Morse prefix of length 2^depth_exponent through
    0 -> 1001, 1 -> 1101, cuts the factor table from the coded string
    (subwords of a long prefix cover all four shift phases of the block
    structure), and builds the window-4 rule that outputs 1 on 1001, 0 on
    1101, and the second symbol otherwise.
    """
    if depth_exponent < 10:
        raise DomainError("depth exponent must be >= 10")
    base = iterate(THUE_MORSE, "0", depth_exponent)
    coded = "".join(_MIRROR_BLOCKS[c] for c in base)
    table = build_language_from_sequence(coded, _MIRROR_TABLE_DEPTH)
    table.provenance["construction"] = (
        "Thue-Morse prefix of length 2^%d coded blockwise 0->1001, 1->1101"
        % depth_exponent)

    def local(v):
        if v == "1001":
            return "1"
        if v == "1101":
            return "0"
        return v[1]

    code = make_code(table, 0, 3, {w: local(w) for w in table.factors(4)})
    return table, code
