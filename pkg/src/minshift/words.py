"""Substitutions on finite alphabets.

Words are plain Python strings over a small alphabet of single-character
letters; the alphabet itself is a sorted tuple of those letters.  A
substitution maps each letter to a nonempty word and extends to words by
concatenation.

>>> theta = Substitution({"a": "acb", "b": "aba", "c": "aca"})
>>> substitute(theta, "ab")
'acbaba'
>>> iterate(theta, "a", 2)
'acbacaaba'
"""

from dataclasses import dataclass, field

from .errors import DomainError, RuleParseError

FIBONACCI = None   # assigned below, after Substitution exists
THUE_MORSE = None


@dataclass(frozen=True)
class Substitution:
    """A letter-to-word map, extended to words by concatenation.

    Parameters
    ----------
    images : mapping
        Letter -> nonempty image word.  The alphabet is the sorted set of
        keys; every image must use only those letters.
    """

    images: dict
    alphabet: tuple = field(init=False)

    def __post_init__(self):
        letters = tuple(sorted(self.images))
        if not letters:
            raise DomainError("substitution needs at least one letter")
        for a, img in self.images.items():
            if len(a) != 1:
                raise DomainError("letters must be single characters, got %r" % a)
            if not img:
                raise DomainError("empty image for letter %r" % a)
            for c in img:
                if c not in self.images:
                    raise DomainError(
                        "image of %r uses %r which has no rule" % (a, c))
        object.__setattr__(self, "alphabet", letters)
        object.__setattr__(self, "images", dict(self.images))

    def __call__(self, w):
        return substitute(self, w)

    def rules_text(self):
        """Render back to the one-rule-per-line text format."""
        return "\n".join("%s -> %s" % (a, self.images[a]) for a in self.alphabet)


def parse_rules(text):
    """Parse the rules text format into a Substitution.

    One rule per line, ``letter -> image``.  Blank lines and ``#`` comments
    are ignored; whitespace around the arrow is free.

    >>> parse_rules("a -> acb\\nb->aba\\n# note\\nc ->aca").alphabet
    ('a', 'b', 'c')
    """
    images = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise RuleParseError("expected 'letter -> image'", lineno)
        head, _, body = line.partition("->")
        head = head.strip()
        body = body.strip()
        if len(head) != 1:
            raise RuleParseError("rule head must be a single letter, got %r" % head, lineno)
        if not body:
            raise RuleParseError("empty image for %r" % head, lineno)
        if head in images:
            raise RuleParseError("duplicate rule for %r" % head, lineno)
        images[head] = body
    if not images:
        raise RuleParseError("no rules found")
    try:
        return Substitution(images)
    except DomainError as exc:
        raise RuleParseError(str(exc)) from exc


def substitute(theta, w):
    """Apply ``theta`` to every letter of ``w`` and concatenate."""
    images = theta.images
    try:
        return "".join(images[c] for c in w)
    except KeyError as exc:
        raise DomainError("symbol %r outside alphabet %s" % (exc.args[0], theta.alphabet))


def iterate(theta, letter, k):
    """Return the k-th iterated image of a single letter; k = 0 gives the letter."""
    if k < 0:
        raise DomainError("iteration count must be >= 0")
    if letter not in theta.images:
        raise DomainError("symbol %r outside alphabet %s" % (letter, theta.alphabet))
    w = letter
    for _ in range(k):
        w = substitute(theta, w)
    return w


def incidence_pattern(theta):
    """Boolean occurrence matrix: row a, column b is True iff b occurs in theta(a)."""
    letters = theta.alphabet
    return [[b in theta.images[a] for b in letters] for a in letters]


def is_primitive(theta):
    """Whether some power of the substitution maps every letter onto all letters.

    Checks boolean powers of the incidence pattern up to the Wielandt
    exponent (k-1)^2 + 1, which is sharp for primitive nonnegative
    matrices.

    >>> is_primitive(Substitution({"0": "01", "1": "0"}))
    True
    >>> is_primitive(Substitution({"a": "ab", "b": "b"}))
    False
    """
    m = incidence_pattern(theta)
    k = len(m)
    power = m
    for _ in range((k - 1) ** 2 + 1):
        if all(all(row) for row in power):
            return True
        power = [
            [any(power[i][t] and m[t][j] for t in range(k)) for j in range(k)]
            for i in range(k)
        ]
    return False


FIBONACCI = Substitution({"0": "01", "1": "0"})
THUE_MORSE = Substitution({"0": "01", "1": "10"})
