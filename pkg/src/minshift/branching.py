"""Left-special structure, branch-point certificates, and the counting bounds.

A point of the one-sided system has k shift-preimages exactly when its
prefixes all admit k left extensions, so candidate branch points show up
as chains of left-special words.  A finite-depth chain is only a
candidate: left-special words of some length can die at a larger length,
and fresh transient chains keep appearing at all scales, so raw chain
counts are upper-bound material, neither exact nor monotone in depth.

The census therefore distinguishes two modes.  Without certificates it
reports the raw depth-N chain counts, flagged empirical.  With
certificates, each certificate reconstructs an infinite branch point from
substitution data (a periodic fixed point, or a limit of growing common
suffixes of iterated images), replays its defining identity against the
table, and is matched one-to-one with a chain; only matched chains enter
the census, the rest are reported separately as unconfirmed candidates.
"""

from collections import Counter
from dataclasses import dataclass, field

from .errors import DomainError, ValidationError
from .language import left_extensions, right_extensions
from .words import iterate, substitute


@dataclass(frozen=True)
class LeftSpecialTree:
    """All left-special words up to a depth, in prefix-tree form.

    ``nodes`` maps each left-special word (lengths 1..depth) to its left
    extension set.  ``chains`` are the words of length exactly ``depth``;
    each stands for the whole root-to-leaf path of its prefixes, which
    are automatically left-special too.  Extension sets shrink or stay
    equal along every such path.
    """

    depth: int
    nodes: dict
    chains: tuple

    def chain_orders(self):
        """Extension-set size of each depth-N chain, keyed by chain word."""
        return {w: len(self.nodes[w]) for w in self.chains}


def left_special_tree(table, depth):
    if not 1 <= depth < table.max_length:
        raise DomainError(
            "depth must be in 1..%d (extensions need one spare length)"
            % (table.max_length - 1))
    nodes = {}
    level = []
    for w in table.factors(1):
        ext = left_extensions(table, w)
        if len(ext) >= 2:
            nodes[w] = ext
            level.append(w)
    for n in range(1, depth):
        nxt = []
        for w in level:
            for a in right_extensions(table, w):
                v = w + a
                ext = left_extensions(table, v)
                if len(ext) >= 2:
                    nodes[v] = ext
                    nxt.append(v)
        level = sorted(nxt)
    return LeftSpecialTree(depth=depth, nodes=nodes, chains=tuple(sorted(level)))


def _limit_prefix_by_iteration(theta, seed, period, n):
    w = seed
    guard = 0
    while len(w) < n:
        for _ in range(period):
            w = substitute(theta, w)
        guard += 1
        if guard > 64:
            raise ValidationError(
                "fixed-point prefix is not growing under the substitution")
    return w[:n]


@dataclass(frozen=True)
class PeriodicFixedPointCertificate:
    """Branch point that is a periodic point of the substitution.

    The seed letter c satisfies: theta^period(c) begins with c, so the
    iterates converge to a one-sided fixed point y of theta^period.  Each
    recorded extension letter a is a suffix of theta^period(a) with a.c in
    the language; iterating shows a.y stays in the system, so y has at
    least |extension_letters| shift-preimages.
    """

    theta: object
    seed: str
    period: int
    extension_letters: tuple

    @property
    def variant(self):
        return "periodic-fixed-point"

    @property
    def order_candidate(self):
        return len(self.extension_letters)

    def limit_prefix(self, n):
        return _limit_prefix_by_iteration(self.theta, self.seed, self.period, n)

    def verify(self, table, depth=None):
        """Replay every defining condition against the table; raise on failure."""
        n = depth if depth is not None else table.max_length
        if n > table.max_length:
            raise DomainError("table stops at %d, cannot verify depth %d"
                              % (table.max_length, n))
        img = iterate(self.theta, self.seed, self.period)
        if not img.startswith(self.seed) or len(img) < 2:
            raise ValidationError(
                "seed %r does not start its own period-%d image %r"
                % (self.seed, self.period, img))
        y = self.limit_prefix(n)
        again = _limit_prefix_by_iteration(self.theta, self.seed, self.period, 2 * n)
        if not again.startswith(y):
            raise ValidationError("fixed-point prefix does not extend itself")
        if len(self.extension_letters) < 2:
            raise ValidationError("fewer than two extension letters; not a branch point")
        for a in self.extension_letters:
            ia = iterate(self.theta, a, self.period)
            if not ia.endswith(a):
                raise ValidationError(
                    "%r is not a suffix of its period-%d image %r" % (a, self.period, ia))
            if a + y[0] not in table:
                raise ValidationError("%r cannot precede the fixed point's first letter" % a)
            if a + y[: n - 1] not in table:
                raise ValidationError(
                    "%r does not extend the fixed point to depth %d in the table" % (a, n - 1))

    def to_json_dict(self):
        return {
            "variant": self.variant,
            "seed": self.seed,
            "period": self.period,
            "extension_letters": list(self.extension_letters),
            "order_candidate": self.order_candidate,
        }


@dataclass(frozen=True)
class CommonSuffixLimitCertificate:
    """Branch point arising as the limit of growing common suffixes.

    For the recorded letters, the period-q iterated images share maximal
    proper common suffixes whose lengths grow with the iterate; the limit
    word y satisfies seed_word . theta^period(y) = y and is approached
    from the left by at least two distinct letters, one per image.
    """

    theta: object
    letters: tuple
    period: int
    seed_word: str
    extension_letters: tuple

    @property
    def variant(self):
        return "common-suffix-limit"

    @property
    def order_candidate(self):
        return len(self.extension_letters)

    def limit_prefix(self, n):
        parts = [self.seed_word]
        total = len(self.seed_word)
        piece = self.seed_word
        while total < n:
            for _ in range(self.period):
                piece = substitute(self.theta, piece)
            parts.append(piece)
            total += len(piece)
        return "".join(parts)[:n]

    def verify(self, table, depth=None):
        """Replay suffix growth and the identity seed.theta^q(y) = y; raise on failure."""
        n = depth if depth is not None else table.max_length
        if n > table.max_length:
            raise DomainError("table stops at %d, cannot verify depth %d"
                              % (table.max_length, n))
        if not self.seed_word:
            raise ValidationError("empty seed word")
        if len(self.extension_letters) < 2:
            raise ValidationError("fewer than two extension letters; not a branch point")
        s1 = _common_proper_suffix(
            [iterate(self.theta, a, self.period) for a in self.letters])
        s2 = _common_proper_suffix(
            [iterate(self.theta, a, 2 * self.period) for a in self.letters])
        if s1 is None or s2 is None or not len(s2) > len(s1) >= 1:
            raise ValidationError(
                "common suffixes of the images do not grow between periods %d and %d"
                % (self.period, 2 * self.period))
        y = self.limit_prefix(n)
        replay = self.seed_word + iterate_word(self.theta, y, self.period)
        if replay[:n] != y:
            raise ValidationError(
                "identity seed.theta^%d(y) = y fails at depth %d" % (self.period, n))
        for a in self.extension_letters:
            if a + y[: n - 1] not in table:
                raise ValidationError(
                    "%r does not extend the limit word to depth %d in the table" % (a, n - 1))

    def to_json_dict(self):
        return {
            "variant": self.variant,
            "letters": list(self.letters),
            "period": self.period,
            "seed_word": self.seed_word,
            "extension_letters": list(self.extension_letters),
            "order_candidate": self.order_candidate,
        }


def iterate_word(theta, w, k):
    for _ in range(k):
        w = substitute(theta, w)
    return w


def _common_proper_suffix(words):
    """Longest common suffix, or None if empty or improper in some word."""
    shortest = min(len(w) for w in words)
    k = 0
    while k < shortest and len({w[len(w) - k - 1] for w in words}) == 1:
        k += 1
    if k == 0 or k == shortest:
        return None
    return words[0][len(words[0]) - k:]


def certify_branch_periodic(theta, table, max_period):
    """Certificates for substitution-periodic branch points, periods 1..max_period.

    For each period q and each seed letter c whose period-q image begins
    with c, collects the letters a that end their own period-q image and
    can precede c in the language; two or more such letters certify the
    fixed point as a branch point.  Certificates for the same limit word
    at several periods are deduplicated, keeping the smallest period.
    """
    if max_period < 1:
        raise DomainError("max_period must be >= 1")
    N = table.max_length
    found = {}
    for q in range(1, max_period + 1):
        images = {a: iterate(theta, a, q) for a in theta.alphabet}
        for c in theta.alphabet:
            if not images[c].startswith(c) or len(images[c]) < 2:
                continue
            ext = tuple(a for a in theta.alphabet
                        if images[a].endswith(a) and a + c in table)
            if len(ext) < 2:
                continue
            cert = PeriodicFixedPointCertificate(
                theta=theta, seed=c, period=q, extension_letters=ext)
            key = cert.limit_prefix(N)
            if key not in found:
                cert.verify(table)
                found[key] = cert
    return sorted(found.values(), key=lambda c: (c.period, c.seed))


def certify_branch_suffix(theta, table, max_period):
    """Certificates for common-suffix-limit branch points, periods 1..max_period.

    For each base period p, compares the maximal proper common suffix of
    the period-p images of every letter pair with the one at period 2p;
    strict growth plus the image of the first suffix sitting inside the
    second yields the seed word of the limit identity.  Pairs converging
    to the same limit are merged, pooling their approach letters.
    """
    if max_period < 1:
        raise DomainError("max_period must be >= 1")
    N = table.max_length
    letters = theta.alphabet
    groups = {}
    for p in range(1, max_period + 1):
        im1 = {a: iterate(theta, a, p) for a in letters}
        im2 = {a: iterate(theta, a, 2 * p) for a in letters}
        for i, x in enumerate(letters):
            for y in letters[i + 1:]:
                s1 = _common_proper_suffix([im1[x], im1[y]])
                s2 = _common_proper_suffix([im2[x], im2[y]])
                if s1 is None or s2 is None or len(s2) <= len(s1):
                    continue
                grown = iterate_word(theta, s1, p)
                if not s2.endswith(grown) or len(s2) == len(grown):
                    continue
                seed = s2[: len(s2) - len(grown)]
                approach = tuple(sorted(
                    im[len(im) - len(s2) - 1] for im in (im2[x], im2[y])))
                if len(set(approach)) < 2:
                    continue
                probe = CommonSuffixLimitCertificate(
                    theta=theta, letters=(x, y), period=p,
                    seed_word=seed, extension_letters=approach)
                key = probe.limit_prefix(N)
                entry = groups.setdefault(
                    key, {"letters": set(), "ext": set(), "period": p, "seed": seed})
                entry["letters"].update((x, y))
                entry["ext"].update(approach)
    out = []
    for entry in groups.values():
        cert = CommonSuffixLimitCertificate(
            theta=theta,
            letters=tuple(sorted(entry["letters"])),
            period=entry["period"],
            seed_word=entry["seed"],
            extension_letters=tuple(sorted(entry["ext"])),
        )
        cert.verify(table)
        out.append(cert)
    return sorted(out, key=lambda c: (c.period, c.letters))


@dataclass(frozen=True)
class BranchCensus:
    """Branch-point counts by order, with their evidential status.

    ``counts`` maps order k to the number of branch points of that order.
    When built from certificates, only certificate-matched chains are
    counted and ``certified`` marks each order True; chains nobody
    certified stay out of the census and appear in ``unconfirmed``
    instead, as depth-N candidates that may yet die at larger depth.
    Without certificates, ``counts`` is the raw chain census, flagged
    empirical (certified False).
    """

    counts: dict
    depth: int
    certified: dict
    unconfirmed: dict = field(default_factory=dict)
    matches: tuple = ()

    def total(self):
        return sum(self.counts.values())

    def to_json_dict(self):
        return {
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "depth": self.depth,
            "certified": {str(k): v for k, v in sorted(self.certified.items())},
            "unconfirmed": {str(k): v for k, v in sorted(self.unconfirmed.items())},
            "matches": [list(m) for m in self.matches],
        }


def branch_census(tree, certificates=()):
    """Count branch points by order from a tree and optional certificates.

    With certificates: each is matched to the depth-N chain equal to its
    limit word's prefix (a verified certificate always has one; a missing
    match is a contradiction and raises).  Census orders use the chain's
    observed extension-set size; a certificate whose claimed order
    disagrees is recorded in ``matches`` with both numbers.

    Without certificates: every chain is counted at its extension-set
    size and the result is flagged empirical.
    """
    orders = tree.chain_orders()
    if not certificates:
        counts = Counter(orders.values())
        return BranchCensus(
            counts=dict(counts),
            depth=tree.depth,
            certified={k: False for k in counts},
        )
    matched = {}
    records = []
    for cert in certificates:
        w = cert.limit_prefix(tree.depth)
        if w not in orders:
            raise ValidationError(
                "certificate limit word %r... is not a depth-%d chain"
                % (w[:12], tree.depth))
        if w not in matched:
            matched[w] = cert
            records.append((w, cert.variant, cert.order_candidate, orders[w]))
    counts = Counter(orders[w] for w in matched)
    unconfirmed = Counter(orders[w] for w in orders if w not in matched)
    return BranchCensus(
        counts=dict(counts),
        depth=tree.depth,
        certified={k: True for k in counts},
        unconfirmed=dict(unconfirmed),
        matches=tuple(records),
    )


def aut_upper_bound(census):
    """Smallest nonzero per-order count; bounds the automorphism group size.

    Any automorphism permutes the branch points of each order, and the
    induced action on a single nonempty order class is free, so the
    group has at most min over nonzero k of M_k elements.
    """
    nonzero = [m for m in census.counts.values() if m >= 1]
    if not nonzero:
        raise DomainError("census has no branch points; bound undefined")
    return min(nonzero)


@dataclass(frozen=True)
class AsymptoticCensus:
    """Upper-bound profile for right-asymptotic orbit classes.

    ``upper_bound_total`` is the order sum over all branch points, which
    dominates the number of right-asymptotic orbits; the bound can be
    strict, so ``exact`` is False unless a manual decomposition is
    supplied.  ``two_sided_bound`` bounds the two-sided automorphism
    group modulo shift powers.
    """

    class_size_counts: dict
    upper_bound_total: int
    two_sided_bound: int
    exact: bool = False

    def to_json_dict(self):
        return {
            "class_size_counts": {str(k): v for k, v in sorted(self.class_size_counts.items())},
            "upper_bound_total": self.upper_bound_total,
            "two_sided_bound": self.two_sided_bound,
            "exact": self.exact,
        }


def asymptotic_upper_bound(census):
    """Order-sum bound on asymptotic-orbit classes, from a branch census."""
    bound = aut_upper_bound(census)
    total = sum(k * m for k, m in census.counts.items())
    return AsymptoticCensus(
        class_size_counts=dict(census.counts),
        upper_bound_total=total,
        two_sided_bound=bound,
        exact=False,
    )


def substitution_root_bound(alphabet_size):
    """Every two-sided automorphism is at most a k^2-th root of the shift.

    >>> substitution_root_bound(3)
    9
    """
    if alphabet_size < 2:
        raise DomainError("alphabet size must be >= 2")
    return alphabet_size * alphabet_size
