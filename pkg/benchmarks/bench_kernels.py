"""Times the pure and compiled kernels on representative workloads.

Run as a script from the repository root:

    python benchmarks/bench_kernels.py

Workload one is raw subword harvesting from a long substitution iterate.
Workload two is the pruned rule search, using the same window buckets and
target sets the endomorphism search builds, at a radius that makes the
assignment tree large enough to measure.
"""

import time

from minshift import _kernels_py
from minshift.language import build_language
from minshift.words import iterate, parse_rules

try:
    from minshift import _kernels
except ImportError:
    _kernels = None

RULES = "a -> acb\nb -> aba\nc -> aca"


def best_of(runs, fn, *args):
    times = []
    for _ in range(runs):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def search_inputs(table, radius, depth):
    # mirrors the bucket construction inside enumerate_endomorphisms
    win = radius + 1
    windows = table.factors(win)
    rank = {w: i for i, w in enumerate(windows)}
    letter_index = {a: i for i, a in enumerate(table.alphabet)}
    buckets = [[] for _ in windows]
    targets = {}
    for m in range(1, depth + 1):
        targets[m] = {bytes(letter_index[c] for c in w) for w in table.factors(m)}
        for v in table.factors(m + win - 1):
            ranks = tuple(rank[v[i : i + win]] for i in range(m))
            buckets[max(ranks)].append((ranks, m))
    return len(windows), len(table.alphabet), buckets, targets


def main():
    theta = parse_rules(RULES)
    backends = [("pure", _kernels_py)]
    if _kernels is not None:
        backends.append(("compiled", _kernels))

    probe = iterate(theta, "a", 12)
    print("subword_sets: %d chars, lengths 1..30" % len(probe))
    base = None
    for name, impl in backends:
        t = best_of(3, impl.subword_sets, probe, 30)
        base = base or t
        print("  %-8s %7.3f s   (x%.2f)" % (name, t, base / t))

    table = build_language(theta, 24)
    args = search_inputs(table, radius=6, depth=14)
    print("search_rules: %d windows, %d letters" % (args[0], args[1]))
    base = None
    for name, impl in backends:
        t = best_of(3, impl.search_rules, *args, None)
        base = base or t
        print("  %-8s %7.3f s   (x%.2f)" % (name, t, base / t))

    if _kernels is None:
        print("compiled extension not built; only the pure backend was timed")


if __name__ == "__main__":
    main()
