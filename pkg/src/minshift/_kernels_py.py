"""Pure-Python implementations of the two inner loops.

minshift.kernels re-exports these when the compiled extension is missing or
when MINSHIFT_PURE is set.  The compiled module must match this behavior
bit for bit; the equivalence is pinned by tests.
"""

from .errors import BudgetError

BACKEND = "pure"


def subword_sets(s, n_max):
    """All distinct subwords of ``s`` of lengths 1..n_max.

    Returns a dict mapping each length to a set of strings.  Lengths with
    no subwords (longer than ``s``) map to empty sets.
    """
    out = {n: set() for n in range(1, n_max + 1)}
    top = len(s)
    for n in range(1, min(n_max, top) + 1):
        bucket = out[n]
        for i in range(top - n + 1):
            bucket.add(s[i : i + n])
    return out


def search_rules(num_windows, n_letters, buckets, targets, node_budget):
    """Depth-first enumeration of rule tables with language pruning.

    A rule table assigns one of ``n_letters`` output letters (as small
    ints) to each of ``num_windows`` window words, in canonical window
    order.  ``buckets[t]`` lists test words that become fully determined
    once window ``t`` is assigned, each as a pair ``(ranks, m)``: the
    window-rank sequence of the test word and its image length ``m``.
    An assignment survives step ``t`` only if every newly determined
    image is present in ``targets[m]`` (sets of length-m images packed
    as bytes).

    Returns ``(tables, nodes)``: all complete surviving assignments as
    tuples of ints, in lexicographic order, and the number of partial
    assignments tried.  Raises BudgetError when ``nodes`` would exceed
    ``node_budget`` (pass None for no cap).
    """
    out = [0] * num_windows
    results = []
    nodes = 0

    def admissible(t):
        for ranks, m in buckets[t]:
            if bytes(out[r] for r in ranks) not in targets[m]:
                return False
        return True

    def dfs(t):
        nonlocal nodes
        if t == num_windows:
            results.append(tuple(out))
            return
        for letter in range(n_letters):
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise BudgetError(
                    "rule search exceeded node budget %d" % node_budget,
                    spent=nodes)
            out[t] = letter
            if admissible(t):
                dfs(t + 1)

    if num_windows == 0:
        return [], 0
    dfs(0)
    return results, nodes
