# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled implementations of the two inner loops.

Must match minshift._kernels_py bit for bit; the equivalence is pinned
by tests.  The rule search is an iterative depth-first walk over typed C
arrays, with candidate images packed into a scratch buffer and checked
against the target sets.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc

from .errors import BudgetError

BACKEND = "compiled"


def subword_sets(s, n_max):
    """All distinct subwords of ``s`` of lengths 1..n_max.

    Returns a dict mapping each length to a set of strings.  Lengths with
    no subwords (longer than ``s``) map to empty sets.
    """
    cdef Py_ssize_t top = len(s)
    cdef Py_ssize_t n, i, lim
    out = {}
    for n in range(1, n_max + 1):
        out[n] = set()
    lim = top if top < n_max else n_max
    for n in range(1, lim + 1):
        bucket = out[n]
        for i in range(top - n + 1):
            bucket.add(s[i : i + n])
    return out


def search_rules(num_windows, n_letters, buckets, targets, node_budget):
    """Depth-first enumeration of rule tables with language pruning.

    Same contract as the pure version: returns ``(tables, nodes)`` with
    the surviving assignments in lexicographic order, and raises
    BudgetError when the node count would exceed ``node_budget``.
    """
    cdef int nw = num_windows
    cdef int nl = n_letters
    if nw == 0:
        return [], 0
    if nl > 255:
        from . import _kernels_py
        return _kernels_py.search_rules(
            num_windows, n_letters, buckets, targets, node_budget)

    cdef int total_tests = 0, total_ranks = 0, max_m = 0
    for t in range(nw):
        for ranks, m in buckets[t]:
            total_tests += 1
            total_ranks += len(ranks)
            if m > max_m:
                max_m = m

    cdef int* bucket_begin = <int*> malloc((nw + 1) * sizeof(int))
    cdef int* rank_begin = <int*> malloc((total_tests + 1) * sizeof(int))
    cdef int* test_m = <int*> malloc((total_tests or 1) * sizeof(int))
    cdef int* ranks_flat = <int*> malloc((total_ranks or 1) * sizeof(int))
    cdef int* choice = <int*> malloc(nw * sizeof(int))
    cdef unsigned char* out_c = <unsigned char*> malloc(nw)
    cdef unsigned char* scratch = <unsigned char*> malloc(max_m or 1)
    if (bucket_begin is NULL or rank_begin is NULL or test_m is NULL
            or ranks_flat is NULL or choice is NULL or out_c is NULL
            or scratch is NULL):
        free(bucket_begin); free(rank_begin); free(test_m)
        free(ranks_flat); free(choice); free(out_c); free(scratch)
        raise MemoryError()

    cdef int j = 0, k = 0, t_c, r, m_c, letter, ok
    cdef long long nodes = 0
    cdef long long budget = -1 if node_budget is None else node_budget
    target_list = [None] * (max_m + 1)
    results = []
    try:
        for t in range(nw):
            bucket_begin[t] = j
            for ranks, m in buckets[t]:
                rank_begin[j] = k
                test_m[j] = m
                target_list[m] = targets[m]
                for r_obj in ranks:
                    ranks_flat[k] = r_obj
                    k += 1
                j += 1
        bucket_begin[nw] = j
        rank_begin[total_tests] = k

        for t_c in range(nw):
            choice[t_c] = 0
        t_c = 0
        while t_c >= 0:
            if t_c == nw:
                results.append(tuple([out_c[r] for r in range(nw)]))
                t_c -= 1
                continue
            if choice[t_c] >= nl:
                choice[t_c] = 0
                t_c -= 1
                continue
            letter = choice[t_c]
            choice[t_c] += 1
            nodes += 1
            if budget >= 0 and nodes > budget:
                raise BudgetError(
                    "rule search exceeded node budget %d" % node_budget,
                    spent=nodes)
            out_c[t_c] = <unsigned char> letter
            ok = 1
            for j in range(bucket_begin[t_c], bucket_begin[t_c + 1]):
                m_c = test_m[j]
                for k in range(rank_begin[j], rank_begin[j + 1]):
                    scratch[k - rank_begin[j]] = out_c[ranks_flat[k]]
                image = PyBytes_FromStringAndSize(<char*> scratch, m_c)
                if image not in target_list[m_c]:
                    ok = 0
                    break
            if ok:
                t_c += 1
        return results, nodes
    finally:
        free(bucket_begin); free(rank_begin); free(test_m)
        free(ranks_flat); free(choice); free(out_c); free(scratch)
