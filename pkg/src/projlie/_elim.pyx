# cython: language_level=3
# cython: boundscheck=False
"""Compiled elimination kernel.

Same algorithm as ``_elim_py`` (fraction-free sparse integer elimination with
occupancy-ordered pivoting); Cython removes the interpreter overhead from the
inner row-update loops.  Entries are arbitrary-precision Python ints, so
results are exact.
"""

from heapq import heapify, heappop, heappush
from math import gcd

KERNEL_NAME = "compiled"


def rank_sparse(rows):
    """Rank of the sparse integer matrix given as an iterable of row dicts."""
    cdef list work = [dict(r) for r in rows if r]
    cdef dict colrows = {}
    cdef Py_ssize_t i, j, piv
    cdef int rank = 0
    for i in range(len(work)):
        for c in (<dict>work[i]):
            s = colrows.get(c)
            if s is None:
                s = set()
                colrows[c] = s
            (<set>s).add(i)
    heap = [(len(s), c) for c, s in colrows.items()]
    heapify(heap)
    while heap:
        occ, c = heappop(heap)
        live = colrows.get(c)
        if not live:
            continue
        if len(<set>live) != <Py_ssize_t>occ:
            heappush(heap, (len(<set>live), c))
            continue
        rank += 1
        piv = _pick_pivot(work, <set>live, c)
        prow = <dict>work[piv]
        pval = prow[c]
        for x in prow:
            (<set>colrows[x]).discard(piv)
        for j in list(<set>live):
            _eliminate(work, colrows, j, prow, pval, c)
        work[piv] = {}
        touched = set()
        for x in prow:
            s = colrows.get(x)
            if s:
                touched.add(x)
        for x in touched:
            heappush(heap, (len(<set>colrows[x]), x))
    return rank


cdef Py_ssize_t _pick_pivot(list work, set live, c):
    cdef Py_ssize_t best = -1
    best_key = None
    for i in live:
        row = <dict>work[i]
        v = row[c]
        key = (0 if v == 1 or v == -1 else 1, len(row), i)
        if best_key is None or key < best_key:
            best_key = key
            best = i
    return best


cdef _eliminate(list work, dict colrows, Py_ssize_t j, dict prow, pval, c):
    cdef dict rj = <dict>work[j]
    cdef dict new = {}
    a = rj[c]
    if pval == 1:
        new.update(rj)
    elif pval == -1:
        for x, v in rj.items():
            new[x] = -v
    else:
        for x, v in rj.items():
            new[x] = pval * v
    for x, pv in prow.items():
        w = new.get(x, 0) - a * pv
        had = x in rj
        if w:
            new[x] = w
            if not had:
                (<set>colrows[x]).add(j)
        else:
            if x in new:
                del new[x]
            if had:
                (<set>colrows[x]).discard(j)
    if new:
        g = 0
        for v in new.values():
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            for x in new:
                new[x] = new[x] // g
    work[j] = new
