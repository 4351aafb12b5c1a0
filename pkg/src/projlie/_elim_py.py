"""Pure-Python elimination kernel.

Fraction-free sparse Gaussian elimination over the integers.  This is the
reference twin of the compiled kernel in ``_elim.pyx``; both expose the same
``rank_sparse`` entry point and must agree bit for bit.

Rows are dicts column -> nonzero int.  Pivots are chosen greedily: lowest
column occupancy first, and within a column a row with a unit entry and
minimal support.  Rows are rescaled by their gcd after every update, which
keeps entries small on the boundary-type matrices this package produces.
"""

from heapq import heapify, heappop, heappush
from math import gcd

KERNEL_NAME = "python"


def rank_sparse(rows):
    """Rank of the sparse integer matrix given as an iterable of row dicts."""
    work = [dict(r) for r in rows if r]
    colrows = {}
    for i, row in enumerate(work):
        for c in row:
            colrows.setdefault(c, set()).add(i)
    heap = [(len(s), c) for c, s in colrows.items()]
    heapify(heap)
    rank = 0
    while heap:
        occ, c = heappop(heap)
        live = colrows.get(c)
        if not live:
            continue
        if len(live) != occ:
            heappush(heap, (len(live), c))
            continue
        rank += 1
        piv = _pick_pivot(work, live, c)
        prow = work[piv]
        pval = prow[c]
        for x in prow:
            colrows[x].discard(piv)
        for j in list(live):
            _eliminate(work, colrows, j, prow, pval, c)
        work[piv] = {}
        touched = {x for x in prow if colrows.get(x)}
        for x in touched:
            heappush(heap, (len(colrows[x]), x))
    return rank


def _pick_pivot(work, live, c):
    best_key = None
    best = -1
    for i in live:
        v = work[i][c]
        key = (0 if v == 1 or v == -1 else 1, len(work[i]), i)
        if best_key is None or key < best_key:
            best_key = key
            best = i
    return best


def _eliminate(work, colrows, j, prow, pval, c):
    """Replace row j by pval*row_j - a*prow (a = row_j[c]), gcd-normalized."""
    rj = work[j]
    a = rj[c]
    new = {}
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
                colrows[x].add(j)
        else:
            new.pop(x, None)
            if had:
                colrows[x].discard(j)
    if new:
        g = 0
        for v in new.values():
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            for x in new:
                new[x] //= g
    work[j] = new
