"""Exact rational linear algebra.

Two layers:

* ``LinMap`` -- immutable sparse linear maps over Q (column dicts), used for
  differentials, group actions and structure maps everywhere in the package.
* rank/rref/nullspace routines.  Ranks of large sparse matrices go through the
  elimination kernel (compiled when the Cython extension built, pure Python
  otherwise; override with PROJLIE_KERNEL=python|compiled).  Dense reduced row
  echelon form over Fraction is kept for the small solve/splitting work.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd

_FORCED = os.environ.get("PROJLIE_KERNEL")
if _FORCED == "python":
    from projlie import _elim_py as _kernel
elif _FORCED == "compiled":
    from projlie import _elim as _kernel  # ImportError here is deliberate
else:
    try:
        from projlie import _elim as _kernel
    except ImportError:
        from projlie import _elim_py as _kernel

KERNEL_NAME = _kernel.KERNEL_NAME

ZERO = Fraction(0)
ONE = Fraction(1)


class LinMap:
    """Sparse linear map Q^ncols -> Q^nrows; cols[j] maps row index -> value."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows, ncols, cols=None):
        self.nrows = nrows
        self.ncols = ncols
        if cols is None:
            cols = [dict() for _ in range(ncols)]
        self.cols = cols

    @classmethod
    def from_entries(cls, nrows, ncols, entries):
        """entries: iterable of (row, col, value)."""
        m = cls(nrows, ncols)
        for r, c, v in entries:
            m.add_entry(r, c, v)
        return m

    @classmethod
    def identity(cls, n):
        return cls(n, n, [{j: ONE} for j in range(n)])

    def add_entry(self, r, c, v):
        col = self.cols[c]
        w = col.get(r, ZERO) + v
        if w:
            col[r] = w
        else:
            col.pop(r, None)

    def is_zero(self):
        return all(not c for c in self.cols)

    def entry(self, r, c):
        return self.cols[c].get(r, ZERO)

    def apply(self, vec):
        """Apply to a sparse vector (dict index -> value)."""
        out = {}
        for j, a in vec.items():
            if not a:
                continue
            for r, v in self.cols[j].items():
                w = out.get(r, ZERO) + a * v
                if w:
                    out[r] = w
                else:
                    del out[r]
        return out

    def compose(self, other):
        """self o other."""
        if other.nrows != self.ncols:
            raise ValueError("shape mismatch in compose")
        return LinMap(self.nrows, other.ncols,
                      [self.apply(c) for c in other.cols])

    def add(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in add")
        out = LinMap(self.nrows, self.ncols, [dict(c) for c in self.cols])
        for j, col in enumerate(other.cols):
            for r, v in col.items():
                out.add_entry(r, j, v)
        return out

    def scale(self, a):
        a = Fraction(a)
        if not a:
            return LinMap(self.nrows, self.ncols)
        return LinMap(self.nrows, self.ncols,
                      [{r: a * v for r, v in c.items()} for c in self.cols])

    def transpose(self):
        out = LinMap(self.ncols, self.nrows)
        for j, col in enumerate(self.cols):
            for r, v in col.items():
                out.cols[r][j] = v
        return out

    def restrict(self, row_idx, col_idx):
        """Submatrix; row_idx/col_idx are lists of ambient indices."""
        rpos = {r: i for i, r in enumerate(row_idx)}
        cols = []
        for c in col_idx:
            col = {}
            for r, v in self.cols[c].items():
                i = rpos.get(r)
                if i is not None:
                    col[i] = v
            cols.append(col)
        return LinMap(len(row_idx), len(col_idx), cols)

    def to_dense(self):
        rows = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for r, v in col.items():
                rows[r][j] = v
        return rows

    def rank(self):
        return rank_of_columns(self.cols)

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and \
            all(a == b for a, b in zip(self.cols, other.cols))

    def __hash__(self):
        raise TypeError("LinMap is unhashable")

    def __repr__(self):
        nnz = sum(len(c) for c in self.cols)
        return f"LinMap({self.nrows}x{self.ncols}, nnz={nnz})"


def vec_add(u, v):
    out = dict(u)
    for k, a in v.items():
        w = out.get(k, ZERO) + a
        if w:
            out[k] = w
        else:
            del out[k]
    return out


def vec_scale(u, a):
    if not a:
        return {}
    return {k: a * v for k, v in u.items()}


def _int_rows_from_cols(cols):
    """Transpose column dicts to integer row dicts, clearing denominators."""
    rows = {}
    for j, col in enumerate(cols):
        for r, v in col.items():
            rows.setdefault(r, {})[j] = v
    out = []
    for row in rows.values():
        lcm = 1
        for v in row.values():
            d = v.denominator
            lcm = lcm // gcd(lcm, d) * d
        out.append({c: int(v * lcm) for c, v in row.items()})
    return out


def rank_of_columns(cols):
    """Exact rank of a matrix given by sparse Fraction column dicts."""
    rows = _int_rows_from_cols(cols)
    if not rows:
        return 0
    return _kernel.rank_sparse(rows)


def rref(rows):
    """Dense RREF over Fraction. Returns (reduced rows, pivot column list)."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if mat[i][c]:
                sel = i
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        pv = mat[r][c]
        if pv != 1:
            mat[r] = [x / pv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat[:r] + [[ZERO] * ncols for _ in range(nrows - r)], pivots


def nullspace(rows):
    """Basis of the kernel of a dense Fraction matrix, as dense vectors."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


def solve_columns(basis_vecs, target, dim):
    """Coordinates of *target* in the span of *basis_vecs* (sparse dicts).

    Returns the coefficient list, or None if target is outside the span.
    """
    if not basis_vecs:
        return [] if not target else None
    rows = []
    for r in range(dim):
        rows.append([b.get(r, ZERO) for b in basis_vecs] +
                    [target.get(r, ZERO)])
    red, pivots = rref(rows)
    n = len(basis_vecs)
    if n in pivots:
        return None
    coeffs = [ZERO] * n
    for i, p in enumerate(pivots):
        coeffs[p] = red[i][n]
    return coeffs
