"""Exact integer linear algebra

Integer matrices (`IntMat`), the Smith normal form with unimodular
transforms (`snf`) and presentations of finite(ly generated) abelian
quotients Z^n / L Z^n (`quotient`).

Entries are python ints, so products never overflow. numpy is only used with
`dtype=object` to keep that guarantee.
"""
import itertools
import logging
import numbers
from fractions import Fraction

import attr
import numpy as np

from .exceptions import DimensionMismatch, InfiniteOrderError, InvariantViolation, NonIntegerEntry

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


def _as_int(x):
    if isinstance(x, numbers.Integral) and not isinstance(x, bool):
        return int(x)
    if isinstance(x, numbers.Rational) and x.denominator == 1:
        return int(x)
    raise NonIntegerEntry("Non-integer matrix entry: {0!r}".format(x))


def _as_rows(entries):
    rows = tuple(tuple(_as_int(x) for x in row) for row in entries)
    if len(set(len(r) for r in rows)) > 1:
        raise DimensionMismatch("Ragged matrix rows: {0}".format(entries))
    return rows


@attr.s(frozen=True, repr=False)
class IntMat(object):
    """Integer matrix with exact entries (row-major)
    """
    entries = attr.ib(converter=_as_rows)

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self):
        return self.rows, self.cols

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_array(cls, arr):
        return cls([list(row) for row in arr])

    def to_array(self):
        return np.array(self.entries, dtype=object).reshape(self.shape)

    def to_list(self):
        return [list(row) for row in self.entries]

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __repr__(self):
        return "IntMat({0})".format(self.to_list())

    def __str__(self):
        return "[" + ", ".join("[" + ",".join(str(x) for x in row) + "]"
                               for row in self.entries) + "]"

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch("Shape mismatch: {0} vs {1}".format(self.shape, other.shape))

    def __add__(self, other):
        self._check_same_shape(other)
        return IntMat([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_same_shape(other)
        return IntMat([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __neg__(self):
        return IntMat([[-a for a in r] for r in self.entries])

    def scale(self, k):
        return IntMat([[k * a for a in r] for r in self.entries])

    def __matmul__(self, other):
        return mat_mul(self, other)

    def transpose(self):
        return IntMat([list(col) for col in zip(*self.entries)])

    def apply(self, vec):
        """Matrix-vector product for a tuple of ints
        """
        if len(vec) != self.cols:
            raise DimensionMismatch("Cannot apply a {0} matrix to a vector of length {1}".
                                    format(self.shape, len(vec)))
        return tuple(sum(a * x for a, x in zip(row, vec)) for row in self.entries)

    def is_square(self):
        return self.rows == self.cols

    def is_identity(self):
        return self.is_square() and self == IntMat.identity(self.rows)

    def is_diagonal(self):
        return all(self.entries[i][j] == 0
                   for i in range(self.rows) for j in range(self.cols) if i != j)

    def diagonal(self):
        return [self.entries[i][i] for i in range(min(self.shape))]


def mat_mul(a, b):
    """Exact product a·b

    Raises:
      DimensionMismatch: if a.cols != b.rows
    """
    if a.cols != b.rows:
        raise DimensionMismatch("Cannot multiply {0} by {1} matrix".format(a.shape, b.shape))
    if a.rows == 0 or b.cols == 0 or a.cols == 0:
        return IntMat.zeros(a.rows, b.cols) if a.rows else IntMat([])
    return IntMat.from_array(np.dot(a.to_array(), b.to_array()))


def mat_pow(m, k):
    """m^k for integer k; negative powers need a unimodular m
    """
    if not m.is_square():
        raise DimensionMismatch("Matrix power needs a square matrix, got {0}".format(m.shape))
    if k < 0:
        m = inverse_unimodular(m)
        k = -k
    result = IntMat.identity(m.rows)
    base = m
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def det(m):
    """Determinant by fraction-free (Bareiss) elimination
    """
    if not m.is_square():
        raise DimensionMismatch("Determinant needs a square matrix, got {0}".format(m.shape))
    n = m.rows
    if n == 0:
        return 1
    a = m.to_list()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse_unimodular(m):
    """Integer inverse of a matrix with determinant ±1
    """
    d = det(m)
    if d not in (1, -1):
        raise InfiniteOrderError("Matrix {0} is not unimodular (det = {1})".format(m, d))
    n = m.rows
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m.entries)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return IntMat([[int(x) for x in row[n:]] for row in a])


# --------------------------------------------
# Smith normal form

@attr.s(frozen=True)
class SnfDecomposition(object):
    """U·A·V = D with U, V unimodular and D diagonal, d_i | d_{i+1}
    """
    U = attr.ib()
    D = attr.ib()
    V = attr.ib()

    @property
    def diagonal(self):
        return self.D.diagonal()


def _find_pivot(a, s):
    """Minimal nonzero |a_ij| in the block [s:, s:], ties by row-major order
    """
    best = None
    for i in range(s, len(a)):
        for j in range(s, len(a[0])):
            v = abs(a[i][j])
            if v and (best is None or v < best[0]):
                best = (v, i, j)
    return best


def snf(a):
    """Smith normal form of an integer matrix

    Elimination picks, in the remaining block, the entry of minimal absolute
    value (first in row-major order) as pivot, so the output is deterministic.

    Args:
      a: IntMat

    Returns:
      SnfDecomposition with U·a·V = D
    """
    m, n = a.shape
    d = a.to_list()
    u = IntMat.identity(m).to_list()
    v = IntMat.identity(n).to_list()

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in d:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for s in range(min(m, n)):
        while True:
            pivot = _find_pivot(d, s)
            if pivot is None:
                break
            _, pi, pj = pivot
            swap_rows(s, pi)
            swap_cols(s, pj)
            if d[s][s] < 0:
                d[s] = [-x for x in d[s]]
                u[s] = [-x for x in u[s]]
            p = d[s][s]
            for i in range(s + 1, m):
                if d[i][s]:
                    add_row(i, s, -(d[i][s] // p))
            for j in range(s + 1, n):
                if d[s][j]:
                    add_col(j, s, -(d[s][j] // p))
            if any(d[i][s] for i in range(s + 1, m)) or any(d[s][j] for j in range(s + 1, n)):
                continue
            bad = next(((i, j) for i in range(s + 1, m) for j in range(s + 1, n)
                        if d[i][j] % p), None)
            if bad is None:
                break
            # pull the non-divisible entry into the pivot row
            add_row(s, bad[0], 1)
        logger.debug("snf: step {0} pivot {1}".format(s, d[s][s] if s < m and s < n else None))
    out = SnfDecomposition(U=IntMat(u), D=IntMat(d), V=IntMat(v))
    if not out.D.is_diagonal():
        raise InvariantViolation("snf left off-diagonal entries in {0}".format(out.D))
    return out


# --------------------------------------------
# Abelian quotients Z^n / im(L)

@attr.s(frozen=True)
class AbelianQuotient(object):
    """Presentation of Z^n / im(l) as a product of cyclic groups

    Attributes:
      invariant_factors: non-unit diagonal entries of the SNF (0 = free Z),
        padded with zeros up to n
      lift_basis: n x k matrix whose columns map quotient coordinates back
        to Z^n
      projection: U of the SNF; quotient coordinates of x are the
        non-unit entries of U·x, reduced modulo their factor
    """
    invariant_factors = attr.ib(converter=tuple)
    lift_basis = attr.ib()
    projection = attr.ib()
    positions = attr.ib(converter=tuple)
    _coset_table = attr.ib(default=None, eq=False, repr=False)

    @property
    def ambient_rank(self):
        return self.projection.rows

    @property
    def free_rank(self):
        return sum(1 for d in self.invariant_factors if d == 0)

    def is_finite(self):
        return self.free_rank == 0

    def order(self):
        """Number of cosets; None for infinite quotients
        """
        if not self.is_finite():
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def exponent(self):
        out = 1
        for d in self.invariant_factors:
            out = max(out, d)
        return out

    def coordinates(self, x):
        """Quotient coordinates of the vector x
        """
        y = self.projection.apply(x)
        return tuple(y[p] % d if d else y[p]
                     for p, d in zip(self.positions, self.invariant_factors))

    def lift(self, coords):
        return self.lift_basis.apply(coords)

    def coset_representatives(self):
        """Lexicographically minimal coset representatives in [0, e)^n

        Only defined for finite quotients. Returned sorted.
        """
        if not self.is_finite():
            raise InfiniteOrderError("Quotient with invariant factors {0} is infinite".
                             format(list(self.invariant_factors)))
        return sorted(self._coset_table.values())

    def representative(self, x):
        """Canonical representative of the coset x + im(L)
        """
        c = self.coordinates(x)
        if self._coset_table is not None:
            return self._coset_table[c]
        return self.lift(c)


def _build_coset_table(q):
    table = {}
    e = q.exponent()
    for x in itertools.product(range(e), repeat=q.ambient_rank):
        c = q.coordinates(x)
        if c not in table:
            table[c] = x
    return table


def quotient(l):
    """Presentation of Z^n / im(l) where l is an n x k integer matrix

    Args:
      l: IntMat, columns generate the sublattice

    Returns:
      AbelianQuotient
    """
    n = l.rows
    dec = snf(l)
    diag = dec.D.diagonal() + [0] * (n - min(l.shape))
    positions = [i for i, d in enumerate(diag) if d != 1]
    factors = [diag[i] for i in positions]
    u_inv = inverse_unimodular(dec.U)
    lift_basis = IntMat([[u_inv[r, p] for p in positions] for r in range(n)]) \
        if positions else IntMat([[] for _ in range(n)])
    q = AbelianQuotient(invariant_factors=factors,
                        lift_basis=lift_basis,
                        projection=dec.U,
                        positions=positions)
    if q.is_finite():
        q = attr.evolve(q, coset_table=_build_coset_table(q))
    logger.debug("quotient: factors {0} for {1}".format(factors, l))
    return q
