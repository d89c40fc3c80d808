"""The fundamental group Z^2 x|_M Z of a planar crystal order parameter space

Elements are pairs (n, n3): n = (n1, n2) is the Burgers-type translation
part, n3 the disclination index. The group law is

    (a, a3) . (b, b3) = (a + M^a3 b, a3 + b3)

and conjugation never changes n3, so the conjugacy classes split into the
families F_{n3} computed by `f_classes`.
"""
import functools
import itertools
import logging

import attr
import numpy as np

from .exceptions import InconsistentSpec, InfiniteOrderError
from .intlin import IntMat, det, mat_pow, quotient
from .utils import UnionFind, find_orbits

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

# integer 2x2 matrices of finite order have order 1, 2, 3, 4 or 6
MAX_ORDER = 12

LATTICES = {
    "parallelogram": ([[1, 0], [0, 1]], 1, False),
    "rectangle": ([[-1, 0], [0, -1]], 2, True),
    "square": ([[0, 1], [-1, 0]], 4, True),
    "hexagonal": ([[1, 1], [-1, 0]], 6, True),
}


def matrix_order(m, max_order=MAX_ORDER):
    """Smallest N > 0 with m^N = I

    Raises:
      InfiniteOrderError: if m is not unimodular or no such N <= max_order exists
    """
    if not m.is_square() or abs(det(m)) != 1:
        raise InfiniteOrderError("Matrix {0} is not unimodular, so it has infinite order".format(m),
                                 field="matrix")
    p = m
    for k in range(1, max_order + 1):
        if p.is_identity():
            return k
        p = p @ m
    raise InfiniteOrderError("Matrix {0} has infinite order".format(m), field="matrix")


@attr.s(frozen=True)
class PointGroup2D(object):
    """Rotation part C of a planar lattice symmetry group

    Attributes:
      name: parallelogram, rectangle, square, hexagonal or custom
      m: generator of C in lattice coordinates
      order_n: order N of m
      has_reflection: True if some reflection is a lattice symmetry
    """
    name = attr.ib()
    m = attr.ib()
    order_n = attr.ib()
    has_reflection = attr.ib(default=False)

    @classmethod
    def named(cls, name):
        if name not in LATTICES:
            raise InconsistentSpec("Unknown lattice '{0}'. Available: {1}".
                                   format(name, sorted(LATTICES)), field="symmetry.lattice")
        entries, n, refl = LATTICES[name]
        m = IntMat(entries)
        assert matrix_order(m) == n
        return cls(name=name, m=m, order_n=n, has_reflection=refl)

    @classmethod
    def custom(cls, matrix, has_reflection=False):
        """Point group from an arbitrary finite-order integer matrix. The
        order is computed, never taken from the caller.
        """
        m = matrix if isinstance(matrix, IntMat) else IntMat(matrix)
        if m.shape != (2, 2):
            raise InfiniteOrderError("Point group generator must be 2x2, got {0}".format(m.shape),
                                     field="matrix")
        return cls(name="custom", m=m, order_n=matrix_order(m), has_reflection=has_reflection)

    def power(self, k):
        return _power(self.m, k % self.order_n)

    def chirality_size(self):
        return 1 if self.has_reflection else 2


@functools.lru_cache(maxsize=None)
def _power(m, k):
    return mat_pow(m, k)


def _vec(v):
    return tuple(int(x) for x in v)


@attr.s(frozen=True)
class SdElement(object):
    """Element (n_vec, n3) of Z^2 x|_M Z
    """
    n_vec = attr.ib(converter=_vec)
    n3 = attr.ib(converter=int)

    def to_list(self):
        return [list(self.n_vec), self.n3]


IDENTITY = SdElement((0, 0), 0)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def multiply(a, b, pg):
    """(a, a3) . (b, b3) = (a + M^a3 b, a3 + b3)
    """
    return SdElement(_add(a.n_vec, pg.power(a.n3).apply(b.n_vec)), a.n3 + b.n3)


def inverse(x, pg):
    """(n, n3)^-1 = (-M^-n3 n, -n3)
    """
    return SdElement(tuple(-c for c in pg.power(-x.n3).apply(x.n_vec)), -x.n3)


def conjugate(g, x, pg):
    """g x g^-1 = ((I - M^x3) g_vec + M^g3 x_vec, x3)
    """
    l = IntMat.identity(2) - pg.power(x.n3)
    return SdElement(_add(l.apply(g.n_vec), pg.power(g.n3).apply(x.n_vec)), x.n3)


def rep_key(v):
    """Ordering used to pick class representatives

    The zero vector first, then vectors in the upper half plane (n2 > 0),
    then n1 >= 0, then minimal n2 and minimal n1.
    """
    return (v != (0, 0), v[1] <= 0, v[0] < 0, v[1], v[0])


# --------------------------------------------
# closed form classes

@functools.lru_cache(maxsize=None)
def _class_data(m, order_n, residue):
    """Quotient Z^2 / im(I - M^residue) and, when finite, the table
    quotient coordinates -> canonical representative
    """
    powers = [_power(m, k) for k in range(order_n)]
    q = quotient(IntMat.identity(2) - powers[residue])
    if not q.is_finite():
        return q, None
    box = list(itertools.product(range(q.exponent()), repeat=2))
    by_coset = {}
    for v in box:
        by_coset.setdefault(q.coordinates(v), []).append(v)
    orbits = find_orbits(powers[1:], sorted(by_coset),
                         lambda g, c: q.coordinates(g.apply(q.lift(c))))
    table = {}
    for orbit in orbits:
        rep = min((v for c in orbit for v in by_coset[c]), key=rep_key)
        for c in orbit:
            table[c] = rep
    logger.debug("classes for M={0}, n3 mod {1} = {2}: {3} cosets, {4} classes".
                 format(m, order_n, residue, len(by_coset), len(orbits)))
    return q, table


def canonical_rep(pg, x):
    """Canonical representative of the conjugacy class of x

    Two elements map to the same output iff they are conjugate; the output is
    conjugate to x and canonical_rep is idempotent.
    """
    q, table = _class_data(pg.m, pg.order_n, x.n3 % pg.order_n)
    if table is not None:
        return SdElement(table[q.coordinates(x.n_vec)], x.n3)
    candidates = [q.representative(pg.power(k).apply(x.n_vec)) for k in range(pg.order_n)]
    return SdElement(min(candidates, key=rep_key), x.n3)


ZERO_LABEL = u"0̃"

# symbolic fundamental domains tried in order; the first one that matches
# the computed canonical representatives on a window is reported
DOMAIN_DESCRIPTORS = [
    (u"ℤ²", lambda v: True),
    (u"{(n₁,n₂) | n₂>0} ∪ {(n₁,0) | n₁>0}",
     lambda v: v[1] > 0 or (v[1] == 0 and v[0] > 0) or v == (0, 0)),
    (u"{(n₁,n₂) | n₁≥0, n₂>0}",
     lambda v: (v[0] >= 0 and v[1] > 0) or v == (0, 0)),
]
DESCRIPTOR_WINDOW = 10


def _window(b):
    return [(a, c) for a in range(-b, b + 1) for c in range(-b, b + 1)]


@attr.s(frozen=True)
class ClassSet(object):
    """Conjugacy classes at a fixed disclination index n3

    kind is "finite" (representatives listed) or "fundamental_domain"
    (descriptor plus membership predicate and canonicalisation map).
    """
    n3 = attr.ib()
    kind = attr.ib()
    representatives = attr.ib(default=None)
    descriptor = attr.ib(default=None)
    point_group = attr.ib(default=None, eq=False, repr=False)

    def is_finite(self):
        return self.kind == "finite"

    def count(self):
        """Number of classes; None when infinite
        """
        return len(self.representatives) if self.is_finite() else None

    def canonical(self, v):
        return canonical_rep(self.point_group, SdElement(v, self.n3)).n_vec

    def contains(self, v):
        """True if v is the chosen representative of its class
        """
        v = _vec(v)
        if self.is_finite():
            return v in self.representatives
        return self.canonical(v) == v

    def members_in_window(self, window):
        return [v for v in _window(window) if self.contains(v)]

    def table_notation(self):
        """Table-1 style set notation
        """
        if self.is_finite():
            rest = [v for v in self.representatives if v != (0, 0)]
            body = "{" + ", ".join("({0},{1})".format(*v) for v in rest) + "}" if rest else u"∅"
            return u"{" + ZERO_LABEL + u"} ∪ " + body
        if self.descriptor == DOMAIN_DESCRIPTORS[0][0]:
            return self.descriptor
        return u"{" + ZERO_LABEL + u"} ∪ " + self.descriptor

    def to_dict(self, window=DESCRIPTOR_WINDOW):
        if self.is_finite():
            return {"kind": "finite", "n3": self.n3,
                    "count": self.count(),
                    "representatives": [list(v) for v in self.representatives]}
        return {"kind": "fundamental_domain", "n3": self.n3,
                "predicate": self.table_notation(),
                "window": window,
                "examples": [list(v) for v in self.members_in_window(window)]}


def f_classes(pg, n3):
    """Conjugacy classes F_{n3} of Z^2 x|_M Z at disclination index n3

    Computed from Z^2 / im(I - M^n3) with cosets merged under the action of M.
    Infinite families are returned as fundamental domains.
    """
    q, table = _class_data(pg.m, pg.order_n, n3 % pg.order_n)
    if table is not None:
        reps = tuple(sorted(set(table.values())))
        return ClassSet(n3=n3, kind="finite", representatives=reps, point_group=pg)
    cs = ClassSet(n3=n3, kind="fundamental_domain", point_group=pg)
    window = _window(DESCRIPTOR_WINDOW)
    members = [v for v in window if cs.contains(v)]
    descriptor = next((text for text, pred in DOMAIN_DESCRIPTORS
                       if [v for v in window if pred(v)] == members), None)
    if descriptor is None:
        descriptor = (u"canonical representatives of ℤ²/im(I−M^{0}) "
                      u"(invariant factors {1}) under ⟨M⟩").format(
                          n3, list(q.invariant_factors))
    return attr.evolve(cs, descriptor=descriptor)


def class_family(pg):
    """F_{n3} for n3 = 0, ..., N-1; F_{n3} depends on n3 mod N only
    """
    return [f_classes(pg, n3) for n3 in range(pg.order_n)]


# --------------------------------------------
# brute force oracle

def brute_force_classes(pg, n3, window, bound=None):
    """Partition of {n : |n1|, |n2| <= window} into conjugacy classes

    Reachability closure of conjugation by every g with |g_vec| <= bound
    (default 3 * window) and g3 in [0, N).

    Returns:
      list of classes, each a sorted list of vectors
    """
    if window < 1:
        raise InconsistentSpec("window must be >= 1, got {0}".format(window), field="window")
    if bound is None:
        bound = 3 * window
    pts = _window(window)
    l = (IntMat.identity(2) - pg.power(n3)).to_array().astype(np.int64)
    ms = np.array(list(itertools.product(range(-bound, bound + 1), repeat=2)), dtype=np.int64)
    shifts = np.unique(ms.dot(l.T), axis=0)
    uf = UnionFind(pts)
    for k in range(pg.order_n):
        mk = pg.power(k).to_array().astype(np.int64)
        for x in pts:
            ys = shifts + mk.dot(np.array(x, dtype=np.int64))
            inside = ys[(np.abs(ys) <= window).all(axis=1)]
            for y in inside:
                uf.union(x, (int(y[0]), int(y[1])))
    logger.debug("oracle: n3={0}, window={1}, bound={2}, {3} classes".
                 format(n3, window, bound, len(uf)))
    return uf.classes()


def closed_form_partition(pg, n3, window):
    """Partition of the window induced by canonical_rep
    """
    groups = {}
    for v in _window(window):
        groups.setdefault(canonical_rep(pg, SdElement(v, n3)).n_vec, []).append(v)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def oracle_agrees(pg, n3, window, bound=None):
    return brute_force_classes(pg, n3, window, bound) == closed_form_partition(pg, n3, window)
