"""Homotopy types of punctured manifolds and the class descriptors of maps out of them

`retract` reduces M minus X to a list of symbolic homotopy types (one per
connected component). `maps_into` turns one such type and an order parameter
descriptor into a ClassDescriptor.
"""
import logging

import attr

from .exceptions import UnsupportedPair, UnsupportedSpace

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

_SUPERSCRIPTS = str.maketrans("0123456789", u"⁰¹²³⁴⁵⁶⁷⁸⁹")


def sup(n):
    return str(n).translate(_SUPERSCRIPTS)


# --------------------------------------------
# homotopy types

@attr.s(frozen=True)
class Point(object):
    kind = "point"

    def to_dict(self):
        return {"type": self.kind}

    def __str__(self):
        return "pt"


@attr.s(frozen=True)
class Wedge(object):
    """Wedge of spheres, `dims` the sorted multiset of sphere dimensions (>= 1)
    """
    dims = attr.ib(converter=lambda d: tuple(sorted(int(x) for x in d)))
    kind = "wedge"

    @dims.validator
    def _check_dims(self, attribute, value):
        if not value or min(value) < 1:
            raise UnsupportedSpace("Wedge needs sphere dimensions >= 1, got {0}".format(value),
                                   field="dim")

    def to_dict(self):
        return {"type": self.kind, "dims": list(self.dims)}

    def __str__(self):
        return u" ∨ ".join(u"S" + sup(d) for d in self.dims)


@attr.s(frozen=True)
class Torus(object):
    n = attr.ib(converter=int)
    kind = "torus"

    def to_dict(self):
        return {"type": self.kind, "n": self.n}

    def __str__(self):
        return u"T" + sup(self.n)


@attr.s(frozen=True)
class Disjoint(object):
    parts = attr.ib(converter=tuple)
    kind = "disjoint"

    def to_dict(self):
        return {"type": self.kind, "parts": [p.to_dict() for p in self.parts]}

    def __str__(self):
        return u" ⊔ ".join("(" + str(p) + ")" for p in self.parts)


POINT = Point()


def wedge(dims):
    """Wedge of spheres; the empty wedge is a point
    """
    dims = list(dims)
    return Wedge(dims) if dims else POINT


def disjoint(parts):
    parts = list(parts)
    if len(parts) == 1:
        return parts[0]
    return Disjoint(parts)


def h1(t):
    """Rank of the first (singular) cohomology H^1(t, Z)
    """
    if isinstance(t, Wedge):
        return sum(1 for d in t.dims if d == 1)
    if isinstance(t, Torus):
        return t.n
    if isinstance(t, Disjoint):
        return sum(h1(p) for p in t.parts)
    return 0


# --------------------------------------------
# spaces

MANIFOLDS = ("euclidean", "sphere", "cylinder", "torus2d", "flat_torus", "annulus")
FIXED_DIM = {"cylinder": 2, "torus2d": 2, "annulus": 2}
DEFECTS = ("empty", "points", "arrangement", "circle")


@attr.s(frozen=True)
class Defect(object):
    """Defect set X

    Attributes:
      kind: empty, points, arrangement or circle
      count: number of points (points)
      hyperplanes: number of parallel hyperplanes (arrangement)
      k: one row per component of the complement of the hyperplanes, entry j
        = number of j-dimensional subspaces in it (arrangement)
    """
    kind = attr.ib(default="empty")
    count = attr.ib(default=0)
    hyperplanes = attr.ib(default=0)
    k = attr.ib(default=None, converter=lambda k: None if k is None else
                tuple(tuple(int(x) for x in row) for row in k))

    def to_dict(self):
        out = {"kind": self.kind}
        if self.kind == "points":
            out["count"] = self.count
        if self.kind == "arrangement":
            out["hyperplanes"] = self.hyperplanes
            out["k"] = [list(r) for r in self.k]
        return out


EMPTY = Defect()


@attr.s(frozen=True)
class SpaceSpec(object):
    """Manifold M with defect set X

    Raises:
      UnsupportedSpace: if the (manifold, defect) pair is outside the catalog
    """
    manifold = attr.ib()
    dim = attr.ib(default=None)
    defect = attr.ib(default=EMPTY)

    def __attrs_post_init__(self):
        if self.manifold not in MANIFOLDS:
            raise UnsupportedSpace("Unknown manifold '{0}'. Available: {1}".
                                   format(self.manifold, list(MANIFOLDS)), field="manifold")
        if self.manifold in FIXED_DIM:
            if self.dim not in (None, FIXED_DIM[self.manifold]):
                raise UnsupportedSpace("{0} has dimension {1}, got dim={2}".
                                       format(self.manifold, FIXED_DIM[self.manifold], self.dim),
                                       field="dim")
            object.__setattr__(self, "dim", FIXED_DIM[self.manifold])
        if self.dim is None or int(self.dim) < 1:
            raise UnsupportedSpace("{0} needs dim >= 1, got {1}".format(self.manifold, self.dim),
                                   field="dim")
        self._check_defect()

    def _check_defect(self):
        d = self.defect
        if d.kind not in DEFECTS:
            raise UnsupportedSpace("Unknown defect kind '{0}'. Available: {1}".
                                   format(d.kind, list(DEFECTS)), field="defect.kind")
        if d.kind == "points" and (d.count is None or d.count < 0):
            raise UnsupportedSpace("Number of points must be >= 0, got {0}".format(d.count),
                                   field="defect.count")
        if d.kind == "arrangement":
            if self.manifold != "euclidean":
                raise UnsupportedSpace("Affine arrangements are only supported in euclidean space, "
                                       "got {0}".format(self.manifold), field="defect.kind")
            if d.hyperplanes < 0:
                raise UnsupportedSpace("Number of hyperplanes must be >= 0", field="defect.hyperplanes")
            rows = d.k if d.k is not None else tuple((0,) * (self.dim - 1)
                                                     for _ in range(d.hyperplanes + 1))
            if len(rows) != d.hyperplanes + 1:
                raise UnsupportedSpace("k needs {0} rows (one per component), got {1}".
                                       format(d.hyperplanes + 1, len(rows)), field="defect.k")
            if any(len(r) != self.dim - 1 or min(r or (0,)) < 0 for r in rows):
                raise UnsupportedSpace("Every row of k needs {0} non-negative entries "
                                       "(subspace dimensions 0..{1})".
                                       format(self.dim - 1, self.dim - 2), field="defect.k")
            object.__setattr__(self, "defect", attr.evolve(d, k=rows))
        if d.kind == "circle" and (self.manifold, self.dim) != ("euclidean", 3):
            raise UnsupportedSpace("A circle defect is only supported in euclidean 3-space",
                                   field="defect.kind")

    @property
    def point_count(self):
        """Number of removed points; 0 for an empty defect set
        """
        return self.defect.count if self.defect.kind == "points" else 0

    def is_compact(self):
        return self.manifold in ("sphere", "torus2d", "flat_torus")

    def to_dict(self):
        return {"manifold": self.manifold, "dim": self.dim, "defect": self.defect.to_dict()}


def retract(s):
    """Homotopy types of the connected components of M minus X

    Returns:
      list of HomotopyType
    """
    n, d = s.dim, s.defect
    if d.kind == "circle":
        return [Wedge([1, 2])]
    if d.kind == "arrangement":
        return [wedge(n - j - 1 for j, kij in enumerate(row) for _ in range(kij))
                for row in d.k]
    m = s.point_count
    if n == 1 and m:
        # a line minus m points has m + 1 intervals, a circle minus m points m arcs
        return [POINT] * (m + 1 if s.manifold == "euclidean" else m)
    if s.manifold == "euclidean":
        return [wedge([n - 1] * m)]
    if s.manifold == "sphere":
        return [Wedge([n]) if m == 0 else wedge([n - 1] * (m - 1))]
    if s.manifold in ("cylinder", "annulus"):
        return [Wedge([1] * (m + 1))]
    if s.manifold == "torus2d":
        return [Torus(2) if m == 0 else Wedge([1] * (m + 1))]
    if s.manifold == "flat_torus":
        return [Torus(n) if m == 0 else Wedge([n - 1] * (m + 1))]
    raise UnsupportedSpace("No retraction rule for {0} minus {1}".format(s.manifold, d.kind),
                           field="manifold")


# --------------------------------------------
# class descriptors

@attr.s(frozen=True)
class FiniteSet(object):
    count = attr.ib()
    labels = attr.ib(default=(), converter=tuple)
    kind = "finite_set"

    def is_trivial(self):
        return self.count == 1

    def size(self):
        return self.count

    def to_dict(self, window=None):
        return {"kind": "trivial" if self.is_trivial() else self.kind,
                "count": self.count, "labels": list(self.labels)}

    def __str__(self):
        return "1" if self.is_trivial() else "{" + ", ".join(self.labels) + "}"


@attr.s(frozen=True)
class FreeAbelian(object):
    """Z^rank, optionally still to be divided by an action given as `marker`
    """
    rank = attr.ib()
    marker = attr.ib(default=None)
    kind = "free_abelian"

    def is_trivial(self):
        return self.rank == 0 and self.marker is None

    def size(self):
        return 1 if self.rank == 0 else None

    def to_dict(self, window=None):
        out = {"kind": self.kind, "rank": self.rank}
        if self.marker:
            out["marker"] = self.marker
        return out

    def __str__(self):
        body = u"ℤ" + sup(self.rank) if self.rank != 1 else u"ℤ"
        if self.rank == 0:
            body = "0"
        return body + (u" modulo " + self.marker if self.marker else "")


@attr.s(frozen=True)
class ConjClasses(object):
    """Conjugacy classes of pi_1 of the target, one factor per circle

    Attributes:
      source: "semidirect" (families F_{n3}), "binary" (binary polyhedral
        group) or "symbolic"
      power: number of circle factors
      count: number of classes of a single factor, None if infinite
      family: ClassSet per residue of n3 (semidirect) or class list (binary)
      description: text naming the group whose classes are meant
    """
    source = attr.ib()
    power = attr.ib(default=1)
    count = attr.ib(default=None)
    family = attr.ib(default=(), converter=tuple, eq=False, repr=False)
    description = attr.ib(default="")
    kind = "conj_classes"

    def is_trivial(self):
        return self.count == 1

    def size(self):
        return None if self.count is None else self.count ** self.power

    def to_dict(self, window=10):
        out = {"kind": self.kind, "source": self.source, "power": self.power,
               "count": self.count, "group": self.description}
        if self.source == "semidirect":
            out["families"] = [cs.to_dict(window) for cs in self.family]
        elif self.source == "binary":
            out["classes"] = list(self.family)
        return out

    def __str__(self):
        base = u"Conj({0})".format(self.description)
        return base if self.power == 1 else u"{0}{1}".format(base, sup(self.power))


@attr.s(frozen=True)
class Product(object):
    factors = attr.ib(converter=tuple)
    kind = "product"

    def is_trivial(self):
        return False

    def size(self):
        out = 1
        for f in self.factors:
            s = f.size()
            if s is None:
                return None
            out *= s
        return out

    def to_dict(self, window=10):
        return {"kind": self.kind, "factors": [f.to_dict(window) for f in self.factors]}

    def __str__(self):
        return u" × ".join(str(f) for f in self.factors)


TRIVIAL = FiniteSet(1, ["trivial"])


def combine(descriptors):
    """Product of class descriptors; circle factors of one group are merged
    into a power
    """
    out = []
    for d in descriptors:
        if d.is_trivial():
            continue
        prev = out[-1] if out else None
        if isinstance(d, ConjClasses) and isinstance(prev, ConjClasses) and \
                (prev.source, prev.description) == (d.source, d.description):
            out[-1] = attr.evolve(prev, power=prev.power + d.power)
        else:
            out.append(d)
    if not out:
        return TRIVIAL
    if len(out) == 1:
        return out[0]
    return Product(out)


def maps_into(t, target):
    """Class descriptor of the free homotopy classes t -> target

    Args:
      t: HomotopyType of one component
      target: order parameter descriptor (see `classifier.order_param_space`)

    Raises:
      UnsupportedPair: when no rule covers (t, target)
    """
    if isinstance(t, Point):
        return TRIVIAL
    if target.kind == "torus":
        # maps into a torus are classified by H^1 with coefficients Z^k
        return FreeAbelian(h1(t) * target.k) if h1(t) else TRIVIAL
    if isinstance(t, Wedge):
        return combine(target.sphere_classes(d) for d in sorted(t.dims))
    raise UnsupportedPair("No rule for maps from {0} into a {1} target".format(t, target.kind))
