"""Binary polyhedral groups as exact unit quaternions

Coordinates live in a single real quadratic field Q(sqrt d) per group, so
every equality used for closure and conjugacy is exact.
"""
import logging
from fractions import Fraction

import attr

from .exceptions import InvariantViolation, UnsupportedOrder
from .utils import unique_list

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


def _sign(x):
    return (x > 0) - (x < 0)


@attr.s(frozen=True, eq=False, repr=False)
class QuadExt(object):
    """a + b·sqrt(d) with rational a, b and squarefree d >= 1

    For d = 1 the irrational part is folded into a.
    """
    a = attr.ib(converter=Fraction)
    b = attr.ib(default=0, converter=Fraction)
    d = attr.ib(default=1, converter=int)

    def __attrs_post_init__(self):
        if self.d < 1:
            raise ValueError("d must be a positive squarefree integer, got {0}".format(self.d))
        if self.d == 1 and self.b:
            object.__setattr__(self, "a", self.a + self.b)
            object.__setattr__(self, "b", Fraction(0))

    def _key(self):
        return (self.a, self.b, self.d if self.b else 1)

    def __eq__(self, other):
        if not isinstance(other, QuadExt):
            other = QuadExt(other)
        return self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def _common_d(self, other):
        if not isinstance(other, QuadExt):
            other = QuadExt(other)
        if self.b and other.b and self.d != other.d:
            raise ValueError("Cannot mix sqrt({0}) and sqrt({1})".format(self.d, other.d))
        return other, (self.d if self.b else other.d)

    def __add__(self, other):
        other, d = self._common_d(other)
        return QuadExt(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadExt) else QuadExt(-Fraction(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other, d = self._common_d(other)
        return QuadExt(self.a * other.a + d * self.b * other.b,
                       self.a * other.b + self.b * other.a, d)

    __rmul__ = __mul__

    def norm(self):
        """Field norm a^2 - d b^2
        """
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("{0} is not invertible".format(self))
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if not isinstance(other, QuadExt):
            other = QuadExt(other)
        return self * other.inverse()

    def sign(self):
        """Exact sign of a + b sqrt(d)
        """
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        return sa if self.a * self.a > self.d * self.b * self.b else sb

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        return "QuadExt({0})".format(self)

    def __str__(self):
        if not self.b:
            return str(self.a)
        coef = abs(self.b)
        rad = (u"" if coef == 1 else str(coef)) + u"√{0}".format(self.d)
        if not self.a:
            return rad if self.b > 0 else u"-" + rad
        return u"{0} {1} {2}".format(self.a, "+" if self.b > 0 else "-", rad)


ZERO = QuadExt(0)
ONE = QuadExt(1)
HALF = QuadExt(Fraction(1, 2))


def _qe(x):
    return x if isinstance(x, QuadExt) else QuadExt(x)


@attr.s(frozen=True)
class QQuat(object):
    """Quaternion w + x i + y j + z k over Q(sqrt d)
    """
    w = attr.ib(converter=_qe)
    x = attr.ib(default=ZERO, converter=_qe)
    y = attr.ib(default=ZERO, converter=_qe)
    z = attr.ib(default=ZERO, converter=_qe)

    def __mul__(self, o):
        return QQuat(self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
                     self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
                     self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
                     self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w)

    def __neg__(self):
        return QQuat(-self.w, -self.x, -self.y, -self.z)

    def conj(self):
        return QQuat(self.w, -self.x, -self.y, -self.z)

    def norm2(self):
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self):
        n = self.norm2()
        if n == ONE:
            return self.conj()
        c = self.conj()
        return QQuat(c.w / n, c.x / n, c.y / n, c.z / n)

    def scale(self, s):
        return QQuat(self.w * s, self.x * s, self.y * s, self.z * s)

    def sort_key(self):
        return (self.w, self.x, self.y, self.z)

    def __str__(self):
        return "({0}, {1}, {2}, {3})".format(self.w, self.x, self.y, self.z)


Q_ONE = QQuat(1)
Q_I = QQuat(0, 1)
Q_J = QQuat(0, 0, 1)
Q_K = QQuat(0, 0, 0, 1)

PHI = QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
PHI_INV = PHI - 1


# --------------------------------------------
# group catalog

@attr.s(frozen=True)
class GroupKind(object):
    """Which binary polyhedral group: name in KINDS, n for the two families
    """
    name = attr.ib()
    n = attr.ib(default=None)

    def __attrs_post_init__(self):
        if self.name not in KINDS:
            raise UnsupportedOrder("Unknown binary group '{0}'. Available: {1}".
                                   format(self.name, sorted(KINDS)), field="group")
        if self.name in FAMILIES and (self.n is None or int(self.n) < 1):
            raise UnsupportedOrder("Binary {0} group needs n >= 1, got {1}".
                                   format(self.name, self.n), field="n")

    @property
    def expected_order(self):
        return {"cyclic": lambda n: 2 * n,
                "dihedral": lambda n: 4 * n,
                "tetrahedral": lambda n: 24,
                "octahedral": lambda n: 48,
                "icosahedral": lambda n: 120}[self.name](self.n)

    @property
    def ade_label(self):
        """McKay label, metadata only
        """
        if self.name == "cyclic":
            return "A{0}".format(2 * self.n - 1)
        if self.name == "dihedral":
            return "D{0}".format(self.n + 2)
        return {"tetrahedral": "E6", "octahedral": "E7", "icosahedral": "E8"}[self.name]

    @property
    def printed_class_count(self):
        """Class count as printed in the binary polyhedral group table
        """
        return {"cyclic": lambda n: n,
                "dihedral": lambda n: n + 3,
                "tetrahedral": lambda n: 7,
                "octahedral": lambda n: 9,
                "icosahedral": lambda n: 11}[self.name](self.n)

    def __str__(self):
        label = "binary " + self.name
        return label + " ({0})".format(self.n) if self.n is not None else label


KINDS = ("cyclic", "dihedral", "tetrahedral", "octahedral", "icosahedral")
FAMILIES = ("cyclic", "dihedral")
SUPPORTED_N = (1, 2, 3, 4, 5, 6)


def _cyclic_generator(n):
    """Unit quaternion of order 2n: rotation by 2pi/n. Returns (q, d)
    """
    half = Fraction(1, 2)
    if n == 1:
        return QQuat(-1), 1
    if n == 2:
        return Q_I, 1
    if n == 3:
        return QQuat(half, QuadExt(0, half, 3)), 3
    if n == 4:
        return QQuat(QuadExt(0, half, 2), QuadExt(0, half, 2)), 2
    if n == 5:
        # cos(pi/5) = phi/2 with an axis in Q(sqrt 5)^3
        return QQuat(PHI, PHI_INV, 1, 0).scale(HALF), 5
    if n == 6:
        return QQuat(QuadExt(0, half, 3), half), 3
    raise UnsupportedOrder("cos(pi/{0}) does not lie in a supported quadratic field; "
                           "supported n: {1}".format(n, list(SUPPORTED_N)), field="n")


def generators(kind):
    """Generator quaternions and field parameter d for a GroupKind
    """
    if kind.name == "cyclic":
        a, d = _cyclic_generator(int(kind.n))
        return [a], d
    if kind.name == "dihedral":
        a, d = _cyclic_generator(int(kind.n))
        b = Q_K if int(kind.n) == 5 else Q_J
        return [a, b], d
    tetra = [Q_I, Q_J, QQuat(1, 1, 1, 1).scale(HALF)]
    if kind.name == "tetrahedral":
        return tetra, 1
    if kind.name == "octahedral":
        # (1 + i) / sqrt 2
        return tetra + [QQuat(1, 1).scale(QuadExt(0, Fraction(1, 2), 2))], 2
    return tetra + [QQuat(PHI, PHI_INV, 1, 0).scale(HALF)], 5


@attr.s(frozen=True)
class BinaryGroup(object):
    """Finite subgroup of the unit quaternions

    Attributes:
      kind: GroupKind
      elements: frozenset of QQuat
      field_d: the d of the coordinate field Q(sqrt d)
    """
    kind = attr.ib()
    elements = attr.ib(converter=frozenset)
    field_d = attr.ib()

    @property
    def order(self):
        return len(self.elements)

    def sorted_elements(self):
        return sorted(self.elements, key=QQuat.sort_key)

    def __contains__(self, q):
        return q in self.elements


def closure(gens, cap):
    """Group generated by `gens` (unit quaternions)

    Raises:
      InvariantViolation: if more than `cap` elements are produced
    """
    elements = {Q_ONE}
    frontier = [Q_ONE]
    while frontier:
        new = []
        for q in frontier:
            for g in gens:
                p = q * g
                if p not in elements:
                    elements.add(p)
                    new.append(p)
                    if len(elements) > cap:
                        raise InvariantViolation("Closure exceeded {0} elements".format(cap))
        frontier = new
    return elements


def build_group(kind, n=None):
    """Exact element set of a binary polyhedral group

    Args:
      kind: GroupKind or one of KINDS
      n: order parameter for cyclic (order 2n) and dihedral (order 4n)

    Returns:
      BinaryGroup
    """
    if not isinstance(kind, GroupKind):
        kind = GroupKind(kind, n)
    gens, d = generators(kind)
    for g in gens:
        if g.norm2() != ONE:
            raise InvariantViolation("Generator {0} is not a unit quaternion".format(g))
    expected = kind.expected_order
    elements = closure(gens, 10 * expected)
    if len(elements) != expected:
        raise InvariantViolation("{0}: generated {1} elements, expected {2}".
                                 format(kind, len(elements), expected))
    logger.debug("{0}: {1} elements over Q(sqrt {2})".format(kind, len(elements), d))
    return BinaryGroup(kind=kind, elements=elements, field_d=d)


# --------------------------------------------
# classes and angles

def rotation_angle(q):
    """cos of the SO(3) rotation angle of q, i.e. 2 w^2 - 1, as an exact QuadExt
    """
    return q.w * q.w * 2 - 1


ANGLE_LABELS = [
    (ONE, "0"),
    (-ONE, u"π"),
    (ZERO, u"π/2"),
    (QuadExt(Fraction(-1, 2)), u"2π/3"),
    (QuadExt(Fraction(1, 2)), u"π/3"),
    (QuadExt(Fraction(-1, 4), Fraction(1, 4), 5), u"2π/5"),
    (QuadExt(Fraction(-1, 4), Fraction(-1, 4), 5), u"4π/5"),
]


def angle_label(cos_value):
    """Rotation angle in closed form for the cos values occurring in binary
    polyhedral groups
    """
    for value, label in ANGLE_LABELS:
        if cos_value == value:
            return label
    return u"arccos({0})".format(cos_value)


def _class_key(cls):
    rep = min(cls, key=QQuat.sort_key)
    return (len(cls), rotation_angle(rep), -rep.w, rep.sort_key())


def conjugacy_classes(g):
    """Partition of g into conjugacy classes, by brute force

    Classes are sorted by size, then by rotation angle.

    Returns:
      list of frozensets of QQuat
    """
    elements = g.sorted_elements()
    inverses = [(h, h.inverse()) for h in elements]
    seen = set()
    classes = []
    for x in elements:
        if x in seen:
            continue
        cls = frozenset(h * x * hi for h, hi in inverses)
        seen |= cls
        classes.append(cls)
    return sorted(classes, key=_class_key)


def class_equation(g):
    return [len(c) for c in conjugacy_classes(g)]


def center(g):
    return sorted((x for x in g.elements if all(x * h == h * x for h in g.elements)),
                  key=QQuat.sort_key)


def table2_row(g):
    """Order, class counts (computed vs printed) and rotation angles of g
    """
    classes = conjugacy_classes(g)
    computed = len(classes)
    printed = g.kind.printed_class_count
    status = "AGREE" if computed == printed else "DIFFER"
    if status == "DIFFER":
        logger.warning("{0}: {1} conjugacy classes computed, {2} printed".
                       format(g.kind, computed, printed))
    labels = [angle_label(rotation_angle(next(iter(c)))) for c in classes]
    angles = unique_list(label for label in labels if label != "0")
    return {"group": str(g.kind),
            "ade": g.kind.ade_label,
            "order": g.order,
            "field_d": g.field_d,
            "class_count": computed,
            "printed_class_count": printed,
            "status": status,
            "class_sizes": [len(c) for c in classes],
            "class_angles": labels,
            "angles": angles}
