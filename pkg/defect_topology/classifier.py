"""Classification of defects Def_M(X)

A report is assembled per connected component A of M minus X from

    vacua x hTop[A, target] x pi_0(G)/p(G_v)

and the cardinality is the product of the per-component sizes.
"""
import logging

import attr

from . import homotopy
from .exceptions import (InconsistentSpec, NonEmptyDefectSet, SubgroupNotContained,
                         UnsupportedPair)
from .homotopy import (TRIVIAL, ConjClasses, FreeAbelian, SpaceSpec, Wedge, h1,
                       maps_into, retract, sup)
from .intlin import IntMat, det
from .semidirect import PointGroup2D, class_family
from .spherical import angle_label, build_group, conjugacy_classes, rotation_angle

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


# --------------------------------------------
# finite groups for pi_0(G)

@attr.s(frozen=True)
class FiniteGroup(object):
    """Finite group given by its element list and multiplication

    Attributes:
      name: display name
      elements: all elements, in a fixed order
      multiply: multiply(x, y) -> element
      labels: element -> display label
    """
    name = attr.ib()
    elements = attr.ib(converter=tuple)
    multiply = attr.ib(eq=False, repr=False)
    labels = attr.ib(factory=dict, eq=False, repr=False)

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def label(self, x):
        return self.labels.get(x, str(x))

    @property
    def identity(self):
        return next(e for e in self.elements
                    if all(self.multiply(e, x) == x for x in self.elements))

    def subgroup(self, gens, name=None):
        """Subgroup generated by gens

        Raises:
          SubgroupNotContained: if a generator is not an element of this group
        """
        for g in gens:
            if g not in self:
                raise SubgroupNotContained("{0} is not an element of {1}".
                                           format(self.label(g), self.name),
                                           field="symmetry.p_gv")
        members = {self.identity}
        frontier = list(members)
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = self.multiply(x, g)
                    if y not in members:
                        members.add(y)
                        new.append(y)
            frontier = new
        return FiniteGroup(name=name or "<{0}>".format(", ".join(self.label(g) for g in gens)),
                           elements=[x for x in self.elements if x in members],
                           multiply=self.multiply, labels=self.labels)

    def is_subgroup_of(self, other):
        return all(x in other for x in self.elements)

    def cosets(self, h):
        """Left cosets g h, each as a list in element order, sorted by first member
        """
        if not h.is_subgroup_of(self):
            raise SubgroupNotContained("{0} is not a subgroup of {1}".format(h.name, self.name),
                                       field="symmetry.p_gv")
        seen = set()
        out = []
        for g in self.elements:
            if g in seen:
                continue
            coset = {self.multiply(g, x) for x in h.elements}
            seen |= coset
            out.append([x for x in self.elements if x in coset])
        return out

    def lookup(self, selector):
        """Element named by a label (str) or given as a matrix (list of rows)
        """
        if isinstance(selector, str):
            for x in self.elements:
                if self.label(x) == selector:
                    return x
            raise SubgroupNotContained("'{0}' is not an element of {1}. Available: {2}".
                                       format(selector, self.name,
                                              [self.label(x) for x in self.elements]),
                                       field="symmetry.p_gv")
        x = selector if isinstance(selector, IntMat) else IntMat(selector)
        if x not in self:
            raise SubgroupNotContained("{0} is not an element of {1}".format(x, self.name),
                                       field="symmetry.p_gv")
        return x


def _xor(a, b):
    return tuple(x ^ y for x, y in zip(a, b))


def klein_four():
    return FiniteGroup(name="V4", elements=[(0, 0), (1, 0), (0, 1), (1, 1)], multiply=_xor,
                       labels={(0, 0): "e", (1, 0): "a", (0, 1): "b", (1, 1): "ab"})


def cyclic_two():
    return FiniteGroup(name="Z/2", elements=[(0,), (1,)], multiply=_xor,
                       labels={(0,): "e", (1,): "r"})


def matrix_group(matrices, gram=None, name="Aut(Λ)"):
    """Finite group of unimodular integer matrices

    Args:
      matrices: all group elements (lists of rows or IntMat)
      gram: optional Gram matrix G of the lattice; then A^T G A = G is checked

    Raises:
      InconsistentSpec: if the matrices are not unimodular, not closed under
        multiplication, or do not preserve the Gram matrix
    """
    mats = []
    for m in matrices:
        m = m if isinstance(m, IntMat) else IntMat(m)
        if m not in mats:
            mats.append(m)
    if not mats:
        raise InconsistentSpec("{0} needs at least one matrix".format(name),
                               field="symmetry.aut_lattice")
    shape = mats[0].shape
    for m in mats:
        if m.shape != shape or not m.is_square():
            raise InconsistentSpec("{0}: all matrices must be square of shape {1}, got {2}".
                                   format(name, shape, m.shape), field="symmetry.aut_lattice")
        if abs(det(m)) != 1:
            raise InconsistentSpec("{0}: {1} is not unimodular".format(name, m),
                                   field="symmetry.aut_lattice")
    if IntMat.identity(shape[0]) not in mats:
        raise InconsistentSpec("{0} does not contain the identity".format(name),
                               field="symmetry.aut_lattice")
    for a in mats:
        for b in mats:
            if a @ b not in mats:
                raise InconsistentSpec("{0} is not closed: {1}·{2} = {3} is missing".
                                       format(name, a, b, a @ b), field="symmetry.aut_lattice")
    if gram is not None:
        g = gram if isinstance(gram, IntMat) else IntMat(gram)
        for a in mats:
            if a.transpose() @ g @ a != g:
                raise InconsistentSpec("{0}: {1} does not preserve the Gram matrix {2}".
                                       format(name, a, g), field="symmetry.gram")
    return FiniteGroup(name=name, elements=mats, multiply=lambda a, b: a @ b,
                       labels={m: str(m) for m in mats})


def default_lattice_automorphisms(n):
    """{I, -I}, the automorphisms every lattice has
    """
    i = IntMat.identity(n)
    return [i, -i]


# --------------------------------------------
# order parameter descriptors

@attr.s(frozen=True)
class EuclideanCrystal(object):
    """Crystal in R^dim; `point_group` is the planar rotation group for dim 2
    """
    dim = attr.ib()
    point_group = attr.ib(default=None)
    has_reflection = attr.ib(default=False)
    kind = "euclidean"

    @property
    def pi1_name(self):
        if self.dim == 2:
            return u"ℤ²⋊_M ℤ ({0})".format(self.point_group.name)
        return u"ℤ³⋊q⁻¹(C)"

    def pi(self, k):
        if k == 1:
            raise UnsupportedPair("pi_1 is non-abelian, use sphere_classes(1)")
        if self.dim == 2 or k == 2:
            # universal cover R^2 x R is contractible; pi_2 of a Lie group vanishes
            return TRIVIAL
        if k == 3:
            return FreeAbelian(1, marker=u"q₃⁻¹(C)-action")
        raise UnsupportedPair("pi_{0} of a crystal in R^{1} is not supported".format(k, self.dim))

    def sphere_classes(self, k):
        if k > 1:
            return self.pi(k)
        if self.dim == 2:
            return ConjClasses(source="semidirect", count=None,
                               family=class_family(self.point_group),
                               description=self.pi1_name)
        return ConjClasses(source="symbolic", count=None, description=self.pi1_name)

    def pi0(self):
        return cyclic_two()

    def stabilizer(self, pi0):
        return pi0.subgroup(list(pi0.elements) if self.has_reflection else [])

    def to_dict(self):
        out = {"kind": self.kind, "dim": self.dim, "has_reflection": self.has_reflection}
        if self.point_group is not None:
            out["lattice"] = self.point_group.name
            out["matrix"] = self.point_group.m.to_list()
            out["order"] = self.point_group.order_n
        return out


@attr.s(frozen=True)
class SphereCrystal(object):
    """Crystal on S^2 with binary polyhedral group q_3^-1(Gamma)
    """
    group = attr.ib()
    has_reflection = attr.ib(default=False)
    kind = "sphere"

    @property
    def pi1_name(self):
        return str(self.group.kind)

    def pi(self, k):
        if k == 2:
            return TRIVIAL
        if k == 3:
            return FreeAbelian(1, marker=u"q₃⁻¹(Γ)-action")
        raise UnsupportedPair("pi_{0} of a spherical crystal is not supported".format(k))

    def sphere_classes(self, k):
        if k > 1:
            return self.pi(k)
        classes = conjugacy_classes(self.group)
        summary = [{"size": len(c), "angle": angle_label(rotation_angle(next(iter(c))))}
                   for c in classes]
        return ConjClasses(source="binary", count=len(classes), family=summary,
                           description=self.pi1_name)

    def pi0(self):
        return cyclic_two()

    def stabilizer(self, pi0):
        return pi0.subgroup(list(pi0.elements) if self.has_reflection else [])

    def to_dict(self):
        return {"kind": self.kind, "group": str(self.group.kind), "order": self.group.order,
                "has_reflection": self.has_reflection}


@attr.s(frozen=True)
class TorusTarget(object):
    """Order parameter space with identity component a k-torus

    Attributes:
      k: torus dimension
      pi0_G: FiniteGroup pi_0(G)
      p_Gv: FiniteGroup, subgroup of pi0_G
    """
    k = attr.ib()
    pi0_G = attr.ib()
    p_Gv = attr.ib()
    kind = "torus"

    def __attrs_post_init__(self):
        if not self.p_Gv.is_subgroup_of(self.pi0_G):
            raise SubgroupNotContained("p(G_v) is not a subgroup of {0}".format(self.pi0_G.name),
                                       field="symmetry.p_gv")

    @property
    def pi1_name(self):
        return u"ℤ" + sup(self.k)

    def pi(self, k):
        return FreeAbelian(self.k) if k == 1 else TRIVIAL

    def sphere_classes(self, k):
        return self.pi(k)

    def pi0(self):
        return self.pi0_G

    def stabilizer(self, pi0):
        return self.p_Gv

    def to_dict(self):
        return {"kind": self.kind, "k": self.k, "pi0_G": self.pi0_G.name,
                "pi0_order": self.pi0_G.order,
                "p_Gv": [self.pi0_G.label(x) for x in self.p_Gv.elements]}


def homotopy_groups(target):
    """Text description of pi_1, pi_2 and pi_3 of an order parameter space
    """
    def text(d):
        return "0" if d.is_trivial() else str(d)
    return {"pi1": target.pi1_name, "pi2": text(target.pi(2)), "pi3": text(target.pi(3))}


# --------------------------------------------
# system specification

@attr.s(frozen=True)
class SymmetrySpec(object):
    """Symmetry data as given by the user

    kind: lattice (planar crystal), crystal3d, binary (crystal on S^2) or torus
    """
    kind = attr.ib()
    lattice = attr.ib(default=None)
    matrix = attr.ib(default=None)
    has_reflection = attr.ib(default=None)
    group = attr.ib(default=None)
    n = attr.ib(default=None)
    p_gv = attr.ib(default=None)
    aut_lattice = attr.ib(default=None)
    gram = attr.ib(default=None)
    torus_dim = attr.ib(default=None)


SYMMETRY_KINDS = ("lattice", "crystal3d", "binary", "torus")

# dimension of the identity component G_0 for the torus family
DEFAULT_TORUS_DIM = {"cylinder": 2, "torus2d": 2, "annulus": 1}


@attr.s(frozen=True)
class SystemSpec(object):
    space = attr.ib()
    symmetry = attr.ib()
    vacua_count = attr.ib(default=1)

    @vacua_count.validator
    def _check_vacua(self, attribute, value):
        if value is None or int(value) < 1:
            raise InconsistentSpec("vacua_count must be >= 1, got {0}".format(value),
                                   field="system.vacua_count")


def _lattice_point_group(sym):
    if sym.matrix is not None:
        return PointGroup2D.custom(sym.matrix, has_reflection=bool(sym.has_reflection))
    if sym.lattice is None:
        raise InconsistentSpec("A planar crystal needs 'lattice' or 'matrix'",
                               field="symmetry.lattice")
    pg = PointGroup2D.named(sym.lattice)
    if sym.has_reflection is not None:
        pg = attr.evolve(pg, has_reflection=bool(sym.has_reflection))
    return pg


def _torus_target(space, sym):
    if sym.torus_dim is not None:
        k = int(sym.torus_dim)
        if k < 1:
            raise InconsistentSpec("torus_dim must be >= 1, got {0}".format(k),
                                   field="symmetry.torus_dim")
    else:
        k = DEFAULT_TORUS_DIM.get(space.manifold, space.dim)
    if space.manifold in ("cylinder", "torus2d"):
        pi0 = klein_four()
    elif space.manifold == "annulus":
        pi0 = cyclic_two()
    else:
        mats = sym.aut_lattice if sym.aut_lattice is not None \
            else default_lattice_automorphisms(space.dim)
        pi0 = matrix_group(mats, gram=sym.gram)
        if pi0.elements[0].shape != (space.dim, space.dim):
            raise InconsistentSpec("Aut(Λ) of a flat {0}-torus needs {0}x{0} matrices".
                                   format(space.dim), field="symmetry.aut_lattice")
    gens = [pi0.lookup(s) for s in (sym.p_gv or [])]
    return TorusTarget(k=k, pi0_G=pi0, p_Gv=pi0.subgroup(gens, name="p(G_v)"))


def order_param_space(spec):
    """Order parameter descriptor for a system

    Raises:
      InconsistentSpec: if the symmetry does not fit the space
    """
    space, sym = spec.space, spec.symmetry
    if sym.kind not in SYMMETRY_KINDS:
        raise InconsistentSpec("Unknown symmetry kind '{0}'. Available: {1}".
                               format(sym.kind, list(SYMMETRY_KINDS)), field="symmetry.kind")
    manifold = space.manifold
    if manifold == "euclidean":
        if sym.kind == "lattice" and space.dim == 2:
            pg = _lattice_point_group(sym)
            return EuclideanCrystal(dim=2, point_group=pg, has_reflection=pg.has_reflection)
        if sym.kind == "crystal3d" and space.dim == 3:
            return EuclideanCrystal(dim=3, has_reflection=bool(sym.has_reflection))
        raise InconsistentSpec("Symmetry '{0}' does not fit euclidean space of dimension {1}; "
                               "use 'lattice' in R^2 or 'crystal3d' in R^3".
                               format(sym.kind, space.dim), field="symmetry.kind")
    if manifold == "sphere":
        if sym.kind == "binary" and space.dim == 2:
            if sym.group is None:
                raise InconsistentSpec("A spherical crystal needs 'group'", field="symmetry.group")
            return SphereCrystal(group=build_group(sym.group, sym.n),
                                 has_reflection=bool(sym.has_reflection))
        raise InconsistentSpec("Symmetry '{0}' does not fit the {1}-sphere; "
                               "use 'binary' on the 2-sphere".format(sym.kind, space.dim),
                               field="symmetry.kind")
    if sym.kind != "torus":
        raise InconsistentSpec("Symmetry '{0}' does not fit {1}; use 'torus'".
                               format(sym.kind, manifold), field="symmetry.kind")
    return _torus_target(space, sym)


@attr.s(frozen=True)
class ChiralityFactor(object):
    """pi_0(G)/p(G_v) as a list of coset labels
    """
    cosets = attr.ib(converter=tuple)

    @property
    def size(self):
        return len(self.cosets)

    def to_dict(self):
        return {"size": self.size, "cosets": list(self.cosets)}


def _chirality(target):
    pi0 = target.pi0()
    cosets = pi0.cosets(target.stabilizer(pi0))
    return ChiralityFactor(["{" + ", ".join(pi0.label(x) for x in c) + "}" for c in cosets])


def chirality_factor(spec):
    """pi_0(G)/p(G_v)

    Raises:
      SubgroupNotContained: if p(G_v) is not contained in pi_0(G)
    """
    return _chirality(order_param_space(spec))


# --------------------------------------------
# reports

@attr.s(frozen=True)
class Cardinality(object):
    """kind: finite (value set), countably_infinite or parametrized_family
    """
    kind = attr.ib()
    value = attr.ib(default=None)
    descriptor = attr.ib(default=None)

    def to_dict(self):
        out = {"kind": self.kind}
        if self.kind == "finite":
            out["value"] = self.value
        if self.descriptor is not None:
            out["descriptor"] = self.descriptor
        return out

    def __str__(self):
        if self.kind == "finite":
            return str(self.value)
        if self.kind == "countably_infinite":
            return u"countably infinite"
        return self.descriptor


@attr.s(frozen=True)
class DefectReport(object):
    """Def_M(X) with one (homotopy type, class descriptor) entry per component
    """
    space = attr.ib()
    target = attr.ib()
    per_component = attr.ib(converter=tuple)
    chirality_factor = attr.ib()
    vacua_count = attr.ib()
    cardinality = attr.ib()

    def to_dict(self, window=5):
        return {"space": self.space.to_dict(),
                "target": self.target.to_dict(),
                "homotopy_groups": homotopy_groups(self.target),
                "components": [{"homotopy_type": t.to_dict(),
                                "homotopy_type_text": str(t),
                                "h1_rank": h1(t),
                                "classes": d.to_dict(window),
                                "classes_text": str(d)}
                               for t, d in self.per_component],
                "chirality_factor": self.chirality_factor.to_dict(),
                "vacua_count": self.vacua_count,
                "cardinality": self.cardinality.to_dict()}


def _has_marker(d):
    if isinstance(d, homotopy.Product):
        return any(_has_marker(f) for f in d.factors)
    return getattr(d, "marker", None) is not None or getattr(d, "source", None) == "symbolic"


def _cardinality(per_component, chirality, vacua):
    total = 1
    infinite = False
    symbolic = []
    for _, d in per_component:
        s = d.size()
        if s is None:
            infinite = True
            if _has_marker(d):
                symbolic.append(str(d))
        else:
            total *= vacua * s * chirality.size
    if symbolic:
        n = len(per_component)
        return Cardinality("parametrized_family",
                           descriptor=u"∏ over {0} component(s) of {1} × {2} × {3}".format(
                               n, vacua, u" × ".join(symbolic), chirality.size))
    if infinite:
        return Cardinality("countably_infinite")
    return Cardinality("finite", value=total)


def _report(spec, components):
    target = order_param_space(spec)
    chirality = _chirality(target)
    per_component = [(t, maps_into(t, target)) for t in components]
    vacua = int(spec.vacua_count)
    report = DefectReport(space=spec.space, target=target, per_component=per_component,
                          chirality_factor=chirality, vacua_count=vacua,
                          cardinality=_cardinality(per_component, chirality, vacua))
    logger.info("{0}: {1} component(s), cardinality {2}".
                format(spec.space.manifold, len(per_component), report.cardinality))
    return report


def classify(spec):
    """Def_M(X) for a system

    Raises:
      UnsupportedSpace, InconsistentSpec, UnsupportedPair, SubgroupNotContained
    """
    return _report(spec, retract(spec.space))


def textures(spec, compactify=False):
    """Classes of defect-free configurations

    With compactify, R^n is replaced by its one point compactification S^n.

    Raises:
      NonEmptyDefectSet: if the space has defects
    """
    space = spec.space
    if space.defect.kind not in ("empty", "points") or space.point_count:
        raise NonEmptyDefectSet("Textures need an empty defect set, got {0}".
                                format(space.defect.to_dict()), field="space.defect")
    if compactify and space.manifold == "euclidean":
        return _report(spec, [Wedge([space.dim])])
    return classify(spec)


def make_space(manifold, dim=None, points=None):
    """SpaceSpec with `points` removed points (None for an empty defect set)
    """
    defect = homotopy.EMPTY if points is None else homotopy.Defect(kind="points", count=points)
    return SpaceSpec(manifold=manifold, dim=dim, defect=defect)
