"""Regression run over the shipped table fixtures plus the conjugacy oracle

Each check is a cell keyed like "Table 1 / hexagonal / n₃≡2".
"""
import logging
import os
import sys
from collections import OrderedDict

import attr
import pandas as pd
from tqdm import tqdm
import yaml

from .classifier import SymmetrySpec, SystemSpec, classify, make_space, order_param_space, textures
from .exceptions import DefectTopologyError, InvariantViolation, SpecParseError
from .external.flatten_json import flatten
from .homotopy import Defect, SpaceSpec, h1, retract
from .semidirect import LATTICES, PointGroup2D, f_classes, oracle_agrees
from .spherical import build_group, center, class_equation, table2_row
from .utils import read_yaml

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

DEFAULT_FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                                "data", "reference_tables.yaml")
SEPARATOR = " / "


@attr.s(frozen=True)
class Cell(object):
    expected = attr.ib()
    computed = attr.ib()

    @property
    def passed(self):
        return self.expected == self.computed


def _safe(fn):
    try:
        return fn()
    except (DefectTopologyError, InvariantViolation) as e:
        return "error: {0}".format(e)


# --------------------------------------------
# individual tables

def check_table1(rows):
    out = OrderedDict()
    for lattice, row in rows.items():
        pg = PointGroup2D.named(lattice)
        cells = OrderedDict()
        for residue, expected in sorted(row["residues"].items()):
            cs = f_classes(pg, int(residue))
            if cs.is_finite():
                computed = {"kind": cs.kind,
                            "representatives": [list(v) for v in cs.representatives]}
            else:
                computed = {"kind": cs.kind, "predicate": cs.descriptor}
            cells[u"n₃≡{0}".format(residue)] = Cell(expected, computed)
        out[lattice] = cells
    return out


def _group_invariants(g):
    sizes = class_equation(g)
    ok = sum(sizes) == g.order and all(g.order % s == 0 for s in sizes)
    ok = ok and all(x * y in g for x in g.elements for y in g.elements)
    if g.kind.name != "cyclic":
        ok = ok and [str(x) for x in center(g)] == ["(-1, 0, 0, 0)", "(1, 0, 0, 0)"]
    return ok


def check_table2(rows):
    out = OrderedDict()
    for row in rows:
        g = _safe(lambda: build_group(row["group"], row.get("n")))
        label = "{0}{1}".format(row["group"], " " + str(row["n"]) if row.get("n") else "")
        if isinstance(g, str):
            out[label] = OrderedDict([("order", Cell(row["order"], g))])
            continue
        r = table2_row(g)
        out[label] = OrderedDict([
            ("order", Cell(row["order"], r["order"])),
            ("classes", Cell(row["class_count"], r["class_count"])),
            ("printed classes", Cell(row["printed_class_count"], r["printed_class_count"])),
            ("invariants", Cell(True, _group_invariants(g))),
        ])
    return out


def check_table3(rows):
    out = OrderedDict()
    for name, row in rows.items():
        cells = OrderedDict()
        for m, expected in enumerate(row["h1"]):
            space = make_space(row["manifold"], row.get("dim"), m)
            cells["H1 m={0}".format(m)] = Cell(expected, sum(h1(t) for t in retract(space)))
        target = order_param_space(SystemSpec(space=make_space(row["manifold"], row.get("dim")),
                                              symmetry=SymmetrySpec(kind="torus")))
        cells["pi0(G)"] = Cell(row["pi0_order"], target.pi0_G.order)
        out[name] = cells
    return out


def _finite(report):
    c = report.cardinality
    return c.value if c.kind == "finite" else str(c)


def _domain_walls():
    space = SpaceSpec(manifold="euclidean", dim=2,
                      defect=Defect(kind="arrangement", hyperplanes=2, k=[[0], [0], [0]]))
    return _finite(classify(SystemSpec(space, SymmetrySpec(kind="lattice",
                                                           lattice="parallelogram"))))


def _sphere(points):
    return _finite(classify(SystemSpec(make_space("sphere", 2, points),
                                       SymmetrySpec(kind="binary", group="tetrahedral"))))


def _texture(lattice):
    return _finite(textures(SystemSpec(make_space("euclidean", 2),
                                       SymmetrySpec(kind="lattice", lattice=lattice)),
                            compactify=True))


COMPOSITE = OrderedDict([
    ("domain walls, parallelogram, 2 lines", _domain_walls),
    ("sphere, tetrahedral, 0 points", lambda: _sphere(0)),
    ("sphere, tetrahedral, 1 point", lambda: _sphere(1)),
    ("sphere, tetrahedral, 2 points", lambda: _sphere(2)),
    ("sphere, tetrahedral, 3 points", lambda: _sphere(3)),
    ("textures, compactified plane, parallelogram", lambda: _texture("parallelogram")),
    ("textures, compactified plane, square", lambda: _texture("square")),
])


def check_composite(rows):
    out = OrderedDict()
    for name, expected in rows.items():
        fn = COMPOSITE.get(name)
        computed = _safe(fn) if fn is not None else "error: unknown check"
        out[name] = Cell(expected, computed)
    return out


def check_oracle(cfg, window=None):
    window = window or cfg["window"]
    lo, hi = cfg["n3"]
    tasks = [(name, n3) for name in LATTICES for n3 in range(lo, hi + 1)]
    out = OrderedDict((name, OrderedDict()) for name in LATTICES)
    for name, n3 in tqdm(tasks, desc="oracle", file=sys.stderr, disable=None):
        pg = PointGroup2D.named(name)
        verdict = "AGREE" if oracle_agrees(pg, n3, window) else "DIFFER"
        out[name][u"n₃={0}".format(n3)] = Cell("AGREE", verdict)
    return out


# --------------------------------------------
# driver

# fixture key, cell prefix, check
SECTIONS = [("table1", "Table 1", check_table1),
            ("table2", "Table 2", check_table2),
            ("table3", "Table 3", check_table3),
            ("composite", "Composite", check_composite)]


@attr.s(frozen=True)
class SelftestResult(object):
    cells = attr.ib()

    @property
    def failed(self):
        return [k for k, c in self.cells.items() if not c.passed]

    @property
    def passed(self):
        return not self.failed

    def to_frame(self):
        return pd.DataFrame([{"cell": k, "expected": str(c.expected),
                              "computed": str(c.computed),
                              "status": "PASS" if c.passed else "FAIL"}
                             for k, c in self.cells.items()],
                            columns=["cell", "expected", "computed", "status"])

    def to_dict(self):
        return {"passed": self.passed,
                "failed": self.failed,
                "cells": [{"cell": k, "expected": c.expected, "computed": c.computed,
                           "passed": c.passed} for k, c in self.cells.items()]}

    def to_text(self):
        lines = [self.to_frame().to_string(index=False), ""]
        lines.append("{0} cells, {1} failed".format(len(self.cells), len(self.failed)))
        lines.extend("FAILED: " + k for k in self.failed)
        return "\n".join(lines)


def run_selftest(fixtures=None, window=None):
    """Run every fixture table and the oracle sweep

    Args:
      fixtures: path to a fixture yaml (default: the shipped tables)
      window: oracle window overriding the fixture value
    """
    path = fixtures or DEFAULT_FIXTURES
    try:
        tables = read_yaml(path) or {}
    except (IOError, OSError, yaml.YAMLError) as e:
        raise SpecParseError("Unable to read fixtures {0}: {1}".format(path, e), field="fixtures")
    if not isinstance(tables, dict):
        raise SpecParseError("Fixtures {0} must be a mapping of tables".format(path),
                             field="fixtures")
    results = OrderedDict()
    try:
        for key, section, check in SECTIONS:
            if tables.get(key):
                results[section] = check(tables[key])
        if tables.get("oracle"):
            results["Oracle"] = check_oracle(tables["oracle"], window)
    except (KeyError, TypeError, AttributeError) as e:
        raise SpecParseError("Malformed fixtures {0}: {1!r}".format(path, e), field="fixtures")
    cells = flatten(results, separator=SEPARATOR)
    result = SelftestResult(cells=cells)
    logger.info("selftest: {0} cells, {1} failed".format(len(cells), len(result.failed)))
    return result
