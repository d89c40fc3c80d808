"""JSON system specification files

Example:

    {"version": "1",
     "system": {"space": {"manifold": "sphere", "dim": 2,
                          "defect": {"kind": "points", "count": 2}},
                "symmetry": {"kind": "binary", "group": "tetrahedral"},
                "vacua_count": 1},
     "options": {"window": 5, "output": "json"}}
"""
import json
import logging
from io import open

import related

from .classifier import SymmetrySpec, SystemSpec
from .exceptions import SpecParseError
from .external.related.fields import IntMatrixField, IntMatrixListField, SelectorListField
from .external.related.mixins import RelatedConfigMixin
from .homotopy import Defect, SpaceSpec

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

SUPPORTED_MAJOR_VERSION = "1"
OUTPUT_FORMATS = ("json", "text")


@related.immutable
class DefectSection(RelatedConfigMixin):
    kind = related.StringField()
    count = related.IntegerField(required=False)
    hyperplanes = related.IntegerField(required=False)
    k = IntMatrixField(required=False)

    def to_defect(self):
        if self.kind == "points":
            if self.count is None:
                raise SpecParseError("A points defect needs 'count'", field="system.space.defect.count")
            return Defect(kind="points", count=self.count)
        if self.kind == "arrangement":
            return Defect(kind="arrangement", hyperplanes=self.hyperplanes or 0, k=self.k)
        return Defect(kind=self.kind)


@related.immutable
class SpaceSection(RelatedConfigMixin):
    manifold = related.StringField()
    dim = related.IntegerField(required=False)
    defect = related.ChildField(DefectSection, required=False)
    children = {"defect": DefectSection}

    def to_space(self):
        defect = self.defect.to_defect() if self.defect is not None else Defect()
        return SpaceSpec(manifold=self.manifold, dim=self.dim, defect=defect)


@related.immutable
class SymmetrySection(RelatedConfigMixin):
    kind = related.StringField()
    lattice = related.StringField(required=False)
    matrix = IntMatrixField(required=False)
    has_reflection = related.BooleanField(required=False)
    group = related.StringField(required=False)
    n = related.IntegerField(required=False)
    p_gv = SelectorListField(required=False)
    aut_lattice = IntMatrixListField(required=False)
    gram = IntMatrixField(required=False)
    torus_dim = related.IntegerField(required=False)

    def to_symmetry(self):
        return SymmetrySpec(kind=self.kind, lattice=self.lattice, matrix=self.matrix,
                            has_reflection=self.has_reflection, group=self.group, n=self.n,
                            p_gv=self.p_gv, aut_lattice=self.aut_lattice, gram=self.gram,
                            torus_dim=self.torus_dim)


@related.immutable
class SystemSection(RelatedConfigMixin):
    space = related.ChildField(SpaceSection)
    symmetry = related.ChildField(SymmetrySection)
    vacua_count = related.IntegerField(default=1, required=False)
    children = {"space": SpaceSection, "symmetry": SymmetrySection}

    def to_system(self):
        return SystemSpec(space=self.space.to_space(),
                          symmetry=self.symmetry.to_symmetry(),
                          vacua_count=self.vacua_count)


@related.immutable
class OptionsSection(RelatedConfigMixin):
    window = related.IntegerField(default=5, required=False)
    output = related.StringField(default="json", required=False)


@related.immutable
class SpecFile(RelatedConfigMixin):
    version = related.StringField()
    system = related.ChildField(SystemSection)
    options = related.ChildField(OptionsSection, required=False)
    children = {"system": SystemSection, "options": OptionsSection}

    @classmethod
    def from_config(cls, cfg, path=""):
        obj = super(SpecFile, cls).from_config(cfg, path)
        major = str(obj.version).split(".")[0]
        if major != SUPPORTED_MAJOR_VERSION:
            raise SpecParseError("Unsupported spec version '{0}'; supported major version: {1}".
                                 format(obj.version, SUPPORTED_MAJOR_VERSION), field="version")
        opts = obj.get_options()
        if opts.output not in OUTPUT_FORMATS:
            raise SpecParseError("options.output must be one of {0}, got '{1}'".
                                 format(list(OUTPUT_FORMATS), opts.output), field="options.output")
        if opts.window < 1:
            raise SpecParseError("options.window must be >= 1, got {0}".format(opts.window),
                                 field="options.window")
        return obj

    def get_options(self):
        return self.options if self.options is not None else OptionsSection()

    def to_system(self):
        return self.system.to_system()

    @classmethod
    def from_string(cls, string):
        try:
            parsed = json.loads(string)
        except json.JSONDecodeError as e:
            raise SpecParseError(e.msg, line=e.lineno, column=e.colno)
        return cls.from_config(parsed)

    @classmethod
    def load(cls, path):
        """Loads a spec from a JSON file
        """
        try:
            with open(path, "r", encoding="utf-8") as f:
                content = f.read()
        except (IOError, OSError, UnicodeDecodeError) as e:
            raise SpecParseError("Unable to read {0}: {1}".format(path, e))
        logger.info("Loading spec file {0}".format(path))
        return cls.from_string(content)
