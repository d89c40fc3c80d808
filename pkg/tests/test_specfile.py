"""Test defect_topology.specfile
"""
import json

import pytest

from defect_topology.exceptions import SpecParseError
from defect_topology.homotopy import Defect
from defect_topology.specfile import SpecFile


def make_cfg(**overrides):
    cfg = {"version": "1",
           "system": {"space": {"manifold": "sphere", "dim": 2,
                                "defect": {"kind": "points", "count": 2}},
                      "symmetry": {"kind": "binary", "group": "tetrahedral"},
                      "vacua_count": 1},
           "options": {"window": 3, "output": "text"}}
    cfg.update(overrides)
    return cfg


def test_parse():
    spec = SpecFile.from_config(make_cfg())
    system = spec.to_system()
    assert system.space.manifold == "sphere"
    assert system.space.defect == Defect(kind="points", count=2)
    assert system.symmetry.group == "tetrahedral"
    assert spec.get_options().window == 3
    assert spec.get_options().output == "text"


def test_defaults():
    cfg = make_cfg()
    del cfg["options"]
    del cfg["system"]["vacua_count"]
    del cfg["system"]["space"]["defect"]
    spec = SpecFile.from_config(cfg)
    assert spec.get_options().window == 5
    assert spec.get_options().output == "json"
    system = spec.to_system()
    assert system.vacua_count == 1
    assert system.space.defect == Defect()


def test_arrangement_and_matrices():
    cfg = make_cfg(system={
        "space": {"manifold": "euclidean", "dim": 2,
                  "defect": {"kind": "arrangement", "hyperplanes": 1, "k": [[1], [0]]}},
        "symmetry": {"kind": "lattice", "matrix": [[0, 1], [-1, 0]], "has_reflection": True}})
    system = SpecFile.from_config(cfg).to_system()
    assert system.space.defect.k == ((1,), (0,))
    assert system.symmetry.matrix == [[0, 1], [-1, 0]]
    assert system.symmetry.has_reflection


def test_torus_selectors():
    cfg = make_cfg(system={"space": {"manifold": "cylinder"},
                           "symmetry": {"kind": "torus", "p_gv": ["a"], "torus_dim": 1}})
    sym = SpecFile.from_config(cfg).to_system().symmetry
    assert sym.p_gv == ["a"]
    assert sym.torus_dim == 1


@pytest.mark.parametrize("path,key", [
    ([], "colour"),
    (["system"], "temperature"),
    (["system", "space"], "genus"),
    (["system", "space", "defect"], "radius"),
    (["system", "symmetry"], "wallpaper"),
    (["options"], "seed"),
])
def test_unknown_keys(path, key):
    cfg = make_cfg()
    node = cfg
    for p in path:
        node = node[p]
    node[key] = 1
    with pytest.raises(SpecParseError) as e:
        SpecFile.from_config(cfg)
    assert e.value.field == ".".join(path + [key])


@pytest.mark.parametrize("version", ["2", "0.9", "2.1"])
def test_unsupported_version(version):
    with pytest.raises(SpecParseError) as e:
        SpecFile.from_config(make_cfg(version=version))
    assert e.value.field == "version"


def test_minor_version_accepted():
    assert SpecFile.from_config(make_cfg(version="1.3")).version == "1.3"


@pytest.mark.parametrize("options,field", [
    ({"output": "yaml"}, "options.output"),
    ({"window": 0}, "options.window"),
])
def test_bad_options(options, field):
    with pytest.raises(SpecParseError) as e:
        SpecFile.from_config(make_cfg(options=options))
    assert e.value.field == field


def test_missing_required():
    cfg = make_cfg()
    del cfg["system"]["symmetry"]
    with pytest.raises(SpecParseError):
        SpecFile.from_config(cfg)
    with pytest.raises(SpecParseError):
        SpecFile.from_config({"system": make_cfg()["system"]})


def test_points_need_count():
    cfg = make_cfg()
    del cfg["system"]["space"]["defect"]["count"]
    with pytest.raises(SpecParseError) as e:
        SpecFile.from_config(cfg).to_system()
    assert e.value.field == "system.space.defect.count"


@pytest.mark.parametrize("matrix", [[[0, 1], [-1]], [[0.5, 1], [0, 1]], [[True, 0], [0, 1]], 3])
def test_bad_matrix(matrix):
    cfg = make_cfg(system={"space": {"manifold": "euclidean", "dim": 2},
                           "symmetry": {"kind": "lattice", "matrix": matrix}})
    with pytest.raises(SpecParseError):
        SpecFile.from_config(cfg)


def test_section_must_be_object():
    with pytest.raises(SpecParseError) as e:
        SpecFile.from_config(make_cfg(system=[1, 2]))
    assert e.value.field == "system"


def test_json_syntax_error_position():
    text = '{\n  "version": "1",\n  "system": {,}\n}'
    with pytest.raises(SpecParseError) as e:
        SpecFile.from_string(text)
    assert e.value.line == 3
    assert e.value.column == 14
    assert str(e.value).startswith("line 3, column 14")


def test_load(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(make_cfg()), encoding="utf-8")
    spec = SpecFile.load(str(path))
    assert spec.get_config()["system"]["symmetry"]["group"] == "tetrahedral"
    with pytest.raises(SpecParseError):
        SpecFile.load(str(tmp_path / "missing.json"))


def test_flat_torus_selectors():
    cfg = make_cfg(system={"space": {"manifold": "flat_torus", "dim": 2},
                           "symmetry": {"kind": "torus",
                                        "aut_lattice": [[[1, 0], [0, 1]], [[-1, 0], [0, -1]]],
                                        "p_gv": [[[-1, 0], [0, -1]]]}})
    sym = SpecFile.from_config(cfg).to_system().symmetry
    assert sym.aut_lattice == [[[1, 0], [0, 1]], [[-1, 0], [0, -1]]]
    assert sym.p_gv == [[[-1, 0], [0, -1]]]


@pytest.mark.parametrize("symmetry", [
    {"p_gv": 5},
    {"p_gv": "a"},
    {"p_gv": [1, 2]},
    {"p_gv": [[[0.5, 0], [0, 1]]]},
    {"aut_lattice": 5},
    {"aut_lattice": [[1, 0], [0, 1]]},
    {"aut_lattice": [[[1, 0], [0, "x"]]]},
])
def test_bad_torus_selectors(symmetry):
    cfg = make_cfg(system={"space": {"manifold": "flat_torus", "dim": 2},
                           "symmetry": dict({"kind": "torus"}, **symmetry)})
    with pytest.raises(SpecParseError) as e:
        SpecFile.from_config(cfg)
    assert e.value.field == "system.symmetry"
