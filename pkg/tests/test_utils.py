"""Test defect_topology.utils
"""
from collections import OrderedDict
from fractions import Fraction

import numpy as np
from pytest import fixture

from defect_topology.external.flatten_json import flatten
from defect_topology.utils import (UnionFind, find_orbits, map_nested, read_yaml, to_jsonable,
                                   unique_list)


@fixture
def nested_dict():
    return OrderedDict([("a", 1),
                        ("b", {
                            "c": 3,
                            "d": [1, 2, 3],
                            "e": [
                                {"f": 1},
                                {"g": 4}]
                        })])


def test_flatten_dict(nested_dict):
    fd = flatten(nested_dict)
    assert dict(fd) == {'a': 1,
                        'b / c': 3,
                        'b / d / 0': 1,
                        'b / d / 1': 2,
                        'b / d / 2': 3,
                        'b / e / 0 / f': 1,
                        'b / e / 1 / g': 4}
    assert list(fd)[:2] == ['a', 'b / c']


def test_flatten_keeps_lists(nested_dict):
    fd = flatten(nested_dict, separator="_", is_list_fn=lambda x: False)
    assert fd == {'a': 1, 'b_c': 3,
                  'b_d': [1, 2, 3],
                  'b_e': [{'f': 1},
                          {'g': 4}]}


def test_flatten_non_string_keys():
    fd = flatten({"Table 1": {"hexagonal": {u"n₃≡2": "x"}}, "Oracle": {1: "y"}})
    assert dict(fd) == {u"Table 1 / hexagonal / n₃≡2": "x", "Oracle / 1": "y"}


def test_flatten_skips_empty_sections():
    fd = flatten({"Table 1": {"hexagonal": {u"n₃≡2": "x"}, "square": {}}, "Table 3": {}})
    assert dict(fd) == {u"Table 1 / hexagonal / n₃≡2": "x"}
    assert flatten({}) == {}


def test_map_nested(nested_dict):
    assert map_nested(nested_dict, str)['b']['c'] == "3"
    assert map_nested((1, [2]), lambda x: x + 1) == [2, [3]]


def test_to_jsonable():
    assert to_jsonable({"a": [Fraction(1, 2), 3]}) == {"a": ["1/2", 3]}


def test_unique_list():
    assert unique_list([3, 1, 3, 2, 1]) == [3, 1, 2]
    assert unique_list(x for x in "abca") == ["a", "b", "c"]


def test_read_yaml(tmp_path):
    path = tmp_path / "x.yaml"
    path.write_text(u"a: {b: [1, 2]}\nc: ℤ²\n", encoding="utf-8")
    assert read_yaml(str(path)) == {"a": {"b": [1, 2]}, "c": u"ℤ²"}


def test_union_find():
    uf = UnionFind(range(6))
    assert len(uf) == 6
    uf.union(0, 3)
    uf.union(4, 3)
    uf.union(1, 5)
    assert uf.find(0) == uf.find(4)
    assert uf.find(2) != uf.find(0)
    assert len(uf) == 3
    assert uf.classes() == [[0, 3, 4], [1, 5], [2]]
    assert 5 in uf and 6 not in uf


def test_find_orbits():
    # rotation by 90 degrees acting on a 3x3 grid
    rot = np.array([[0, -1], [1, 0]])
    grid = [(a, b) for a in range(-1, 2) for b in range(-1, 2)]
    orbits = find_orbits([rot], grid, lambda g, x: tuple(int(v) for v in g.dot(x)))
    assert orbits == [[(-1, -1), (-1, 1), (1, -1), (1, 1)],
                      [(-1, 0), (0, -1), (0, 1), (1, 0)],
                      [(0, 0)]]


def test_find_orbits_ignores_escaping_points():
    orbits = find_orbits([1], range(4), lambda g, x: x + g)
    assert orbits == [[0, 1, 2, 3]]
    orbits = find_orbits([2], range(4), lambda g, x: x + g)
    assert orbits == [[0, 2], [1, 3]]
