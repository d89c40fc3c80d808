"""Small shared helpers
"""
from io import open
import collections
import collections.abc
import logging
from fractions import Fraction

import yaml

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


def read_yaml(path):
    with open(path, "r", encoding="utf-8") as f:
        return yaml.load(f, Loader=yaml.FullLoader)


def unique_list(seq):
    """Make a list unique and preserve the elements order

    Modified version of Dave Kirby solution
    """
    seen = set()
    return [x for x in seq if x not in seen and not seen.add(x)]


def map_nested(dd, fn):
    """Map a function to a nested data structure (containing lists, tuples
    or dictionaries)

    Args:
      dd: nested data structure
      fn: function to apply to each leaf
    """
    if isinstance(dd, collections.abc.Mapping):
        return {key: map_nested(dd[key], fn) for key in dd}
    elif isinstance(dd, (list, tuple)):
        return [map_nested(x, fn) for x in dd]
    else:
        return fn(dd)


def jsonable_leaf(x):
    """Leaf converter used before json serialisation of reports
    """
    if isinstance(x, Fraction):
        return str(x)
    return x


def to_jsonable(dd):
    return map_nested(dd, jsonable_leaf)


class UnionFind(object):
    """Disjoint-set forest over a fixed set of hashable items

    Union by rank with path compression. `classes()` returns the partition
    with deterministic ordering (each class sorted, classes sorted by their
    smallest member) as long as the items are mutually comparable.
    """

    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def __contains__(self, x):
        return x in self.parent

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def classes(self):
        groups = collections.defaultdict(list)
        for x in self.parent:
            groups[self.find(x)].append(x)
        return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])

    def __len__(self):
        return len({self.find(x) for x in self.parent})


def find_orbits(gens, space, action):
    """Orbits of a group action restricted to `space`

    Args:
      gens: group generators
      space: iterable of points; images leaving the space are ignored
      action: action(g, x) -> point

    Returns:
      list of orbits, each a sorted list
    """
    uf = UnionFind(space)
    for g in gens:
        for x in list(uf.parent):
            y = action(g, x)
            if y in uf:
                uf.union(x, y)
    return uf.classes()
