# Copyright (c) 2024 The phigraph developers

"""Named tree families as `UnlabeledTree` shapes.

A family is described by a `FamilySpec`, which also reads and writes the
short strings used on the command line:

    >>> str(FamilySpec.parse('corona:path:3,m=4'))
    'corona:path:3,m=4'
    >>> generate(FamilySpec.parse('alkane:2')).order
    8

Every shape is first assembled as a `networkx.Graph` and then renumbered
breadth-first from node zero, so vertex ids are reproducible.
"""

import networkx as nx

from ..errors import FamilySpecError
from ..lib.trees import UnlabeledTree


KINDS = (
    'path', 'star', 'centipede', 'corona', 'banana', 'alkane', 'isomer',
    'nanostar_d2'
    )

# carbon skeletons as edge lists over carbons 0..k-1
SKELETONS = {
    'methane': (1, []),
    'ethane': (2, [(0, 1)]),
    'propane': (3, [(0, 1), (1, 2)]),
    'butane': (4, [(0, 1), (1, 2), (2, 3)]),
    'isobutane': (4, [(0, 1), (0, 2), (0, 3)]),
    'pentane': (5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
    'isopentane': (5, [(0, 1), (1, 2), (2, 3), (1, 4)]),
    'neopentane': (5, [(0, 1), (0, 2), (0, 3), (0, 4)]),
    }

ISOMERS = tuple(SKELETONS)

# smallest admissible value of each integer parameter
_LOW = dict(path=1, star=1, centipede=2, alkane=1)


# =============================================================================
class FamilySpec:
    """A tree family together with its parameters.

    Parameters
    ----------
    kind : str
        One of `KINDS`.

    n : int, optional
        Size parameter of ``path``, ``star``, ``centipede``, ``alkane`` and
        ``banana`` (number of stars).

    m : int, optional
        Pendants per vertex for ``corona`` (>= 1); leaves per star for
        ``banana`` (>= 2).

    base : FamilySpec, optional
        The tree a ``corona`` is grown on.

    name : str, optional
        The molecule of an ``isomer``, one of `ISOMERS`.
    """

    def __init__(self, kind, n=None, m=None, base=None, name=None):
        self.kind = kind
        self.n = n
        self.m = m
        self.base = base
        self.name = name
        self._validate()

    def _validate(self):
        kind = self.kind
        if kind not in KINDS:
            raise FamilySpecError(f"unknown family {kind!r}")
        if kind in _LOW:
            self._check_int('n', _LOW[kind])
        elif kind == 'banana':
            self._check_int('n', 1)
            self._check_int('m', 2)
        elif kind == 'corona':
            if not isinstance(self.base, FamilySpec):
                raise FamilySpecError("corona needs a base family")
            self._check_int('m', 1)
        elif kind == 'isomer' and self.name not in SKELETONS:
            raise FamilySpecError(
                    f"unknown isomer {self.name!r}; expected one of {ISOMERS}"
                    )

    def _check_int(self, attr, low):
        value = getattr(self, attr)
        if isinstance(value, bool) or not isinstance(value, int) or value < low:
            raise FamilySpecError(
                    f"{self.kind}: {attr} must be an integer >= {low}, got {value!r}"
                    )

    @classmethod
    def parse(cls, text):
        """Read a family string such as ``banana:2x7`` or ``isomer:butane``."""
        text = text.strip()
        kind, sep, arg = text.partition(':')
        if kind == 'nanostar':
            if arg != 'd2':
                raise FamilySpecError(f"only the nanostar d2 is available, got {text!r}")
            return cls('nanostar_d2')
        if kind == 'nanostar_d2' and not sep:
            return cls(kind)
        if not sep or not arg:
            raise FamilySpecError(f"expected 'kind:parameters', got {text!r}")
        match kind:
            case 'corona':
                base, sep, m = arg.rpartition(',m=')
                if not sep:
                    raise FamilySpecError(f"corona needs ',m=<int>', got {text!r}")
                return cls(kind, m=_parse_int(m, text), base=cls.parse(base))
            case 'banana':
                n, sep, m = arg.partition('x')
                if not sep:
                    raise FamilySpecError(f"banana needs '<n>x<m>', got {text!r}")
                return cls(kind, n=_parse_int(n, text), m=_parse_int(m, text))
            case 'isomer':
                return cls(kind, name=arg)
            case _:
                return cls(kind, n=_parse_int(arg, text))

    def __str__(self):
        match self.kind:
            case 'corona':
                return f"corona:{self.base},m={self.m}"
            case 'banana':
                return f"banana:{self.n}x{self.m}"
            case 'isomer':
                return f"isomer:{self.name}"
            case 'nanostar_d2':
                return "nanostar:d2"
            case _:
                return f"{self.kind}:{self.n}"

    def __repr__(self):
        return f"FamilySpec.parse({str(self)!r})"

    def __eq__(self, other):
        if not isinstance(other, FamilySpec):
            return NotImplemented
        return str(self) == str(other)

    def __hash__(self):
        return hash(str(self))


def _parse_int(word, text):
    if not word.isdecimal():
        raise FamilySpecError(f"expected a decimal integer in {text!r}, got {word!r}")
    return int(word)


# =============================================================================
def generate(spec):
    """Return the tree shape described by `spec` (a `FamilySpec` or its
    string form).
    """
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    return UnlabeledTree.from_networkx(_graph(spec), root=0)


def _graph(spec):
    match spec.kind:
        case 'path':
            return nx.path_graph(spec.n)
        case 'star':
            return nx.star_graph(spec.n)
        case 'centipede':
            return corona(nx.path_graph(spec.n), 1)
        case 'corona':
            return corona(_graph(spec.base), spec.m)
        case 'banana':
            return banana(spec.n, spec.m)
        case 'alkane':
            return hydrogenate(spec.n, [(i, i + 1) for i in range(spec.n - 1)])
        case 'isomer':
            return hydrogenate(*SKELETONS[spec.name])
        case 'nanostar_d2':
            return nanostar_d2()


def corona(graph, m):
    """Attach `m` new pendant vertices to every vertex of `graph`."""
    out = nx.convert_node_labels_to_integers(graph, ordering='sorted')
    k = out.number_of_nodes()
    for v in range(k):
        for _ in range(m):
            out.add_edge(v, out.number_of_nodes())
    return out


def banana(n, m):
    """`n` copies of the star with `m` leaves, one leaf of each copy joined
    to a new root 0.
    """
    graph = nx.Graph()
    graph.add_node(0)
    for _ in range(n):
        center = graph.number_of_nodes()
        leaves = range(center + 1, center + m + 1)
        graph.add_edges_from((center, leaf) for leaf in leaves)
        graph.add_edge(0, center + 1)
    return graph


def hydrogenate(carbons, bonds):
    """Carbon skeleton `bonds` on ``0..carbons-1`` with every carbon padded
    by hydrogens up to degree four.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(carbons))
    graph.add_edges_from(bonds)
    for c in range(carbons):
        for _ in range(4 - graph.degree(c)):
            graph.add_edge(c, graph.number_of_nodes())
    return graph


def nanostar_d2():
    # core with three arms; each arm is a path of three vertices ending in
    # two pendant leaves
    graph = nx.Graph()
    graph.add_node(0)
    for _ in range(3):
        prev = 0
        for _ in range(3):
            v = graph.number_of_nodes()
            graph.add_edge(prev, v)
            prev = v
        for _ in range(2):
            graph.add_edge(prev, graph.number_of_nodes())
    return graph
