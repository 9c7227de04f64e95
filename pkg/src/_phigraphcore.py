# Copyright (c) 2024 The phigraph developers

"""This is a module containing the core components of phigraph: seed sets and
the graphs they generate under iteration of Euler's phi.

For a seed set `A` of naturals, the closure `A_phi` holds every iterate
``phi^k(a)`` with ``a`` in `A` and ``k >= 0``; the graph `G_phi(A)` joins each
vertex ``v != 1`` to ``phi(v)``.  Since phi(v) < v for v > 1, following the
edges from any vertex always ends at one, and the graph is a tree rooted at
one.

The central class is `PhiGraph`; the functions of this module (`build`,
`closure`, `depth`, `leaves`, `minimal_seed`, `export`, ...) are thin and
operate on its instances.

    >>> g = build({3, 7, 11, 20})
    >>> sorted(g.vertices)
    [1, 2, 3, 4, 6, 7, 8, 10, 11, 20]
    >>> depth(g, 20)
    4
"""

import json
import logging

import networkx as nx
import pydot

from .errors import DomainError, DegenerateGraphError, InfeasibleParametersError
from .errors import UnknownVertexError, check_natural
from .lib.primes import next_prime
from .lib.trees import UnlabeledTree
from .totient import totient


logger = logging.getLogger(__name__)


# =============================================================================
class SeedSet(frozenset):
    """A nonempty set of naturals ``1 <= a < 2**64``.

    Any iterable of integers is accepted; duplicates collapse.  Invalid
    elements raise `DomainError` (non-integers) or `RangeError`.
    """

    def __new__(cls, elements=()):
        if isinstance(elements, int):
            elements = (elements,)
        elements = [check_natural(a, name='seed element') for a in elements]
        if not elements:
            raise DomainError("a seed set must be nonempty")
        return super().__new__(cls, elements)

    @classmethod
    def parse(cls, text):
        """Read a comma-separated list of decimal naturals, e.g. ``3,7,11``."""
        words = [w for w in text.replace(' ', ',').split(',') if w]
        if not all(w.isdecimal() for w in words):
            raise DomainError(f"malformed seed list {text!r}")
        return cls(int(w) for w in words)

    def __repr__(self):
        return f"SeedSet({sorted(self)})"


def as_seed(seed):
    return seed if isinstance(seed, SeedSet) else SeedSet(seed)


# =============================================================================
class PhiGraph:
    """The graph G_phi(A) of a seed set.

    Parameters
    ----------
    seed : SeedSet or iterable of int
        The seed set `A`; converted to `SeedSet` if needed.

    Attributes
    ----------
    vertices : frozenset
        The closure `A_phi`; always contains one.

    parent : dict
        Maps every vertex ``v != 1`` to phi(v).  The pair (1, phi(1)) is not
        an edge.

    Instances are immutable after construction.
    """

    def __init__(self, seed):
        self.seed = as_seed(seed)
        self.vertices = frozenset(closure(self.seed))
        self.parent = {v: totient(v) for v in sorted(self.vertices) if v != 1}
        self._children = {v: [] for v in self.vertices}
        for child, parent in self.parent.items():
            self._children[parent].append(child)
        self._graph = None

    def __repr__(self):
        return f"PhiGraph(seed={sorted(self.seed)}, order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, PhiGraph):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __contains__(self, v):
        return v in self.vertices

    @property
    def order(self):
        """Number of vertices."""
        return len(self.vertices)

    @property
    def edge_count(self):
        return len(self.parent)

    @property
    def edges(self):
        """The `(child, parent)` pairs, ascending by child."""
        return tuple(self.parent.items())

    def children(self, v):
        """The phi-preimages of `v` inside the graph, ascending."""
        return tuple(sorted(self._children[self._check_vertex(v)]))

    def degree(self, v):
        v = self._check_vertex(v)
        return len(self._children[v]) + (v != 1)

    def to_networkx(self):
        """Return the graph as an undirected `networkx.Graph`; the result is
        cached and must not be modified.
        """
        if self._graph is None:
            graph = nx.Graph()
            graph.add_nodes_from(sorted(self.vertices))
            graph.add_edges_from(self.edges)
            self._graph = graph
        return self._graph

    def to_tree(self):
        """Forget the labels: the i-th smallest label becomes vertex id i."""
        labels = sorted(self.vertices)
        index = {v: i for i, v in enumerate(labels)}
        return UnlabeledTree(
                len(labels), [(index[c], index[p]) for c, p in self.edges]
                )

    def _check_vertex(self, v):
        if v not in self.vertices:
            raise UnknownVertexError(f"{v} is not a vertex of {self!r}")
        return v


# =============================================================================
def closure(seed):
    """Return `A_phi`: the seed together with all iterates of phi on it."""
    out = set()
    for a in as_seed(seed):
        while a not in out:
            out.add(a)
            if a == 1:
                break
            a = totient(a)
    return out


def build(seed):
    """Return the `PhiGraph` generated by `seed`."""
    return PhiGraph(seed)


def is_tree(graph):
    """Check connectivity and acyclicity of the built graph."""
    return nx.is_tree(graph.to_networkx())


def distance(graph, u, v):
    """Number of edges on the tree path between the vertices `u` and `v`."""
    graph._check_vertex(u)
    graph._check_vertex(v)
    return nx.shortest_path_length(graph.to_networkx(), u, v)


def depth(graph, v):
    """Distance from `v` to one; equals the iteration length R(v)."""
    return distance(graph, v, 1)


def leaves(graph):
    """The vertices of degree one; undefined on the single-vertex graph."""
    if graph.order < 2:
        raise DegenerateGraphError("the single-vertex graph has no leaves")
    return frozenset(v for v in graph.vertices if graph.degree(v) == 1)


def minimal_seed(graph):
    """The vertices without a phi-preimage in the graph.

    This is the unique smallest seed that builds `graph`; the single-vertex
    graph gives ``{1}``.
    """
    if graph.order == 1:
        return SeedSet({1})
    return SeedSet(graph.vertices - set(graph.parent.values()))


def isomorphic(first, second):
    """True iff the two trees (or graphs) have the same unlabeled shape."""
    return _as_tree(first).is_isomorphic(_as_tree(second))


def _as_tree(obj):
    return obj.to_tree() if isinstance(obj, PhiGraph) else obj


# =============================================================================
def seed_with_order(n):
    """Return ``{1, 2, 4, ..., 2**(n-1)}``: `n` seeds building a path of
    order `n`.
    """
    n = check_natural(n, high=65)
    return SeedSet(2**k for k in range(n))


def seed_with_edge_count(m):
    """Return ``{2**m}``, a single seed whose graph has `m` edges."""
    m = check_natural(m, name='m', low=0, high=64)
    return SeedSet({2**m})


def construct_seed_with_leaves(n, t, start=3):
    """Return a seed set `B` with ``|B| = n`` whose graph has `t` leaves.

    The smallest odd primes come first, so ``(5, 3)`` gives
    ``{1, 2, 3, 4, 5}``; the often quoted ``{1, 2, 4, 7, 11}`` is the answer
    for ``start=7``.

    For ``t >= 3`` the leaves are ``t - 1`` consecutive odd primes, starting
    at the smallest prime ``>= start``, together with the vertex one; odd
    primes are never values of phi above two, so they stay leaves.  The rest
    of `B` is padded with one and with the smallest inner vertices of the
    primes' chains, which leaves the graph unchanged.  If the chains are too
    short to pad `B` to `n` elements, the primes are taken larger and larger
    (starting from 2**k for growing k) until the padding fits.

    For ``t = 2`` the seed is the chain ``{1, 2, ..., 2**(n-1)}`` (``{2}``
    when ``n = 1``), whose graph is a path.

    Every result is built and checked before it is returned.

    Parameters
    ----------
    n : int
        Size of the seed set, at least one.

    t : int
        Number of leaves; ``2 <= t <= n + 1``.

    start : int, optional
        The smallest prime to consider (default 3).

    Raises
    ------
    InfeasibleParametersError
        If `t` is out of range or no seed fits in 64 bits.
    """
    n = check_natural(n)
    t = check_natural(t, name='t')
    start = check_natural(start, name='start')
    if t > n + 1:
        raise InfeasibleParametersError(f"{n} seeds give at most {n + 1} leaves")
    if t == 1:
        raise InfeasibleParametersError("a graph with edges has >= 2 leaves")

    if t == 2:
        if n > 64:
            raise InfeasibleParametersError(f"a path of order {n} needs labels >= 2**64")
        return _validated({2} if n == 1 else seed_with_order(n), n, t)

    for floor in [start] + [2**k for k in range(start.bit_length(), 64)]:
        primes = _odd_primes_from(max(start, floor), t - 1)
        if primes is None:
            break
        seed = set(primes)
        if t <= n:
            seed.add(1)
        inner = sorted(closure(primes) - seed - {1})
        if len(inner) < n - len(seed):
            logger.debug("primes from %d leave %d inner vertices, %d needed",
                         primes[0], len(inner), n - len(seed))
            continue
        seed.update(inner[:n - len(seed)])
        try:
            return _validated(seed, n, t)
        except InfeasibleParametersError as err:
            logger.debug("escalating: %s", err)
    raise InfeasibleParametersError(f"no seed of size {n} with {t} leaves below 2**64")


def _odd_primes_from(low, count):
    out, p = [], max(3, low) - 1
    while len(out) < count:
        try:
            p = next_prime(p + 1)
        except ValueError:  # ran past 2**64
            return None
        out.append(p)
    return out


def _validated(seed, n, t):
    seed = as_seed(seed)
    found = len(leaves(build(seed)))
    if len(seed) != n or found != t:
        raise InfeasibleParametersError(
                f"seed {sorted(seed)} has size {len(seed)} and {found} leaves"
                )
    return seed


# =============================================================================
def export(graph, format='json'):
    """Serialize `graph` as ``json``, ``dot`` or ``graphml`` text.

    All formats list vertices ascending and edges as child-parent pairs
    ascending by child, so the output is byte-stable.
    """
    match format:
        case 'json':
            return json.dumps(
                    dict(vertices=sorted(graph.vertices),
                         edges=[list(e) for e in graph.edges],
                         seed=sorted(graph.seed))
                    )
        case 'dot':
            dot = pydot.Dot(graph_type='graph')
            for v in sorted(graph.vertices):
                dot.add_node(pydot.Node(str(v)))
            for child, parent in graph.edges:
                dot.add_edge(pydot.Edge(str(child), str(parent)))
            return dot.to_string()
        case 'graphml':
            return '\n'.join(nx.generate_graphml(graph.to_networkx()))
        case _:
            raise DomainError(f"unknown export format {format!r}")
