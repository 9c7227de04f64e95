# Copyright (c) 2024 The phigraph developers

"""Unlabeled trees and their AHU canonical codes.

A rooted tree is encoded by the AHU scheme: a leaf is ``()`` and an inner
vertex is ``(`` followed by the sorted codes of its children and ``)``.
Two rooted trees are isomorphic iff their codes are equal.  A free tree is
encoded by rooting it at its center (or at the smaller code of its two
centers), which makes isomorphism a string comparison.
"""

import networkx as nx
import pydot


# =============================================================================
class UnlabeledTree:
    """A tree on the vertex ids ``0, 1, ..., order - 1``.

    Parameters
    ----------
    order : int
        Number of vertices, at least one.

    edges : iterable of pairs
        The ``order - 1`` edges; each pair is stored with the smaller id
        first and the edge list is kept sorted.
    """

    def __init__(self, order, edges=()):
        if order < 1:
            raise ValueError(f"a tree needs at least one vertex, got {order}")
        edges = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))
        if len(edges) != order - 1:
            raise ValueError(
                f"{len(edges)} edges on {order} vertices do not form a tree"
                )
        for u, v in edges:
            if not (0 <= u and v < order):
                raise ValueError(f"edge {u}-{v} refers to a vertex outside 0..{order - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
        # ids are checked before the graph is allocated
        graph = nx.Graph()
        graph.add_nodes_from(range(order))
        graph.add_edges_from(edges)
        if not nx.is_tree(graph):
            raise ValueError(
                f"{len(edges)} edges on {order} vertices do not form a tree"
                )
        self.order = order
        self.edges = edges
        self._adj = tuple(tuple(sorted(graph[v])) for v in range(order))

    @classmethod
    def from_networkx(cls, graph, root=None):
        """Return the shape of the networkx tree `graph`, numbering its
        vertices breadth-first from `root` (default: the smallest node);
        neighbors are visited in ascending node order.
        """
        if root is None:
            root = min(graph.nodes)
        index = {root: 0}
        queue = [root]
        for u in queue:
            for v in sorted(graph[u]):
                if v not in index:
                    index[v] = len(index)
                    queue.append(v)
        if len(index) != graph.number_of_nodes():
            raise ValueError("the graph is not connected")
        edges = [(index[u], index[v]) for u, v in graph.edges]
        return cls(len(index), edges)

    @classmethod
    def parse(cls, text):
        """Read a tree from an edge list or from DOT text.

        Edge lists hold one ``u v`` pair per line with 0-based ids; blank
        lines and ``#`` comments are ignored and the line ``order N``
        declares the number of vertices (needed for the one-vertex tree).
        DOT input is recognised by its ``graph`` header.
        """
        if '{' in text and 'graph' in text.split('{', 1)[0]:
            return cls._parse_dot(text)
        order, edges = None, []
        for lineno, line in enumerate(text.splitlines(), start=1):
            words = line.split('#', 1)[0].split()
            if not words:
                continue
            try:
                if words[0] == 'order' and len(words) == 2:
                    order = int(words[1])
                elif len(words) == 2:
                    edges.append((int(words[0]), int(words[1])))
                else:
                    raise ValueError
            except ValueError:
                raise ValueError(
                    f"line {lineno}: expected 'u v' or 'order N', got {line!r}"
                    ) from None
        if order is None:
            if not edges:
                raise ValueError("no edges and no 'order' line")
            order = 1 + max(max(e) for e in edges)
        return cls(order, edges)

    @classmethod
    def _parse_dot(cls, text):
        graphs = pydot.graph_from_dot_data(text)
        if not graphs:
            raise ValueError("unparsable DOT text")
        dot = graphs[0]
        name = lambda x: int(str(x).strip('"'))
        try:
            nodes = {name(n.get_name()) for n in dot.get_nodes()
                     if n.get_name().strip('"') not in ('node', 'edge', 'graph')}
            edges = [(name(e.get_source()), name(e.get_destination()))
                     for e in dot.get_edges()]
        except ValueError:
            raise ValueError("DOT vertex names must be integers") from None
        graph = nx.Graph()
        graph.add_nodes_from(nodes)
        graph.add_edges_from(edges)
        if set(graph.nodes) == set(range(graph.number_of_nodes())):
            return cls(graph.number_of_nodes(), graph.edges)
        return cls.from_networkx(graph)

    # -------------------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, UnlabeledTree):
            return NotImplemented
        return self.order == other.order and self.edges == other.edges

    def __hash__(self):
        return hash((self.order, self.edges))

    def __repr__(self):
        return f"UnlabeledTree(order={self.order}, edges={list(self.edges)})"

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def degree_sequence(self):
        return sorted((len(a) for a in self._adj), reverse=True)

    def leaves(self):
        """Vertices of degree one, ascending."""
        return [v for v in range(self.order) if len(self._adj[v]) == 1]

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        graph.add_edges_from(self.edges)
        return graph

    def to_text(self):
        """Edge-list text readable by `parse`."""
        if self.order == 1:
            return "order 1\n"
        return ''.join(f"{u} {v}\n" for u, v in self.edges)

    def to_dot(self):
        dot = pydot.Dot(graph_type='graph')
        for v in range(self.order):
            dot.add_node(pydot.Node(str(v)))
        for u, v in self.edges:
            dot.add_edge(pydot.Edge(str(u), str(v)))
        return dot.to_string()

    # -------------------------------------------------------------------------
    def rooted_codes(self, root):
        """Return `(codes, parent)` for the tree rooted at `root`, where
        `codes[v]` is the AHU code of the subtree hanging from `v`.
        """
        parent = {root: None}
        queue = [root]
        for u in queue:
            for v in self._adj[u]:
                if v != parent[u]:
                    parent[v] = u
                    queue.append(v)
        codes = {}
        for u in reversed(queue):
            sub = sorted(codes[v] for v in self._adj[u] if v != parent[u])
            codes[u] = '(' + ''.join(sub) + ')'
        return codes, parent

    def rooted_code(self, root):
        return self.rooted_codes(root)[0][root]

    def centers(self):
        if self.order <= 2:
            return list(range(self.order))
        return sorted(nx.center(self.to_networkx()))

    def canonical_form(self):
        """AHU code of the tree rooted at its center; equal for two trees iff
        they are isomorphic.
        """
        return min(self.rooted_code(c) for c in self.centers())

    def is_isomorphic(self, other):
        if self.order != other.order:
            return False
        if self.degree_sequence() != other.degree_sequence():
            return False
        return self.canonical_form() == other.canonical_form()


# =============================================================================
def code_size(code):
    """Number of vertices of the rooted tree encoded by `code`."""
    return len(code) // 2


def code_height(code):
    """Number of edges on the longest path from the root down to a leaf."""
    height = depth = 0
    for ch in code:
        depth += 1 if ch == '(' else -1
        height = max(height, depth)
    return height - 1


def split_code(code):
    """Return the child codes of a rooted AHU code, in stored order."""
    children, depth, start = [], 0, 1
    for i, ch in enumerate(code[1:-1], start=1):
        depth += 1 if ch == '(' else -1
        if depth == 0:
            children.append(code[start:i+1])
            start = i + 1
    return children
