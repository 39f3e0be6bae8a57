"""
File contains:

    - :class:`Graph`
    - :class:`CompleteGraph`
    - :class:`Instance`
    - :class:`DerivedCounts`
    - :func:`derivedCounts`

Districts are dense integer ids ``0, ..., n-1``.
"""

import numpy as np
import networkx as nx

import itertools


class Graph(object):
    """
    Simple undirected neighborhood graph of districts.

    Parameters
    ----------
    vertex_count: int
        number of districts ``n``
    edges: iterable of 2-tuples of int
        unordered district pairs, no self-loops and no duplicates

    Attributes
    ----------
    vertex_count: int
        number of districts
    edges: frozenset of tuple
        every edge stored as ``(x, y)`` with ``x < y``
    """

    def __init__(self, vertex_count, edges=()):
        vertex_count = int(vertex_count)
        if vertex_count < 0:
            raise ValueError('`vertex_count` should be non-negative')
        edge_set = set()
        for edge in edges:
            edge = tuple(int(v) for v in edge)
            if len(edge) != 2:
                raise ValueError('an edge has exactly two endpoints, got ' + str(edge))
            x, y = edge
            if x == y:
                raise ValueError('self-loop at district %d' % x)
            if not (0 <= x < vertex_count and 0 <= y < vertex_count):
                raise ValueError('edge %s has an endpoint out of range' % str(edge))
            key = (min(x, y), max(x, y))
            if key in edge_set:
                raise ValueError('duplicate edge %s' % str(key))
            edge_set.add(key)
        self._vertex_count = vertex_count
        self._edges = frozenset(edge_set)
        self._adjacency = None

    def getVertexCount(self):
        return self._vertex_count

    def setVertexCount(self, illegal):
        raise AttributeError("`vertex_count` is a read-only attribute")

    vertex_count = property(getVertexCount, setVertexCount)

    def getEdges(self):
        return self._edges

    def setEdges(self, illegal):
        raise AttributeError("`edges` is a read-only attribute")

    edges = property(getEdges, setEdges)

    def getEdgeCount(self):
        return len(self._edges)

    edge_count = property(getEdgeCount)

    def __len__(self):
        return self._vertex_count

    def __iter__(self):
        return iter(range(self._vertex_count))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and \
               self.edge_count == other.edge_count and \
               all(other.hasEdge(x, y) for x, y in self.iterEdges())

    def __hash__(self):
        return hash((self.vertex_count, self.edge_count))

    def __str__(self):
        return 'Graph(n=%d, m=%d)' % (self.vertex_count, self.edge_count)

    def iterEdges(self):
        """
        Iterate over the edges in ascending order
        """
        return iter(sorted(self._edges))

    def _buildAdjacency(self):
        adjacency = [[] for _ in range(self._vertex_count)]
        for x, y in sorted(self._edges):
            adjacency[x].append(y)
            adjacency[y].append(x)
        self._adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)

    def getNeighbors(self, v):
        """
        Neighbors of a district in ascending order

        Parameters
        ----------
        v: int
            the district

        Returns
        -------
        tuple of int
        """
        if self._adjacency is None:
            self._buildAdjacency()
        return self._adjacency[v]

    def degree(self, v):
        return len(self.getNeighbors(v))

    def hasEdge(self, x, y):
        return (min(x, y), max(x, y)) in self._edges

    def isComplete(self):
        n = self._vertex_count
        return self.edge_count == n * (n - 1) // 2

    def boundaryPairs(self, dissolved):
        """
        The ordered pairs ``(x, y)`` with ``x`` in ``dissolved``, ``y`` not in
        ``dissolved`` and ``{x, y}`` an edge, in ascending order.

        Parameters
        ----------
        dissolved: iterable of int

        Returns
        -------
        list of tuple
        """
        dissolved = set(dissolved)
        return [(x, y) for x in sorted(dissolved) \
                       for y in self.getNeighbors(x) if y not in dissolved]

    def toNetworkX(self):
        """
        Returns
        -------
        `networkx.Graph`
            with nodes ``0, ..., n-1``
        """
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self._vertex_count))
        nx_graph.add_edges_from(self.iterEdges())
        return nx_graph

    @classmethod
    def fromNetworkX(cls, nx_graph):
        """
        Convert a networkx graph, nodes are relabeled to ``0, ..., n-1`` in
        sorted order.
        """
        nx_graph = nx.convert_node_labels_to_integers(nx_graph, ordering='sorted')
        return cls(nx_graph.number_of_nodes(), nx_graph.edges())

    @staticmethod
    def complete(vertex_count):
        return CompleteGraph(vertex_count)

    @staticmethod
    def cycle(vertex_count):
        return Graph(vertex_count,
                     [(ii, (ii + 1) % vertex_count) for ii in range(vertex_count)])

    @staticmethod
    def path(vertex_count):
        return Graph(vertex_count,
                     [(ii, ii + 1) for ii in range(vertex_count - 1)])


class CompleteGraph(Graph):
    """
    Complete graph on ``n`` districts with implicit edges, so that large
    cliques do not need to materialize their quadratic edge set.
    """

    def __init__(self, vertex_count):
        vertex_count = int(vertex_count)
        if vertex_count < 0:
            raise ValueError('`vertex_count` should be non-negative')
        self._vertex_count = vertex_count
        self._edges = None
        self._adjacency = None

    def getEdges(self):
        if self._edges is None:
            self._edges = frozenset(itertools.combinations(range(self._vertex_count), 2))
        return self._edges

    edges = property(getEdges, Graph.setEdges)

    def getEdgeCount(self):
        n = self._vertex_count
        return n * (n - 1) // 2

    edge_count = property(getEdgeCount)

    def iterEdges(self):
        return itertools.combinations(range(self._vertex_count), 2)

    def getNeighbors(self, v):
        return tuple(u for u in range(self._vertex_count) if u != v)

    def degree(self, v):
        return self._vertex_count - 1

    def hasEdge(self, x, y):
        return x != y and 0 <= x < self._vertex_count and 0 <= y < self._vertex_count

    def isComplete(self):
        return True

    def __str__(self):
        return 'CompleteGraph(n=%d)' % self._vertex_count


class DerivedCounts(object):
    """
    Quantities fixed by ``n``, ``s`` and ``delta_s``.

    Attributes
    ----------
    s_new: int
        new district size ``s + delta_s``
    d: int or ``None``
        number of dissolved districts, ``None`` when ``n * delta_s`` is not
        divisible by ``s_new``
    r: int or ``None``
        number of remaining districts
    feasible: bool
        ``False`` when no dissolution exists on any graph of this size
    """

    def __init__(self, s_new, d, r):
        self.s_new = s_new
        self.d = d
        self.r = r

    @property
    def feasible(self):
        return self.d is not None

    def __eq__(self, other):
        return (self.s_new, self.d, self.r) == (other.s_new, other.d, other.r)

    def __repr__(self):
        return 'DerivedCounts(s_new=%s, d=%s, r=%s)' % (self.s_new, self.d, self.r)


def derivedCounts(inst):
    """
    Derive the new district size and the number of dissolved and remaining
    districts of an instance.

    Parameters
    ----------
    inst: :class:`Instance`

    Returns
    -------
    :class:`DerivedCounts`
        ``d`` and ``r`` are ``None`` if ``n * delta_s`` is not divisible by
        ``s + delta_s``
    """
    s_new = inst.s + inst.delta_s
    n = inst.n
    if (n * inst.delta_s) % s_new != 0:
        return DerivedCounts(s_new, None, None)
    d = n * inst.delta_s // s_new
    return DerivedCounts(s_new, d, n - d)


class Instance(object):
    """
    A (biased) dissolution instance.

    Parameters
    ----------
    graph: :class:`Graph`
        the neighborhood graph
    s: int
        number of voters per district (positive)
    delta_s: int
        district size increase (positive)
    alpha: iterable of int or ``None``
        number of A-supporters per district, each in ``{0, ..., s}``
    r_alpha: int or ``None``
        number of districts party A must win, requires ``alpha``

    Attributes
    ----------
    n: int
        number of districts
    s_new: int
        the new district size
    """

    def __init__(self, graph, s, delta_s, alpha=None, r_alpha=None):
        if not isinstance(graph, Graph):
            raise ValueError('`graph` should be a `dissolve.Graph`')
        s, delta_s = int(s), int(delta_s)
        if s <= 0 or delta_s <= 0:
            raise ValueError('`s` and `delta_s` should be positive integers')
        if alpha is not None:
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != graph.vertex_count:
                raise ValueError('`alpha` should have one entry per district')
            for v, a in enumerate(alpha):
                if not 0 <= a <= s:
                    raise ValueError('alpha(%d) = %d is not in {0, ..., %d}' % (v, a, s))
        if r_alpha is not None:
            if alpha is None:
                raise ValueError('`r_alpha` requires an A-supporter distribution')
            r_alpha = int(r_alpha)
            if not 0 <= r_alpha <= graph.vertex_count:
                raise ValueError('`r_alpha` should be in {0, ..., n}')
        self._graph = graph
        self._s = s
        self._delta_s = delta_s
        self._alpha = alpha
        self._r_alpha = r_alpha

    def getGraph(self):
        return self._graph

    def setGraph(self, illegal):
        raise AttributeError("`graph` is a read-only attribute")

    graph = property(getGraph, setGraph)

    @property
    def s(self):
        return self._s

    @property
    def delta_s(self):
        return self._delta_s

    @property
    def alpha(self):
        return self._alpha

    @property
    def r_alpha(self):
        return self._r_alpha

    @property
    def n(self):
        return self._graph.vertex_count

    @property
    def s_new(self):
        return self._s + self._delta_s

    @property
    def is_biased(self):
        return self._alpha is not None

    def __str__(self):
        inst_string = 'Instance(%s, s=%d, delta_s=%d' % \
                      (str(self._graph), self._s, self._delta_s)
        if self._alpha is not None:
            inst_string += ', alpha=' + str(list(self._alpha))
        if self._r_alpha is not None:
            inst_string += ', r_alpha=%d' % self._r_alpha
        return inst_string + ')'

    def derivedCounts(self):
        return derivedCounts(self)

    def getAlpha(self, v):
        """
        A-supporters in district ``v``, zero for plain instances
        """
        return 0 if self._alpha is None else self._alpha[v]

    def getAlphaArray(self):
        if self._alpha is None:
            return np.zeros(self.n, dtype=int)
        return np.array(self._alpha, dtype=int)

    def winThreshold(self):
        """
        Minimal number of A-supporters for a strict majority in a district
        of size ``s_new``
        """
        return self.s_new // 2 + 1

    def demand(self, v):
        """
        Additional A-supporters district ``v`` needs to win after the
        dissolution.
        """
        return max(0, self.winThreshold() - self.getAlpha(v))

    def isWinnable(self, v):
        return self.demand(v) <= self._delta_s

    def asPlain(self):
        """
        Copy of the instance without A-supporter distribution
        """
        return Instance(self._graph, self._s, self._delta_s)

    def withAlpha(self, alpha, r_alpha=None):
        return Instance(self._graph, self._s, self._delta_s, alpha=alpha, r_alpha=r_alpha)

    def requireAlpha(self):
        if self._alpha is None:
            raise ValueError('this operation requires an A-supporter distribution `alpha`')
