"""
File contains:

    - :class:`WeightedGraph`
    - :class:`Matching`
    - :func:`perfectMatching`
    - :func:`maxWeightPerfectMatching`

Matchings on general graphs, computed with the blossom algorithm of
:func:`networkx.max_weight_matching`.
"""

import networkx as nx


class WeightedGraph(object):
    """
    A graph with a non-negative integer weight on every edge.

    Parameters
    ----------
    graph: :class:`dissolve.Graph`
    weight: dict {(int, int): int} or callable (optional)
        weight of every edge, missing edges have weight zero. A callable is
        evaluated as ``weight(x, y)`` on every edge ``(x, y)``, ``x < y``.
    """

    def __init__(self, graph, weight=None):
        self.graph = graph
        self._weight = {}
        for x, y in graph.iterEdges():
            if weight is None:
                w = 0
            elif callable(weight):
                w = weight(x, y)
            else:
                w = weight.get((x, y), weight.get((y, x), 0))
            w = int(w)
            if w < 0:
                raise ValueError('edge weights should be non-negative')
            self._weight[(x, y)] = w
        if weight is not None and not callable(weight):
            for (x, y) in weight:
                if not graph.hasEdge(x, y):
                    raise ValueError('weight given for non-edge (%d, %d)' % (x, y))

    def getWeight(self, x, y):
        return self._weight[(min(x, y), max(x, y))]

    def toNetworkX(self):
        nx_graph = self.graph.toNetworkX()
        for (x, y), w in self._weight.items():
            nx_graph[x][y]['weight'] = w
        return nx_graph


class Matching(object):
    """
    A set of pairwise disjoint edges.

    Parameters
    ----------
    edges: iterable of 2-tuples
    """

    def __init__(self, edges):
        self.edges = frozenset((min(x, y), max(x, y)) for x, y in edges)
        covered = set()
        for x, y in self.edges:
            if x in covered or y in covered:
                raise ValueError('edges of a matching should be disjoint')
            covered.update((x, y))
        self._covered = frozenset(covered)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(sorted(self.edges))

    def __contains__(self, edge):
        x, y = edge
        return (min(x, y), max(x, y)) in self.edges

    def __str__(self):
        return 'Matching(%s)' % sorted(self.edges)

    def covers(self, v):
        return v in self._covered

    def isPerfect(self, graph):
        """
        Check whether the matching consists of edges of `graph` and covers
        all of its vertices
        """
        return all(graph.hasEdge(x, y) for x, y in self.edges) and \
               len(self._covered) == graph.vertex_count

    def weight(self, wg):
        return sum(wg.getWeight(x, y) for x, y in self.edges)

    def partner(self, v):
        for x, y in self.edges:
            if x == v:
                return y
            if y == v:
                return x
        return None


def perfectMatching(graph):
    """
    Find a perfect matching

    Parameters
    ----------
    graph: :class:`dissolve.Graph`

    Returns
    -------
    :class:`Matching` or ``None``
        ``None`` if the graph has no perfect matching
    """
    if graph.vertex_count % 2 == 1:
        return None
    nx_matching = nx.max_weight_matching(graph.toNetworkX(), maxcardinality=True)
    matching = Matching(nx_matching)
    return matching if matching.isPerfect(graph) else None


def maxWeightPerfectMatching(wg):
    """
    Find a perfect matching of maximum total weight

    Parameters
    ----------
    wg: :class:`WeightedGraph`

    Returns
    -------
    matching: :class:`Matching` or ``None``
        ``None`` if the graph has no perfect matching
    weight: int
        the weight of the matching, ``-1`` if there is none
    """
    graph = wg.graph
    if graph.vertex_count % 2 == 1:
        return None, -1
    # among maximum cardinality matchings, networkx returns one of maximum weight
    nx_matching = nx.max_weight_matching(wg.toNetworkX(), maxcardinality=True,
                                         weight='weight')
    matching = Matching(nx_matching)
    if not matching.isPerfect(graph):
        return None, -1
    return matching, matching.weight(wg)
