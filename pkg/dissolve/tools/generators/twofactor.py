"""
File contains:

    - :func:`biased22Instance`
    - :func:`cycleLengths`
    - :func:`twoFactorCycles`
    - :func:`twoFactorToBiased22`
    - :func:`biased22ToTwoFactor`

Two-factors whose cycle lengths are multiples of four correspond to biased
``(2, 2)``-dissolutions in which party A, holding one supporter in every
district, wins a quarter of all districts.
"""

import networkx as nx

from ...model.instance import Instance
from ...model.dissolution import Dissolution, BiasedDissolution, usedEdgeSet


def biased22Instance(graph):
    """
    The biased ``(2, 2)``-dissolution instance with one A-supporter per
    district and ``r_alpha = n / 4``

    Parameters
    ----------
    graph: :class:`dissolve.Graph`
        with a number of districts divisible by four

    Returns
    -------
    :class:`dissolve.Instance`
    """
    n = graph.vertex_count
    if n % 4 != 0:
        raise ValueError('number of districts %d is not divisible by four' % n)
    return Instance(graph, 2, 2, alpha=[1] * n, r_alpha=n // 4)


def _factorGraph(factor, vertex_count=None):
    nx_factor = nx.Graph()
    if vertex_count is not None:
        nx_factor.add_nodes_from(range(vertex_count))
    nx_factor.add_edges_from((min(x, y), max(x, y)) for x, y in factor)
    for v, deg in nx_factor.degree():
        if deg != 2:
            raise ValueError('district %d has degree %d in the two-factor' % (v, deg))
    return nx_factor


def twoFactorCycles(factor, vertex_count=None):
    """
    Split a two-factor into its cycles.

    Every cycle starts at its smallest district and continues with the
    smaller of its two neighbors.

    Parameters
    ----------
    factor: iterable of 2-tuples
        the edges of the two-factor
    vertex_count: int (optional)
        if given, all districts ``0, ..., vertex_count-1`` should be covered

    Returns
    -------
    list of list of int
        cycles ordered by their smallest district
    """
    nx_factor = _factorGraph(factor, vertex_count)
    cycles = []
    for component in sorted(nx.connected_components(nx_factor), key=min):
        start = min(component)
        cycle = [start]
        prev, current = start, min(nx_factor.neighbors(start))
        while current != start:
            cycle.append(current)
            prev, current = current, \
                [v for v in nx_factor.neighbors(current) if v != prev][0]
        cycles.append(cycle)
    return cycles


def cycleLengths(factor):
    """
    Lengths of the cycles of a two-factor, in ascending order
    """
    return sorted(len(cycle) for cycle in twoFactorCycles(factor))


def twoFactorToBiased22(graph, factor):
    """
    Turn a two-factor with cycle lengths divisible by four into a biased
    ``(2, 2)``-dissolution of :func:`biased22Instance`.

    Along every cycle ``c_0, c_1, ...`` the districts with odd index are
    dissolved and move one voter to each cycle neighbor. The districts
    ``c_{4i}`` receive the A-supporters of both neighbors and are won.

    Parameters
    ----------
    graph: :class:`dissolve.Graph`
    factor: iterable of 2-tuples
        a two-factor of `graph`

    Returns
    -------
    :class:`dissolve.BiasedDissolution`
    """
    factor = [tuple(edge) for edge in factor]
    for x, y in factor:
        if not graph.hasEdge(x, y):
            raise ValueError('(%d, %d) is not an edge of the graph' % (x, y))
    dissolved, moves, a_moves, winning = [], {}, {}, []
    for cycle in twoFactorCycles(factor, graph.vertex_count):
        length = len(cycle)
        if length % 4 != 0:
            raise ValueError('cycle %s has length %d, not divisible by four' % \
                             (str(cycle), length))
        for jj in range(1, length, 2):
            x = cycle[jj]
            before, after = cycle[jj - 1], cycle[(jj + 1) % length]
            dissolved.append(x)
            moves[(x, before)] = 1
            moves[(x, after)] = 1
            if jj % 4 == 1:
                a_moves[(x, before)] = 1
            else:
                a_moves[(x, after)] = 1
        winning += cycle[0::4]
    return BiasedDissolution(Dissolution(dissolved, moves), a_moves, winning)


def biased22ToTwoFactor(sol):
    """
    The edges used by an ``n / 4``-biased ``(2, 2)``-dissolution of
    :func:`biased22Instance`, which form a two-factor with cycle lengths
    divisible by four.

    Returns
    -------
    frozenset of tuple
    """
    return usedEdgeSet(sol).edges
