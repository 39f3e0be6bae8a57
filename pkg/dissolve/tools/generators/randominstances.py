"""
Seeded random instances on random graphs, grids and cliques.
"""

import numpy as np
import networkx as nx

from ...model.instance import Graph, CompleteGraph, Instance


MODES = ('random', 'grid', 'clique')
ALPHA_MODES = (None, 'uniform', 'binary', 'zero')


def randomGraph(n, edge_prob, seed=None):
    """
    Erdos-Renyi graph ``G(n, p)``

    Parameters
    ----------
    n: int
    edge_prob: float
    seed: int or `np.random.Generator` (optional)

    Returns
    -------
    :class:`dissolve.Graph`
    """
    rng = np.random.default_rng(seed)
    nx_graph = nx.gnp_random_graph(n, edge_prob, seed=int(rng.integers(2**31)))
    return Graph(n, nx_graph.edges())


def gridGraph(rows, cols):
    """
    Planar ``rows x cols`` grid, district ``i * cols + j`` is the cell in
    row ``i`` and column ``j``.
    """
    nx_graph = nx.grid_2d_graph(rows, cols)
    return Graph.fromNetworkX(nx_graph)


def randomAlpha(n, s, alpha_mode, rng):
    """
    Random A-supporter distribution

    Parameters
    ----------
    alpha_mode: str
        ``'uniform'`` draws every count from ``{0, ..., s}``, ``'binary'``
        from ``{0, 1}`` and ``'zero'`` gives no district an A-supporter
    """
    if alpha_mode == 'uniform':
        return rng.integers(0, s + 1, size=n).tolist()
    elif alpha_mode == 'binary':
        return rng.integers(0, 2, size=n).tolist()
    elif alpha_mode == 'zero':
        return [0] * n
    raise ValueError('unknown alpha mode %s' % str(alpha_mode))


def generateRandom(n=None, edge_prob=0.5, s=1, delta_s=1, alpha_mode=None,
                   seed=None, mode='random', rows=None, cols=None, r_alpha=None):
    """
    Generate a random instance. The output only depends on the parameters
    and the seed.

    Parameters
    ----------
    n: int
        number of districts, ignored in grid mode
    edge_prob: float (optional, default ``0.5``)
        edge probability in random mode
    s: int (optional, default ``1``)
    delta_s: int (optional, default ``1``)
    alpha_mode: str or ``None`` (optional)
        ``None`` for a plain instance, otherwise ``'uniform'``, ``'binary'``
        or ``'zero'``, see :func:`randomAlpha`
    seed: int (optional)
    mode: str (optional, default ``'random'``)
        ``'random'`` for ``G(n, edge_prob)``, ``'grid'`` for a
        ``rows x cols`` grid or ``'clique'`` for the complete graph
    rows, cols: int
        grid dimensions
    r_alpha: int (optional)
        number of districts party A should win, requires `alpha_mode`

    Returns
    -------
    :class:`dissolve.Instance`
    """
    if mode not in MODES:
        raise ValueError('unknown mode %s, choose from %s' % (mode, ', '.join(MODES)))
    if alpha_mode not in ALPHA_MODES:
        raise ValueError('unknown alpha mode %s' % str(alpha_mode))
    rng = np.random.default_rng(seed)
    if mode == 'grid':
        if rows is None or cols is None:
            raise ValueError('grid mode requires `rows` and `cols`')
        graph = gridGraph(rows, cols)
    elif mode == 'clique':
        graph = CompleteGraph(n)
    else:
        if not 0. <= edge_prob <= 1.:
            raise ValueError('`edge_prob` should be in [0, 1]')
        graph = randomGraph(n, edge_prob, seed=rng)
    alpha = None
    if alpha_mode is not None:
        alpha = randomAlpha(graph.vertex_count, s, alpha_mode, rng)
    return Instance(graph, s, delta_s, alpha=alpha, r_alpha=r_alpha)
