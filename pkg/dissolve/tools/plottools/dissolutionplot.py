"""
Drawing of instances and their dissolutions.
"""

import matplotlib.pyplot as pl
import networkx as nx


ROLE_COLORS = {'dissolved': 'lightgrey', 'winning': 'cornflowerblue',
               'losing': 'salmon', 'remaining': 'white'}


def plotDissolution(inst, sol=None, ax=None, pos=None,
                          plotargs={}, textargs={}, nodelabels=None, seed=0):
    """
    Draw the districts of an instance and, if given, the voter movement of
    a dissolution.

    Dissolved districts are grey, districts won by party A blue and other
    remaining districts red (biased) or white (plain). Every used edge is
    drawn as an arrow labeled with the number of moved voters, followed by
    the number of moved A-supporters for biased dissolutions.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
    sol: :class:`dissolve.Dissolution` or :class:`dissolve.BiasedDissolution` (optional)
    ax: :class:`matplotlib.axes` (optional)
        the axes object in which the plot will be made, a new figure is
        created if not given
    pos: dict {int: (float, float)} (optional)
        district coordinates, a spring layout is computed if not given
    plotargs: dict (string : value)
        keyword args for `networkx.draw_networkx_nodes`
    textargs: dict (string : value)
        keyword args for the edge labels
    nodelabels: dict {int: str} or None
        district labels, by default the district id followed by the number
        of A-supporters for biased instances
    seed: int (optional, default ``0``)
        seed of the spring layout

    Returns
    -------
    :class:`matplotlib.axes`
    """
    if ax is None:
        pl.figure()
        ax = pl.gca()
    nx_graph = inst.graph.toNetworkX()
    if pos is None:
        pos = nx.spring_layout(nx_graph, seed=seed)
    if nodelabels is None:
        if inst.is_biased:
            nodelabels = {v: '%d\n%d/%d' % (v, inst.alpha[v], inst.s) for v in nx_graph}
        else:
            nodelabels = {v: str(v) for v in nx_graph}

    dissolved = set() if sol is None else set(sol.dissolved)
    winning = set(getattr(sol, 'winning', ()))
    colors = []
    for v in nx_graph:
        if v in dissolved:
            colors.append(ROLE_COLORS['dissolved'])
        elif v in winning:
            colors.append(ROLE_COLORS['winning'])
        elif inst.is_biased and sol is not None:
            colors.append(ROLE_COLORS['losing'])
        else:
            colors.append(ROLE_COLORS['remaining'])

    nodeargs = {'node_size': 600, 'edgecolors': 'k'}
    nodeargs.update(plotargs)
    nx.draw_networkx_nodes(nx_graph, pos, ax=ax, node_color=colors, **nodeargs)
    nx.draw_networkx_labels(nx_graph, pos, labels=nodelabels, ax=ax, font_size=8)
    if sol is None:
        nx.draw_networkx_edges(nx_graph, pos, ax=ax)
    else:
        used = [key for key, _ in sol.iterMoves()]
        unused = [(x, y) for x, y in nx_graph.edges() \
                         if (x, y) not in used and (y, x) not in used]
        nx.draw_networkx_edges(nx_graph, pos, edgelist=unused, ax=ax,
                               style='dashed', edge_color='grey')
        arrows = nx.DiGraph(used)
        nx.draw_networkx_edges(arrows, pos, edgelist=used, ax=ax, arrows=True,
                               node_size=nodeargs['node_size'])
        get_a_move = getattr(sol, 'getAMove', None)
        edge_labels = {}
        for (x, y), value in sol.iterMoves():
            label = str(value)
            if get_a_move is not None:
                label += ' (%d A)' % get_a_move(x, y)
            edge_labels[(x, y)] = label
        labelargs = {'font_size': 7}
        labelargs.update(textargs)
        nx.draw_networkx_edge_labels(arrows, pos, edge_labels=edge_labels, ax=ax,
                                     **labelargs)
    ax.axes.get_xaxis().set_visible(False)
    ax.axes.get_yaxis().set_visible(False)
    ax.axison = False
    return ax
