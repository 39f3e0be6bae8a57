"""
File contains:

    - :class:`RoleNetwork`
    - :func:`buildRoleNetwork`
    - :func:`extractBiasedSolution`
    - :func:`embedSolutionAsFlow`
    - :func:`buildDissolutionNetwork`
    - :func:`extractDissolution`

Flow networks for dissolutions with known roles. In a role network every
district ``v`` is split into two nodes ``2v`` and ``2v+1``: ``(d^A, d^B)``
for a dissolved district, ``(r^A, r^AB)`` for a remaining one. The source
is node ``2n``, the target node ``2n+1``.
"""

import numpy as np

from .flownetwork import FlowNetwork, FlowResult, checkFlow
from ..model.dissolution import Dissolution, BiasedDissolution


class RoleNetwork(object):
    """
    The role network of an instance with fixed dissolved and winning
    districts.

    Attributes
    ----------
    network: :class:`dissolve.FlowNetwork`
        the flow network
    node_map: dict {int: tuple of int}
        district to its two split nodes, ``(d^A, d^B)`` for dissolved and
        ``(r^A, r^AB)`` for remaining districts
    demand: dict {int: int}
        the demand ``kappa`` of every remaining district, zero outside the
        winning set
    dissolved: frozenset of int
    winning: frozenset of int
    boundary_arcs: dict {(int, int): tuple of int}
        boundary pair ``(d, r)`` to the indices of its arcs
        ``(d^A -> r^A, d^A -> r^AB, d^B -> r^AB)``
    """

    def __init__(self, inst, network, node_map, demand, dissolved, winning,
                       boundary_arcs):
        self.inst = inst
        self.network = network
        self.node_map = node_map
        self.demand = demand
        self.dissolved = dissolved
        self.winning = winning
        self.boundary_arcs = boundary_arcs

    def requiredValue(self):
        """
        The flow value that corresponds to a solution, ``s * |D|``
        """
        return self.inst.s * len(self.dissolved)

    def __str__(self):
        return 'RoleNetwork(D=%s, R_alpha=%s, %s)' % \
               (sorted(self.dissolved), sorted(self.winning), str(self.network))


def _checkRoles(inst, dissolved, winning):
    dissolved = frozenset(int(v) for v in dissolved)
    winning = frozenset(int(v) for v in winning)
    for v in dissolved | winning:
        if not 0 <= v < inst.n:
            raise ValueError('district %d is out of range' % v)
    if dissolved & winning:
        raise ValueError('dissolved and winning districts should be disjoint')
    return dissolved, winning


def buildRoleNetwork(inst, dissolved, winning):
    """
    Build the flow network that decides whether a biased dissolution with
    the given dissolved and winning districts exists.

    Edges with both endpoints dissolved or both endpoints remaining are not
    represented, so the network has ``2n+2`` nodes and
    ``2n + 3 * |boundary pairs|`` arcs.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
        plain instances are treated as having no A-supporters
    dissolved: iterable of int
        the dissolved districts
    winning: iterable of int
        the districts that party A should win, disjoint from `dissolved`

    Returns
    -------
    :class:`RoleNetwork` or ``None``
        ``None`` if a winning district needs more than ``delta_s``
        additional A-supporters
    """
    dissolved, winning = _checkRoles(inst, dissolved, winning)
    n, s, delta_s = inst.n, inst.s, inst.delta_s
    source, target = 2 * n, 2 * n + 1

    demand = {}
    for v in range(n):
        if v not in dissolved:
            demand[v] = inst.demand(v) if v in winning else 0
            if demand[v] > delta_s:
                return None

    arcs = []
    node_map = {v: (2 * v, 2 * v + 1) for v in range(n)}
    for v in range(n):
        a_node, b_node = node_map[v]
        if v in dissolved:
            alpha = inst.getAlpha(v)
            arcs.append((source, a_node, alpha))
            arcs.append((source, b_node, s - alpha))
        else:
            arcs.append((a_node, target, demand[v]))
            arcs.append((b_node, target, delta_s - demand[v]))

    boundary_arcs = {}
    for (d, r) in inst.graph.boundaryPairs(dissolved):
        alpha = inst.getAlpha(d)
        d_a, d_b = node_map[d]
        r_a, r_ab = node_map[r]
        idx = len(arcs)
        arcs.append((d_a, r_a, alpha))
        arcs.append((d_a, r_ab, alpha))
        arcs.append((d_b, r_ab, s - alpha))
        boundary_arcs[(d, r)] = (idx, idx + 1, idx + 2)

    network = FlowNetwork(2 * n + 2, arcs, source, target)
    return RoleNetwork(inst, network, node_map, demand, dissolved, winning,
                       boundary_arcs)


def extractBiasedSolution(rn, flow):
    """
    Read a biased dissolution off a flow of value ``s * |D|`` on a role
    network.

    Parameters
    ----------
    rn: :class:`RoleNetwork`
    flow: :class:`dissolve.FlowResult`
        a flow on ``rn.network``

    Returns
    -------
    :class:`dissolve.BiasedDissolution` or ``None``
        ``None`` if the flow value falls short of ``s * |D|`` or if the
        remaining districts are not all topped up
    """
    required = rn.requiredValue()
    target_capacity = rn.inst.delta_s * (rn.inst.n - len(rn.dissolved))
    if flow.value < required or target_capacity != required:
        return None
    moves, a_moves = {}, {}
    for (d, r), (i_aa, i_aab, i_bab) in sorted(rn.boundary_arcs.items()):
        a_moved = flow[i_aa] + flow[i_aab]
        moved = a_moved + flow[i_bab]
        if moved > 0:
            moves[(d, r)] = moved
        if a_moved > 0:
            a_moves[(d, r)] = a_moved
    base = Dissolution(rn.dissolved, moves)
    return BiasedDissolution(base, a_moves, rn.winning)


def embedSolutionAsFlow(rn, sol):
    """
    Turn a (biased) dissolution with the roles of `rn` into a flow of value
    ``s * |D|`` on the role network.

    Boundary pairs are processed in ascending order. The A-supporters moved
    along a pair first fill the remaining demand of ``r^A``, the rest goes
    to ``r^AB``, and the other voters go from ``d^B`` to ``r^AB``.

    Parameters
    ----------
    rn: :class:`RoleNetwork`
    sol: :class:`dissolve.BiasedDissolution` or :class:`dissolve.Dissolution`
        a valid solution that dissolves ``rn.dissolved`` and wins at least
        ``rn.winning``, plain dissolutions move no A-supporters

    Returns
    -------
    :class:`dissolve.FlowResult`
    """
    if sol.dissolved != rn.dissolved:
        raise ValueError('solution dissolves other districts than the network')
    winning = getattr(sol, 'winning', frozenset())
    if not rn.winning <= winning:
        raise ValueError('solution does not win all winning districts of the network')
    get_a_move = getattr(sol, 'getAMove', lambda x, y: 0)

    arcs = rn.network.arcs
    flow = np.zeros(len(arcs), dtype=np.int64)
    open_demand = dict(rn.demand)
    for (d, r), (i_aa, i_aab, i_bab) in sorted(rn.boundary_arcs.items()):
        moved, a_moved = sol.getMove(d, r), get_a_move(d, r)
        to_a = min(a_moved, open_demand[r])
        open_demand[r] -= to_a
        flow[i_aa] = to_a
        flow[i_aab] = a_moved - to_a
        flow[i_bab] = moved - a_moved

    # source and target arcs carry what passes through the split nodes
    through = np.zeros(rn.network.node_count, dtype=np.int64)
    for idx, (u, v, _) in enumerate(arcs):
        if u != rn.network.source and v != rn.network.target:
            through[u] += flow[idx]
            through[v] += flow[idx]
    for idx, (u, v, _) in enumerate(arcs):
        if u == rn.network.source:
            flow[idx] = through[v]
        elif v == rn.network.target:
            flow[idx] = through[u]
    try:
        value = checkFlow(rn.network, flow)
    except RuntimeError as err:
        raise ValueError('solution does not embed into the role network: ' + str(err))
    return FlowResult(value, flow)


def buildDissolutionNetwork(inst, dissolved, scale=1):
    """
    Build the network that decides whether a dissolution with dissolved
    districts `dissolved` exists.

    District ``v`` is node ``v``, the source is node ``n`` and the target
    node ``n+1``. Arcs: source to every dissolved district with capacity
    ``s``, dissolved district to every remaining neighbor with capacity
    ``s`` and every remaining district to the target with capacity
    ``delta_s``.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
    dissolved: iterable of int
    scale: int (optional, default ``1``)
        all capacities are divided by `scale`, which should divide both
        ``s`` and ``delta_s``

    Returns
    -------
    :class:`dissolve.FlowNetwork`
    """
    dissolved = frozenset(int(v) for v in dissolved)
    n = inst.n
    if inst.s % scale != 0 or inst.delta_s % scale != 0:
        raise ValueError('`scale` should divide `s` and `delta_s`')
    s, delta_s = inst.s // scale, inst.delta_s // scale
    source, target = n, n + 1
    arcs = [(source, v, s) for v in sorted(dissolved)]
    arcs += [(d, r, s) for (d, r) in inst.graph.boundaryPairs(dissolved)]
    arcs += [(v, target, delta_s) for v in range(n) if v not in dissolved]
    return FlowNetwork(n + 2, arcs, source, target)


def extractDissolution(inst, dissolved, network, flow, scale=1):
    """
    Read a dissolution off a maximum flow on the network of
    :func:`buildDissolutionNetwork`.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
    dissolved: iterable of int
    network: :class:`dissolve.FlowNetwork`
    flow: :class:`dissolve.FlowResult`
    scale: int (optional, default ``1``)
        the scale the network was built with, flows are multiplied by it

    Returns
    -------
    :class:`dissolve.Dissolution` or ``None``
        ``None`` if the flow does not empty every dissolved district and
        top up every remaining one
    """
    dissolved = frozenset(int(v) for v in dissolved)
    n = inst.n
    required = inst.s * len(dissolved)
    if flow.value * scale != required or \
       inst.delta_s * (n - len(dissolved)) != required:
        return None
    moves = {}
    for idx, (u, v, _) in enumerate(network.arcs):
        if u < n and v < n and flow[idx] > 0:
            moves[(u, v)] = flow[idx] * scale
    return Dissolution(dissolved, moves)
