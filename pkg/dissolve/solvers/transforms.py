"""
File contains:

    - :func:`mirrorInstance`
    - :func:`mirrorSolution`
    - :func:`isStarPartition`
    - :func:`starPartitionToDissolution`
    - :func:`dissolutionToStarPartition`
"""

from ..model.instance import Instance
from ..model.dissolution import Dissolution, verifyDissolution
from ..flow.flownetwork import maxFlow
from ..flow.rolenetwork import buildDissolutionNetwork


def mirrorInstance(inst):
    """
    Swap ``s`` and ``delta_s`` of a plain instance. An ``(s, delta_s)``
    dissolution exists iff a ``(delta_s, s)``-dissolution exists.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
        without A-supporters

    Returns
    -------
    :class:`dissolve.Instance`
    """
    if inst.is_biased:
        raise ValueError('mirroring is only defined for instances without A-supporters')
    return Instance(inst.graph, inst.delta_s, inst.s)


def mirrorSolution(inst, sol):
    """
    Reverse the voter movement of a dissolution: the remaining districts
    are dissolved and every move ``(x, y)`` becomes a move ``(y, x)``.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
        the instance `sol` solves
    sol: :class:`dissolve.Dissolution`

    Returns
    -------
    :class:`dissolve.Dissolution`
        a solution of ``mirrorInstance(inst)``
    """
    dissolved = set(range(inst.n)) - set(sol.dissolved)
    moves = {(y, x): value for (x, y), value in sol.iterMoves(positive_only=False)}
    return Dissolution(dissolved, moves)


def isStarPartition(graph, partition):
    """
    Check whether `partition` partitions the districts of `graph` into
    stars with the same number of leaves.

    Parameters
    ----------
    graph: :class:`dissolve.Graph`
    partition: list of ``(center, leaves)``

    Returns
    -------
    bool
    """
    seen = set()
    n_leaf = None
    for center, leaves in partition:
        leaves = tuple(leaves)
        if n_leaf is None:
            n_leaf = len(leaves)
        if len(leaves) != n_leaf or n_leaf == 0:
            return False
        for v in (center,) + leaves:
            if v in seen or not 0 <= v < graph.vertex_count:
                return False
            seen.add(v)
        if not all(graph.hasEdge(center, leaf) for leaf in leaves):
            return False
    return len(seen) == graph.vertex_count


def starPartitionToDissolution(partition, delta_s, graph=None):
    """
    Turn a partition into ``t``-stars into a ``(t * delta_s, delta_s)``
    dissolution: every center is dissolved and moves ``delta_s`` voters to
    each of its leaves.

    Parameters
    ----------
    partition: list of ``(center, leaves)``
        every part has the same number ``t`` of leaves
    delta_s: int
        the district size increase
    graph: :class:`dissolve.Graph` (optional)
        if given, `partition` is checked to be a star partition of it

    Returns
    -------
    :class:`dissolve.Dissolution`
    """
    if graph is not None and not isStarPartition(graph, partition):
        raise ValueError('not a star partition of the graph')
    n_leaves = set(len(tuple(leaves)) for _, leaves in partition)
    if len(n_leaves) > 1:
        raise ValueError('all stars should have the same number of leaves')
    moves = {}
    for center, leaves in partition:
        for leaf in leaves:
            moves[(center, leaf)] = delta_s
    return Dissolution([center for center, _ in partition], moves)


def dissolutionToStarPartition(inst, sol):
    """
    Recover a partition into ``t``-stars from an ``(t * delta_s, delta_s)``
    dissolution.

    If every remaining district receives its voters from a single dissolved
    neighbor, that neighbor is its center. Otherwise the dissolution
    network of the dissolved districts is solved with all capacities
    divided by ``delta_s``, every remaining district then receives one unit
    of flow from a single dissolved neighbor.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
        with ``s`` divisible by ``delta_s``
    sol: :class:`dissolve.Dissolution`
        a valid dissolution

    Returns
    -------
    list of ``(center, leaves)``
        sorted by center, leaves in ascending order
    """
    if inst.s % inst.delta_s != 0:
        raise ValueError('s should be divisible by delta_s to obtain a star partition')
    verdict = verifyDissolution(inst, sol)
    if not verdict:
        raise ValueError('not a valid dissolution: ' + str(verdict))
    senders = {}
    for (x, y), _ in sol.iterMoves():
        senders.setdefault(y, []).append(x)
    if all(len(centers) == 1 for centers in senders.values()):
        # already a star dissolution, read the stars off the moves
        leaves = {center: [] for center in sol.dissolved}
        for leaf, (center,) in senders.items():
            leaves[center].append(leaf)
        return [(center, tuple(sorted(leaves[center]))) for center in sorted(leaves)]
    net = buildDissolutionNetwork(inst, sol.dissolved, scale=inst.delta_s)
    flow = maxFlow(net)
    leaves = {center: [] for center in sol.dissolved}
    for idx, (u, v, _) in enumerate(net.arcs):
        if u < inst.n and v < inst.n and flow[idx] > 0:
            leaves[u].append(v)
    return [(center, tuple(sorted(leaves[center]))) for center in sorted(leaves)]
