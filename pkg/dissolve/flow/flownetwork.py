"""
File contains:

    - :class:`FlowNetwork`
    - :class:`FlowResult`
    - :func:`maxFlow`
    - :func:`minCut`

The maximum flow itself is computed by :func:`scipy.sparse.csgraph.maximum_flow`
on integer capacities, the result is redistributed over the (possibly
parallel) arcs of the network and checked for capacity and conservation.
"""

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import maximum_flow

from collections import defaultdict


_MAX_CAPACITY = int(np.iinfo(np.int32).max)


class FlowNetwork(object):
    """
    Directed network with integer arc capacities.

    Parameters
    ----------
    node_count: int
        number of nodes, nodes are ``0, ..., node_count-1``
    arcs: iterable of 3-tuples ``(from, to, capacity)``
        capacities are non-negative integers, parallel arcs are allowed
    source: int
        the source node
    target: int
        the target node

    Attributes
    ----------
    arcs: tuple of 3-tuples
        the arcs in construction order, arc ``i`` of a :class:`FlowResult`
        refers to ``arcs[i]``
    """

    def __init__(self, node_count, arcs, source, target):
        node_count = int(node_count)
        if source == target:
            raise ValueError('source and target should be different nodes')
        if not (0 <= source < node_count and 0 <= target < node_count):
            raise ValueError('source and target should be nodes of the network')
        arc_list = []
        for (u, v, cap) in arcs:
            u, v, cap = int(u), int(v), int(cap)
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValueError('arc (%d, %d) has an endpoint out of range' % (u, v))
            if u == v:
                raise ValueError('arc (%d, %d) is a self-loop' % (u, v))
            if cap < 0:
                raise ValueError('arc (%d, %d) has negative capacity %d' % (u, v, cap))
            arc_list.append((u, v, cap))
        pair_caps = defaultdict(int)
        for (u, v, cap) in arc_list:
            pair_caps[(u, v)] += cap
        if any(cap > _MAX_CAPACITY for cap in pair_caps.values()):
            raise ValueError('capacities should fit into 32-bit integers')
        if sum(cap for (u, _), cap in pair_caps.items() if u == source) > _MAX_CAPACITY:
            raise ValueError('the capacity leaving the source should fit into a 32-bit integer')
        self._node_count = node_count
        self._arcs = tuple(arc_list)
        self._source = int(source)
        self._target = int(target)

    def getNodeCount(self):
        return self._node_count

    def setNodeCount(self, illegal):
        raise AttributeError("`node_count` is a read-only attribute")

    node_count = property(getNodeCount, setNodeCount)

    def getArcs(self):
        return self._arcs

    def setArcs(self, illegal):
        raise AttributeError("`arcs` is a read-only attribute")

    arcs = property(getArcs, setArcs)

    @property
    def source(self):
        return self._source

    @property
    def target(self):
        return self._target

    @property
    def arc_count(self):
        return len(self._arcs)

    def getCapacities(self):
        return np.array([cap for _, _, cap in self._arcs], dtype=np.int64)

    def sourceCapacity(self):
        """
        Total capacity of the arcs leaving the source
        """
        return sum(cap for u, _, cap in self._arcs if u == self._source)

    def toCSR(self):
        """
        Capacity matrix of the network, parallel arcs are summed and zero
        capacity arcs dropped.

        Returns
        -------
        `scipy.sparse.csr_matrix`
            of dtype ``int32`` and shape ``(node_count, node_count)``
        """
        arcs = [arc for arc in self._arcs if arc[2] > 0]
        rows = np.array([u for u, _, _ in arcs], dtype=np.int32)
        cols = np.array([v for _, v, _ in arcs], dtype=np.int32)
        caps = np.array([cap for _, _, cap in arcs], dtype=np.int32)
        shape = (self._node_count, self._node_count)
        csr = sp.csr_matrix((caps, (rows, cols)), shape=shape, dtype=np.int32)
        csr.sum_duplicates()
        return csr

    def toNetworkX(self):
        """
        Returns
        -------
        `networkx.DiGraph`
            parallel arcs merged into a single arc with summed ``capacity``
        """
        import networkx as nx
        nx_graph = nx.DiGraph()
        nx_graph.add_nodes_from(range(self._node_count))
        for u, v, cap in self._arcs:
            if nx_graph.has_edge(u, v):
                nx_graph[u][v]['capacity'] += cap
            else:
                nx_graph.add_edge(u, v, capacity=cap)
        return nx_graph

    def __str__(self):
        return 'FlowNetwork(nodes=%d, arcs=%d, source=%d, target=%d)' % \
               (self._node_count, len(self._arcs), self._source, self._target)


class FlowResult(object):
    """
    An integral flow on a :class:`FlowNetwork`

    Attributes
    ----------
    value: int
        the flow value leaving the source
    flow: `np.ndarray` of int
        flow on every arc, aligned with `FlowNetwork.arcs`
    """

    def __init__(self, value, flow):
        self.value = int(value)
        self.flow = np.asarray(flow, dtype=np.int64)

    def __getitem__(self, arc_index):
        return int(self.flow[arc_index])

    def __len__(self):
        return len(self.flow)

    def __str__(self):
        return 'FlowResult(value=%d)' % self.value


def _netFlowMatrix(csr, source, target):
    res = maximum_flow(csr, source, target, method='dinic')
    # `flow` was called `residual` before scipy 1.8
    flow_matrix = getattr(res, 'flow', None)
    if flow_matrix is None:
        flow_matrix = res.residual
    return int(res.flow_value), sp.coo_matrix(flow_matrix)


def checkFlow(net, flow):
    """
    Check capacity and conservation of a flow.

    Parameters
    ----------
    net: :class:`FlowNetwork`
    flow: array-like of int
        flow on every arc

    Returns
    -------
    int
        the flow value

    Raises
    ------
    RuntimeError
        if the flow violates a capacity or conservation constraint
    """
    balance = np.zeros(net.node_count, dtype=np.int64)
    for (u, v, cap), f in zip(net.arcs, flow):
        if not 0 <= f <= cap:
            raise RuntimeError('flow %d on arc (%d, %d) violates capacity %d' % \
                               (f, u, v, cap))
        balance[u] -= f
        balance[v] += f
    for node in range(net.node_count):
        if node not in (net.source, net.target) and balance[node] != 0:
            raise RuntimeError('flow is not conserved at node %d' % node)
    return int(-balance[net.source])


def maxFlow(net):
    """
    Compute an integral maximum flow from source to target.

    Parameters
    ----------
    net: :class:`FlowNetwork`

    Returns
    -------
    :class:`FlowResult`
        the flow on parallel arcs is assigned in arc order
    """
    flow = np.zeros(net.arc_count, dtype=np.int64)
    if not any(cap > 0 for _, _, cap in net.arcs):
        return FlowResult(0, flow)
    value, flow_coo = _netFlowMatrix(net.toCSR(), net.source, net.target)
    # positive entries of the antisymmetric flow matrix are the net flows
    remaining = defaultdict(int)
    for u, v, f in zip(flow_coo.row, flow_coo.col, flow_coo.data):
        if f > 0:
            remaining[(int(u), int(v))] += int(f)
    for idx, (u, v, cap) in enumerate(net.arcs):
        f = min(cap, remaining[(u, v)])
        if f > 0:
            flow[idx] = f
            remaining[(u, v)] -= f
    if any(f > 0 for f in remaining.values()):
        raise RuntimeError('maximum flow could not be mapped onto the arcs')
    checked_value = checkFlow(net, flow)
    if checked_value != value:
        raise RuntimeError('flow value %d differs from reported value %d' % \
                           (checked_value, value))
    return FlowResult(value, flow)


def minCut(net, result=None):
    """
    Minimum source/target cut induced by a maximum flow.

    Parameters
    ----------
    net: :class:`FlowNetwork`
    result: :class:`FlowResult` (optional)
        a maximum flow on `net`, computed if not given

    Returns
    -------
    source_side: set of int
        nodes reachable from the source in the residual network
    cut_value: int
        total capacity of the arcs leaving `source_side`
    """
    if result is None:
        result = maxFlow(net)
    residual = defaultdict(list)
    for (u, v, cap), f in zip(net.arcs, result.flow):
        if f < cap:
            residual[u].append(v)
        if f > 0:
            residual[v].append(u)
    source_side = {net.source}
    stack = [net.source]
    while stack:
        node = stack.pop()
        for nbr in residual[node]:
            if nbr not in source_side:
                source_side.add(nbr)
                stack.append(nbr)
    cut_value = sum(cap for u, v, cap in net.arcs \
                        if u in source_side and v not in source_side)
    return source_side, cut_value
