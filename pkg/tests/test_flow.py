from dissolve import Graph, Instance, Dissolution, BiasedDissolution
from dissolve import FlowNetwork, maxFlow, minCut
from dissolve import buildRoleNetwork, extractBiasedSolution, embedSolutionAsFlow
from dissolve import buildDissolutionNetwork, extractDissolution
from dissolve import verifyDissolution, verifyBiasedDissolution
from dissolve.flow.flownetwork import checkFlow

import numpy as np
import networkx as nx

import itertools
import pytest


def createBiasedInstance():
    graph = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    return Instance(graph, 3, 2, alpha=[1, 1, 1, 1, 3], r_alpha=2)


def randomNetwork(rng, node_count, arc_prob, max_cap):
    arcs = []
    for u, v in itertools.permutations(range(node_count), 2):
        if rng.random() < arc_prob:
            arcs.append((u, v, int(rng.integers(0, max_cap + 1))))
    # a few parallel arcs
    for arc in arcs[:3]:
        arcs.append((arc[0], arc[1], int(rng.integers(0, max_cap + 1))))
    return FlowNetwork(node_count, arcs, 0, node_count - 1)


def bruteForceMinCut(net):
    others = [v for v in range(net.node_count) if v not in (net.source, net.target)]
    best = None
    for k in range(len(others) + 1):
        for subset in itertools.combinations(others, k):
            side = set(subset) | {net.source}
            value = sum(cap for u, v, cap in net.arcs if u in side and v not in side)
            if best is None or value < best:
                best = value
    return best


class TestFlowNetwork():
    def testSingleArc(self):
        net = FlowNetwork(2, [(0, 1, 7)], 0, 1)
        result = maxFlow(net)
        assert result.value == 7
        assert result[0] == 7

    def testParallelPaths(self):
        net = FlowNetwork(4, [(0, 1, 3), (1, 3, 5), (0, 2, 4), (2, 3, 2)], 0, 3)
        result = maxFlow(net)
        assert result.value == 5
        assert list(result.flow) == [3, 3, 2, 2]
        source_side, cut_value = minCut(net, result)
        assert cut_value == 5
        assert source_side == {0, 2}

    def testParallelArcs(self):
        net = FlowNetwork(2, [(0, 1, 2), (0, 1, 0), (0, 1, 3)], 0, 1)
        result = maxFlow(net)
        assert result.value == 5
        assert list(result.flow) == [2, 0, 3]
        assert net.toCSR()[0, 1] == 5
        assert net.toNetworkX()[0][1]['capacity'] == 5

    def testZeroNetwork(self):
        net = FlowNetwork(3, [(0, 1, 0), (1, 2, 0)], 0, 2)
        result = maxFlow(net)
        assert result.value == 0
        assert len(result) == 2

    def testInvalidNetworks(self):
        with pytest.raises(ValueError):
            FlowNetwork(2, [(0, 1, -1)], 0, 1)
        with pytest.raises(ValueError):
            FlowNetwork(2, [(0, 2, 1)], 0, 1)
        with pytest.raises(ValueError):
            FlowNetwork(2, [(0, 0, 1)], 0, 1)
        with pytest.raises(ValueError):
            FlowNetwork(2, [(0, 1, 1)], 1, 1)
        with pytest.raises(ValueError):
            FlowNetwork(2, [(0, 1, 2**31)], 0, 1)
        # parallel arcs are summed into one capacity
        with pytest.raises(ValueError):
            FlowNetwork(2, [(0, 1, 2**30), (0, 1, 2**30)], 0, 1)
        # the flow value is bounded by the capacity leaving the source
        with pytest.raises(ValueError):
            FlowNetwork(3, [(0, 1, 2**30), (0, 2, 2**30), (1, 2, 2**30)], 0, 2)
        assert FlowNetwork(2, [(0, 1, 2**31 - 1)], 0, 1).sourceCapacity() == 2**31 - 1

    def testCheckFlow(self):
        net = FlowNetwork(3, [(0, 1, 2), (1, 2, 1)], 0, 2)
        assert checkFlow(net, [1, 1]) == 1
        with pytest.raises(RuntimeError):
            checkFlow(net, [2, 1])
        with pytest.raises(RuntimeError):
            checkFlow(net, [2, 2])

    def testAgainstMinCut(self):
        rng = np.random.default_rng(42)
        for _ in range(25):
            net = randomNetwork(rng, 6, 0.4, 6)
            result = maxFlow(net)
            assert result.value == bruteForceMinCut(net)
            assert minCut(net, result)[1] == result.value

    def testAgainstNetworkX(self):
        rng = np.random.default_rng(7)
        for _ in range(25):
            net = randomNetwork(rng, 12, 0.3, 10)
            value = nx.maximum_flow_value(net.toNetworkX(), net.source, net.target)
            assert maxFlow(net).value == value


class TestRoleNetwork():
    def testConstruction(self):
        inst = createBiasedInstance()
        rn = buildRoleNetwork(inst, [0, 4], [2, 3])
        assert rn.network.node_count == 12
        assert rn.network.arc_count == 2 * 5 + 3 * 6
        assert rn.demand == {1: 0, 2: 2, 3: 2}
        assert rn.node_map[4] == (8, 9)
        assert rn.requiredValue() == 6
        assert rn.network.sourceCapacity() == 6

    def testArcCount(self):
        # four boundary pairs, the edge (1, 2) between remaining districts is dropped
        graph = Graph(5, [(0, 1), (0, 2), (2, 4), (3, 4), (1, 2)])
        inst = Instance(graph, 3, 2)
        rn = buildRoleNetwork(inst, [0, 4], [])
        assert rn.network.node_count == 12
        assert rn.network.arc_count == 22
        assert sorted(rn.boundary_arcs) == [(0, 1), (0, 2), (4, 2), (4, 3)]

    def testExtract(self):
        inst = createBiasedInstance()
        rn = buildRoleNetwork(inst, [0, 4], [2, 3])
        result = maxFlow(rn.network)
        assert result.value == 6
        sol = extractBiasedSolution(rn, result)
        assert sol.winning == frozenset([2, 3])
        assert verifyBiasedDissolution(inst, sol)
        # embedding the extracted solution gives a flow of the same value
        assert embedSolutionAsFlow(rn, sol).value == result.value

    def testEmbed(self):
        inst = createBiasedInstance()
        rn = buildRoleNetwork(inst, [0, 4], [2, 3])
        base = Dissolution([0, 4], {(0, 1): 2, (0, 2): 1, (4, 2): 1, (4, 3): 2})
        sol = BiasedDissolution(base, {(0, 2): 1, (4, 2): 1, (4, 3): 2}, [2, 3])
        flow = embedSolutionAsFlow(rn, sol)
        assert flow.value == 6
        assert extractBiasedSolution(rn, flow) == sol
        # the roles of the network differ from the solution
        rn_other = buildRoleNetwork(inst, [0, 4], [1, 2])
        with pytest.raises(ValueError):
            embedSolutionAsFlow(rn_other, sol)

    def testInfeasibleRoles(self):
        inst = createBiasedInstance()
        # three winners need six A-supporters, the dissolved districts hold four
        rn = buildRoleNetwork(inst, [0, 4], [1, 2, 3])
        result = maxFlow(rn.network)
        assert result.value < rn.requiredValue()
        assert extractBiasedSolution(rn, result) is None

    def testEmptyDissolvedSet(self):
        inst = createBiasedInstance()
        rn = buildRoleNetwork(inst, [], [])
        assert maxFlow(rn.network).value == 0 == rn.requiredValue()

    def testDemandTooLarge(self):
        inst = Instance(Graph.path(2), 3, 3, alpha=[3, 0])
        assert buildRoleNetwork(inst, [0], [1]) is None
        assert buildRoleNetwork(inst, [1], [0]) is not None

    def testInvalidRoles(self):
        inst = createBiasedInstance()
        with pytest.raises(ValueError):
            buildRoleNetwork(inst, [0, 4], [4])
        with pytest.raises(ValueError):
            buildRoleNetwork(inst, [0, 5], [])


class TestDissolutionNetwork():
    def createInstance(self):
        print('>>> creating instance <<<')
        graph = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (2, 4), (3, 4)])
        self.inst = Instance(graph, 2, 3)

    def testFeasible(self):
        self.createInstance()
        net = buildDissolutionNetwork(self.inst, [0, 2, 4])
        assert net.node_count == 7
        result = maxFlow(net)
        assert result.value == 6
        sol = extractDissolution(self.inst, [0, 2, 4], net, result)
        assert verifyDissolution(self.inst, sol)

    def testAllDissolved(self):
        self.createInstance()
        net = buildDissolutionNetwork(self.inst, range(5))
        result = maxFlow(net)
        assert result.value == 0
        assert extractDissolution(self.inst, range(5), net, result) is None

    def testScale(self):
        inst = Instance(Graph(4, [(0, 1), (0, 2), (0, 3)]), 3, 1)
        net = buildDissolutionNetwork(inst, [0], scale=1)
        assert maxFlow(net).value == 3
        with pytest.raises(ValueError):
            buildDissolutionNetwork(inst, [0], scale=2)
        inst = Instance(Graph(3, [(0, 1), (0, 2)]), 4, 2)
        net = buildDissolutionNetwork(inst, [0], scale=2)
        result = maxFlow(net)
        assert result.value == 2
        sol = extractDissolution(inst, [0], net, result, scale=2)
        assert sol.getMove(0, 1) == 2 and sol.getMove(0, 2) == 2
