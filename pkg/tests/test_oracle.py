from dissolve import Graph, CompleteGraph, Instance
from dissolve import bruteForceDissolution, bruteForceBiased
from dissolve import bruteForceFixedRoles, bruteForceStarPartition
from dissolve import solveExact, solveFixedRoles, solveBiased11, solveClique
from dissolve import solveEqualSizes, mirrorInstance, mirrorSolution, generateRandom
from dissolve import generateDissolutionHardness, generateBiasedHardness
from dissolve import biased22Instance, biased22ToTwoFactor, XCInstance
from dissolve import starPartitionToDissolution, verifyDissolution, buildRoleNetwork
from dissolve import randomXCInstance
from dissolve.solvers.transforms import isStarPartition
from dissolve.tools.generators.twofactor import cycleLengths

import numpy as np

import itertools
import pytest


def createPlainInstance():
    graph = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (2, 4), (3, 4)])
    return Instance(graph, 2, 3)


def createBiasedInstance():
    graph = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    return Instance(graph, 3, 2, alpha=[1, 1, 1, 1, 3], r_alpha=2)


SIZES = [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3), (2, 3)]


def randomInstances(n_instance, n_max, seed, alpha_mode=None):
    """
    Random instances whose number of districts is compatible with the
    drawn sizes
    """
    rng = np.random.default_rng(seed)
    instances = []
    while len(instances) < n_instance:
        s, delta_s = SIZES[rng.integers(len(SIZES))]
        n = int(rng.integers(2, n_max + 1))
        if (n * delta_s) % (s + delta_s) != 0:
            continue
        instances.append(generateRandom(n=n, edge_prob=float(rng.uniform(0.3, 0.8)),
                                        s=s, delta_s=delta_s, alpha_mode=alpha_mode,
                                        seed=int(rng.integers(2**31))))
    return instances


class TestPlainOracle():
    def testExamples(self):
        inst = createPlainInstance()
        outcome = bruteForceDissolution(inst)
        assert outcome.feasible
        assert outcome.strategy == 'oracle'
        assert verifyDissolution(inst, outcome.witness)
        # lexicographically first dissolved set
        assert outcome.witness.dissolved == frozenset([0, 1, 4])
        assert not bruteForceDissolution(Instance(Graph.cycle(5), 1, 1))
        with pytest.raises(ValueError):
            bruteForceDissolution(Instance(Graph.cycle(12), 1, 1))

    def testAgainstExact(self):
        for inst in randomInstances(60, 8, seed=1):
            oracle = bruteForceDissolution(inst)
            exact = solveExact(inst)
            assert oracle.feasible == exact.feasible, str(inst)
            if exact.feasible:
                assert verifyDissolution(inst, exact.witness)
                assert verifyDissolution(inst, oracle.witness)
                # both return the lexicographically first dissolved set
                assert oracle.witness.dissolved == exact.witness.dissolved

    def testAgainstFixedRoles(self):
        inst = createPlainInstance()
        for dissolved in itertools.combinations(range(5), 3):
            flow = solveFixedRoles(inst, dissolved)
            oracle = bruteForceFixedRoles(inst, dissolved)
            assert flow.feasible == oracle.feasible

    def testAgainstMatching(self):
        rng = np.random.default_rng(2)
        for _ in range(300):
            s = int(rng.integers(1, 4))
            n = int(rng.choice([2, 4, 6, 8]))
            inst = generateRandom(n=n, edge_prob=float(rng.uniform(0.2, 0.8)), s=s, delta_s=s,
                                  seed=int(rng.integers(2**31)))
            matching = solveEqualSizes(inst)
            assert matching.feasible == bruteForceDissolution(inst).feasible, str(inst)
            if matching.feasible:
                assert verifyDissolution(inst, matching.witness)

    def testMirror(self):
        rng = np.random.default_rng(3)
        mirror_sizes = [((1, 2), [3, 6, 9]), ((2, 3), [5]), ((2, 4), [3, 6, 9])]
        for _ in range(200):
            (s, delta_s), ns = mirror_sizes[rng.integers(len(mirror_sizes))]
            inst = generateRandom(n=int(rng.choice(ns)), edge_prob=float(rng.uniform(0.3, 0.8)),
                                  s=s, delta_s=delta_s, seed=int(rng.integers(2**31)))
            outcome = bruteForceDissolution(inst)
            mirrored = mirrorInstance(inst)
            assert outcome.feasible == bruteForceDissolution(mirrored).feasible, str(inst)
            if outcome.feasible:
                assert verifyDissolution(mirrored, mirrorSolution(inst, outcome.witness))

    def testParallel(self):
        inst = createPlainInstance()
        outcome = bruteForceDissolution(inst, parallel=True, max_workers=2)
        assert outcome.witness.dissolved == frozenset([0, 1, 4])
        with pytest.raises(ValueError):
            bruteForceDissolution(inst, parallel=True)


class TestBiasedOracle():
    def testExamples(self):
        inst = createBiasedInstance()
        outcome = bruteForceBiased(inst)
        assert outcome.achieved_r_alpha == 2
        assert outcome.verify(inst)
        assert outcome.reachesTarget(inst)
        inst = Instance(Graph.cycle(4), 1, 1, alpha=[0, 0, 0, 0])
        outcome = bruteForceBiased(inst)
        assert outcome.feasible and outcome.achieved_r_alpha == 0
        with pytest.raises(ValueError):
            bruteForceBiased(createPlainInstance())
        with pytest.raises(ValueError):
            bruteForceBiased(Instance(Graph.cycle(12), 1, 1, alpha=[1] * 12))

    def testAgainstExact(self):
        for inst in randomInstances(40, 7, seed=4, alpha_mode='uniform'):
            oracle = bruteForceBiased(inst)
            exact = solveExact(inst)
            assert oracle.feasible == exact.feasible, str(inst)
            assert oracle.achieved_r_alpha == exact.achieved_r_alpha, str(inst)
            if exact.feasible:
                assert exact.verify(inst)
                assert oracle.verify(inst)

    def testAgainstFixedRoles(self):
        inst = createBiasedInstance()
        for dissolved in itertools.combinations(range(5), 2):
            others = [v for v in range(5) if v not in dissolved]
            for k in range(4):
                for winning in itertools.combinations(others, k):
                    flow = solveFixedRoles(inst, dissolved, winning)
                    oracle = bruteForceFixedRoles(inst, dissolved, winning)
                    assert flow.feasible == oracle.feasible

    def testRandomFixedRoles(self):
        rng = np.random.default_rng(9)
        for inst in randomInstances(200, 7, seed=9, alpha_mode='uniform'):
            d = int(inst.derivedCounts().d)
            for _ in range(5):
                dissolved = sorted(int(v) for v in rng.choice(inst.n, size=d, replace=False))
                others = [v for v in range(inst.n) if v not in dissolved]
                winning = [v for v in others if rng.random() < 0.5]
                rn = buildRoleNetwork(inst, dissolved, winning)
                if rn is not None:
                    assert rn.network.node_count == 2 * inst.n + 2
                    assert rn.network.arc_count <= 2 * inst.n + 3 * inst.graph.edge_count
                flow = solveFixedRoles(inst, dissolved, winning)
                oracle = bruteForceFixedRoles(inst, dissolved, winning)
                assert flow.feasible == oracle.feasible, str(inst)
                if flow.feasible:
                    assert flow.verify(inst)
                    assert flow.witness.winning == frozenset(winning)

    def testAgainstBiased11(self):
        rng = np.random.default_rng(5)
        for _ in range(200):
            n = int(rng.choice([2, 4, 6, 8]))
            inst = generateRandom(n=n, edge_prob=float(rng.uniform(0.3, 0.7)), s=1, delta_s=1,
                                  alpha_mode='binary', seed=int(rng.integers(2**31)))
            matching = solveBiased11(inst)
            oracle = bruteForceBiased(inst)
            assert matching.feasible == oracle.feasible, str(inst)
            assert matching.achieved_r_alpha == oracle.achieved_r_alpha, str(inst)
            if matching.feasible:
                assert matching.verify(inst)

    def testAgainstClique(self):
        rng = np.random.default_rng(6)
        for n in range(2, 8):
            for s, delta_s in itertools.product(range(1, 4), repeat=2):
                if (n * delta_s) % (s + delta_s) != 0:
                    continue
                for _ in range(50):
                    alpha = rng.integers(0, s + 1, size=n)
                    inst = Instance(CompleteGraph(n), s, delta_s, alpha=alpha)
                    greedy = solveClique(inst)
                    assert greedy.verify(inst)
                    oracle = bruteForceBiased(inst)
                    assert greedy.achieved_r_alpha == oracle.achieved_r_alpha, str(inst)

    def testCliqueAgainstExact(self):
        rng = np.random.default_rng(7)
        for _ in range(30):
            s, delta_s = SIZES[rng.integers(len(SIZES))]
            n = int(rng.integers(2, 8))
            if (n * delta_s) % (s + delta_s) != 0:
                continue
            alpha = rng.integers(0, s + 1, size=n)
            inst = Instance(CompleteGraph(n), s, delta_s, alpha=alpha)
            assert solveExact(inst).achieved_r_alpha == solveClique(inst).achieved_r_alpha


class TestReductionsAgainstOracle():
    def testDissolutionHardness(self):
        inst = generateDissolutionHardness(XCInstance(3, [(0, 1, 2)]), 2, 1)
        assert bruteForceDissolution(inst).feasible
        inst = generateDissolutionHardness(XCInstance(3, [], set_size=3), 2, 1)
        assert not bruteForceDissolution(inst).feasible

    def testBiasedHardness(self):
        inst = generateBiasedHardness(XCInstance(3, [(0, 1, 2)]))
        outcome = bruteForceBiased(inst)
        assert outcome.achieved_r_alpha == 4
        assert outcome.reachesTarget(inst)

    def testTwoFactor(self):
        inst = biased22Instance(Graph.cycle(8))
        outcome = bruteForceBiased(inst)
        assert outcome.achieved_r_alpha == 2
        factor = biased22ToTwoFactor(outcome.witness)
        assert all(length % 4 == 0 for length in cycleLengths(factor))
        inst = biased22Instance(Graph.cycle(4))
        assert bruteForceBiased(inst).achieved_r_alpha == 1


class TestStarPartitionOracle():
    def testStarPartition(self):
        star = Graph(4, [(0, 1), (0, 2), (0, 3)])
        assert bruteForceStarPartition(star, 3) == [(0, (1, 2, 3))]
        assert bruteForceStarPartition(Graph.path(4), 1) == [(0, (1,)), (2, (3,))]
        assert bruteForceStarPartition(Graph.path(4), 3) is None
        assert bruteForceStarPartition(Graph.path(5), 1) is None

    def testAgainstDissolution(self):
        rng = np.random.default_rng(8)
        for _ in range(20):
            n_leaf = int(rng.integers(1, 3))
            n = (n_leaf + 1) * int(rng.integers(1, 3))
            inst = generateRandom(n=n, edge_prob=0.6, s=2 * n_leaf, delta_s=2,
                                  seed=int(rng.integers(2**31)))
            partition = bruteForceStarPartition(inst.graph, n_leaf)
            assert (partition is not None) == bruteForceDissolution(inst).feasible
            if partition is not None:
                assert isStarPartition(inst.graph, partition)
                sol = starPartitionToDissolution(partition, 2)
                assert verifyDissolution(inst, sol)
