from dissolve import Graph, Instance
from dissolve import Dissolution, BiasedDissolution, Verdict
from dissolve import verifyDissolution, verifyBiasedDissolution, usedEdgeSet

from hypothesis import given, settings
from hypothesis import strategies as st

import itertools
import pytest


def createPlainInstance():
    """
    Five districts of two voters, three of which are dissolved so that the
    two others end up with five voters

        1 --- 2 --- 4
        |   / |   /
        |  /  |  /
        0 --- 3

    """
    graph = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (2, 4), (3, 4)])
    return Instance(graph, 2, 3)


def createBiasedInstance():
    """
    Five districts of three voters, districts 0 and 4 are joined to all of
    1, 2 and 3. District 4 holds three A-supporters, all others one.
    """
    graph = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    return Instance(graph, 3, 2, alpha=[1, 1, 1, 1, 3], r_alpha=2)


def createBiasedSolution(winning=(2, 3)):
    base = Dissolution([0, 4], {(0, 1): 2, (0, 2): 1, (4, 2): 1, (4, 3): 2})
    return BiasedDissolution(base, {(0, 2): 1, (4, 2): 1, (4, 3): 2}, winning)


class TestDissolution():
    def createSolution(self):
        print('>>> creating dissolution <<<')
        self.inst = createPlainInstance()
        self.sol = Dissolution([0, 2, 4], {(0, 1): 2, (2, 1): 1, (2, 3): 1, (4, 3): 2})

    def testAccessors(self):
        self.createSolution()
        assert self.sol.dissolved == frozenset([0, 2, 4])
        assert self.sol.getMove(2, 3) == 1
        assert self.sol.getMove(3, 2) == 0
        assert self.sol.totalMoved() == 6
        assert self.sol.outgoing()[2] == 2
        assert self.sol.incoming()[1] == 3
        assert list(self.sol.iterMoves()) == [((0, 1), 2), ((2, 1), 1),
                                              ((2, 3), 1), ((4, 3), 2)]
        # `moves` hands out a copy
        moves = self.sol.moves
        moves[(0, 1)] = 0
        assert self.sol.getMove(0, 1) == 2
        with pytest.raises(AttributeError):
            self.sol.dissolved = frozenset()

    def testEquality(self):
        self.createSolution()
        other = Dissolution((4, 2, 0), {(4, 3): 2, (2, 3): 1, (2, 1): 1,
                                        (0, 1): 2, (0, 3): 0})
        assert self.sol == other
        assert hash(self.sol) == hash(other)
        assert self.sol != Dissolution([0, 2, 4], {(0, 1): 2})

    def testVerify(self):
        self.createSolution()
        verdict = verifyDissolution(self.inst, self.sol)
        assert verdict
        assert verdict == Verdict.accept()
        assert str(verdict) == 'accepted'

    def testVerifyRejects(self):
        self.createSolution()
        # district 1 receives four voters and district 3 two
        sol = Dissolution([0, 2, 4], {(0, 1): 2, (2, 1): 2, (2, 3): 0, (4, 3): 2})
        verdict = verifyDissolution(self.inst, sol)
        assert not verdict
        assert verdict.prop == 'b'
        assert verdict.district == 1
        # district 2 keeps a voter
        sol = Dissolution([0, 2, 4], {(0, 1): 2, (2, 1): 1, (4, 3): 2})
        verdict = verifyDissolution(self.inst, sol)
        assert (verdict.prop, verdict.district) == ('a', 2)
        # (0, 4) is not an edge
        sol = Dissolution([0, 2, 4], {(0, 4): 1, (0, 1): 1, (2, 1): 2, (4, 3): 2})
        verdict = verifyDissolution(self.inst, sol)
        assert (verdict.prop, verdict.district) == ('structure', 0)
        # more than s voters on a pair
        sol = Dissolution([0, 2, 4], {(0, 1): 3})
        assert verifyDissolution(self.inst, sol).prop == 'structure'
        sol = Dissolution([0, 7], {})
        assert verifyDissolution(self.inst, sol).prop == 'structure'

    def testZeroMoveWarning(self):
        self.createSolution()
        moves = self.sol.moves
        moves[(1, 0)] = 0
        sol = Dissolution(self.sol.dissolved, moves)
        with pytest.warns(UserWarning):
            verdict = verifyDissolution(self.inst, sol)
        assert verdict

    @settings(max_examples=100, deadline=None)
    @given(st.sets(st.integers(0, 4)),
           st.dictionaries(st.sampled_from(list(itertools.permutations(range(5), 2))),
                           st.integers(0, 3)))
    def testVerifyIsPure(self, dissolved, moves):
        inst = createPlainInstance()
        sol = Dissolution(dissolved, moves)
        verdict = verifyDissolution(inst, sol)
        assert verifyDissolution(inst, sol) == verdict
        assert sol == Dissolution(dissolved, moves)
        if verdict:
            assert all(sol.outgoing()[v] == inst.s for v in dissolved)
            assert all(sol.incoming()[v] == inst.delta_s \
                       for v in range(inst.n) if v not in dissolved)

    def testEmptyInstance(self):
        inst = Instance(Graph(0), 2, 3)
        assert verifyDissolution(inst, Dissolution([], {}))

    def testUsedEdgeSet(self):
        self.createSolution()
        used = usedEdgeSet(self.sol)
        assert used == [(0, 1), (1, 2), (2, 3), (3, 4)]
        assert (3, 2) in used
        assert len(used) == 4
        assert used.degrees()[1] == 2
        assert not used.isPerfectMatching(5)
        assert len(usedEdgeSet(Dissolution([0], {(0, 1): 0}))) == 0

    def testUsedEdgesOfCycle(self):
        # every (1, 1)-dissolution of the 4-cycle uses a perfect matching
        inst = Instance(Graph.cycle(4), 1, 1)
        sol = Dissolution([0, 2], {(0, 1): 1, (2, 3): 1})
        assert verifyDissolution(inst, sol)
        assert usedEdgeSet(sol).isPerfectMatching(4)


class TestBiasedDissolution():
    def testAccessors(self):
        sol = createBiasedSolution()
        assert sol.dissolved == frozenset([0, 4])
        assert sol.getMove(4, 3) == 2
        assert sol.getAMove(4, 2) == 1
        assert sol.getAMove(0, 1) == 0
        assert sol.winning == frozenset([2, 3])
        assert sol == createBiasedSolution()
        assert sol != createBiasedSolution(winning=[3])
        with pytest.raises(AttributeError):
            sol.winning = frozenset()
        with pytest.raises(ValueError):
            BiasedDissolution({(0, 1): 2}, {}, [])

    def testVerify(self):
        inst = createBiasedInstance()
        assert verifyBiasedDissolution(inst, createBiasedSolution())
        # the base is a valid dissolution on its own
        assert verifyDissolution(inst, createBiasedSolution())

    def testVerifyRejects(self):
        inst = createBiasedInstance()
        # district 1 holds one A-supporter out of five voters
        sol = createBiasedSolution(winning=[1, 2, 3])
        verdict = verifyBiasedDissolution(inst, sol)
        assert (verdict.prop, verdict.district) == ('e', 1)
        # too few winning districts
        verdict = verifyBiasedDissolution(inst, createBiasedSolution(winning=[2]))
        assert verdict.prop == 'winning'
        assert verifyBiasedDissolution(inst.withAlpha(inst.alpha),
                                       createBiasedSolution(winning=[2]))
        # a dissolved district cannot win
        verdict = verifyBiasedDissolution(inst, createBiasedSolution(winning=[0, 2, 3]))
        assert (verdict.prop, verdict.district) == ('winning', 0)
        # more A-supporters than voters on (0, 2)
        base = createBiasedSolution().base
        sol = BiasedDissolution(base, {(0, 2): 2, (4, 3): 2}, [3])
        verdict = verifyBiasedDissolution(inst.withAlpha(inst.alpha), sol)
        assert (verdict.prop, verdict.district) == ('c', 0)
        # district 4 keeps an A-supporter
        sol = BiasedDissolution(base, {(0, 2): 1, (4, 3): 2}, [3])
        verdict = verifyBiasedDissolution(inst.withAlpha(inst.alpha), sol)
        assert (verdict.prop, verdict.district) == ('d', 4)

    def testMissingAlpha(self):
        inst = createBiasedInstance().asPlain()
        with pytest.raises(ValueError):
            verifyBiasedDissolution(inst, createBiasedSolution())

    def testVerdictDict(self):
        inst = createBiasedInstance()
        verdict = verifyBiasedDissolution(inst, createBiasedSolution(winning=[1, 2, 3]))
        data = verdict.toDict()
        assert data['accepted'] is False
        assert data['property'] == 'e'
        assert data['district'] == 1
        assert 'property e at district 1' in str(verdict)
