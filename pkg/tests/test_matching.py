from dissolve import Graph, WeightedGraph, Matching
from dissolve import perfectMatching, maxWeightPerfectMatching

import pytest


class TestMatching():
    def testMatching(self):
        matching = Matching([(1, 0), (2, 3)])
        assert len(matching) == 2
        assert list(matching) == [(0, 1), (2, 3)]
        assert (3, 2) in matching
        assert matching.covers(0)
        assert not matching.covers(4)
        assert matching.partner(3) == 2
        assert matching.partner(4) is None
        assert matching.isPerfect(Graph.cycle(4))
        assert not matching.isPerfect(Graph.path(5))
        with pytest.raises(ValueError):
            Matching([(0, 1), (1, 2)])

    def testPerfectMatching(self):
        matching = perfectMatching(Graph.path(2))
        assert list(matching) == [(0, 1)]
        # the path on four districts only has the two end edges as perfect matching
        matching = perfectMatching(Graph.path(4))
        assert list(matching) == [(0, 1), (2, 3)]
        assert perfectMatching(Graph.cycle(5)) is None
        # star with three leaves has an even number of districts but no perfect matching
        assert perfectMatching(Graph(4, [(0, 1), (0, 2), (0, 3)])) is None
        assert len(perfectMatching(Graph(0))) == 0

    def testWeightedGraph(self):
        wg = WeightedGraph(Graph.cycle(4), {(1, 0): 1, (2, 3): 4})
        assert wg.getWeight(0, 1) == 1
        assert wg.getWeight(3, 2) == 4
        assert wg.getWeight(1, 2) == 0
        assert wg.toNetworkX()[2][3]['weight'] == 4
        wg = WeightedGraph(Graph.cycle(4), lambda x, y: x + y)
        assert wg.getWeight(3, 0) == 3
        with pytest.raises(ValueError):
            WeightedGraph(Graph.cycle(4), {(0, 2): 1})
        with pytest.raises(ValueError):
            WeightedGraph(Graph.cycle(4), {(0, 1): -1})

    def testMaxWeightPerfectMatching(self):
        # one edge of weight one in K4
        wg = WeightedGraph(Graph.complete(4), {(0, 1): 1})
        matching, weight = maxWeightPerfectMatching(wg)
        assert weight == 1
        assert list(matching) == [(0, 1), (2, 3)]
        # alternating weights on the 4-cycle
        wg = WeightedGraph(Graph.cycle(4), {(0, 1): 1, (1, 2): 0, (2, 3): 1, (0, 3): 0})
        matching, weight = maxWeightPerfectMatching(wg)
        assert weight == 2
        assert matching.weight(wg) == 2
        # K3 has no perfect matching
        matching, weight = maxWeightPerfectMatching(WeightedGraph(Graph.complete(3)))
        assert matching is None and weight == -1

    def testPerfectBeforeWeight(self):
        """
        The heavy middle edge of the path 0 - 1 - 2 - 3 is not part of the
        only perfect matching.
        """
        wg = WeightedGraph(Graph.path(4), {(1, 2): 10})
        matching, weight = maxWeightPerfectMatching(wg)
        assert list(matching) == [(0, 1), (2, 3)]
        assert weight == 0
