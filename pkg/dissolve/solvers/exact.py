"""
File contains:

    - :func:`solveExact`
    - :func:`isStructurallyPossible`

Exact solver that enumerates the role assignments of all districts. Every
assignment is decided by a maximum flow, see
:func:`dissolve.solveFixedRoles`.
"""

import itertools
import concurrent.futures

from ..flow.flownetwork import maxFlow
from ..flow.rolenetwork import buildDissolutionNetwork, extractDissolution
from .fixedroles import solveFixedRoles
from .outcome import SolveOutcome


MAX_EXACT_N = 18


def isStructurallyPossible(graph, dissolved):
    """
    Necessary condition for a dissolution with dissolved set `dissolved`:
    every dissolved district has a remaining neighbor and every remaining
    district has a dissolved neighbor.
    """
    for v in range(graph.vertex_count):
        if v in dissolved:
            if all(u in dissolved for u in graph.getNeighbors(v)):
                return False
        elif not any(u in dissolved for u in graph.getNeighbors(v)):
            return False
    return True


def _plainWitness(inst, dissolved):
    net = buildDissolutionNetwork(inst, dissolved)
    return extractDissolution(inst, dissolved, net, maxFlow(net))


def _winCandidates(inst, dissolved):
    graph = inst.graph
    candidates = []
    for v in range(inst.n):
        if v in dissolved:
            continue
        available = sum(inst.getAlpha(u) for u in graph.getNeighbors(v) if u in dissolved)
        if inst.demand(v) <= min(inst.delta_s, available):
            candidates.append(v)
    return candidates


def _bestWinningSet(inst, dissolved, lower, upper):
    """
    Largest winning set of size in ``[lower, upper]`` for fixed dissolved
    districts, ``None`` if there is none. Winning sets are closed under
    taking subsets, so the search stops at the first size without a
    feasible set.
    """
    candidates = _winCandidates(inst, dissolved)
    a_supply = sum(inst.getAlpha(v) for v in dissolved)
    best = None
    for k in range(lower, min(upper, len(candidates)) + 1):
        found = None
        for winning in itertools.combinations(candidates, k):
            if sum(inst.demand(v) for v in winning) > a_supply:
                continue
            outcome = solveFixedRoles(inst, dissolved, winning)
            if outcome.feasible:
                found = outcome
                break
        if found is None:
            break
        best = found
    return best


def _searchShard(inst, shard, n_shard, target, upper):
    """
    Search the dissolved sets whose index in lexicographic enumeration
    order is ``shard`` modulo ``n_shard``.

    Returns
    -------
    best_value: int
        ``-1`` if no dissolved set in the shard admits a dissolution
    best_index: int
    best_outcome: :class:`SolveOutcome` or ``None``
    n_explored: int
    """
    d = inst.derivedCounts().d
    graph = inst.graph
    best_value, best_index, best_outcome = -1, -1, None
    n_explored = 0
    stop = upper if target is None else min(upper, target)
    combinations = itertools.combinations(range(inst.n), d)
    for idx, dissolved in enumerate(combinations):
        if idx % n_shard != shard:
            continue
        n_explored += 1
        dissolved = frozenset(dissolved)
        if not isStructurallyPossible(graph, dissolved):
            continue
        if not inst.is_biased:
            sol = _plainWitness(inst, dissolved)
            if sol is not None:
                return 0, idx, SolveOutcome(True, sol, strategy='exact'), n_explored
            continue
        if best_value < 0:
            outcome = solveFixedRoles(inst, dissolved)
            if not outcome.feasible:
                continue
            best_value, best_index, best_outcome = 0, idx, outcome
        elif _plainWitness(inst, dissolved) is None:
            continue
        if best_value < upper:
            outcome = _bestWinningSet(inst, dissolved, best_value + 1, upper)
            if outcome is not None:
                best_value, best_index = outcome.achieved_r_alpha, idx
                best_outcome = outcome
        if best_value >= stop:
            break
    return best_value, best_index, best_outcome, n_explored


def solveExact(inst, max_n=MAX_EXACT_N, target=None,
                     parallel=False, max_workers=None, pprint=False):
    """
    Solve an instance exactly by enumerating all role assignments.

    For plain instances the dissolved sets are enumerated and the first
    one that admits a dissolution is returned. For biased instances the
    number of districts won by party A is maximized, ties are broken in
    favour of the lexicographically first dissolved set.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
    max_n: int (optional, default ``MAX_EXACT_N``)
        instances with more districts are refused
    target: int (optional)
        stop as soon as a solution winning `target` districts is found
    parallel: bool (optional, default ``False``)
        distribute the dissolved sets over a process pool
    max_workers: int (optional)
        number of processes, required if `parallel` is ``True``
    pprint: bool (optional, default ``False``)
        print progress information

    Returns
    -------
    :class:`dissolve.SolveOutcome`
    """
    if inst.n > max_n:
        raise ValueError('instance has %d districts, exact enumeration is ' \
                         'limited to %d' % (inst.n, max_n))
    counts = inst.derivedCounts()
    if not counts.feasible:
        if pprint: print('>>> n * delta_s is not divisible by s + delta_s')
        return SolveOutcome.infeasible(strategy='exact')
    upper = 0
    if inst.is_biased:
        n_winnable = sum(1 for v in range(inst.n) if inst.isWinnable(v))
        upper = min(counts.r, n_winnable)

    if parallel:
        if max_workers is None:
            raise ValueError('need to provide number of workers if parallel is True')
        args_list = [[inst for _ in range(max_workers)],
                     list(range(max_workers)),
                     [max_workers for _ in range(max_workers)],
                     [target for _ in range(max_workers)],
                     [upper for _ in range(max_workers)]]
        with concurrent.futures.ProcessPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(_searchShard, *args_list))
    else:
        results = [_searchShard(inst, 0, 1, target, upper)]

    n_explored = sum(res[3] for res in results)
    best_value, best_index, best_outcome, _ = \
        min(results, key=lambda res: (-res[0], res[1]))
    if pprint:
        print('>>> explored %d dissolved sets of size %d' % (n_explored, counts.d))
    if best_value < 0:
        return SolveOutcome.infeasible(strategy='exact')
    best_outcome.strategy = 'exact'
    return best_outcome
