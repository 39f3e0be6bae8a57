"""
File contains:

    - :func:`solveEqualSizes`
    - :func:`solveBiased11`
    - :func:`solveClique`

Polynomial time solvers for instances with ``s = delta_s``, with
``s = delta_s = 1`` and for complete graphs.
"""

import numpy as np

from ..model.dissolution import Dissolution, BiasedDissolution
from ..tools.matching import WeightedGraph, perfectMatching, maxWeightPerfectMatching
from .outcome import SolveOutcome


def solveEqualSizes(inst):
    """
    Solve a dissolution instance with ``s = delta_s``. A dissolution exists
    iff the graph has a perfect matching, every matched edge dissolves its
    smaller endpoint into the larger one.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
        A-supporters are ignored

    Returns
    -------
    :class:`dissolve.SolveOutcome`
        the witness is a plain :class:`dissolve.Dissolution`
    """
    if inst.s != inst.delta_s:
        raise ValueError('`solveEqualSizes` requires s = delta_s, got s=%d, ' \
                         'delta_s=%d' % (inst.s, inst.delta_s))
    matching = perfectMatching(inst.graph)
    if matching is None:
        return SolveOutcome.infeasible(strategy='matching')
    moves = {(x, y): inst.s for x, y in matching}
    sol = Dissolution([x for x, _ in matching], moves)
    return SolveOutcome(True, sol, strategy='matching')


def solveBiased11(inst):
    """
    Solve a biased ``(1, 1)``-dissolution instance by a maximum weight
    perfect matching, where an edge has weight one iff both its endpoints
    hold an A-supporter.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
        with ``s = delta_s = 1`` and A-supporters

    Returns
    -------
    :class:`dissolve.SolveOutcome`
        ``achieved_r_alpha`` is the weight of the matching
    """
    if inst.s != 1 or inst.delta_s != 1:
        raise ValueError('`solveBiased11` requires s = delta_s = 1')
    inst.requireAlpha()
    alpha = inst.alpha
    wg = WeightedGraph(inst.graph, lambda x, y: int(alpha[x] == 1 and alpha[y] == 1))
    matching, weight = maxWeightPerfectMatching(wg)
    if matching is None:
        return SolveOutcome.infeasible(strategy='biased11')
    moves, a_moves, winning = {}, {}, []
    for x, y in matching:
        moves[(x, y)] = 1
        a_moves[(x, y)] = alpha[x]
        if wg.getWeight(x, y) == 1:
            winning.append(y)
    sol = BiasedDissolution(Dissolution([x for x, _ in matching], moves),
                            a_moves, winning)
    return SolveOutcome(True, sol, achieved_r_alpha=weight, strategy='biased11')


def _cliqueRoles(alpha_sorted, s, delta_s, d):
    """
    Find the smallest number of losing districts for which the dissolved
    A-supporters cover the demand of all winners. Districts are indexed in
    ascending order of A-supporters.

    Returns
    -------
    n_lose: int
    lo, hi: int
        winners are ``[lo, hi)``, dissolved districts ``[n_lose, lo)`` and
        ``[hi, n)``, losers ``[0, n_lose)``
    """
    n = len(alpha_sorted)
    r = n - d
    threshold = (s + delta_s) // 2 + 1
    kappa_sorted = np.maximum(0, threshold - alpha_sorted)
    # districts with too few A-supporters can never win, they form a prefix
    n_nonwinnable = int(np.sum(alpha_sorted < threshold - delta_s))
    a_cum = np.concatenate(([0], np.cumsum(alpha_sorted)))
    k_cum = np.concatenate(([0], np.cumsum(kappa_sorted)))
    for n_lose in range(r + 1):
        lo = max(n_lose, n_nonwinnable)
        n_forced = max(0, n_nonwinnable - n_lose)
        if n_forced > d:
            continue
        hi = n - (d - n_forced)
        if hi < lo:
            continue
        supply = a_cum[n_nonwinnable] - a_cum[min(n_lose, n_nonwinnable)] + \
                 a_cum[n] - a_cum[hi]
        demand = k_cum[hi] - k_cum[lo]
        if supply >= demand:
            return n_lose, lo, hi
    raise RuntimeError('no role assignment found for a clique with integral d')


def _cliqueMoves(inst, dissolved, remaining, need):
    """
    Distribute the voters of the dissolved districts over the remaining
    ones. A-supporters go to the neediest winners first, then every
    remaining district is filled up to ``delta_s``, leftover A-supporters
    before B-supporters.
    """
    moves, a_moves = {}, {}
    a_left = {x: inst.getAlpha(x) for x in dissolved}
    cap_left = {y: inst.delta_s for y in remaining}

    def move(x, y, count, is_a):
        moves[(x, y)] = moves.get((x, y), 0) + count
        if is_a:
            a_moves[(x, y)] = a_moves.get((x, y), 0) + count
        cap_left[y] -= count

    pp = 0
    for y in sorted(need, key=lambda v: (-need[v], v)):
        to_go = need[y]
        while to_go > 0:
            x = dissolved[pp]
            count = min(to_go, a_left[x])
            if count > 0:
                move(x, y, count, True)
                a_left[x] -= count
                to_go -= count
            if a_left[x] == 0:
                pp += 1

    chunks = [(x, a_left[x], True) for x in dissolved] + \
             [(x, inst.s - inst.getAlpha(x), False) for x in dissolved]
    qq = 0
    for x, count, is_a in chunks:
        while count > 0:
            y = remaining[qq]
            sent = min(count, cap_left[y])
            if sent > 0:
                move(x, y, sent, is_a)
                count -= sent
            if cap_left[y] == 0:
                qq += 1
    return moves, a_moves


def solveClique(inst):
    """
    Solve a (biased) dissolution instance on a complete graph greedily.

    Districts are sorted by their number of A-supporters, ties broken by
    district id. For an increasing number ``l`` of losing districts, the
    ``l`` districts with fewest A-supporters lose, all other districts that
    can never win are dissolved and the remaining dissolutions go to the
    districts with most A-supporters. The first ``l`` for which the
    dissolved A-supporters cover the demand of all other remaining
    districts maximizes the number of districts won.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
        on a complete graph, plain instances are solved as having no
        A-supporters

    Returns
    -------
    :class:`dissolve.SolveOutcome`
    """
    if not inst.graph.isComplete():
        raise ValueError('`solveClique` requires a complete graph')
    counts = inst.derivedCounts()
    if not counts.feasible:
        return SolveOutcome.infeasible(strategy='clique')
    n, d = inst.n, counts.d
    alpha = inst.getAlphaArray()
    order = np.lexsort((np.arange(n), alpha))
    n_lose, lo, hi = _cliqueRoles(alpha[order], inst.s, inst.delta_s, d)

    dissolved = [int(v) for v in order[n_lose:lo]] + [int(v) for v in order[hi:]]
    winners = [int(v) for v in order[lo:hi]]
    remaining = [int(v) for v in order[:n_lose]] + winners
    need = {y: inst.demand(y) for y in winners}
    moves, a_moves = _cliqueMoves(inst, dissolved, remaining, need)

    base = Dissolution(dissolved, moves)
    if not inst.is_biased:
        return SolveOutcome(True, base, strategy='clique')
    sol = BiasedDissolution(base, a_moves, winners)
    return SolveOutcome(True, sol, strategy='clique')
