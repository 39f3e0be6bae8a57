"""
File contains:

    - :func:`bruteForceDissolution`
    - :func:`bruteForceBiased`
    - :func:`bruteForceFixedRoles`
    - :func:`bruteForceStarPartition`

Brute force reference solvers for small instances. Voter movements are
searched exhaustively, no flow computation is involved.
"""

import itertools
import concurrent.futures

from ..model.dissolution import Dissolution, BiasedDissolution
from ..solvers.outcome import SolveOutcome


MAX_ORACLE_N = 10
MAX_ORACLE_BIASED_N = 8


def _distributions(total, caps):
    """
    All tuples ``c`` with ``sum(c) = total`` and ``0 <= c[i] <= caps[i]``
    """
    if len(caps) == 0:
        if total == 0:
            yield ()
        return
    if total > sum(caps):
        return
    for first in range(min(total, caps[0]), -1, -1):
        for rest in _distributions(total - first, caps[1:]):
            yield (first,) + rest


class _MoveSearch(object):
    """
    Exhaustive search over the voter movements of a fixed dissolved set.
    Dissolved districts are processed in ascending order, the state is the
    number of voters and of A-supporters every remaining district has
    received so far.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
    dissolved: iterable of int
    mode: str
        ``'plain'`` only moves voters, ``'max'`` maximizes the number of
        won districts and ``'fixed'`` requires the districts in `winning`
        to be won
    winning: iterable of int (optional)
        the districts to win in ``'fixed'`` mode
    """

    def __init__(self, inst, dissolved, mode='plain', winning=()):
        self.inst = inst
        self.mode = mode
        self.dissolved = sorted(dissolved)
        dissolved_set = set(self.dissolved)
        self.remaining = [v for v in range(inst.n) if v not in dissolved_set]
        rem_index = {v: j for j, v in enumerate(self.remaining)}
        graph = inst.graph
        self.nbrs = [[rem_index[y] for y in graph.getNeighbors(x) if y in rem_index] \
                     for x in self.dissolved]
        # number of not yet processed dissolved neighbors of every remaining district
        self.future = []
        for k in range(len(self.dissolved) + 1):
            count = [0] * len(self.remaining)
            for nbrs in self.nbrs[k:]:
                for j in nbrs:
                    count[j] += 1
            self.future.append(count)
        winning = set(winning)
        self.kappa = []
        self.impossible = False
        for v in self.remaining:
            demand = inst.demand(v) if inst.is_biased else 0
            if mode == 'max':
                self.kappa.append(demand if demand <= inst.delta_s else None)
            elif mode == 'fixed' and v in winning:
                if demand > inst.delta_s:
                    self.impossible = True
                self.kappa.append(demand)
            else:
                self.kappa.append(None)
        self.memo = {}

    def _score(self, received_a):
        if self.mode == 'max':
            return sum(1 for kap, rec in zip(self.kappa, received_a) \
                         if kap is not None and rec >= kap)
        if self.mode == 'fixed':
            ok = all(kap is None or rec >= kap for kap, rec in zip(self.kappa, received_a))
            return 0 if ok else None
        return 0

    def _best(self, k, received, received_a):
        key = (k, received, received_a)
        if key in self.memo:
            return self.memo[key][0]
        inst = self.inst
        s, delta_s = inst.s, inst.delta_s
        if k == len(self.dissolved):
            if all(rec == delta_s for rec in received):
                result = (self._score(received_a), None)
            else:
                result = (None, None)
            self.memo[key] = result
            return result[0]
        for j, rec in enumerate(received):
            if delta_s - rec > s * self.future[k][j]:
                self.memo[key] = (None, None)
                return None
        nbrs = self.nbrs[k]
        alpha = inst.getAlpha(self.dissolved[k])
        best, best_move = None, None
        caps = [min(s, delta_s - received[j]) for j in nbrs]
        for z in _distributions(s, caps):
            new_received = list(received)
            for j, value in zip(nbrs, z):
                new_received[j] += value
            new_received = tuple(new_received)
            for z_a in _distributions(alpha, z):
                new_received_a = list(received_a)
                for j, value in zip(nbrs, z_a):
                    if self.kappa[j] is not None:
                        new_received_a[j] = min(self.kappa[j], new_received_a[j] + value)
                new_received_a = tuple(new_received_a)
                value = self._best(k + 1, new_received, new_received_a)
                if value is not None and (best is None or value > best):
                    best, best_move = value, (z, z_a, new_received, new_received_a)
        self.memo[key] = (best, best_move)
        return best

    def run(self):
        """
        Returns
        -------
        score: int or ``None``
            ``None`` if no movement exists
        moves: dict
        a_moves: dict
        winning: list of int
        """
        if self.impossible:
            return None, None, None, None
        received = tuple(0 for _ in self.remaining)
        received_a = received
        score = self._best(0, received, received_a)
        if score is None:
            return None, None, None, None
        moves, a_moves = {}, {}
        for k, x in enumerate(self.dissolved):
            _, (z, z_a, received, received_a) = self.memo[(k, received, received_a)]
            for j, value, a_value in zip(self.nbrs[k], z, z_a):
                if value > 0:
                    moves[(x, self.remaining[j])] = value
                if a_value > 0:
                    a_moves[(x, self.remaining[j])] = a_value
        winning = [v for v, kap, rec in zip(self.remaining, self.kappa, received_a) \
                     if kap is not None and rec >= kap]
        return score, moves, a_moves, winning


def _checkSize(inst, max_n):
    if inst.n > max_n:
        raise ValueError('instance has %d districts, the brute force oracle is ' \
                         'limited to %d' % (inst.n, max_n))


def _oracleShard(inst, mode, shard, n_shard, upper):
    """
    Returns ``(best score, index of dissolved set, solution)`` over the
    dissolved sets with index ``shard`` modulo ``n_shard``.
    """
    d = inst.derivedCounts().d
    best, best_index, best_sol = -1, -1, None
    for idx, dissolved in enumerate(itertools.combinations(range(inst.n), d)):
        if idx % n_shard != shard:
            continue
        score, moves, a_moves, winning = _MoveSearch(inst, dissolved, mode=mode).run()
        if score is not None and score > best:
            base = Dissolution(dissolved, moves)
            best, best_index = score, idx
            best_sol = base if mode == 'plain' else BiasedDissolution(base, a_moves, winning)
            if best >= upper:
                break
    return best, best_index, best_sol


def _runOracle(inst, mode, upper, parallel, max_workers):
    if parallel:
        if max_workers is None:
            raise ValueError('need to provide number of workers if parallel is True')
        args_list = [[inst for _ in range(max_workers)],
                     [mode for _ in range(max_workers)],
                     list(range(max_workers)),
                     [max_workers for _ in range(max_workers)],
                     [upper for _ in range(max_workers)]]
        with concurrent.futures.ProcessPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(_oracleShard, *args_list))
    else:
        results = [_oracleShard(inst, mode, 0, 1, upper)]
    return min(results, key=lambda res: (-res[0], res[1]))


def bruteForceDissolution(inst, max_n=MAX_ORACLE_N, parallel=False, max_workers=None):
    """
    Decide whether an instance admits a dissolution by trying every
    dissolved set and every voter movement. A-supporters are ignored.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
    max_n: int (optional, default ``MAX_ORACLE_N``)
        larger instances are refused
    parallel: bool (optional, default ``False``)
    max_workers: int (optional)

    Returns
    -------
    :class:`dissolve.SolveOutcome`
        witness of the lexicographically first feasible dissolved set
    """
    _checkSize(inst, max_n)
    if not inst.derivedCounts().feasible:
        return SolveOutcome.infeasible(strategy='oracle')
    best, _, sol = _runOracle(inst.asPlain(), 'plain', 0, parallel, max_workers)
    if best < 0:
        return SolveOutcome.infeasible(strategy='oracle')
    return SolveOutcome(True, sol, strategy='oracle')


def bruteForceBiased(inst, max_n=MAX_ORACLE_BIASED_N, parallel=False, max_workers=None):
    """
    Maximize the number of districts won by party A by trying every
    dissolved set and every movement of voters and A-supporters. The
    winning set of a movement consists of all remaining districts with a
    strict A majority.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
        with A-supporters
    max_n: int (optional, default ``MAX_ORACLE_BIASED_N``)
        larger instances are refused
    parallel: bool (optional, default ``False``)
    max_workers: int (optional)

    Returns
    -------
    :class:`dissolve.SolveOutcome`
    """
    inst.requireAlpha()
    _checkSize(inst, max_n)
    counts = inst.derivedCounts()
    if not counts.feasible:
        return SolveOutcome.infeasible(strategy='oracle')
    upper = min(counts.r, sum(1 for v in range(inst.n) if inst.isWinnable(v)))
    best, _, sol = _runOracle(inst, 'max', upper, parallel, max_workers)
    if best < 0:
        return SolveOutcome.infeasible(strategy='oracle')
    return SolveOutcome(True, sol, strategy='oracle')


def bruteForceFixedRoles(inst, dissolved, winning=(), max_n=MAX_ORACLE_BIASED_N):
    """
    Decide by exhaustive search whether a biased dissolution with the given
    dissolved and winning districts exists.

    Returns
    -------
    :class:`dissolve.SolveOutcome`
    """
    _checkSize(inst, max_n)
    dissolved, winning = sorted(set(dissolved)), sorted(set(winning))
    counts = inst.derivedCounts()
    if not counts.feasible or len(dissolved) != counts.d:
        return SolveOutcome.infeasible(strategy='oracle')
    score, moves, a_moves, _ = _MoveSearch(inst, dissolved, mode='fixed',
                                           winning=winning).run()
    if score is None:
        return SolveOutcome.infeasible(strategy='oracle')
    base = Dissolution(dissolved, moves)
    if not inst.is_biased:
        return SolveOutcome(True, base, strategy='oracle')
    return SolveOutcome(True, BiasedDissolution(base, a_moves, winning), strategy='oracle')


def bruteForceStarPartition(graph, n_leaf):
    """
    Find a partition of the districts into stars with `n_leaf` leaves by
    backtracking.

    Parameters
    ----------
    graph: :class:`dissolve.Graph`
    n_leaf: int
        number of leaves ``t`` of every star

    Returns
    -------
    list of ``(center, leaves)`` or ``None``
    """
    n = graph.vertex_count
    if n % (n_leaf + 1) != 0:
        return None

    def extend(covered, partition):
        free = [v for v in range(n) if v not in covered]
        if not free:
            return list(partition)
        v = free[0]
        # v is a center
        options = [u for u in graph.getNeighbors(v) if u not in covered]
        for leaves in itertools.combinations(options, n_leaf):
            result = extend(covered | {v} | set(leaves), partition + [(v, leaves)])
            if result is not None:
                return result
        # v is a leaf of one of its neighbors
        for center in options:
            others = [u for u in graph.getNeighbors(center) \
                        if u not in covered and u != v]
            for leaves in itertools.combinations(others, n_leaf - 1):
                leaves = tuple(sorted((v,) + leaves))
                result = extend(covered | {center} | set(leaves),
                                partition + [(center, leaves)])
                if result is not None:
                    return result
        return None

    return extend(frozenset(), [])
