"""
File contains:

    - :class:`XCInstance`
    - :func:`randomXCInstance`
    - :func:`generateDissolutionHardness`
    - :func:`coverToDissolution`
    - :func:`dissolutionToCover`
    - :func:`generateBiasedHardness`
    - :func:`coverToBiasedDissolution`

Dissolution instances built from exact cover instances. A yes-instance of
exact cover gives a dissolution instance with a solution and vice versa.
"""

import numpy as np

import itertools
import math

from ...model.instance import Graph, Instance
from ...model.dissolution import Dissolution, BiasedDissolution
from .bezout import bezoutNonneg


class XCInstance(object):
    """
    Exact cover instance: can the universe ``{0, ..., universe_size-1}`` be
    partitioned into sets from `sets`?

    Parameters
    ----------
    universe_size: int
        should be divisible by the set size
    sets: iterable of iterables of int
        every set has the same size ``t >= 3``
    set_size: int (optional)
        the set size ``t``, taken from the first set if not given

    Attributes
    ----------
    sets: tuple of tuple of int
        sets with their elements in ascending order
    q: int
        number of sets in an exact cover, ``universe_size / t``
    """

    def __init__(self, universe_size, sets, set_size=None):
        self.universe_size = int(universe_size)
        self.sets = tuple(tuple(sorted(set(int(x) for x in xc_set))) for xc_set in sets)
        if set_size is None:
            if len(self.sets) == 0:
                raise ValueError('`set_size` is required if there are no sets')
            set_size = len(self.sets[0])
        self.set_size = int(set_size)
        if self.set_size < 3:
            raise ValueError('sets should have at least three elements')
        if self.universe_size % self.set_size != 0:
            raise ValueError('universe size %d is not divisible by the set size %d' % \
                             (self.universe_size, self.set_size))
        for xc_set in self.sets:
            if len(xc_set) != self.set_size:
                raise ValueError('set %s does not have %d elements' % \
                                 (str(xc_set), self.set_size))
            if not all(0 <= x < self.universe_size for x in xc_set):
                raise ValueError('set %s has elements outside the universe' % str(xc_set))
        self.q = self.universe_size // self.set_size

    def __len__(self):
        return len(self.sets)

    def __str__(self):
        return 'XCInstance(|X|=%d, t=%d, C=%s)' % \
               (self.universe_size, self.set_size, list(self.sets))

    def findExactCover(self):
        """
        Brute force search over all ``q``-subcollections of the sets

        Returns
        -------
        tuple of int or ``None``
            indices of the sets in the lexicographically first exact cover
        """
        masks = [sum(1 << x for x in xc_set) for xc_set in self.sets]
        full = (1 << self.universe_size) - 1
        for cover in itertools.combinations(range(len(self.sets)), self.q):
            union = 0
            for idx in cover:
                if union & masks[idx]:
                    break
                union |= masks[idx]
            else:
                if union == full:
                    return cover
        return None

    def isExactCoverable(self):
        return self.findExactCover() is not None


def randomXCInstance(q, n_sets, set_size=3, seed=None, planted=True):
    """
    Random exact cover instance

    Parameters
    ----------
    q: int
        the universe has ``q * set_size`` elements
    n_sets: int
        number of sets
    set_size: int (optional, default ``3``)
    seed: int (optional)
        seed of the random generator
    planted: bool (optional, default ``True``)
        if ``True``, the first ``q`` sets are a shuffled exact cover and the
        instance is a yes-instance

    Returns
    -------
    :class:`XCInstance`
    """
    rng = np.random.default_rng(seed)
    universe_size = q * set_size
    sets = []
    if planted:
        if n_sets < q:
            raise ValueError('a planted cover needs at least q sets')
        perm = rng.permutation(universe_size)
        sets += [perm[ii * set_size:(ii + 1) * set_size].tolist() for ii in range(q)]
    while len(sets) < n_sets:
        sets.append(rng.choice(universe_size, size=set_size, replace=False).tolist())
    order = rng.permutation(len(sets))
    return XCInstance(universe_size, [sets[ii] for ii in order], set_size=set_size)


class _DissolutionLayout(object):
    """
    District ids of the exact cover reduction for ``s > delta_s``. Element
    ``u`` owns a clique of ``size_q`` districts whose first district is the
    port, set ``j`` owns a clique of ``size_r`` districts whose ``i``-th
    district is joined to the port of the ``i``-th element of the set.
    """

    def __init__(self, xc, s, delta_s):
        if s <= delta_s:
            raise ValueError('the reduction requires s > delta_s')
        g = math.gcd(s, delta_s)
        t = (s + delta_s) // g
        if t != xc.set_size:
            raise ValueError('(s + delta_s) / gcd(s, delta_s) = %d does not match ' \
                             'the set size %d' % (t, xc.set_size))
        self.xc, self.s, self.delta_s, self.g, self.t = xc, s, delta_s, g, t
        self.pair_q = bezoutNonneg(s, delta_s, g)
        self.pair_r = bezoutNonneg(s, delta_s, -(s + delta_s), lower_bound=t)
        self.size_q = self.pair_q.x + self.pair_q.y
        self.size_r = self.pair_r.x + self.pair_r.y
        self.set_offset = xc.universe_size * self.size_q
        self.n = self.set_offset + len(xc) * self.size_r

    def elementClique(self, u):
        return list(range(u * self.size_q, (u + 1) * self.size_q))

    def port(self, u):
        return u * self.size_q

    def setClique(self, j):
        base = self.set_offset + j * self.size_r
        return list(range(base, base + self.size_r))

    def edges(self):
        edges = []
        for u in range(self.xc.universe_size):
            edges += list(itertools.combinations(self.elementClique(u), 2))
        for j, xc_set in enumerate(self.xc.sets):
            clique = self.setClique(j)
            edges += list(itertools.combinations(clique, 2))
            edges += [(self.port(u), clique[i]) for i, u in enumerate(xc_set)]
        return edges


def generateDissolutionHardness(xc, s, delta_s):
    """
    Build a dissolution instance that has a solution iff `xc` has an exact
    cover.

    Clique sizes follow from ``x * s - y * delta_s = g`` for element cliques
    and ``x * s - y * delta_s = -(s + delta_s)`` with ``y >= t`` for set
    cliques, ``g = gcd(s, delta_s)``.

    Parameters
    ----------
    xc: :class:`XCInstance`
        with set size ``(s + delta_s) / g``
    s: int
    delta_s: int
        smaller than `s`

    Returns
    -------
    :class:`dissolve.Instance`
    """
    layout = _DissolutionLayout(xc, int(s), int(delta_s))
    return Instance(Graph(layout.n, layout.edges()), s, delta_s)


def _fill(sources, receivers, moves):
    """
    Move voters from `sources`, list of ``(district, voters)``, to
    `receivers`, list of ``(district, capacity)``, in order.
    """
    receivers = [[y, cap] for y, cap in receivers]
    qq = 0
    for x, supply in sources:
        while supply > 0:
            y, cap = receivers[qq]
            sent = min(supply, cap)
            if sent > 0:
                moves[(x, y)] = moves.get((x, y), 0) + sent
                supply -= sent
                receivers[qq][1] -= sent
            if receivers[qq][1] == 0:
                qq += 1


def coverToDissolution(xc, cover, s, delta_s):
    """
    Dissolution of the instance of :func:`generateDissolutionHardness`
    obtained from an exact cover.

    Parameters
    ----------
    xc: :class:`XCInstance`
    cover: iterable of int
        indices of the sets in an exact cover
    s: int
    delta_s: int

    Returns
    -------
    :class:`dissolve.Dissolution`
    """
    layout = _DissolutionLayout(xc, int(s), int(delta_s))
    cover = set(cover)
    x_q, x_r, g, t = layout.pair_q.x, layout.pair_r.x, layout.g, layout.t
    covering_set = {}
    for j in cover:
        for i, u in enumerate(xc.sets[j]):
            if u in covering_set:
                raise ValueError('sets of the cover are not disjoint')
            covering_set[u] = (j, i)
    if len(covering_set) != xc.universe_size:
        raise ValueError('sets of the cover do not cover the universe')

    dissolved, moves = [], {}
    for u in range(xc.universe_size):
        clique = layout.elementClique(u)
        j, i = covering_set[u]
        moves[(layout.port(u), layout.setClique(j)[i])] = g
        dissolved += clique[:x_q]
        sources = [(clique[0], s - g)] + [(x, s) for x in clique[1:x_q]]
        _fill(sources, [(y, delta_s) for y in clique[x_q:]], moves)
    for j in range(len(xc)):
        clique = layout.setClique(j)
        if j in cover:
            dissolved += clique[t:t + x_r]
            sources = [(x, s) for x in clique[t:t + x_r]]
            receivers = [(y, delta_s - g) for y in clique[:t]] + \
                        [(y, delta_s) for y in clique[t + x_r:]]
        else:
            n_keep = layout.size_r - x_r - 1
            dissolved += clique[n_keep:]
            sources = [(x, s) for x in clique[n_keep:]]
            receivers = [(y, delta_s) for y in clique[:n_keep]]
        _fill(sources, receivers, moves)
    return Dissolution(dissolved, moves)


def dissolutionToCover(xc, s, delta_s, sol):
    """
    Read the exact cover off a dissolution of the instance of
    :func:`generateDissolutionHardness`: the sets whose clique receives
    voters from element ports.

    Returns
    -------
    tuple of int
    """
    layout = _DissolutionLayout(xc, int(s), int(delta_s))
    cover = []
    for j, xc_set in enumerate(xc.sets):
        clique = layout.setClique(j)
        if any(sol.getMove(layout.port(u), clique[i]) > 0 for i, u in enumerate(xc_set)):
            cover.append(j)
    return tuple(cover)


class _BiasedLayout(object):
    """
    District ids of the biased exact cover reduction. Gadget ``k`` occupies
    ``2t+1`` consecutive ids: its center, ``t`` inner districts and ``t``
    element districts. Set districts and dummy districts follow.
    """

    def __init__(self, xc):
        self.xc = xc
        self.t = xc.set_size
        self.q = xc.q
        self.r = len(xc)
        if self.r < self.q:
            raise ValueError('the reduction requires at least q = %d sets' % self.q)
        self.set_offset = self.q * (2 * self.t + 1)
        self.dummy_offset = self.set_offset + self.r
        self.n = self.dummy_offset + self.r - self.q

    def center(self, k):
        return k * (2 * self.t + 1)

    def inner(self, k, i):
        return k * (2 * self.t + 1) + 1 + i

    def element(self, x):
        k, i = divmod(x, self.t)
        return k * (2 * self.t + 1) + 1 + self.t + i

    def setDistrict(self, j):
        return self.set_offset + j

    def dummy(self, k):
        return self.dummy_offset + k

    def edges(self):
        edges = []
        for k in range(self.q):
            for i in range(self.t):
                edges.append((self.center(k), self.inner(k, i)))
                edges.append((self.inner(k, i), self.element(k * self.t + i)))
        for j, xc_set in enumerate(self.xc.sets):
            edges += [(self.element(x), self.setDistrict(j)) for x in xc_set]
        for k in range(self.r - self.q):
            edges += [(self.dummy(k), self.setDistrict(j)) for j in range(self.r)]
        return edges

    def alpha(self):
        alpha = [0] * self.n
        for k in range(self.q):
            for i in range(self.t):
                alpha[self.inner(k, i)] = 2
                alpha[self.element(k * self.t + i)] = self.t
        for j in range(self.r):
            alpha[self.setDistrict(j)] = 1
        return alpha


def generateBiasedHardness(xc, t=None):
    """
    Build a biased dissolution instance with ``s = delta_s = t`` in which
    party A can win ``(t + 1) q`` districts iff `xc` has an exact cover.

    The instance consists of ``q`` gadgets, each a ``t``-star with center
    holding no A-supporters and leaves (inner districts) holding two, every
    leaf extended by an element district holding ``t``. Every set is a
    district with one A-supporter joined to its element districts, and
    ``r - q`` dummy districts without A-supporters are joined to all set
    districts.

    Parameters
    ----------
    xc: :class:`XCInstance`
        with ``r >= q`` sets
    t: int (optional)
        if given, should equal the set size of `xc`

    Returns
    -------
    :class:`dissolve.Instance`
        with ``2 t q + 2 r`` districts
    """
    if t is not None and t != xc.set_size:
        raise ValueError('t = %d does not match the set size %d' % (t, xc.set_size))
    layout = _BiasedLayout(xc)
    t = layout.t
    return Instance(Graph(layout.n, layout.edges()), t, t,
                    alpha=layout.alpha(), r_alpha=(t + 1) * layout.q)


def coverToBiasedDissolution(xc, cover):
    """
    Biased dissolution of the instance of :func:`generateBiasedHardness`
    obtained from an exact cover. All inner districts and the set districts
    of the cover are won.

    Parameters
    ----------
    xc: :class:`XCInstance`
    cover: iterable of int
        indices of the sets in an exact cover

    Returns
    -------
    :class:`dissolve.BiasedDissolution`
    """
    layout = _BiasedLayout(xc)
    t, cover = layout.t, sorted(set(cover))
    covering_set = {x: j for j in cover for x in xc.sets[j]}
    if len(cover) != xc.q or len(covering_set) != xc.universe_size:
        raise ValueError('not an exact cover')
    dissolved, moves, a_moves, winning = [], {}, {}, []
    for k in range(layout.q):
        dissolved.append(layout.center(k))
        for i in range(t):
            x = k * t + i
            inner, element = layout.inner(k, i), layout.element(x)
            set_district = layout.setDistrict(covering_set[x])
            dissolved.append(element)
            winning.append(inner)
            moves[(layout.center(k), inner)] = 1
            moves[(element, inner)] = a_moves[(element, inner)] = t - 1
            moves[(element, set_district)] = a_moves[(element, set_district)] = 1
    winning += [layout.setDistrict(j) for j in cover]
    uncovered = [j for j in range(layout.r) if j not in cover]
    for k, j in enumerate(uncovered):
        dissolved.append(layout.dummy(k))
        moves[(layout.dummy(k), layout.setDistrict(j))] = t
    return BiasedDissolution(Dissolution(dissolved, moves), a_moves, winning)
