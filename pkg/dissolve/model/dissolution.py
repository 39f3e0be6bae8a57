"""
File contains:

    - :class:`Dissolution`
    - :class:`BiasedDissolution`
    - :class:`UsedEdgeSet`
    - :class:`Verdict`
    - :func:`verifyDissolution`
    - :func:`verifyBiasedDissolution`
    - :func:`usedEdgeSet`
"""

import warnings
from collections import defaultdict


def _asMoveDict(moves):
    move_dict = {}
    for key, value in dict(moves).items():
        key = tuple(int(v) for v in key)
        move_dict[key] = int(value)
    return move_dict


class Dissolution(object):
    """
    A set of dissolved districts together with the voter movement ``z``.

    Parameters
    ----------
    dissolved: iterable of int
        the dissolved districts ``D``
    moves: dict {(int, int): int}
        ``moves[(x, y)]`` voters move from dissolved district ``x`` to the
        non-dissolved neighbor ``y``. Missing pairs count as zero.

    Attributes
    ----------
    dissolved: frozenset of int
    moves: dict {(int, int): int}
        a copy of the voter movement
    """

    def __init__(self, dissolved, moves):
        self._dissolved = frozenset(int(v) for v in dissolved)
        self._moves = _asMoveDict(moves)

    def getDissolved(self):
        return self._dissolved

    def setDissolved(self, illegal):
        raise AttributeError("`dissolved` is a read-only attribute")

    dissolved = property(getDissolved, setDissolved)

    def getMoves(self):
        return dict(self._moves)

    def setMoves(self, illegal):
        raise AttributeError("`moves` is a read-only attribute")

    moves = property(getMoves, setMoves)

    def getMove(self, x, y):
        return self._moves.get((x, y), 0)

    def iterMoves(self, positive_only=True):
        """
        Iterate over ``((x, y), voters)`` in ascending key order
        """
        for key in sorted(self._moves):
            if not positive_only or self._moves[key] > 0:
                yield key, self._moves[key]

    def totalMoved(self):
        return sum(self._moves.values())

    def outgoing(self):
        out = defaultdict(int)
        for (x, _), value in self._moves.items():
            out[x] += value
        return out

    def incoming(self):
        inc = defaultdict(int)
        for (_, y), value in self._moves.items():
            inc[y] += value
        return inc

    def __eq__(self, other):
        if not isinstance(other, Dissolution):
            return NotImplemented
        return self._dissolved == other._dissolved and \
               dict(self.iterMoves()) == dict(other.iterMoves())

    def __hash__(self):
        return hash((self._dissolved, tuple(self.iterMoves())))

    def __str__(self):
        return 'Dissolution(D=%s, z=%s)' % \
               (sorted(self._dissolved), dict(self.iterMoves()))


class BiasedDissolution(object):
    """
    A dissolution extended with the movement of A-supporters and the set of
    districts won by party A.

    Parameters
    ----------
    base: :class:`Dissolution`
        the underlying dissolution ``(D, z)``
    a_moves: dict {(int, int): int}
        ``a_moves[(x, y)]`` A-supporters move from ``x`` to ``y``
    winning: iterable of int
        the districts ``R_alpha`` won by party A
    """

    def __init__(self, base, a_moves, winning):
        if not isinstance(base, Dissolution):
            raise ValueError('`base` should be a `dissolve.Dissolution`')
        self._base = base
        self._a_moves = _asMoveDict(a_moves)
        self._winning = frozenset(int(v) for v in winning)

    @property
    def base(self):
        return self._base

    @property
    def dissolved(self):
        return self._base.dissolved

    @property
    def moves(self):
        return self._base.moves

    def getMove(self, x, y):
        return self._base.getMove(x, y)

    def iterMoves(self, positive_only=True):
        return self._base.iterMoves(positive_only=positive_only)

    def getAMoves(self):
        return dict(self._a_moves)

    def setAMoves(self, illegal):
        raise AttributeError("`a_moves` is a read-only attribute")

    a_moves = property(getAMoves, setAMoves)

    def getAMove(self, x, y):
        return self._a_moves.get((x, y), 0)

    def getWinning(self):
        return self._winning

    def setWinning(self, illegal):
        raise AttributeError("`winning` is a read-only attribute")

    winning = property(getWinning, setWinning)

    def __eq__(self, other):
        if not isinstance(other, BiasedDissolution):
            return NotImplemented
        a_self = {k: v for k, v in self._a_moves.items() if v > 0}
        a_other = {k: v for k, v in other._a_moves.items() if v > 0}
        return self._base == other._base and a_self == a_other and \
               self._winning == other._winning

    def __hash__(self):
        return hash((self._base, self._winning))

    def __str__(self):
        a_moves = {k: v for k, v in sorted(self._a_moves.items()) if v > 0}
        return 'BiasedDissolution(D=%s, z=%s, z_alpha=%s, R_alpha=%s)' % \
               (sorted(self.dissolved), dict(self.iterMoves()), a_moves,
                sorted(self._winning))


class UsedEdgeSet(object):
    """
    The edges ``{x, y}`` that carry a positive number of voters.

    Attributes
    ----------
    edges: frozenset of tuple
        edges stored as ``(x, y)`` with ``x < y``
    """

    def __init__(self, edges):
        self.edges = frozenset((min(x, y), max(x, y)) for x, y in edges)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(sorted(self.edges))

    def __contains__(self, edge):
        x, y = edge
        return (min(x, y), max(x, y)) in self.edges

    def __eq__(self, other):
        if isinstance(other, UsedEdgeSet):
            return self.edges == other.edges
        return self.edges == frozenset((min(x, y), max(x, y)) for x, y in other)

    def __hash__(self):
        return hash(self.edges)

    def degrees(self):
        deg = defaultdict(int)
        for x, y in self.edges:
            deg[x] += 1
            deg[y] += 1
        return deg

    def isPerfectMatching(self, vertex_count):
        """
        Check whether every district is incident to exactly one used edge
        """
        deg = self.degrees()
        return all(deg[v] == 1 for v in range(vertex_count))


class Verdict(object):
    """
    Outcome of a verification.

    Attributes
    ----------
    accepted: bool
    prop: str or ``None``
        the first violated property, ``'a'`` to ``'e'``, ``'structure'`` for
        malformed input or ``'winning'`` for an invalid winning set
    district: int or ``None``
        the district at which the violation was found
    message: str
        human readable explanation
    """

    def __init__(self, accepted, prop=None, district=None, message=''):
        self.accepted = accepted
        self.prop = prop
        self.district = district
        self.message = message

    def __bool__(self):
        return self.accepted

    def __eq__(self, other):
        if not isinstance(other, Verdict):
            return NotImplemented
        return (self.accepted, self.prop, self.district) == \
               (other.accepted, other.prop, other.district)

    def __str__(self):
        if self.accepted:
            return 'accepted'
        verdict_string = 'rejected: property %s' % self.prop
        if self.district is not None:
            verdict_string += ' at district %d' % self.district
        if self.message:
            verdict_string += ' (' + self.message + ')'
        return verdict_string

    def toDict(self):
        return {'accepted': self.accepted, 'property': self.prop,
                'district': self.district, 'message': self.message}

    @staticmethod
    def accept():
        return Verdict(True)

    @staticmethod
    def reject(prop, district=None, message=''):
        return Verdict(False, prop=prop, district=district, message=message)


def _checkMoveKeys(inst, dissolved, moves, what, upper):
    graph = inst.graph
    for (x, y) in sorted(moves):
        value = moves[(x, y)]
        in_range = 0 <= x < inst.n and 0 <= y < inst.n
        boundary = in_range and x in dissolved and y not in dissolved and \
                   graph.hasEdge(x, y)
        if not boundary:
            if value == 0:
                warnings.warn('Ignoring zero %s on non-boundary pair (%d, %d)' % \
                              (what, x, y), UserWarning)
                continue
            return Verdict.reject('structure', district=x,
                    message='%s on (%d, %d) is not on a boundary pair' % (what, x, y))
        if not 0 <= value <= upper:
            return Verdict.reject('structure', district=x,
                    message='%s on (%d, %d) is %d, not in {0, ..., %d}' % \
                            (what, x, y, value, upper))
    return None


def verifyDissolution(inst, sol):
    """
    Check properties a) and b) of an ``(s, delta_s)``-dissolution

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
    sol: :class:`Dissolution` or :class:`BiasedDissolution`
        for biased solutions only the base is checked

    Returns
    -------
    :class:`Verdict`
        rejection names the first violated property and district
    """
    if isinstance(sol, BiasedDissolution):
        sol = sol.base
    dissolved = sol.dissolved
    for v in sorted(dissolved):
        if not 0 <= v < inst.n:
            return Verdict.reject('structure', district=v,
                                  message='dissolved district out of range')
    moves = {key: value for key, value in sol.iterMoves(positive_only=False)}
    verdict = _checkMoveKeys(inst, dissolved, moves, 'move', inst.s)
    if verdict is not None:
        return verdict
    out = sol.outgoing()
    inc = sol.incoming()
    # a) dissolved districts are empty
    for v in sorted(dissolved):
        if out[v] != inst.s:
            return Verdict.reject('a', district=v,
                    message='moves out %d voters, expected %d' % (out[v], inst.s))
    # b) remaining districts grow by delta_s
    for v in range(inst.n):
        if v not in dissolved and inc[v] != inst.delta_s:
            return Verdict.reject('b', district=v,
                    message='receives %d voters, expected %d' % (inc[v], inst.delta_s))
    return Verdict.accept()


def verifyBiasedDissolution(inst, sol):
    """
    Check properties a) to e) of an ``r_alpha``-biased
    ``(s, delta_s)``-dissolution, together with ``|R_alpha| >= r_alpha``.

    A district wins on a strict majority, ties go to party B.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
        must carry ``alpha``
    sol: :class:`BiasedDissolution`

    Returns
    -------
    :class:`Verdict`
    """
    inst.requireAlpha()
    verdict = verifyDissolution(inst, sol.base)
    if not verdict:
        return verdict
    dissolved = sol.dissolved
    a_moves = sol.getAMoves()
    verdict = _checkMoveKeys(inst, dissolved, a_moves, 'A-supporter move', inst.s)
    if verdict is not None:
        return verdict
    for v in sorted(sol.winning):
        if not 0 <= v < inst.n or v in dissolved:
            return Verdict.reject('winning', district=v,
                    message='winning district is dissolved or out of range')
    # c) A-supporters are part of the moved voters
    for (x, y) in sorted(a_moves):
        if a_moves[(x, y)] > sol.getMove(x, y):
            return Verdict.reject('c', district=x,
                    message='moves %d A-supporters but only %d voters to %d' % \
                            (a_moves[(x, y)], sol.getMove(x, y), y))
    a_out, a_in = defaultdict(int), defaultdict(int)
    for (x, y), value in a_moves.items():
        a_out[x] += value
        a_in[y] += value
    # d) no A-supporters remain
    for v in sorted(dissolved):
        if a_out[v] != inst.alpha[v]:
            return Verdict.reject('d', district=v,
                    message='moves out %d A-supporters, expected %d' % \
                            (a_out[v], inst.alpha[v]))
    # e) strict majority, compared over the integers
    for v in sorted(sol.winning):
        a_total = inst.alpha[v] + a_in[v]
        if not 2 * a_total > inst.s_new:
            return Verdict.reject('e', district=v,
                    message='%d A-supporters out of %d voters' % (a_total, inst.s_new))
    r_alpha = 0 if inst.r_alpha is None else inst.r_alpha
    if len(sol.winning) < r_alpha:
        return Verdict.reject('winning',
                message='%d winning districts, at least %d required' % \
                        (len(sol.winning), r_alpha))
    return Verdict.accept()


def usedEdgeSet(sol):
    """
    The edge set used by a dissolution

    Parameters
    ----------
    sol: :class:`Dissolution` or :class:`BiasedDissolution`

    Returns
    -------
    :class:`UsedEdgeSet`
    """
    return UsedEdgeSet(key for key, _ in sol.iterMoves(positive_only=True))
