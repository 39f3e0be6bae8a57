"""
Non-negative solutions of ``x * s - y * delta_s = target``.
"""

import sympy


def _ceilDiv(a, b):
    return -(-a // b)


class BezoutPair(object):
    """
    Integers ``x >= 0`` and ``y`` with ``x * s - y * delta_s = target``.

    Attributes
    ----------
    x: int
    y: int
    target: int
    """

    def __init__(self, x, y, target):
        self.x = int(x)
        self.y = int(y)
        self.target = int(target)

    def __iter__(self):
        return iter((self.x, self.y))

    def __eq__(self, other):
        if isinstance(other, BezoutPair):
            return (self.x, self.y, self.target) == (other.x, other.y, other.target)
        return (self.x, self.y) == tuple(other)

    def __repr__(self):
        return 'BezoutPair(x=%d, y=%d, target=%d)' % (self.x, self.y, self.target)

    def satisfies(self, s, delta_s):
        return self.x * s - self.y * delta_s == self.target


def bezoutNonneg(s, delta_s, target, lower_bound=0):
    """
    Find the solution of ``x * s - y * delta_s = target`` with ``x >= 0``,
    ``y >= lower_bound`` and minimal ``x``.

    Starts from the extended Euclidean coefficients of ``s`` and
    ``delta_s`` and shifts along ``(delta_s / g, s / g)``, with ``g`` the
    greatest common divisor.

    Parameters
    ----------
    s: int
        positive
    delta_s: int
        positive
    target: int
        should be divisible by ``gcd(s, delta_s)``
    lower_bound: int (optional, default ``0``)
        lower bound on ``y``

    Returns
    -------
    :class:`BezoutPair`
    """
    s, delta_s, target = int(s), int(delta_s), int(target)
    if s <= 0 or delta_s <= 0:
        raise ValueError('`s` and `delta_s` should be positive integers')
    u, v, g = (int(c) for c in sympy.gcdex(s, delta_s))
    if target % g != 0:
        raise ValueError('target %d is not divisible by gcd(%d, %d) = %d' % \
                         (target, s, delta_s, g))
    k = target // g
    # u * s + v * delta_s = g
    x0, y0 = u * k, -v * k
    step_x, step_y = delta_s // g, s // g
    shift = max(_ceilDiv(-x0, step_x), _ceilDiv(lower_bound - y0, step_y))
    return BezoutPair(x0 + shift * step_x, y0 + shift * step_y, target)
