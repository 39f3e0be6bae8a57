"""
File contains:

    - :class:`RoleAssignment`
    - :class:`SolveOutcome`
"""

from ..model.dissolution import BiasedDissolution, verifyDissolution, \
                                verifyBiasedDissolution


DISSOLVED = 'dissolved'
WINNING = 'winning'
LOSING = 'losing'
ROLES = (DISSOLVED, WINNING, LOSING)


class RoleAssignment(object):
    """
    Assigns every district one of the roles ``'dissolved'``, ``'winning'``
    or ``'losing'``.

    Parameters
    ----------
    roles: dict {int: str} or sequence of str
        the role of every district
    """

    def __init__(self, roles):
        if not isinstance(roles, dict):
            roles = dict(enumerate(roles))
        for v, role in roles.items():
            if role not in ROLES:
                raise ValueError('unknown role %s for district %d' % (role, v))
        self._roles = dict(roles)

    @classmethod
    def fromSets(cls, n, dissolved, winning=()):
        """
        Districts in `dissolved` and `winning` get those roles, all others
        are losing.
        """
        dissolved, winning = set(dissolved), set(winning)
        if dissolved & winning:
            raise ValueError('dissolved and winning districts should be disjoint')
        if not all(0 <= v < n for v in dissolved | winning):
            raise ValueError('role sets contain districts out of range')
        roles = {}
        for v in range(n):
            if v in dissolved:
                roles[v] = DISSOLVED
            elif v in winning:
                roles[v] = WINNING
            else:
                roles[v] = LOSING
        return cls(roles)

    def __getitem__(self, v):
        return self._roles[v]

    def __len__(self):
        return len(self._roles)

    def _select(self, role):
        return frozenset(v for v, r in self._roles.items() if r == role)

    @property
    def dissolved(self):
        return self._select(DISSOLVED)

    @property
    def winning(self):
        return self._select(WINNING)

    @property
    def losing(self):
        return self._select(LOSING)

    def __str__(self):
        return 'RoleAssignment(D=%s, R_alpha=%s)' % \
               (sorted(self.dissolved), sorted(self.winning))


class SolveOutcome(object):
    """
    Result of a solver.

    Attributes
    ----------
    feasible: bool
        whether a solution exists
    witness: :class:`dissolve.Dissolution`, :class:`dissolve.BiasedDissolution` or ``None``
        a solution, present when `feasible`
    achieved_r_alpha: int
        the number of districts won by party A in the witness
    strategy: str or ``None``
        name of the solver that produced the outcome
    """

    def __init__(self, feasible, witness=None, achieved_r_alpha=0, strategy=None):
        self.feasible = bool(feasible)
        self.witness = witness
        if feasible and isinstance(witness, BiasedDissolution):
            achieved_r_alpha = len(witness.winning)
        self.achieved_r_alpha = int(achieved_r_alpha) if feasible else 0
        self.strategy = strategy

    @staticmethod
    def infeasible(strategy=None):
        return SolveOutcome(False, strategy=strategy)

    def __bool__(self):
        return self.feasible

    def __str__(self):
        if not self.feasible:
            return 'SolveOutcome(infeasible)'
        return 'SolveOutcome(feasible, achieved_r_alpha=%d, witness=%s)' % \
               (self.achieved_r_alpha, str(self.witness))

    def reachesTarget(self, inst):
        """
        Whether the outcome answers the decision question of `inst` with
        yes, i.e. it is feasible and wins at least ``r_alpha`` districts
        """
        r_alpha = 0 if inst.r_alpha is None else inst.r_alpha
        return self.feasible and self.achieved_r_alpha >= r_alpha

    def verify(self, inst):
        """
        Check the witness against the instance. The winning set is only
        checked for strict majorities, not against ``inst.r_alpha``.

        Parameters
        ----------
        inst: :class:`dissolve.Instance`

        Returns
        -------
        :class:`dissolve.Verdict`
        """
        if isinstance(self.witness, BiasedDissolution):
            return verifyBiasedDissolution(inst.withAlpha(inst.alpha), self.witness)
        return verifyDissolution(inst, self.witness)
