"""
Pick the solver that fits an instance.
"""

import warnings

from .outcome import SolveOutcome
from .fixedroles import solveFixedRoles
from .exact import solveExact, MAX_EXACT_N
from .specialcases import solveEqualSizes, solveBiased11, solveClique


STRATEGIES = ('auto', 'flow-roles', 'matching', 'biased11', 'clique', 'exact')


def chooseStrategy(inst):
    """
    The strategy `solve` uses for ``strategy='auto'``

    Parameters
    ----------
    inst: :class:`dissolve.Instance`

    Returns
    -------
    str
    """
    if not inst.is_biased and inst.s == inst.delta_s:
        return 'matching'
    if inst.is_biased and inst.s == 1 and inst.delta_s == 1:
        return 'biased11'
    if inst.graph.isComplete():
        return 'clique'
    return 'exact'


def solve(inst, strategy='auto', roles=None, max_n=MAX_EXACT_N,
                parallel=False, max_workers=None, pprint=False):
    """
    Solve a (biased) dissolution instance.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
    strategy: str (optional, default ``'auto'``)
        one of ``'auto'``, ``'flow-roles'``, ``'matching'``,
        ``'biased11'``, ``'clique'`` or ``'exact'``. ``'auto'`` checks
        divisibility first and then takes the first polynomial case that
        applies (equal sizes, biased ``(1, 1)``, complete graph), falling
        back on exact enumeration.
    roles: :class:`dissolve.RoleAssignment` (optional)
        the roles for ``strategy='flow-roles'``
    max_n: int (optional)
        size limit of the exact solver
    parallel: bool (optional, default ``False``)
        parallelize the exact solver
    max_workers: int (optional)
        number of processes for the exact solver
    pprint: bool (optional, default ``False``)
        print the chosen strategy

    Returns
    -------
    :class:`dissolve.SolveOutcome`
    """
    if strategy not in STRATEGIES:
        raise ValueError('unknown strategy %s, choose from %s' % \
                         (strategy, ', '.join(STRATEGIES)))
    if strategy == 'auto':
        if not inst.derivedCounts().feasible:
            if pprint: print('>>> n * delta_s is not divisible by s + delta_s')
            return SolveOutcome.infeasible(strategy='auto')
        strategy = chooseStrategy(inst)
    if pprint: print('>>> solving with strategy ' + strategy)
    if parallel and strategy != 'exact':
        warnings.warn('strategy %s runs single-threaded' % strategy, UserWarning)

    if strategy == 'flow-roles':
        if roles is None:
            raise ValueError('strategy flow-roles requires a role assignment')
        return solveFixedRoles(inst, roles.dissolved, roles.winning)
    elif strategy == 'matching':
        if inst.is_biased:
            warnings.warn('strategy matching ignores the A-supporter distribution',
                          UserWarning)
        return solveEqualSizes(inst)
    elif strategy == 'biased11':
        return solveBiased11(inst)
    elif strategy == 'clique':
        return solveClique(inst)
    return solveExact(inst, max_n=max_n, parallel=parallel,
                            max_workers=max_workers, pprint=pprint)
