"""
Solve (biased) dissolution when the dissolved and winning districts are
given.
"""

from ..flow.flownetwork import maxFlow
from ..flow.rolenetwork import buildRoleNetwork, extractBiasedSolution, \
                               buildDissolutionNetwork, extractDissolution
from .outcome import SolveOutcome


def solveFixedRoles(inst, dissolved, winning=()):
    """
    Decide whether a biased dissolution with the given roles exists by a
    single maximum flow computation.

    Parameters
    ----------
    inst: :class:`dissolve.Instance`
        for plain instances `winning` should be empty and the witness is a
        :class:`dissolve.Dissolution`
    dissolved: iterable of int
        the dissolved districts
    winning: iterable of int (optional)
        the districts party A should win

    Returns
    -------
    :class:`dissolve.SolveOutcome`
    """
    dissolved, winning = frozenset(dissolved), frozenset(winning)
    counts = inst.derivedCounts()
    if not counts.feasible or len(dissolved) != counts.d:
        return SolveOutcome.infeasible(strategy='flow-roles')
    if not inst.is_biased:
        if winning:
            raise ValueError('winning districts require an A-supporter distribution')
        net = buildDissolutionNetwork(inst, dissolved)
        sol = extractDissolution(inst, dissolved, net, maxFlow(net))
        if sol is None:
            return SolveOutcome.infeasible(strategy='flow-roles')
        return SolveOutcome(True, sol, strategy='flow-roles')
    rn = buildRoleNetwork(inst, dissolved, winning)
    if rn is None:
        return SolveOutcome.infeasible(strategy='flow-roles')
    sol = extractBiasedSolution(rn, maxFlow(rn.network))
    if sol is None:
        return SolveOutcome.infeasible(strategy='flow-roles')
    return SolveOutcome(True, sol, strategy='flow-roles')
