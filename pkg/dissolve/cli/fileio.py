"""
File contains:

    - :func:`instanceToDict`
    - :func:`instanceFromDict`
    - :func:`readInstance`
    - :func:`parseDimacsEdges`
    - :func:`solutionToDict`
    - :func:`solutionFromDict`
    - :func:`readSolution`
    - :func:`readRoles`
    - :func:`readXC`
    - :func:`dumpJSON`

JSON codecs of the command line interface. Instance files hold ``n``,
``edges`` (0-indexed), ``s``, ``delta_s`` and optionally ``alpha`` and
``r_alpha``. Solution files hold ``feasible``, ``dissolved``, ``moves``
(list of ``{from, to, voters, a_supporters}``), ``winning`` and
``achieved_r_alpha``.
"""

import json
import sys

from ..model.instance import Graph, Instance
from ..model.dissolution import Dissolution, BiasedDissolution
from ..solvers.outcome import RoleAssignment, SolveOutcome
from ..tools.generators.xcreduction import XCInstance


INSTANCE_KEYS = ('n', 'edges', 's', 'delta_s', 'alpha', 'r_alpha')
SOLUTION_KEYS = ('feasible', 'dissolved', 'moves', 'winning', 'achieved_r_alpha')
MOVE_KEYS = ('from', 'to', 'voters', 'a_supporters')


def _load(path):
    try:
        if path == '-':
            return json.load(sys.stdin)
        with open(path, 'r') as file:
            return json.load(file)
    except ValueError as err:
        raise IOError('%s is not valid JSON: %s' % (path, str(err)))


def _readText(path):
    if path == '-':
        return sys.stdin.read()
    with open(path, 'r') as file:
        return file.read()


def _checkKeys(data, allowed, required, what):
    if not isinstance(data, dict):
        raise IOError('%s file should contain a JSON object' % what)
    unknown = sorted(set(data) - set(allowed))
    if unknown:
        raise IOError('unknown keys in %s file: %s' % (what, ', '.join(unknown)))
    missing = [key for key in required if key not in data]
    if missing:
        raise IOError('missing keys in %s file: %s' % (what, ', '.join(missing)))


def dumpJSON(data, stream=None):
    """
    Write `data` as deterministic JSON, keys sorted
    """
    if stream is None:
        stream = sys.stdout
    stream.write(json.dumps(data, indent=2, sort_keys=True) + '\n')


def instanceToDict(inst):
    data = {'n': inst.n, 'edges': [list(edge) for edge in inst.graph.iterEdges()],
            's': inst.s, 'delta_s': inst.delta_s}
    if inst.alpha is not None:
        data['alpha'] = list(inst.alpha)
    if inst.r_alpha is not None:
        data['r_alpha'] = inst.r_alpha
    return data


def instanceFromDict(data):
    """
    Parameters
    ----------
    data: dict
        decoded instance file

    Returns
    -------
    :class:`dissolve.Instance`

    Raises
    ------
    IOError
        if keys are unknown or missing or the instance is invalid
    """
    _checkKeys(data, INSTANCE_KEYS, ('n', 'edges', 's', 'delta_s'), 'instance')
    try:
        graph = Graph(data['n'], data['edges'])
        return Instance(graph, data['s'], data['delta_s'],
                        alpha=data.get('alpha'), r_alpha=data.get('r_alpha'))
    except (ValueError, TypeError) as err:
        raise IOError('invalid instance: ' + str(err))


def parseDimacsEdges(text, s, delta_s):
    """
    Parse a DIMACS edge list, ``p edge n m`` followed by lines ``e u v``
    with 1-indexed districts. Lines starting with ``c`` are comments.

    Returns
    -------
    :class:`dissolve.Instance`
    """
    if s is None or delta_s is None:
        raise IOError('DIMACS edge lists require --s and --delta-s')
    n, edges = None, []
    for line in text.splitlines():
        fields = line.split()
        if not fields or fields[0] == 'c':
            continue
        try:
            if fields[0] == 'p':
                n = int(fields[2])
            elif fields[0] == 'e':
                edges.append((int(fields[1]) - 1, int(fields[2]) - 1))
            else:
                raise IOError('unexpected DIMACS line: ' + line)
        except (IndexError, ValueError):
            raise IOError('malformed DIMACS line: ' + line)
    if n is None:
        raise IOError('DIMACS edge list without problem line')
    try:
        return Instance(Graph(n, edges), s, delta_s)
    except ValueError as err:
        raise IOError('invalid instance: ' + str(err))


def readInstance(path, fmt='json', s=None, delta_s=None):
    """
    Read an instance file, ``'-'`` reads from stdin

    Parameters
    ----------
    path: str
    fmt: str (optional, default ``'json'``)
        ``'json'`` or ``'dimacs-edges'``
    s, delta_s: int
        district size and increase for DIMACS edge lists
    """
    if fmt == 'dimacs-edges':
        return parseDimacsEdges(_readText(path), s, delta_s)
    return instanceFromDict(_load(path))


def solutionToDict(outcome):
    """
    Parameters
    ----------
    outcome: :class:`dissolve.SolveOutcome`

    Returns
    -------
    dict
    """
    data = {'feasible': outcome.feasible, 'dissolved': [], 'moves': [],
            'winning': [], 'achieved_r_alpha': outcome.achieved_r_alpha}
    sol = outcome.witness
    if not outcome.feasible or sol is None:
        return data
    data['dissolved'] = sorted(sol.dissolved)
    get_a_move = getattr(sol, 'getAMove', lambda x, y: 0)
    data['moves'] = [{'from': x, 'to': y, 'voters': value,
                      'a_supporters': get_a_move(x, y)} \
                     for (x, y), value in sol.iterMoves()]
    data['winning'] = sorted(getattr(sol, 'winning', ()))
    return data


def solutionFromDict(data, biased=False):
    """
    Parameters
    ----------
    data: dict
        decoded solution file
    biased: bool (optional, default ``False``)
        return a :class:`dissolve.BiasedDissolution`

    Returns
    -------
    :class:`dissolve.Dissolution` or :class:`dissolve.BiasedDissolution`
    """
    _checkKeys(data, SOLUTION_KEYS, ('dissolved', 'moves'), 'solution')
    moves, a_moves = {}, {}
    try:
        for move in data['moves']:
            _checkKeys(move, MOVE_KEYS, ('from', 'to', 'voters'), 'solution move')
            key = (int(move['from']), int(move['to']))
            moves[key] = int(move['voters'])
            a_moves[key] = int(move.get('a_supporters', 0))
        base = Dissolution(data['dissolved'], moves)
        if not biased:
            return base
        return BiasedDissolution(base, a_moves, data.get('winning', []))
    except (TypeError, ValueError) as err:
        raise IOError('invalid solution: ' + str(err))


def readSolution(path, biased=False):
    return solutionFromDict(_load(path), biased=biased)


def outcomeFromDict(data, biased=False):
    """
    Inverse of :func:`solutionToDict`
    """
    if not data.get('feasible', True):
        return SolveOutcome.infeasible()
    sol = solutionFromDict(data, biased=biased)
    return SolveOutcome(True, sol, achieved_r_alpha=data.get('achieved_r_alpha', 0))


def readRoles(path, n):
    """
    Read a role file ``{"dissolved": [...], "winning": [...]}``

    Returns
    -------
    :class:`dissolve.RoleAssignment`
    """
    data = _load(path)
    _checkKeys(data, ('dissolved', 'winning'), ('dissolved',), 'roles')
    try:
        return RoleAssignment.fromSets(n, data['dissolved'], data.get('winning', []))
    except (TypeError, ValueError) as err:
        raise IOError('invalid roles: ' + str(err))


def readXC(path):
    """
    Read an exact cover file ``{"universe_size": int, "sets": [[...], ...]}``

    Returns
    -------
    :class:`dissolve.XCInstance`
    """
    data = _load(path)
    _checkKeys(data, ('universe_size', 'sets', 'set_size'), ('universe_size', 'sets'),
               'exact cover')
    try:
        return XCInstance(data['universe_size'], data['sets'],
                          set_size=data.get('set_size'))
    except (TypeError, ValueError) as err:
        raise IOError('invalid exact cover instance: ' + str(err))
