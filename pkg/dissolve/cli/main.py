"""
Command line interface ``dissolve`` with the subcommands ``solve``,
``verify``, ``generate`` and ``oracle``.

Exit codes: 0 feasible or accepted, 1 infeasible or rejected, 2 usage,
parse or self-check error.
"""

import argparse
import contextlib
import sys

from ..model.instance import Graph
from ..model.dissolution import verifyDissolution, verifyBiasedDissolution
from ..solvers.dispatch import solve, STRATEGIES
from ..solvers.exact import MAX_EXACT_N
from ..tools.oracle import bruteForceDissolution, bruteForceBiased, \
                           MAX_ORACLE_N, MAX_ORACLE_BIASED_N
from ..tools.generators.xcreduction import randomXCInstance, \
                                           generateDissolutionHardness, \
                                           generateBiasedHardness
from ..tools.generators.twofactor import biased22Instance
from ..tools.generators.randominstances import generateRandom
from . import fileio


EXIT_OK = 0
EXIT_NO = 1
EXIT_ERROR = 2

GENERATORS = ('xc-dissolution', 'xc-biased', 'two-factor', 'random', 'grid', 'clique')


def _addInstanceArgs(parser):
    parser.add_argument('--input', default='-',
                        help='instance file, "-" for stdin (default)')
    parser.add_argument('--format', default='json', choices=('json', 'dimacs-edges'),
                        help='instance file format')
    parser.add_argument('--s', type=int, default=None,
                        help='district size for DIMACS edge lists')
    parser.add_argument('--delta-s', type=int, default=None,
                        help='district size increase for DIMACS edge lists')
    parser.add_argument('--verbose', action='store_true',
                        help='print progress information to stderr')


def buildParser():
    parser = argparse.ArgumentParser(prog='dissolve',
        description='Solve, verify and generate (biased) district dissolution instances')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    solve_parser = subparsers.add_parser('solve', help='solve an instance')
    _addInstanceArgs(solve_parser)
    solve_parser.add_argument('--strategy', default='auto', choices=STRATEGIES)
    solve_parser.add_argument('--roles', default=None,
                              help='role file for --strategy flow-roles')
    solve_parser.add_argument('--threads', type=int, default=1,
                              help='worker processes of the exact solver')
    solve_parser.add_argument('--max-n', type=int, default=MAX_EXACT_N,
                              help='size limit of the exact solver')

    verify_parser = subparsers.add_parser('verify', help='verify a solution')
    _addInstanceArgs(verify_parser)
    verify_parser.add_argument('--solution', required=True, help='solution file')

    oracle_parser = subparsers.add_parser('oracle', help='solve by brute force')
    _addInstanceArgs(oracle_parser)
    oracle_parser.add_argument('--threads', type=int, default=1)
    oracle_parser.add_argument('--max-n', type=int, default=None,
                               help='size limit, default %d (plain) or %d (biased)' % \
                                    (MAX_ORACLE_N, MAX_ORACLE_BIASED_N))

    gen_parser = subparsers.add_parser('generate', help='generate an instance')
    gen_parser.add_argument('kind', choices=GENERATORS)
    gen_parser.add_argument('--seed', type=int, default=None)
    gen_parser.add_argument('--n', type=int, default=None,
                            help='number of districts (random, clique, two-factor cycle)')
    gen_parser.add_argument('--p', type=float, default=0.5, help='edge probability')
    gen_parser.add_argument('--rows', type=int, default=None)
    gen_parser.add_argument('--cols', type=int, default=None)
    gen_parser.add_argument('--s', type=int, default=1)
    gen_parser.add_argument('--delta-s', type=int, default=1)
    gen_parser.add_argument('--alpha-mode', default=None,
                            choices=('uniform', 'binary', 'zero'))
    gen_parser.add_argument('--r-alpha', type=int, default=None)
    gen_parser.add_argument('--xc', default=None,
                            help='exact cover file, a random one is drawn if not given')
    gen_parser.add_argument('--q', type=int, default=1,
                            help='random exact cover: universe size is q times the set size')
    gen_parser.add_argument('--sets', type=int, default=None,
                            help='random exact cover: number of sets')
    gen_parser.add_argument('--set-size', type=int, default=3)
    gen_parser.add_argument('--no-planted', action='store_true',
                            help='random exact cover without a planted solution')
    return parser


def _readInstance(args):
    return fileio.readInstance(args.input, fmt=args.format, s=args.s,
                               delta_s=args.delta_s)


def _diagnostics(args):
    if args.verbose:
        return contextlib.redirect_stdout(sys.stderr)
    return contextlib.nullcontext()


def _emitOutcome(inst, outcome):
    if outcome.feasible:
        verdict = outcome.verify(inst)
        if not verdict:
            sys.stderr.write('self-check failed: %s\n' % str(verdict))
            return EXIT_ERROR
    fileio.dumpJSON(fileio.solutionToDict(outcome))
    return EXIT_OK if outcome.reachesTarget(inst) else EXIT_NO


def cmdSolve(args):
    inst = _readInstance(args)
    roles = None
    if args.roles is not None:
        roles = fileio.readRoles(args.roles, inst.n)
    with _diagnostics(args):
        outcome = solve(inst, strategy=args.strategy, roles=roles, max_n=args.max_n,
                        parallel=args.threads > 1, max_workers=args.threads,
                        pprint=args.verbose)
    return _emitOutcome(inst, outcome)


def cmdVerify(args):
    inst = _readInstance(args)
    sol = fileio.readSolution(args.solution, biased=inst.is_biased)
    if inst.is_biased:
        verdict = verifyBiasedDissolution(inst, sol)
    else:
        verdict = verifyDissolution(inst, sol)
    fileio.dumpJSON(verdict.toDict())
    return EXIT_OK if verdict else EXIT_NO


def cmdOracle(args):
    inst = _readInstance(args)
    parallel, max_workers = args.threads > 1, args.threads
    if inst.is_biased:
        max_n = MAX_ORACLE_BIASED_N if args.max_n is None else args.max_n
        outcome = bruteForceBiased(inst, max_n=max_n, parallel=parallel,
                                   max_workers=max_workers)
    else:
        max_n = MAX_ORACLE_N if args.max_n is None else args.max_n
        outcome = bruteForceDissolution(inst, max_n=max_n, parallel=parallel,
                                        max_workers=max_workers)
    return _emitOutcome(inst, outcome)


def _xcInstance(args):
    if args.xc is not None:
        return fileio.readXC(args.xc)
    n_sets = args.q + 2 if args.sets is None else args.sets
    return randomXCInstance(args.q, n_sets, set_size=args.set_size, seed=args.seed,
                            planted=not args.no_planted)


def cmdGenerate(args):
    if args.kind == 'xc-dissolution':
        inst = generateDissolutionHardness(_xcInstance(args), args.s, args.delta_s)
    elif args.kind == 'xc-biased':
        inst = generateBiasedHardness(_xcInstance(args))
    elif args.kind == 'two-factor':
        if args.n is None:
            raise ValueError('two-factor requires --n')
        inst = biased22Instance(Graph.cycle(args.n))
    else:
        if args.kind != 'grid' and args.n is None:
            raise ValueError('%s requires --n' % args.kind)
        mode = 'random' if args.kind == 'random' else args.kind
        inst = generateRandom(n=args.n, edge_prob=args.p, s=args.s, delta_s=args.delta_s,
                              alpha_mode=args.alpha_mode, seed=args.seed, mode=mode,
                              rows=args.rows, cols=args.cols, r_alpha=args.r_alpha)
    fileio.dumpJSON(fileio.instanceToDict(inst))
    return EXIT_OK


COMMANDS = {'solve': cmdSolve, 'verify': cmdVerify,
            'generate': cmdGenerate, 'oracle': cmdOracle}


def main(argv=None):
    """
    Run the command line interface

    Parameters
    ----------
    argv: list of str (optional)
        arguments without the program name, ``sys.argv[1:]`` if not given

    Returns
    -------
    int
        the exit code
    """
    parser = buildParser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_ERROR if err.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (ValueError, IOError) as err:
        sys.stderr.write('dissolve: error: %s\n' % str(err))
        return EXIT_ERROR


def run():
    sys.exit(main())


if __name__ == '__main__':
    run()
