# Copyright (c) 2024 The phigraph developers

"""Command-line front end: ``phigraph <command> ...``.

`run` parses the arguments, dispatches to the library and returns a
`CommandResult`; `main` prints it and exits.  Exit codes:

    0   success, or a true verdict
    1   a false verdict (refuted, no known seed, failed checks)
    2   usage error (bad arguments, family strings, seed lists, tree files)
    3   the answer could not be computed (out of range, budget exhausted)
"""

import argparse
import json
import logging
import sys
from typing import NamedTuple

from .._phigraphcore import SeedSet, build, export, leaves, minimal_seed
from ..errors import DomainError, FamilySpecError, PhiGraphError
from ..families import FamilySpec, generate, known_seed
from ..recognizer import DEFAULT_BUDGET, REALIZED, REFUTED, Recognizer, parse_tree
from ..totient import chain, inverse_totient, inverse_totient_brute
from ..totient import perfect_totients, totient
from ..verify import format_table, run_checks


logger = logging.getLogger(__name__)

PROG = 'phigraph'


class CommandResult(NamedTuple):
    exit_code: int
    payload: str = ''
    message: str = ''


class UsageError(Exception):
    pass


# =============================================================================
def make_parser():
    parser = argparse.ArgumentParser(
            prog=PROG,
            description="Graphs of iterated Euler phi: build, invert, recognize."
            )
    parser.add_argument('--json', action='store_true',
                        help="print numeric results as JSON")
    parser.add_argument('--verbose', action='store_true',
                        help="log debugging information to stderr")
    sub = parser.add_subparsers(dest='command', required=True)

    cmd = sub.add_parser('phi', help="Euler's totient of N")
    cmd.add_argument('n', type=int)

    cmd = sub.add_parser('chain', help="iterates of phi from N down to 1, R(N), Phi(N)")
    cmd.add_argument('n', type=int)

    cmd = sub.add_parser('invphi', help="all x with phi(x) = M")
    cmd.add_argument('m', type=int)
    cmd.add_argument('--brute', type=int, metavar='BOUND',
                     help="scan x <= BOUND instead of solving")

    cmd = sub.add_parser('build', help="the graph of a seed list (JSON by default)")
    cmd.add_argument('seeds')
    fmt = cmd.add_mutually_exclusive_group()
    fmt.add_argument('--dot', action='store_true')
    fmt.add_argument('--graphml', action='store_true')

    cmd = sub.add_parser('leaves', help="the leaves of the graph of a seed list")
    cmd.add_argument('seeds')

    cmd = sub.add_parser('seed-min', help="the minimal seed of the graph of a seed list")
    cmd.add_argument('seeds')

    cmd = sub.add_parser('recognize', help="decide whether a tree is a phi-graph")
    src = cmd.add_mutually_exclusive_group(required=True)
    src.add_argument('--family', metavar='SPEC')
    src.add_argument('--tree', metavar='FILE', help="edge list or DOT; '-' reads stdin")
    cmd.add_argument('--budget', type=int, default=DEFAULT_BUDGET)

    cmd = sub.add_parser('generate', help="the tree shape of a family")
    cmd.add_argument('spec')
    cmd.add_argument('--dot', action='store_true')

    cmd = sub.add_parser('known-seed', help="a constructive seed for a family")
    cmd.add_argument('spec')

    cmd = sub.add_parser('ptn', help="perfect totient numbers")
    cmd.add_argument('--upto', type=int, default=10**4)

    cmd = sub.add_parser('verify-paper', help="run the verification suite")
    cmd.add_argument('--only', type=int, nargs='+', metavar='N')

    return parser


# =============================================================================
def run(argv=None, stdin=None):
    """Execute one command line and return its `CommandResult`."""
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as err:  # argparse has already printed the usage
        return CommandResult(2 if err.code else 0)

    logging.basicConfig(
            stream=sys.stderr,
            level=logging.DEBUG if args.verbose else logging.WARNING,
            format="%(levelname)s %(name)s: %(message)s"
            )
    handler = COMMANDS[args.command]
    try:
        return handler(args, stdin if stdin is not None else sys.stdin)
    except UsageError as err:
        return CommandResult(2, message=f"{PROG}: error: {err}")
    except PhiGraphError as err:
        return CommandResult(3, message=f"{PROG}: error: {err}")


def main(argv=None):
    result = run(argv)
    if result.payload:
        sys.stdout.write(result.payload)
    if result.message:
        print(result.message, file=sys.stderr)
    sys.exit(result.exit_code)


# =============================================================================
def _seed(text):
    try:
        return SeedSet.parse(text)
    except DomainError as err:
        raise UsageError(err) from None


def _family(text):
    try:
        return FamilySpec.parse(text)
    except FamilySpecError as err:
        raise UsageError(err) from None


def _tree(path, stdin):
    try:
        if path == '-':
            text = stdin.read()
        else:
            with open(path) as file:
                text = file.read()
        return parse_tree(text)
    except (OSError, DomainError) as err:
        raise UsageError(err) from None


def _numbers(args, values, **fields):
    if args.json:
        return json.dumps(dict(fields, values=list(values))) + '\n'
    return ' '.join(map(str, values)) + '\n'


# =============================================================================
def cmd_phi(args, stdin):
    value = totient(args.n)
    if args.json:
        return CommandResult(0, json.dumps(dict(n=args.n, phi=value)) + '\n')
    return CommandResult(0, f"{value}\n")


def cmd_chain(args, stdin):
    c = chain(args.n)
    if args.json:
        return CommandResult(0, json.dumps(c._asdict()) + '\n')
    values = ' '.join(map(str, c.values))
    return CommandResult(0, f"{values}\nR={c.steps} Phi={c.phi_sum}\n")


def cmd_invphi(args, stdin):
    if args.brute is None:
        found = inverse_totient(args.m)
    else:
        found = inverse_totient_brute(args.m, args.brute)
    return CommandResult(0, _numbers(args, found.solutions, target=args.m))


def cmd_build(args, stdin):
    fmt = 'dot' if args.dot else 'graphml' if args.graphml else 'json'
    return CommandResult(0, export(build(_seed(args.seeds)), fmt) + '\n')


def cmd_leaves(args, stdin):
    return CommandResult(0, _numbers(args, sorted(leaves(build(_seed(args.seeds))))))


def cmd_seed_min(args, stdin):
    seed = minimal_seed(build(_seed(args.seeds)))
    return CommandResult(0, _numbers(args, sorted(seed)))


def cmd_recognize(args, stdin):
    if args.family is not None:
        tree = generate(_family(args.family))
    else:
        tree = _tree(args.tree, stdin)
    if args.budget < 1:
        raise UsageError("--budget must be at least 1")
    result = Recognizer(budget=args.budget).recognize(tree)
    report = dict(verdict=result.verdict, nodes_explored=result.nodes_explored,
                  roots_tried=result.roots_tried)
    if result.verdict == REALIZED:
        report.update(root=result.root,
                      labeling={str(v): x for v, x in result.labeling.items()},
                      minimal_seed=sorted(result.minimal_seed))
        return CommandResult(0, json.dumps(report) + '\n')
    if result.verdict == REFUTED:
        return CommandResult(1, json.dumps(report) + '\n')
    return CommandResult(3, json.dumps(report) + '\n',
                         f"{PROG}: error: no verdict within {args.budget} expansions")


def cmd_generate(args, stdin):
    tree = generate(_family(args.spec))
    return CommandResult(0, tree.to_dot() if args.dot else tree.to_text())


def cmd_known_seed(args, stdin):
    seed = known_seed(_family(args.spec))
    if seed is None:
        return CommandResult(1, message=f"{PROG}: no known seed for {args.spec}")
    return CommandResult(0, ','.join(map(str, sorted(seed))) + '\n')


def cmd_ptn(args, stdin):
    return CommandResult(0, _numbers(args, perfect_totients(args.upto)))


def cmd_verify(args, stdin):
    try:
        results = run_checks(only=args.only)
    except KeyError as err:
        raise UsageError(err.args[0]) from None
    passed = all(r.passed for r in results)
    return CommandResult(0 if passed else 1, format_table(results))


COMMANDS = {
    'phi': cmd_phi,
    'chain': cmd_chain,
    'invphi': cmd_invphi,
    'build': cmd_build,
    'leaves': cmd_leaves,
    'seed-min': cmd_seed_min,
    'recognize': cmd_recognize,
    'generate': cmd_generate,
    'known-seed': cmd_known_seed,
    'ptn': cmd_ptn,
    'verify-paper': cmd_verify,
    }
