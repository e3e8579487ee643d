###
# Copyright (c) 2024-present, Branchkit Authors
# Licensed under The MIT License [see LICENSE for details]
###

"""

Command-line front end: ``branchkit branch``, ``branchkit verify`` and ``branchkit dim``.

Exit codes: 0 success, 1 verification failure, 2 usage error.

"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from .oops import BranchkitError
from .utils import constants
from .utils.constants import EmitFormat, Status, SubgroupKind, Suite
from .utils.misc import parse_range
from .harmonics import harmonic_dim, parse_harmonic
from .branching import BranchRequest, branch
from .verification import run_suite

__all__ = ['build_parser', 'cmd_branch', 'cmd_verify', 'cmd_dim', 'main']

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

_SIGNED_OPTIONS = ('--lambda', '--k')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='branchkit',
                                     description='Branching laws of small representations of GL(n,C).')
    parser.add_argument('--debug', action='store_true', help='Verbose logging.')
    commands = parser.add_subparsers(dest='command', required=True)

    emit = dict(choices=[str(f) for f in EmitFormat], default=str(EmitFormat.TEXT), help='Output format.')

    branch_parser = commands.add_parser('branch', help='Print the spectrum of a restriction.')
    branch_parser.add_argument('--n', type=int, required=True)
    branch_parser.add_argument('--subgroup', choices=[str(s) for s in SubgroupKind], required=True)
    branch_parser.add_argument('--k', type=int, default=0)
    branch_parser.add_argument('--lambda', dest='lam', default='0',
                               help='Exact rational "a" or "a/b", e.g. "--lambda -1/2".')
    branch_parser.add_argument('--p', type=int)
    branch_parser.add_argument('--q', type=int)
    branch_parser.add_argument('--m', type=int)
    branch_parser.add_argument('--truncate', type=int, help='List countable families up to this bound.')
    branch_parser.add_argument('--emit', **emit)

    verify_parser = commands.add_parser('verify', help='Run a verification suite.')
    verify_parser.add_argument('--suite', choices=[str(s) for s in Suite], default=str(Suite.ALL))
    verify_parser.add_argument('--n', help='Range "lo..hi" or a single value.')
    verify_parser.add_argument('--m', help='Range "lo..hi" or a single value.')
    verify_parser.add_argument('--k', help='Range "lo..hi" or a single value.')
    verify_parser.add_argument('--max-degree', dest='max_degree', type=int)
    verify_parser.add_argument('--jobs', type=int, default=1)
    verify_parser.add_argument('--timing', action='store_true', help='Report wall-clock milliseconds.')
    verify_parser.add_argument('--emit', **emit)

    dim_parser = commands.add_parser('dim', help='Dimension of a harmonic space.')
    dim_parser.add_argument('--harmonic', required=True, help='R:N:j, C:n:a:b, H:m:a:b or SU2:j')
    dim_parser.add_argument('--emit', **emit)
    return parser


def _print_json(payload):
    print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_branch(args) -> int:
    req = BranchRequest(n=args.n, subgroup=args.subgroup, k=args.k, lam=args.lam, p=args.p, q=args.q, m=args.m)
    spectrum = branch(req)
    truncated = spectrum.truncate(args.truncate) if args.truncate is not None else None
    if args.emit == str(EmitFormat.JSON):
        payload = spectrum.to_dict()
        if truncated is not None:
            payload['truncated'] = truncated.to_dict()['components']
        _print_json(payload)
    else:
        print(spectrum)
        if truncated is not None:
            print(f'truncated at {args.truncate}:')
            for component in truncated:
                print(f'  {component}')
    return EXIT_OK


def cmd_verify(args) -> int:
    options = {
        'n': parse_range(args.n) if args.n else None,
        'm': parse_range(args.m) if args.m else None,
        'k': parse_range(args.k) if args.k else None,
        'max_degree': args.max_degree,
    }
    reports = run_suite(args.suite, options, jobs=args.jobs)
    if args.emit == str(EmitFormat.JSON):
        _print_json(reports.to_list(timing=args.timing))
    else:
        for report in reports:
            print(report)
        counts = reports.counts()
        print(', '.join(f'{counts[str(status)]} {status}' for status in Status))
    return EXIT_FAIL if reports.has_failures else EXIT_OK


def cmd_dim(args) -> int:
    label = parse_harmonic(args.harmonic)
    dim = harmonic_dim(label)
    if args.emit == str(EmitFormat.JSON):
        _print_json({'harmonic': args.harmonic, 'label': str(label), 'dimension': dim})
    else:
        print(dim)
    return EXIT_OK


_COMMANDS = {'branch': cmd_branch, 'verify': cmd_verify, 'dim': cmd_dim}


def _attach_signed_values(argv: List[str]) -> List[str]:
    """ Rewrite ``--lambda -1/2`` as ``--lambda=-1/2``; argparse only takes plain
    negative numbers as option values.
    """

    joined: List[str] = []
    for token in argv:
        if joined and joined[-1] in _SIGNED_OPTIONS and token[:1] == '-' and token[1:2].isdigit():
            joined[-1] = f'{joined[-1]}={token}'
        else:
            joined.append(token)
    return joined


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parser.parse_args(_attach_signed_values(list(argv)))
    except SystemExit as exit_:
        return EXIT_USAGE if exit_.code else EXIT_OK

    constants.DEBUG_MODE = args.debug
    logging.basicConfig(level=logging.DEBUG if constants.DEBUG_MODE else logging.WARNING,
                        format='%(levelname)s %(message)s')
    try:
        return _COMMANDS[args.command](args)
    except BranchkitError as error:
        if constants.DEBUG_MODE:
            logging.exception(f'branchkit {args.command} failed')
        print(f'branchkit {args.command}: {error}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    raise SystemExit(main())
