"""Command-line interface.

Exit codes: 0 success, 1 a check or evaluation failed, 2 malformed input.
"""
from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from .affine import classify_solutions, normalize_term
from .automorphisms import AutomorphismProfile, automorphism_grid, check_automorphism, compose
from .definability import check_certificate, format_certificate, integer_certificate, rational_certificate
from .domain import parse_element, parse_rational
from .logic import (
    Rel, Psi, UnboundVariable, atoms_of, eval_term_M, eval_term_Q, parse_formula, parse_term,
)
from .metrics import BasicOpenSet, escape_witness
from .model_iso import ParentAffineMap, check_reduct_iso, constant_basepoint


def _arg_type(fn, what):
    def convert(text):
        try:
            return fn(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f'invalid {what} {text!r}: {exc}') from None
    convert.__name__ = what
    return convert


def split_top_level(text: str) -> list[str]:
    """Split on commas that are not inside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        if ch == ',' and depth == 0:
            parts.append(''.join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append(''.join(cur))
    return [p.strip() for p in parts if p.strip()]


def _bindings(value_parser):
    def parse(text: str) -> dict:
        out = {}
        for item in split_top_level(text):
            name, sep, value = item.partition('=')
            if not sep or not name.strip():
                raise ValueError(f'expected name=value, got {item!r}')
            out[name.strip()] = value_parser(value)
        return out
    return parse


def _rational_list(text: str) -> list[Fraction]:
    return [parse_rational(p) for p in split_top_level(text)]


class _ArgumentParser(argparse.ArgumentParser):
    """Treats negative fractions such as ``-1/2`` as values, not options."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r'^-\d+(/\d+)?$|^-\d*\.\d+$')


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog='fiberaut', description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('eval', help='evaluate a term in M or in (Q, F)')
    p.add_argument('--structure', choices=('M', 'Q'), default='M')
    p.add_argument('--term', required=True, type=_arg_type(parse_term, 'term'))
    p.add_argument('--assign', default='')

    p = sub.add_parser('normalize', help='affine normal form of a term')
    p.add_argument('--term', required=True, type=_arg_type(parse_term, 'term'))

    p = sub.add_parser('classify', help='solution set of a formula in one variable over (Q, F)')
    p.add_argument('--formula', required=True, type=_arg_type(parse_formula, 'formula'))
    p.add_argument('--target', required=True)
    p.add_argument('--params', default='', type=_arg_type(_bindings(parse_rational), 'params'))

    p = sub.add_parser('define', help='definability certificate for a rational')
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument('--rational', type=_arg_type(parse_rational, 'rational'))
    g.add_argument('--integer', type=_arg_type(int, 'integer'))

    p = sub.add_parser('autocheck', help='check a profile is an automorphism on its grid')
    p.add_argument('--profile', required=True, type=_arg_type(AutomorphismProfile.parse, 'profile'))
    p.add_argument('--grid-extra', default=[], type=_arg_type(_rational_list, 'point list'))

    p = sub.add_parser('compose', help='compose two profiles')
    p.add_argument('--left', required=True, type=_arg_type(AutomorphismProfile.parse, 'profile'))
    p.add_argument('--right', required=True, type=_arg_type(AutomorphismProfile.parse, 'profile'))

    p = sub.add_parser('escape', help='two points of a basic open set at distance > B')
    p.add_argument('--support', required=True, type=_arg_type(_rational_list, 'point list'))
    p.add_argument('--coset', default=AutomorphismProfile(),
                   type=_arg_type(AutomorphismProfile.parse, 'profile'))
    p.add_argument('--bound', required=True, type=_arg_type(parse_rational, 'rational'))

    p = sub.add_parser('extend-iso', help='extend an affine map of the parent copy to the reduct')
    p.add_argument('--slope', required=True, type=_arg_type(parse_rational, 'rational'))
    p.add_argument('--intercept', required=True, type=_arg_type(parse_rational, 'rational'))
    p.add_argument('--basepoint', default=Fraction(0), type=_arg_type(parse_rational, 'rational'))
    return parser


def _cmd_eval(args, out):
    if args.structure == 'M':
        v = _bindings(parse_element)(args.assign)
        print(eval_term_M(args.term, v), file=out)
    else:
        v = _bindings(parse_rational)(args.assign)
        print(eval_term_Q(args.term, v), file=out)
    return 0


def _cmd_normalize(args, out):
    print(normalize_term(args.term), file=out)
    return 0


def _cmd_classify(args, out):
    if any(isinstance(a, (Rel, Psi)) for a in atoms_of(args.formula)):
        print('error: R and psi are not in the language of (Q, F)', file=sys.stderr)
        return 1
    print(classify_solutions(args.formula, args.target, args.params), file=out)
    return 0


def _cmd_define(args, out):
    if args.integer is not None:
        cert = integer_certificate(args.integer)
    else:
        cert = rational_certificate(args.rational.numerator, args.rational.denominator)
    ok, diagnostic = check_certificate(cert)
    print(format_certificate(cert), file=out)
    print(('verified: ' if ok else 'REJECTED: ') + diagnostic, file=out)
    return 0 if ok else 1


def _cmd_autocheck(args, out):
    report = check_automorphism(args.profile, automorphism_grid(args.profile, args.grid_extra))
    print(report, file=out)
    return 0 if report.ok else 1


def _cmd_compose(args, out):
    print(compose(args.left, args.right), file=out)
    return 0


def _cmd_escape(args, out):
    constrained = {p: Fraction(0) for p in args.support}
    constrained.update(args.coset.support)
    if args.bound < 0:
        print('error: bound must be nonnegative', file=sys.stderr)
        return 1
    w = escape_witness(BasicOpenSet(constrained), args.bound)
    print(f'g: {w.g}'.rstrip(), file=out)
    print(f'h: {w.h}'.rstrip(), file=out)
    print(f'j: {w.j}', file=out)
    print(f'distance: {w.distance}', file=out)
    return 0


def _cmd_extend_iso(args, out):
    try:
        sigma = ParentAffineMap(args.slope, args.intercept)
    except ValueError as exc:
        print(f'error: {exc}', file=sys.stderr)
        return 1
    basepoint = constant_basepoint(args.basepoint)
    report = check_reduct_iso(sigma, basepoint, basepoint)
    print(f'sigma: x -> {sigma.slope}*x + {sigma.intercept}, basepoint {args.basepoint}', file=out)
    print(report, file=out)
    return 0 if report.ok else 1


COMMANDS = {
    'eval': _cmd_eval,
    'normalize': _cmd_normalize,
    'classify': _cmd_classify,
    'define': _cmd_define,
    'autocheck': _cmd_autocheck,
    'compose': _cmd_compose,
    'escape': _cmd_escape,
    'extend-iso': _cmd_extend_iso,
}


def run(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UnboundVariable as exc:
        print(f'error: {exc}', file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f'error: {exc}', file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
