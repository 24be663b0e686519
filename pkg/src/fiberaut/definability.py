"""Certificates that each rational is definable in (Q, F) from 0 and 1.

An integer n >= 0 is the value of the closed term obtained by applying
``f(0, 1, .)`` n times to 0; a negative integer uses ``f(1, 0, .)``. A
fraction k/n is the only x satisfying ``F(0, x, .)`` iterated n times on 0
equals k.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .affine import Finite, classify_solutions
from .logic import (
    Eq, FApp, Formula, One, Term, Var, Zero, eval_term_Q, format_formula, format_term, free_vars,
)

__all__ = ['ClosedTerm', 'UniqueSolution', 'Certificate', 'iterate',
           'integer_certificate', 'rational_certificate', 'verify_certificate',
           'check_certificate', 'format_certificate']


@dataclass(frozen=True)
class ClosedTerm:
    term: Term


@dataclass(frozen=True)
class UniqueSolution:
    formula: Formula
    var: str


@dataclass(frozen=True)
class Certificate:
    target: Fraction
    witness: Union[ClosedTerm, UniqueSolution]

    @property
    def kind(self) -> str:
        return 'term' if isinstance(self.witness, ClosedTerm) else 'unique'


def iterate(a: Term, b: Term, n: int, start: Term = Zero()) -> Term:
    """``f(a, b, f(a, b, ... start))`` with n applications, nested to the right."""
    t = start
    for _ in range(n):
        t = FApp(a, b, t)
    return t


def integer_certificate(n: int) -> Certificate:
    if n >= 0:
        term = iterate(Zero(), One(), n)
    else:
        term = iterate(One(), Zero(), -n)
    return Certificate(Fraction(n), ClosedTerm(term))


def rational_certificate(k: int, n: int) -> Certificate:
    if n < 1:
        raise ValueError(f'denominator must be >= 1, got {n}')
    x = Var('x')
    lhs = iterate(Zero(), x, n)
    rhs = integer_certificate(k).witness.term
    return Certificate(Fraction(k, n), UniqueSolution(Eq(lhs, rhs), 'x'))


def check_certificate(c: Certificate) -> tuple[bool, str]:
    """Re-derive the certificate's claim; returns (ok, diagnostic)."""
    w = c.witness
    if isinstance(w, ClosedTerm):
        if free_vars(w.term):
            return False, f'term has free variables {sorted(free_vars(w.term))}'
        value = eval_term_Q(w.term, {})
        if value != c.target:
            return False, f'closed term evaluates to {value}, not {c.target}'
        return True, f'closed term value {value}'
    if isinstance(w, UniqueSolution):
        extra = free_vars(w.formula) - {w.var}
        if extra:
            return False, f'formula has parameters {sorted(extra)}'
        try:
            sols = classify_solutions(w.formula, w.var, {})
        except (ValueError, TypeError) as exc:
            return False, f'cannot classify: {exc}'
        if sols != Finite([c.target]):
            return False, f'solution set is {sols}, not Finite([{c.target}])'
        return True, f'unique solution {c.target}'
    return False, f'unknown witness {w!r}'


def verify_certificate(c: Certificate) -> bool:
    return check_certificate(c)[0]


def format_certificate(c: Certificate) -> str:
    """The one-line form ``TARGET<tab>KIND<tab>TEXT``."""
    w = c.witness
    text = format_term(w.term) if isinstance(w, ClosedTerm) else format_formula(w.formula)
    return f'{c.target}\t{c.kind}\t{text}'
