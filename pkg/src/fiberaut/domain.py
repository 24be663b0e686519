"""The structure M = Q ∪ Q² and the interpretation of the symbols f, R, 0, 1.

Rationals are :class:`fractions.Fraction`, which already keeps the reduced,
positive-denominator form, so structural equality is value equality.

A point of the parent copy of Q is ``Parent(q)``; the point ``q`` of the child
copy attached to parent ``p`` is ``Child(p, q)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction

__all__ = [
    'Rational', 'Parent', 'Child', 'Element',
    'parse_rational', 'format_rational', 'parse_element', 'format_element',
    'interp_f', 'interp_R', 'interp_const', 'eval_F', 'matching_cases',
    'ZERO', 'ONE',
]

_RATIONAL_RE = re.compile(r'^\s*([-−]?)(\d+)(?:\s*/\s*(\d+))?\s*$')


def parse_rational(text: str) -> Fraction:
    """Parse ``n`` or ``n/d`` (optional leading minus, ASCII or U+2212)."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f'malformed rational: {text!r}')
    sign, num, den = m.groups()
    d = int(den) if den is not None else 1
    if d == 0:
        raise ValueError(f'zero denominator: {text!r}')
    n = int(num)
    return Fraction(-n if sign else n, d)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f'not an exact rational: {x!r}')


@dataclass(frozen=True, slots=True)
class Parent:
    q: Fraction

    def __str__(self):
        return f'P({self.q})'


@dataclass(frozen=True, slots=True)
class Child:
    p: Fraction
    q: Fraction

    def __str__(self):
        return f'C({self.p},{self.q})'


Element = Union[Parent, Child]

ZERO = Parent(Fraction(0))
ONE = Parent(Fraction(1))

_R = r'\s*([-−]?\d+(?:\s*/\s*\d+)?)\s*'
_PARENT_RE = re.compile(rf'^\s*P\s*\({_R}\)\s*$')
_CHILD_RE = re.compile(rf'^\s*C\s*\({_R},{_R}\)\s*$')


def parse_element(text: str) -> Element:
    """Parse ``P(q)`` or ``C(p,q)``."""
    m = _PARENT_RE.match(text)
    if m:
        return Parent(parse_rational(m.group(1)))
    m = _CHILD_RE.match(text)
    if m:
        return Child(parse_rational(m.group(1)), parse_rational(m.group(2)))
    raise ValueError(f'malformed element: {text!r}')


def format_element(e: Element) -> str:
    return str(e)


def eval_F(p: Fraction, q: Fraction, r: Fraction) -> Fraction:
    """The ternary translation ``F(p, q, r) = (q - p) + r`` on Q."""
    return (q - p) + r


def interp_f(a: Element, b: Element, c: Element) -> Element:
    """Interpretation of the ternary symbol f, cases tried in order 1..4."""
    if type(a) is Parent:
        if type(b) is Parent:
            if type(c) is Parent:
                return Parent((b.q - a.q) + c.q)
        elif type(c) is Parent and b.p == a.q:
            return Child(a.q, (b.q - a.q) + c.q)
    elif type(b) is Child and type(c) is Child and a.p == b.p == c.p:
        return Child(a.p, (b.q - a.q) + c.q)
    return c


def matching_cases(a: Element, b: Element, c: Element) -> list[int]:
    """Which of the three explicit shape guards of f hold, case 4 if none.

    The guards are tested independently, so a result of length != 1 would
    mean the case split is not a partition.
    """
    hits = []
    if all(type(x) is Parent for x in (a, b, c)):
        hits.append(1)
    if all(type(x) is Child for x in (a, b, c)) and a.p == b.p == c.p:
        hits.append(2)
    if type(a) is Parent and type(b) is Child and type(c) is Parent and b.p == a.q:
        hits.append(3)
    return hits or [4]


def interp_R(a: Element, b: Element) -> bool:
    return type(a) is Parent and type(b) is Child and b.p == a.q


def interp_const(which: str) -> Parent:
    if which in ('zero', '0'):
        return ZERO
    if which in ('one', '1'):
        return ONE
    raise ValueError(f'unknown constant: {which!r}')
