"""Terms and quantifier-free formulas in the language {f, R, 0, 1}.

Concrete syntax (whitespace insignificant)::

    term    := "0" | "1" | ident | "f" "(" term "," term "," term ")"
    atom    := term "=" term | "R" "(" term "," term ")" | "psi" "(" term ")"
    formula := atom | "!" formula | formula "&" formula | formula "|" formula
             | "(" formula ")"

``!`` binds tighter than ``&``, which binds tighter than ``|``; both binary
connectives associate to the left. ``psi(t)`` is the fixed formula
``exists y R(t, y)``, which holds exactly at parent points.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .domain import Element, Parent, ONE, ZERO, interp_f, interp_R

__all__ = [
    'Var', 'Zero', 'One', 'FApp', 'Term',
    'Eq', 'Rel', 'Not', 'And', 'Or', 'Psi', 'Formula',
    'ParseError', 'UnboundVariable',
    'parse_term', 'parse_formula', 'format_term', 'format_formula',
    'eval_term_M', 'eval_formula_M', 'eval_term_Q', 'eval_formula_Q',
    'free_vars', 'atoms_of', 'psi_by_search',
]

KEYWORDS = frozenset({'f', 'R', 'psi'})


# Terms
# -----

@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if not _IDENT_RE.fullmatch(self.name) or self.name in KEYWORDS:
            raise ValueError(f'bad variable name: {self.name!r}')

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Zero:
    def __str__(self):
        return '0'


@dataclass(frozen=True)
class One:
    def __str__(self):
        return '1'


@dataclass(frozen=True)
class FApp:
    t1: 'Term'
    t2: 'Term'
    t3: 'Term'

    def __str__(self):
        return format_term(self)


Term = Union[Var, Zero, One, FApp]


# Formulas
# --------

@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Rel:
    left: Term
    right: Term


@dataclass(frozen=True)
class Not:
    body: 'Formula'


@dataclass(frozen=True)
class And:
    left: 'Formula'
    right: 'Formula'


@dataclass(frozen=True)
class Or:
    left: 'Formula'
    right: 'Formula'


@dataclass(frozen=True)
class Psi:
    term: Term


Formula = Union[Eq, Rel, Not, And, Or, Psi]


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ''):
        self.pos = pos
        self.text = text
        super().__init__(f'{message} at position {pos}')


class UnboundVariable(KeyError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return f'unbound variable: {self.name}'


# Lexer and parser
# ----------------

_IDENT_RE = re.compile(r'[A-Za-z][A-Za-z0-9]*')
_TOKEN_RE = re.compile(r'\s*(?:([A-Za-z][A-Za-z0-9]*)|(\d+)|(\S))')


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(('name', m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(('num', m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in '(),=!&|':
                raise ParseError(f'unexpected character {ch!r}', start, text)
            tokens.append(('op', ch, start))
        pos = m.end()
    tokens.append(('end', '', len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, tok[2], self.text)

    def expect(self, value):
        tok = self.advance()
        if tok[1] != value or tok[0] not in ('op',):
            shown = tok[1] or 'end of input'
            raise self.error(f'expected {value!r}, found {shown!r}', tok)
        return tok

    def finish(self):
        tok = self.peek()
        if tok[0] != 'end':
            raise self.error(f'unexpected {tok[1]!r}')

    def args(self, head) -> list[Term]:
        self.expect('(')
        items = [self.term()]
        while self.peek()[1] == ',' and self.peek()[0] == 'op':
            self.advance()
            items.append(self.term())
        tok = self.peek()
        if tok[1] != ')':
            shown = tok[1] or 'end of input'
            raise self.error(f'expected \',\' or \')\' in arguments of {head}, found {shown!r}')
        self.advance()
        return items

    def term(self) -> Term:
        tok = self.advance()
        kind, value, _ = tok
        if kind == 'num':
            if value == '0':
                return Zero()
            if value == '1':
                return One()
            raise self.error(f'numeral {value!r} is not a constant of the language', tok)
        if kind == 'name':
            if value == 'f':
                items = self.args('f')
                if len(items) != 3:
                    raise self.error(f'f takes 3 arguments, got {len(items)}', tok)
                return FApp(*items)
            if value == 'R':
                raise self.error('relation symbol R used in term position', tok)
            if value == 'psi':
                raise self.error('formula psi used in term position', tok)
            return Var(value)
        shown = value or 'end of input'
        raise self.error(f'expected a term, found {shown!r}', tok)

    def formula(self) -> Formula:
        left = self.conjunction()
        while self.peek()[0] == 'op' and self.peek()[1] == '|':
            self.advance()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.negation()
        while self.peek()[0] == 'op' and self.peek()[1] == '&':
            self.advance()
            left = And(left, self.negation())
        return left

    def negation(self) -> Formula:
        tok = self.peek()
        if tok[0] == 'op' and tok[1] == '!':
            self.advance()
            return Not(self.negation())
        if tok[0] == 'op' and tok[1] == '(':
            self.advance()
            inner = self.formula()
            self.expect(')')
            return inner
        return self.atom()

    def atom(self) -> Formula:
        kind, value, _ = tok = self.peek()
        if kind == 'name' and value == 'R':
            self.advance()
            items = self.args('R')
            if len(items) != 2:
                raise self.error(f'R takes 2 arguments, got {len(items)}', tok)
            return Rel(*items)
        if kind == 'name' and value == 'psi':
            self.advance()
            items = self.args('psi')
            if len(items) != 1:
                raise self.error(f'psi takes 1 argument, got {len(items)}', tok)
            return Psi(items[0])
        if kind == 'op' and value not in ('(',):
            raise self.error(f'unknown connective or misplaced {value!r}', tok)
        left = self.term()
        nxt = self.peek()
        if not (nxt[0] == 'op' and nxt[1] == '='):
            shown = nxt[1] or 'end of input'
            raise self.error(f'expected \'=\' after term, found {shown!r}', nxt)
        self.advance()
        return Eq(left, self.term())


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    p.finish()
    return t


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    phi = p.formula()
    p.finish()
    return phi


# Printing
# --------

def format_term(t: Term) -> str:
    if isinstance(t, FApp):
        return f'f({format_term(t.t1)},{format_term(t.t2)},{format_term(t.t3)})'
    return str(t)


_PREC = {Or: 1, And: 2, Not: 3}


def format_formula(phi: Formula) -> str:
    return _fmt(phi)


def _fmt(phi: Formula) -> str:
    if isinstance(phi, Eq):
        return f'{format_term(phi.left)} = {format_term(phi.right)}'
    if isinstance(phi, Rel):
        return f'R({format_term(phi.left)},{format_term(phi.right)})'
    if isinstance(phi, Psi):
        return f'psi({format_term(phi.term)})'
    if isinstance(phi, Not):
        body = _fmt(phi.body)
        if isinstance(phi.body, (And, Or)):
            body = f'({body})'
        return '!' + body
    prec = _PREC[type(phi)]
    op = ' | ' if isinstance(phi, Or) else ' & '
    left, right = _fmt(phi.left), _fmt(phi.right)
    if _PREC.get(type(phi.left), 4) < prec:
        left = f'({left})'
    # left-associative: an equal-precedence right child needs parentheses
    if _PREC.get(type(phi.right), 4) <= prec:
        right = f'({right})'
    return left + op + right


# Structure helpers
# -----------------

def free_vars(obj: Term | Formula) -> set[str]:
    if isinstance(obj, Var):
        return {obj.name}
    if isinstance(obj, (Zero, One)):
        return set()
    if isinstance(obj, FApp):
        return free_vars(obj.t1) | free_vars(obj.t2) | free_vars(obj.t3)
    if isinstance(obj, (Eq, Rel, And, Or)):
        return free_vars(obj.left) | free_vars(obj.right)
    if isinstance(obj, Not):
        return free_vars(obj.body)
    if isinstance(obj, Psi):
        return free_vars(obj.term)
    raise TypeError(f'not a term or formula: {obj!r}')


def atoms_of(phi: Formula) -> list[Formula]:
    """Atomic subformulas, left to right, with repetition."""
    if isinstance(phi, (Eq, Rel, Psi)):
        return [phi]
    if isinstance(phi, Not):
        return atoms_of(phi.body)
    return atoms_of(phi.left) + atoms_of(phi.right)


# Evaluation
# ----------

def _lookup(v: Mapping, name: str):
    try:
        return v[name]
    except KeyError:
        raise UnboundVariable(name) from None


def eval_term_M(t: Term, v: Mapping[str, Element]) -> Element:
    if isinstance(t, FApp):
        return interp_f(eval_term_M(t.t1, v), eval_term_M(t.t2, v), eval_term_M(t.t3, v))
    if isinstance(t, Var):
        return _lookup(v, t.name)
    if isinstance(t, Zero):
        return ZERO
    return ONE


def eval_formula_M(phi: Formula, v: Mapping[str, Element]) -> bool:
    if isinstance(phi, Eq):
        return eval_term_M(phi.left, v) == eval_term_M(phi.right, v)
    if isinstance(phi, Rel):
        return interp_R(eval_term_M(phi.left, v), eval_term_M(phi.right, v))
    if isinstance(phi, Psi):
        # every parent point p has the child Child(p, 0), and no child is R-related to anything
        return isinstance(eval_term_M(phi.term, v), Parent)
    if isinstance(phi, Not):
        return not eval_formula_M(phi.body, v)
    if isinstance(phi, And):
        return eval_formula_M(phi.left, v) and eval_formula_M(phi.right, v)
    if isinstance(phi, Or):
        return eval_formula_M(phi.left, v) or eval_formula_M(phi.right, v)
    raise TypeError(f'not a formula: {phi!r}')


def eval_term_Q(t: Term, v: Mapping[str, Fraction]) -> Fraction:
    """Evaluate over (Q, F) with f read as F and 0, 1 as the rationals."""
    if isinstance(t, FApp):
        p = eval_term_Q(t.t1, v)
        q = eval_term_Q(t.t2, v)
        r = eval_term_Q(t.t3, v)
        return (q - p) + r
    if isinstance(t, Var):
        return _lookup(v, t.name)
    if isinstance(t, Zero):
        return Fraction(0)
    return Fraction(1)


def eval_formula_Q(phi: Formula, v: Mapping[str, Fraction]) -> bool:
    """Satisfaction in (Q, F); R and psi are not in its language."""
    if isinstance(phi, Eq):
        return eval_term_Q(phi.left, v) == eval_term_Q(phi.right, v)
    if isinstance(phi, (Rel, Psi)):
        raise ValueError('R and psi are not interpreted in (Q, F)')
    if isinstance(phi, Not):
        return not eval_formula_Q(phi.body, v)
    if isinstance(phi, And):
        return eval_formula_Q(phi.left, v) and eval_formula_Q(phi.right, v)
    if isinstance(phi, Or):
        return eval_formula_Q(phi.left, v) or eval_formula_Q(phi.right, v)
    raise TypeError(f'not a formula: {phi!r}')


def psi_by_search(e: Element, fiber_sample) -> bool:
    """Bounded witness search for ``exists y R(e, y)`` over a sample of children."""
    return any(interp_R(e, y) for y in fiber_sample)
