"""Affine normal forms of {f, 0, 1}-terms and solution sets over (Q, F).

Every term ``t(x1, ..., xn)`` is interpreted in (Q, F) as an integer
combination ``r1*x1 + ... + rn*xn`` (the constants 0 and 1 count as atoms)
whose coefficients sum to 1. An equation between two terms is then a linear
equation whose coefficients sum to 0, so in one free variable it has no
solution, one solution, or every rational as a solution. Boolean
combinations of such sets are finite or cofinite.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .logic import (
    And, Eq, FApp, Formula, Not, One, Or, Psi, Rel, Term, UnboundVariable, Var, Zero,
    atoms_of, format_formula,
)

__all__ = [
    'CONST0', 'CONST1', 'AffineForm', 'LinearEquation', 'SolutionSet',
    'Finite', 'Cofinite', 'normalize_term', 'affine_eval', 'equation_of',
    'classify_solutions', 'term_of_form',
]

# the identifier grammar never produces '@', so these cannot clash with variables
CONST0 = '@0'
CONST1 = '@1'
_CONST_VALUES = {CONST0: Fraction(0), CONST1: Fraction(1)}


def _atom_key(atom: str):
    return (0, atom) if atom in _CONST_VALUES else (1, atom)


class AffineForm:
    """An integer combination of atoms; zero coefficients are never stored."""

    __slots__ = ('_coeffs', '_hash')

    def __init__(self, coeffs: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[str, int] = {}
        for atom, c in items:
            if not isinstance(c, int):
                raise TypeError(f'coefficient of {atom} is not an integer: {c!r}')
            acc[atom] = acc.get(atom, 0) + c
        self._coeffs = {a: acc[a] for a in sorted(acc, key=_atom_key) if acc[a] != 0}
        self._hash = None

    @classmethod
    def atom(cls, name: str) -> 'AffineForm':
        return cls({name: 1})

    @property
    def coeffs(self) -> dict[str, int]:
        return dict(self._coeffs)

    def coefficient(self, atom: str) -> int:
        return self._coeffs.get(atom, 0)

    def atoms(self) -> list[str]:
        return list(self._coeffs)

    def coefficient_sum(self) -> int:
        return sum(self._coeffs.values())

    def __add__(self, other: 'AffineForm') -> 'AffineForm':
        return AffineForm(list(self._coeffs.items()) + list(other._coeffs.items()))

    def __neg__(self) -> 'AffineForm':
        return AffineForm({a: -c for a, c in self._coeffs.items()})

    def __sub__(self, other: 'AffineForm') -> 'AffineForm':
        return self + (-other)

    def __eq__(self, other):
        if isinstance(other, AffineForm):
            return self._coeffs == other._coeffs
        if isinstance(other, Mapping):
            return self._coeffs == AffineForm(other)._coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        return f'AffineForm({self._coeffs!r})'

    def __str__(self):
        if not self._coeffs:
            return '0'
        return ' + '.join(f'{c}*{a}' for a, c in self._coeffs.items())


@dataclass(frozen=True)
class LinearEquation:
    """``diff = 0``; produced from an equation of terms, so coefficients sum to 0."""
    diff: AffineForm

    def __post_init__(self):
        if self.diff.coefficient_sum() != 0:
            raise ValueError(f'coefficients of {self.diff} do not sum to 0')

    def __str__(self):
        return f'{self.diff} = 0'


def normalize_term(t: Term) -> AffineForm:
    if isinstance(t, FApp):
        return normalize_term(t.t2) - normalize_term(t.t1) + normalize_term(t.t3)
    if isinstance(t, Var):
        return AffineForm.atom(t.name)
    if isinstance(t, Zero):
        return AffineForm.atom(CONST0)
    if isinstance(t, One):
        return AffineForm.atom(CONST1)
    raise TypeError(f'not a term of the language {{f, 0, 1}}: {t!r}')


def term_of_form(form: AffineForm) -> Term:
    """A term for a single-atom form with coefficient 1."""
    atoms = form.atoms()
    if len(atoms) != 1 or form.coefficient(atoms[0]) != 1:
        raise ValueError(f'{form} is not a single atom')
    a = atoms[0]
    if a == CONST0:
        return Zero()
    if a == CONST1:
        return One()
    return Var(a)


def affine_eval(form: AffineForm, v: Mapping[str, Fraction]) -> Fraction:
    total = Fraction(0)
    for atom, c in form._coeffs.items():
        if atom in _CONST_VALUES:
            value = _CONST_VALUES[atom]
        else:
            try:
                value = v[atom]
            except KeyError:
                raise UnboundVariable(atom) from None
        total += c * value
    return total


def equation_of(phi: Eq) -> LinearEquation:
    if not isinstance(phi, Eq):
        raise TypeError(f'not an equation: {phi!r}')
    return LinearEquation(normalize_term(phi.left) - normalize_term(phi.right))


# Finite / cofinite subsets of Q
# ------------------------------

class SolutionSet:
    """A finite set of rationals, or the complement of one."""

    __slots__ = ('points', 'cofinite')

    def __init__(self, points: Iterable[Fraction] = (), cofinite: bool = False):
        self.points = tuple(sorted(set(Fraction(p) for p in points)))
        self.cofinite = cofinite

    @property
    def listed(self) -> tuple[Fraction, ...]:
        return self.points

    def __contains__(self, x) -> bool:
        return (x in self.points) != self.cofinite

    def complement(self) -> 'SolutionSet':
        return SolutionSet(self.points, not self.cofinite)

    def __and__(self, other: 'SolutionSet') -> 'SolutionSet':
        a, b = set(self.points), set(other.points)
        if not self.cofinite and not other.cofinite:
            return Finite(a & b)
        if self.cofinite and other.cofinite:
            return Cofinite(a | b)
        fin, co = (a, b) if not self.cofinite else (b, a)
        return Finite(fin - co)

    def __or__(self, other: 'SolutionSet') -> 'SolutionSet':
        return (self.complement() & other.complement()).complement()

    def __eq__(self, other):
        if not isinstance(other, SolutionSet):
            return NotImplemented
        return (self.points, self.cofinite) == (other.points, other.cofinite)

    def __hash__(self):
        return hash((self.points, self.cofinite))

    def __repr__(self):
        kind = 'Cofinite' if self.cofinite else 'Finite'
        return f'{kind}([{", ".join(str(p) for p in self.points)}])'

    __str__ = __repr__


def Finite(points: Iterable[Fraction] = ()) -> SolutionSet:
    return SolutionSet(points, cofinite=False)


def Cofinite(excluded: Iterable[Fraction] = ()) -> SolutionSet:
    return SolutionSet(excluded, cofinite=True)


def _solve_atom(phi: Eq, target: str, params: Mapping[str, Fraction]) -> SolutionSet:
    diff = equation_of(phi).diff
    a = diff.coefficient(target)
    rest = AffineForm({k: c for k, c in diff.coeffs.items() if k != target})
    c = affine_eval(rest, params)
    if a == 0:
        return Cofinite() if c == 0 else Finite()
    return Finite([-c / a])


def classify_solutions(phi: Formula, target: str, params: Mapping[str, Fraction] | None = None) -> SolutionSet:
    """The set of rationals x with (Q, F) |= phi(x, params), computed exactly.

    The listed side of the result has at most as many points as phi has
    atomic subformulas.
    """
    params = dict(params or {})
    params.pop(target, None)
    for atom in atoms_of(phi):
        if isinstance(atom, (Rel, Psi)):
            raise ValueError(f'R and psi are outside (Q, F): {format_formula(atom)}')
    return _classify(phi, target, params)


def _classify(phi: Formula, target: str, params) -> SolutionSet:
    if isinstance(phi, Eq):
        return _solve_atom(phi, target, params)
    if isinstance(phi, Not):
        return _classify(phi.body, target, params).complement()
    if isinstance(phi, And):
        return _classify(phi.left, target, params) & _classify(phi.right, target, params)
    if isinstance(phi, Or):
        return _classify(phi.left, target, params) | _classify(phi.right, target, params)
    raise TypeError(f'not a formula: {phi!r}')
