"""Extending an automorphism of the parent copy to the reduct (M; f, R).

Given an F-automorphism sigma of the parent copy and a choice of base point
``Child(a, c(a))`` in every fiber (on both sides), a child ``d`` in the fiber
over ``a`` is written as ``f(a, Child(a, c(a)), b)`` for a unique parent
point b, and sent to ``f(sigma(a), Child(sigma(a), c'(sigma(a))), sigma(b))``.
The constants 0 and 1 are not preserved in general, so this is an
automorphism of the reduct only.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .automorphisms import CheckReport, check_structure_map, grid_for_points
from .domain import Child, Element, Parent
from .enumeration import enumerate_rationals

__all__ = ['ParentAffineMap', 'BasepointChoice', 'constant_basepoint', 'DEFAULT_BASEPOINT',
           'extend_iso', 'extension', 'check_reduct_iso', 'all_cases_grid']


@dataclass(frozen=True)
class ParentAffineMap:
    slope: Fraction
    intercept: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'slope', Fraction(self.slope))
        object.__setattr__(self, 'intercept', Fraction(self.intercept))
        if self.slope == 0:
            raise ValueError('slope must be nonzero')

    def __call__(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept

    def then(self, other: 'ParentAffineMap') -> 'ParentAffineMap':
        """``other after self``."""
        return ParentAffineMap(other.slope * self.slope, other.slope * self.intercept + other.intercept)

    def inverse(self) -> 'ParentAffineMap':
        return ParentAffineMap(1 / self.slope, -self.intercept / self.slope)

    @classmethod
    def identity(cls) -> 'ParentAffineMap':
        return cls(Fraction(1), Fraction(0))


BasepointChoice = Callable[[Fraction], Fraction]


def constant_basepoint(t: Fraction) -> BasepointChoice:
    t = Fraction(t)
    return lambda a: t


DEFAULT_BASEPOINT = constant_basepoint(0)


def extend_iso(sigma: ParentAffineMap, c: BasepointChoice, c2: BasepointChoice, e: Element) -> Element:
    if type(e) is Parent:
        return Parent(sigma(e.q))
    a, t = e.p, e.q
    # the unique parent b with f(P(a), C(a, c(a)), P(b)) = C(a, t)
    b = t - c(a) + a
    sa = sigma(a)
    return Child(sa, (c2(sa) - sa) + sigma(b))


def extension(sigma: ParentAffineMap, c: BasepointChoice = DEFAULT_BASEPOINT,
              c2: BasepointChoice = DEFAULT_BASEPOINT) -> Callable[[Element], Element]:
    return lambda e: extend_iso(sigma, c, c2, e)


def all_cases_grid(n_points: int = 4) -> list[Element]:
    """Parents at the first ``n_points`` enumerated rationals and their children."""
    return grid_for_points(list(enumerate_rationals(n_points)))


def check_reduct_iso(sigma: ParentAffineMap, c: BasepointChoice = DEFAULT_BASEPOINT,
                     c2: BasepointChoice = DEFAULT_BASEPOINT,
                     grid: Sequence[Element] | None = None) -> CheckReport:
    if grid is None:
        grid = all_cases_grid()
    return check_structure_map(extension(sigma, c, c2), grid, constants=False, injective=True)
