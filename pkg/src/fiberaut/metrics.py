"""Left-invariant metrics on the profile group and unboundedness witnesses.

The profile group is a product of copies of (Q, +), indexed by parent
points. On one factor, ``d(x, y) = 1 + |x - y|`` for ``x != y`` is a
translation-invariant metric of infinite diameter that induces the
discrete topology. Weighting the discrete metric on each coordinate by
``2 ** -index(a)`` (index from :mod:`fiberaut.enumeration`) gives a
left-invariant metric ``rho`` on the whole product. Adding ``d`` on a single
coordinate j keeps the metric left-invariant and makes every set whose
projection to coordinate j is all of Q unbounded; each basic open set
leaves all but finitely many coordinates unconstrained, which is what
:func:`escape_witness` exhibits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .automorphisms import AutomorphismProfile
from .enumeration import enumerate_rationals, index_of

__all__ = ['factor_metric', 'product_metric', 'augmented_metric', 'coordinate_weight',
           'BasicOpenSet', 'EscapeWitness', 'escape_witness']

Metric = Callable[[AutomorphismProfile, AutomorphismProfile], Fraction]


def factor_metric(x: Fraction, y: Fraction) -> Fraction:
    if x == y:
        return Fraction(0)
    return 1 + abs(Fraction(x) - Fraction(y))


def coordinate_weight(a: Fraction) -> Fraction:
    return Fraction(1, 1 << index_of(a))


def product_metric(g: AutomorphismProfile, h: AutomorphismProfile) -> Fraction:
    total = Fraction(0)
    for a in set(g.support) | set(h.support):
        if g[a] != h[a]:
            # min(1, factor_metric) is 1 on any differing coordinate
            total += coordinate_weight(a)
    return total


def augmented_metric(j: Fraction) -> Metric:
    j = Fraction(j)

    def metric(g: AutomorphismProfile, h: AutomorphismProfile) -> Fraction:
        return product_metric(g, h) + factor_metric(g[j], h[j])

    metric.__name__ = f'augmented_metric_{j}'
    return metric


@dataclass(frozen=True)
class BasicOpenSet:
    """Profiles taking prescribed values at finitely many parent points.

    All-zero values give the pointwise stabilizer of those points; other
    values give one of its cosets.
    """
    constrained: Mapping[Fraction, Fraction]

    def __init__(self, constrained: Mapping = ()):
        items = constrained.items() if isinstance(constrained, Mapping) else constrained
        object.__setattr__(self, 'constrained',
                           {Fraction(p): Fraction(t) for p, t in sorted(items)})

    @classmethod
    def stabilizer(cls, points) -> 'BasicOpenSet':
        return cls({p: 0 for p in points})

    def __contains__(self, h: AutomorphismProfile) -> bool:
        return all(h[p] == t for p, t in self.constrained.items())

    def __hash__(self):
        return hash(tuple(self.constrained.items()))


@dataclass(frozen=True)
class EscapeWitness:
    g: AutomorphismProfile
    h: AutomorphismProfile
    j: Fraction
    distance: Fraction


def escape_witness(U: BasicOpenSet, B: Fraction) -> EscapeWitness:
    """Two members of U at augmented distance greater than B."""
    B = Fraction(B)
    if B < 0:
        raise ValueError('bound must be nonnegative')
    j = next(q for q in enumerate_rationals() if q not in U.constrained)
    g = AutomorphismProfile(U.constrained)
    h = AutomorphismProfile({**g.support, j: math.ceil(B) + 1})
    return EscapeWitness(g, h, j, augmented_metric(j)(g, h))
