"""Automorphisms of M as fiber-translation profiles.

An automorphism fixes every parent point and translates each child fiber
``{Child(p, .)}`` by an amount ``h(p)``. Only profiles ``h`` with finite
support are representable; they form a dense subgroup of the full product
of copies of Q, with composition given by pointwise addition.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .domain import Child, Element, ONE, Parent, ZERO, interp_f, interp_R, matching_cases, parse_rational
from .enumeration import first_unused

__all__ = ['AutomorphismProfile', 'CheckReport', 'ContractViolation',
           'apply', 'compose', 'invert', 'check_automorphism', 'check_structure_map',
           'automorphism_grid', 'grid_for_points', 'extract_profile', 'CHILD_COORDS']

CHILD_COORDS = (Fraction(-1), Fraction(0), Fraction(1), Fraction(1, 2))


class ContractViolation(ValueError):
    """The map handed to :func:`extract_profile` is not of the required form."""


class AutomorphismProfile:
    __slots__ = ('_support', '_hash')

    def __init__(self, values: Mapping | Iterable = ()):
        items = values.items() if isinstance(values, Mapping) else values
        support = {}
        for p, t in items:
            p, t = Fraction(p), Fraction(t)
            if p in support:
                raise ValueError(f'duplicate parent point {p}')
            if t != 0:
                support[p] = t
        self._support = dict(sorted(support.items()))
        self._hash = None

    @classmethod
    def parse(cls, text: str) -> 'AutomorphismProfile':
        """Parse ``"p:t, p:t, ..."``; the empty string is the identity."""
        pairs = []
        for chunk in text.split(','):
            chunk = chunk.strip()
            if not chunk:
                continue
            p, sep, t = chunk.partition(':')
            if not sep:
                raise ValueError(f'expected p:t, got {chunk!r}')
            pairs.append((parse_rational(p), parse_rational(t)))
        return cls(pairs)

    @property
    def support(self) -> dict[Fraction, Fraction]:
        return dict(self._support)

    def __getitem__(self, p) -> Fraction:
        return self._support.get(Fraction(p), Fraction(0))

    def __call__(self, e: Element) -> Element:
        return apply(self, e)

    def __len__(self):
        return len(self._support)

    def __eq__(self, other):
        if not isinstance(other, AutomorphismProfile):
            return NotImplemented
        return self._support == other._support

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._support.items()))
        return self._hash

    def __mul__(self, other: 'AutomorphismProfile') -> 'AutomorphismProfile':
        return compose(self, other)

    def __repr__(self):
        return f'AutomorphismProfile({{{str(self)}}})'

    def __str__(self):
        return ', '.join(f'{p}:{t}' for p, t in self._support.items())


def apply(h: AutomorphismProfile, e: Element) -> Element:
    if type(e) is Child:
        t = h._support.get(e.p)
        return e if t is None else Child(e.p, e.q + t)
    return e


def compose(h1: AutomorphismProfile, h2: AutomorphismProfile) -> AutomorphismProfile:
    """``h1 after h2``; the group is abelian, so the order only matters for reading."""
    total = dict(h2._support)
    for p, t in h1._support.items():
        total[p] = total.get(p, 0) + t
    return AutomorphismProfile(total)


def invert(h: AutomorphismProfile) -> AutomorphismProfile:
    return AutomorphismProfile({p: -t for p, t in h._support.items()})


# Mechanical checking
# -------------------

@dataclass(frozen=True)
class CheckReport:
    ok: bool
    checked: int
    kind: str = ''
    witness: tuple = ()
    case: int | None = None
    detail: str = ''

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return f'ok: {self.checked} triples checked'
        shown = ', '.join(str(x) for x in self.witness)
        case = f' (f-case {self.case})' if self.case is not None else ''
        return f'FAIL {self.kind}{case} at ({shown}): {self.detail}'


def grid_for_points(points: Sequence[Fraction], child_coords: Sequence[Fraction] = CHILD_COORDS) -> list[Element]:
    """Parents at ``points`` followed by the children ``Child(p, q)``."""
    grid: list[Element] = [Parent(Fraction(p)) for p in points]
    grid += [Child(Fraction(p), Fraction(q)) for p in points for q in child_coords]
    return grid


def automorphism_grid(h: AutomorphismProfile, extra: Iterable[Fraction] = ()) -> list[Element]:
    """Support of h, any extra points, and the two lowest-index fresh points."""
    points = list(h.support)
    for p in extra:
        p = Fraction(p)
        if p not in points:
            points.append(p)
    points += first_unused(points, 2)
    return grid_for_points(points)


def check_structure_map(g: Callable[[Element], Element], grid: Sequence[Element], *,
                        constants: bool = True, injective: bool = False) -> CheckReport:
    """Check exactly that g commutes with f on grid triples and preserves R on pairs.

    With ``constants`` the points 0 and 1 must be fixed; with ``injective``
    distinct grid points must have distinct images. Reports the first failure.
    """
    if not grid:
        raise ValueError('grid must be nonempty')
    if constants:
        for c in (ZERO, ONE):
            if g(c) != c:
                return CheckReport(False, 0, 'constant', (c,), detail=f'{c} sent to {g(c)}')
    images = [g(e) for e in grid]
    if injective:
        seen: dict[Element, Element] = {}
        for e, ge in zip(grid, images):
            if ge in seen and seen[ge] != e:
                return CheckReport(False, 0, 'injectivity', (seen[ge], e), detail=f'both sent to {ge}')
            seen[ge] = e
    pairs = list(zip(grid, images))
    for a, ga in pairs:
        for b, gb in pairs:
            if interp_R(a, b) != interp_R(ga, gb):
                return CheckReport(False, 0, 'R', (a, b),
                                   detail=f'R({a},{b}) = {interp_R(a, b)} but R({ga},{gb}) = {interp_R(ga, gb)}')
    checked = 0
    for a, ga in pairs:
        for b, gb in pairs:
            for c, gc in pairs:
                r = interp_f(a, b, c)
                # fall-through returns its third argument, whose image is already known
                lhs = gc if r is c else g(r)
                rhs = interp_f(ga, gb, gc)
                if lhs != rhs:
                    case = matching_cases(a, b, c)[0]
                    return CheckReport(False, checked, 'f', (a, b, c), case,
                                       detail=f'g(f(..)) = {lhs} but f(g ..) = {rhs}')
                checked += 1
    return CheckReport(True, checked)


def check_automorphism(h: AutomorphismProfile, grid: Sequence[Element] | None = None) -> CheckReport:
    if grid is None:
        grid = automorphism_grid(h)
    return check_structure_map(h, grid, constants=True)


def extract_profile(g: Callable[[Element], Element], probes: Iterable[Fraction]) -> AutomorphismProfile:
    """Read off ``a -> g_a(0)`` from a black-box automorphism at the probe points."""
    values = {}
    for a in probes:
        a = Fraction(a)
        if g(Parent(a)) != Parent(a):
            raise ContractViolation(f'automorphism moves parent point {a} to {g(Parent(a))}')
        image = g(Child(a, Fraction(0)))
        if type(image) is not Child or image.p != a:
            raise ContractViolation(f'automorphism sends C({a},0) out of its fiber, to {image}')
        values[a] = image.q
    return AutomorphismProfile(values)
