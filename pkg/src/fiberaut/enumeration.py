"""A fixed bijection between the natural numbers and Q.

Index 0 is 0. The positive rationals are taken in Calkin-Wilf order
(1, 1/2, 2, 1/3, 3/2, 2/3, 3, ...), and each is followed by its negative, so
the sequence starts 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, ...

Both directions are computed directly from the binary path in the
Calkin-Wilf tree, so there is no table to grow and no shared state.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

__all__ = ['calkin_wilf', 'calkin_wilf_position', 'rational_at', 'index_of',
           'enumerate_rationals', 'first_unused']


def calkin_wilf(n: int) -> Fraction:
    """The n-th positive rational in Calkin-Wilf order, n >= 1."""
    if n < 1:
        raise ValueError('Calkin-Wilf positions start at 1')
    a, b = 1, 1
    # bits after the leading 1, most significant first: 0 = left child, 1 = right
    for bit in bin(n)[3:]:
        if bit == '0':
            b = a + b
        else:
            a = a + b
    return Fraction(a, b)


def calkin_wilf_position(q: Fraction) -> int:
    """Inverse of :func:`calkin_wilf` for q > 0."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError('only positive rationals have a Calkin-Wilf position')
    a, b = q.numerator, q.denominator
    # walk to the root in runs (one Euclid step per run), recording path bits
    runs: list[tuple[int, int]] = []
    while a != b:
        if a < b:
            k = (b - 1) // a
            b -= k * a
            runs.append((0, k))
        else:
            k = (a - 1) // b
            a -= k * b
            runs.append((1, k))
    n = 1
    for bit, k in reversed(runs):
        n = (n << k) | (((1 << k) - 1) if bit else 0)
    return n


def rational_at(i: int) -> Fraction:
    if i < 0:
        raise ValueError('index must be nonnegative')
    if i == 0:
        return Fraction(0)
    q = calkin_wilf((i + 1) // 2)
    return q if i % 2 == 1 else -q


def index_of(q: Fraction) -> int:
    q = Fraction(q)
    if q == 0:
        return 0
    n = calkin_wilf_position(abs(q))
    return 2 * n - 1 if q > 0 else 2 * n


def enumerate_rationals(count: int | None = None) -> Iterator[Fraction]:
    i = 0
    while count is None or i < count:
        yield rational_at(i)
        i += 1


def first_unused(used: Iterable[Fraction], how_many: int = 1) -> list[Fraction]:
    """The ``how_many`` lowest-index rationals not in ``used``."""
    used = set(used)
    out = []
    for q in enumerate_rationals():
        if len(out) == how_many:
            break
        if q not in used:
            out.append(q)
    return out
