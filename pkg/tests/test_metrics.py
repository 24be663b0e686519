import random
from fractions import Fraction as F

import pytest
from hypothesis import given

from fiberaut.automorphisms import AutomorphismProfile as Profile, compose
from fiberaut.enumeration import rational_at
from fiberaut.metrics import (
    BasicOpenSet, augmented_metric, escape_witness, factor_metric, product_metric,
)
from generators import profiles, rationals

J_VALUES = [F(0), F(1), F(-1), F(1, 2)]


def test_factor_metric_examples():
    assert factor_metric(F(0), F(10)) == 11
    assert factor_metric(F(3, 7), F(3, 7)) == 0
    assert factor_metric(F(1, 2), F(-1, 2)) == 2


@given(rationals, rationals, rationals)
def test_factor_metric_axioms(x, y, z):
    d = factor_metric
    assert d(x, y) >= 0 and (d(x, y) == 0) == (x == y)
    assert d(x, y) == d(y, x)
    assert d(x, z) <= d(x, y) + d(y, z)
    assert d(x + z, y + z) == d(x, y)
    if x != y:
        assert d(x, y) >= 1


def test_factor_metric_unbounded():
    for B in (F(0), F(10), F(10**9, 7)):
        assert factor_metric(F(0), B + 1) > B


def test_product_metric_examples():
    g = Profile({0: 1, F(1, 2): 3})
    assert product_metric(g, g) == 0
    assert product_metric(Profile(), Profile({0: 5})) == 1
    assert product_metric(Profile(), Profile({1: 1})) == F(1, 2)
    # index(1/2) = 3
    assert product_metric(Profile({F(1, 2): 1}), Profile({F(1, 2): 2, -1: 1})) == F(1, 8) + F(1, 4)


def test_augmented_metric_examples():
    d0 = augmented_metric(F(0))
    assert d0(Profile(), Profile({0: 10})) == 12
    g = Profile({0: 1, 5: 2})
    assert d0(g, g) == 0
    d5 = augmented_metric(F(5))
    h = Profile({0: 4, 5: 2})
    assert d5(g, h) == product_metric(g, h)


def check_metric_axioms(d, a, b, c):
    assert d(a, b) >= 0
    assert (d(a, b) == 0) == (a == b)
    assert d(a, b) == d(b, a)
    assert d(a, c) <= d(a, b) + d(b, c)


@given(profiles, profiles, profiles)
def test_metric_axioms(a, b, c):
    for d in [product_metric] + [augmented_metric(j) for j in J_VALUES]:
        check_metric_axioms(d, a, b, c)


@given(profiles, profiles, profiles)
def test_left_invariance(k, g, h):
    for d in [product_metric] + [augmented_metric(j) for j in J_VALUES]:
        assert d(compose(k, g), compose(k, h)) == d(g, h)


def test_basic_open_set_membership():
    U = BasicOpenSet({0: 3, F(1, 2): 0})
    assert Profile({0: 3, 7: 1}) in U
    assert Profile({0: 3, F(1, 2): 1}) not in U
    assert Profile() not in U
    assert Profile() in BasicOpenSet.stabilizer([F(0), F(1)])


def test_escape_examples():
    w = escape_witness(BasicOpenSet.stabilizer([F(0), F(1)]), F(10))
    assert w.j == -1 and w.h[-1] == 11 and w.g == Profile()
    assert w.distance >= 12
    # j = -1 has index 2
    assert w.distance == F(1, 4) + 12

    w = escape_witness(BasicOpenSet(), F(0))
    assert w.j == 0 and w.h == Profile({0: 1})
    assert w.distance >= 2

    U = BasicOpenSet({0: 3})
    w = escape_witness(U, F(10**6))
    assert w.g[0] == w.h[0] == 3
    assert w.g in U and w.h in U
    assert augmented_metric(w.j)(w.g, w.h) > 10**6


def test_escape_rejects_negative_bound():
    with pytest.raises(ValueError):
        escape_witness(BasicOpenSet(), F(-1))


def test_escape_unbounded_in_B():
    rng = random.Random(11)
    for _ in range(10):
        pts = rng.sample(range(50), rng.randint(0, 10))
        U = BasicOpenSet({rational_at(i): F(rng.randint(-9, 9), rng.randint(1, 9)) for i in pts})
        previous = None
        for B in (F(0), F(1, 2), F(1), F(10), F(1000), F(10**6)):
            w = escape_witness(U, B)
            assert w.g in U and w.h in U
            assert w.distance >= B + 1
            assert w.distance == augmented_metric(w.j)(w.g, w.h)
            if previous is not None:
                assert w.distance >= previous
            previous = w.distance
