from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from fiberaut.automorphisms import (
    AutomorphismProfile as Profile, ContractViolation, apply, automorphism_grid,
    check_automorphism, check_structure_map, compose, extract_profile, grid_for_points, invert,
)
from fiberaut.domain import Child, Parent, interp_f, matching_cases
from generators import elements, profiles


def test_apply_examples():
    h = Profile({0: 1})
    assert apply(h, Child(0, 5)) == Child(0, 6)
    assert apply(h, Parent(0)) == Parent(0)
    assert apply(h, Child(1, 5)) == Child(1, 5)
    for e in (Parent(3), Child(0, 0), Child(F(1, 2), -1)):
        assert apply(Profile(), e) == e


def test_compose_examples():
    assert compose(Profile({0: 1}), Profile({0: 2, 1: -1})) == Profile({0: 3, 1: -1})
    h = Profile({F(1, 2): 4})
    assert compose(h, Profile()) == h
    assert compose(Profile({0: 1}), Profile({0: -1})) == Profile()


def test_compose_acts_as_composition_on_samples():
    h1, h2 = Profile({0: 1}), Profile({0: 2, 1: -1})
    for e in [Parent(0), Child(0, 0), Child(0, F(1, 2)), Child(1, 3), Child(2, 2)]:
        assert apply(compose(h1, h2), e) == apply(h1, apply(h2, e))


def test_invert_examples():
    assert invert(Profile({0: 1, 2: -5})) == Profile({0: -1, 2: 5})
    assert invert(Profile()) == Profile()


def test_profile_text_format():
    h = Profile.parse('0:1, 1/2:-3')
    assert h.support == {F(0): F(1), F(1, 2): F(-3)}
    assert str(h) == '0:1, 1/2:-3'
    assert Profile.parse('') == Profile()
    assert Profile.parse(' 2:0 ') == Profile()
    for bad in ('0', '0:1, 0:2', 'a:1'):
        with pytest.raises(ValueError):
            Profile.parse(bad)


def test_no_zero_entries_stored():
    assert Profile({0: 0, 1: 2}).support == {F(1): F(2)}
    assert Profile({0: 0}) == Profile()


@given(profiles, profiles, profiles)
def test_group_axioms(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(a, Profile()) == a == compose(Profile(), a)
    assert compose(a, invert(a)) == Profile() == compose(invert(a), a)


@given(profiles, profiles, elements)
def test_action_is_homomorphism(a, b, e):
    assert apply(compose(a, b), e) == apply(a, apply(b, e))


@given(profiles, profiles)
def test_action_faithful(a, b):
    diff = set(a.support) ^ set(b.support) | {p for p in a.support if a[p] != b[p]}
    if a != b:
        assert any(apply(a, Child(p, 0)) != apply(b, Child(p, 0)) for p in diff)


@given(profiles)
def test_extract_inverts_apply(h):
    probes = list(h.support) + [F(123, 7)]
    assert extract_profile(h, probes) == h


def test_extract_examples():
    h = Profile({F(1, 2): 7})
    assert extract_profile(h, [F(0), F(1, 2)]) == h
    assert extract_profile(lambda e: e, [F(0), F(5)]) == Profile()
    h1, h2 = Profile({0: 1, 1: 2}), Profile({1: -2, 3: 1})
    assert extract_profile(compose(h1, h2), [0, 1, 2, 3]) == Profile({0: 1, 3: 1})


def test_extract_contract_violations():
    with pytest.raises(ContractViolation):
        extract_profile(lambda e: Parent(e.q + 1) if isinstance(e, Parent) else e, [F(0)])
    with pytest.raises(ContractViolation):
        extract_profile(lambda e: Child(e.p + 1, e.q) if isinstance(e, Child) else e, [F(0)])


def test_grid_policy():
    grid = automorphism_grid(Profile({0: 1}))
    # support {0} plus the two lowest-index fresh points 1, -1
    assert grid[:3] == [Parent(0), Parent(1), Parent(-1)]
    assert len(grid) == 3 + 3 * 4
    assert Child(F(-1), F(1, 2)) in grid
    cases = {matching_cases(a, b, c)[0] for a in grid for b in grid for c in grid}
    assert cases == {1, 2, 3, 4}


def test_check_examples():
    assert check_automorphism(Profile({0: 1}))
    assert check_automorphism(Profile()).ok
    h = Profile({0: 1})
    assert apply(h, interp_f(Parent(0), Child(0, 2), Parent(3))) == Child(0, 6)
    assert interp_f(apply(h, Parent(0)), apply(h, Child(0, 2)), apply(h, Parent(3))) == Child(0, 6)


def test_check_counts_all_triples():
    h = Profile({0: 1})
    n = len(automorphism_grid(h))
    assert check_automorphism(h).checked == n ** 3


def doubling(e):
    return Child(e.p, 2 * e.q) if isinstance(e, Child) else e


def cubing(e):
    return Child(e.p, e.q ** 3) if isinstance(e, Child) else e


def test_doubling_fails_on_crossing_case():
    # fiberwise doubling is linear, so it commutes with the in-fiber case;
    # it breaks where the parent copy is laid onto a fiber
    report = check_structure_map(doubling, grid_for_points([F(0), F(1)]))
    assert not report.ok and report.kind == 'f' and report.case == 3
    a, b, c = report.witness
    assert matching_cases(a, b, c) == [3]


def test_nonlinear_map_fails_on_in_fiber_case():
    pts = [F(0), F(1)]
    in_fiber = [Child(F(0), F(q)) for q in (-1, 0, 1, 2)]
    report = check_structure_map(cubing, in_fiber + grid_for_points(pts))
    assert not report.ok and report.case == 2


def test_moving_constants_is_reported():
    report = check_structure_map(lambda e: Parent(e.q + 1) if isinstance(e, Parent) else e, [Parent(0)])
    assert not report.ok and report.kind == 'constant'


def test_check_requires_grid():
    with pytest.raises(ValueError):
        check_automorphism(Profile(), [])


@settings(max_examples=25, deadline=None)
@given(profiles)
def test_every_profile_is_an_automorphism(h):
    assert check_automorphism(h).ok
