import random

import pytest
from hypothesis import given, settings, strategies as st

from centerfocus import fixtures as fx
from centerfocus.focus import focus_quantities
from centerfocus.groebner import (Budget, BudgetExceeded, IdealBasis, elimination_ideal,
                                  groebner_basis, ideal_dimension, ideal_equal, ideal_intersect,
                                  ideal_membership, is_groebner, is_reduced, normal_form,
                                  radical_membership)
from centerfocus.orders import MonomialOrder
from centerfocus.poly import Ring

XY = Ring(("x", "y"))
LEX = MonomialOrder("lex", 2)


@pytest.fixture(scope="module")
def gs():
    return [g.to_ring(fx.param_ring()) for g in focus_quantities(fx.riccati3(), 4).quantities]


def test_normal_form_examples():
    x, y = XY.gen("x"), XY.gen("y")
    assert normal_form(x * x, [x]).is_zero()
    assert normal_form(y, [x]) == y
    assert normal_form(XY("x^2 + y^2 - 1"), [XY("x - y")], LEX) == XY("2*y^2 - 1")


def test_gb_examples():
    x = XY.gen("x")
    assert groebner_basis(IdealBasis([x])).basis == [x]
    W = Ring(("x", "w"))
    assert groebner_basis(IdealBasis([W("x"), W("1 - w*x")])).basis == [W.one]
    G = groebner_basis(IdealBasis([XY("x^2 + y^2 - 1"), XY("x - y")], order=LEX))
    assert G.basis == [XY("x - y"), XY("y^2 - 1/2")]


def test_membership_examples(gs):
    I2 = fx.center_ideal(2)
    assert ideal_membership(fx.param_ring()("b11*b20 - b21"), I2)
    assert not ideal_membership(XY("x"), IdealBasis([XY("x^2")]))
    assert ideal_membership(gs[0], IdealBasis(gs[:2]))
    assert radical_membership(XY("x"), IdealBasis([XY("x^2")]))
    assert radical_membership(XY("x"), IdealBasis([XY("x^2")]), shortcut=False)
    assert not radical_membership(XY("y"), IdealBasis([XY("x^2")]))


@pytest.mark.parametrize("s", range(1, 8))
def test_focus_quantities_in_components(gs, s):
    G = groebner_basis(fx.center_ideal(s))
    for g in gs:
        assert radical_membership(g, G)
        assert radical_membership(g, fx.center_ideal(s), shortcut=False)


def test_rejection_of_wrong_lifts(gs):
    for I in (fx.i7_hat(), fx.i8_hat()):
        assert not all(radical_membership(g, I) for g in gs)


@pytest.mark.parametrize("s", range(1, 8))
def test_shuffle_invariance(s):
    I = fx.center_ideal(s)
    ref = groebner_basis(I)
    assert is_groebner(ref.basis, ref.order) and is_reduced(ref.basis, ref.order)
    rng = random.Random(s)
    for _ in range(10):
        gens = list(I.gens)
        rng.shuffle(gens)
        assert groebner_basis(IdealBasis(gens)).basis == ref.basis


def test_every_gb_satisfies_buchberger():
    ideals = list(fx.center_ideals().values()) + [fx.i5_hat(), fx.i7_hat(), fx.i8_hat()]
    for I in ideals:
        for order in ("degrevlex", "lex"):
            G = groebner_basis(I, I.ring.order_for(order))
            assert is_groebner(G.basis, G.order)
    for s in range(1, 9):
        G = groebner_basis(fx.modular_ideal(s))
        assert is_groebner(G.basis, G.order)


small = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(-3, 3),
                        max_size=4).map(XY.from_terms)


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=1, max_size=3), small, small)
def test_membership_implies_radical(gens, a, b):
    I = IdealBasis(gens, XY)
    G = groebner_basis(I)
    assert is_groebner(G.basis, G.order)
    p = a * gens[0] + b * gens[-1]
    assert ideal_membership(p, G)
    assert radical_membership(p, I)


def test_elimination_examples():
    E = elimination_ideal(IdealBasis([XY("x - y"), XY("y")]), ["y"])
    assert [str(g) for g in E.gens] == ["x"]
    assert elimination_ideal(IdealBasis([XY("x - y")]), ["y"]).gens == []
    T = Ring(("t", "x", "y"))
    E = elimination_ideal(IdealBasis([T("x - t^2"), T("y - t^3")]), ["t"])
    assert "t" not in E.ring.vars
    assert ideal_equal(E, IdealBasis([E.ring("x^3 - y^2")]))


def test_elimination_recovers_component():
    from centerfocus.variety import Parametrization, implicitize
    E = implicitize(Parametrization(fx.parametrization(5)), fx.param_ring())
    assert ideal_equal(E, fx.center_ideal(5))


def test_intersection_examples(gs):
    J = ideal_intersect(IdealBasis([XY("x")]), IdealBasis([XY("y")]))
    assert ideal_equal(J, IdealBasis([XY("x*y")]))
    I3 = fx.center_ideal(3)
    assert ideal_equal(ideal_intersect(I3, I3), I3)
    Itil = ideal_intersect(*fx.center_ideals().values())
    G = groebner_basis(Itil)
    assert all(radical_membership(g, G) for g in gs)
    for s in range(1, 8):
        assert all(ideal_membership(f, fx.center_ideal(s)) for f in G.basis)


def test_equality_examples():
    x = XY.gen("x")
    assert ideal_equal(IdealBasis([x]), IdealBasis([2 * x]))
    assert not ideal_equal(IdealBasis([x]), IdealBasis([x * x]))


def test_i5_alternative_basis():
    I5, hat = fx.center_ideal(5), fx.i5_hat()
    assert not ideal_equal(I5, hat)
    a02 = fx.param_ring()("a02")
    assert not ideal_membership(a02, hat)
    assert ideal_equal(I5, IdealBasis(hat.gens + [a02]))


def test_equality_is_equivalence():
    ideals = list(fx.center_ideals().values()) + [fx.i5_hat()]
    for a in ideals:
        assert ideal_equal(a, a)
        for b in ideals:
            assert ideal_equal(a, b) == ideal_equal(b, a)


def test_dimension():
    expected = {1: 4, 2: 3, 3: 2, 4: 4, 5: 3, 6: 3}
    for s, d in expected.items():
        assert ideal_dimension(fx.center_ideal(s)) == d
    assert ideal_dimension(IdealBasis([], XY)) == 2
    assert ideal_dimension(IdealBasis([XY.one])) == -1
    assert ideal_dimension(IdealBasis([XY("x*y")])) == 1


def test_budget():
    I = fx.center_ideal(5)
    with pytest.raises(BudgetExceeded):
        groebner_basis(I, budget=Budget(max_pairs=0))
    with pytest.raises(BudgetExceeded):
        groebner_basis(I, budget=Budget(max_basis=2))
    assert groebner_basis(I, budget=Budget(max_pairs=10**6)).basis == groebner_basis(I).basis
