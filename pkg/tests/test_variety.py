import pytest
from gmpy2 import mpq

from centerfocus import fixtures as fx
from centerfocus.focus import focus_quantities
from centerfocus.groebner import IdealBasis, ideal_dimension, ideal_equal
from centerfocus.poly import RationalFunction, Ring, eval_point
from centerfocus.variety import (NotOnVariety, Parametrization, SamplingExhausted, implicitize,
                                 jacobian, make_rng, rank_at_point, sample_points,
                                 tangent_space_dim, vanishes_on_parametrization)

P = fx.param_ring()


@pytest.fixture(scope="module")
def gs():
    return [g.to_ring(P) for g in focus_quantities(fx.riccati3(), 4).quantities]


def par(k):
    return Parametrization(fx.parametrization(k))


@pytest.mark.parametrize("k", range(1, 7))
def test_vanishing_on_components(gs, k):
    for g in gs:
        assert vanishes_on_parametrization(g, par(k))


def test_vanishing_examples(gs):
    assert vanishes_on_parametrization(gs[0], par(3))
    assert vanishes_on_parametrization(P("b02^2 + b02*b20 + b30"), par(5))
    assert not vanishes_on_parametrization(P("a02"), par(3))


def test_parametrizations_land_on_components():
    rng = make_rng(1)
    for k in range(1, 7):
        for pt in sample_points(par(k), 3, rng):
            assert all(eval_point(g, pt) == 0 for g in fx.center_ideal(k).gens)


def test_implicitize_v3():
    assert ideal_equal(implicitize(par(3), P), fx.center_ideal(3))


def test_jacobian_examples():
    R = Ring(("x", "y"))
    J = jacobian([R("x^2"), R("y")], R.vars)
    assert J == [[R("2*x"), R.zero], [R.zero, R.one]]
    assert all(e.is_zero() for row in jacobian([R("3"), R("1/2")], R.vars) for e in row)


def test_rank_examples(gs):
    pt = {v: 0 for v in fx.PARAMS}
    pt.update(a02=1, b11=1, b12=1)
    assert eval_point(fx.minor_polynomial(), pt) == -99
    assert rank_at_point(jacobian(gs[:3], P.vars), pt) == 3
    R = Ring(("x", "y", "z"))
    assert rank_at_point([[R.zero] * 3] * 2, {"x": 0, "y": 0, "z": 0}) == 0
    ident = [[R.one if i == j else R.zero for j in range(3)] for i in range(3)]
    assert rank_at_point(ident, {"x": 1, "y": 2, "z": 3}) == 3


def test_tangent_examples():
    origin = {v: 0 for v in fx.PARAMS}
    assert tangent_space_dim(fx.center_ideal(1), origin) == 4
    assert tangent_space_dim(fx.center_ideal(6), origin) == 3
    X = Ring(("x",))
    assert tangent_space_dim(IdealBasis([X("x^2")]), {"x": 0}) == 1
    with pytest.raises(NotOnVariety):
        tangent_space_dim(fx.center_ideal(1), dict(origin, b21=1))


@pytest.mark.parametrize("k", range(1, 7))
def test_smoothness(k):
    I = fx.center_ideal(k)
    d = ideal_dimension(I)
    for pt in sample_points(par(k), 5, make_rng(k), nonzero=True):
        assert tangent_space_dim(I, pt) == d


def test_rank_bounds_and_monotone(gs):
    for k in range(1, 7):
        for pt in sample_points(par(k), 3, make_rng(10 + k), nonzero=True):
            ranks = [rank_at_point(jacobian(gs[:n], P.vars), pt) for n in range(1, 5)]
            assert all(r <= n for r, n in zip(ranks, range(1, 5)))
            assert ranks == sorted(ranks)


def test_sampling_is_deterministic():
    a = sample_points(par(5), 4, make_rng(3), nonzero=True)
    b = sample_points(par(5), 4, make_rng(3), nonzero=True)
    assert a == b


def test_sampling_exhaustion():
    with pytest.raises(SamplingExhausted):
        sample_points(par(1), 2, make_rng(0), accept=lambda pt: False, max_draws=50)


def test_denominator_points_rejected():
    T = fx.t_ring()
    assert par(3).point({"t1": mpq(2), "t2": mpq(1), "t3": mpq(0)}) is None


def test_parametrization_validation():
    T = Ring(("a02",))
    with pytest.raises(TypeError):
        Parametrization({"a02": T("a02")})
    with pytest.raises(ValueError):
        par(1).ideal(P)
