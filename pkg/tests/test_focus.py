import pytest
from centerfocus import fixtures as fx
from centerfocus.domains import PrimeField
from centerfocus.focus import (MalformedSystem, PlanarSystem, complexify, focus_quantities,
                               focus_quantities_complex, lyapunov_matrix, residual)
from centerfocus.groebner import IdealBasis, ideal_membership
from centerfocus.poly import RationalFunction, Ring, reduce_mod_p, substitute

WEIGHTS = {"a02": 1, "b02": 1, "b11": 1, "b20": 1, "b12": 2, "b21": 2, "b30": 2}


@pytest.fixture(scope="module")
def result():
    return focus_quantities(fx.riccati3(), 4)


@pytest.fixture(scope="module")
def gs(result):
    return [g.to_ring(fx.param_ring()) for g in result.quantities]


def test_lyapunov_examples():
    assert lyapunov_matrix(2).kernel == [[1, 0, 1]]
    assert lyapunov_matrix(3).kernel_dim == 0
    k4 = lyapunov_matrix(4).kernel
    assert len(k4) == 1
    v = k4[0]
    assert [c / v[0] for c in v] == [1, 0, 2, 0, 1]


@pytest.mark.parametrize("d", range(2, 13))
def test_kernel_parity(d):
    assert lyapunov_matrix(d).kernel_dim == (1 if d % 2 == 0 else 0)


def test_lyapunov_entries():
    M = lyapunov_matrix(3).matrix
    # L(x^3) = -3 x^2 y
    assert [row[0] for row in M] == [0, -3, 0, 0]
    with pytest.raises(ValueError):
        lyapunov_matrix(1)


def test_first_quantity(gs):
    P = fx.param_ring()
    assert gs[0] == P("1/2*a02*b02 - 1/4*b02*b11 - 1/4*b11*b20 + 1/4*b21")
    assert all(not g.is_zero() for g in gs)


def test_residual_zero_through_degree_10(result):
    assert residual(result).is_zero()
    assert residual(result, 10).is_zero()


def test_residual_nonzero_beyond_truncation(result):
    assert not residual(result, 11).is_zero()


def test_phi_normalisation(result):
    assert result.phi[(2, 0)] == result.phi[(0, 2)] == fx.param_ring().one
    assert (1, 1) not in result.phi
    from centerfocus.focus import _solver
    for d in (4, 6, 8, 10):
        ell, _ = _solver(d)
        comp = sum((result.phi.get((d - j, j), fx.param_ring().zero).scale(ell[j])
                    for j in range(d + 1)), fx.param_ring().zero)
        assert comp.is_zero()


def test_complex_oracle_agrees(gs):
    oracle = focus_quantities_complex(fx.riccati3(), 4)
    assert oracle == gs


def test_hamiltonian_subfamily_is_center():
    res = focus_quantities(fx.v6_system(), 4)
    assert all(g.is_zero() for g in res.quantities)


def test_v1_first_quantity_vanishes():
    sys = fx.riccati3().restrict({"b21": 0, "b20": 0, "b02": 0})
    assert focus_quantities(sys, 1)[1].is_zero()


@pytest.mark.parametrize("i", range(1, 5))
def test_quasi_homogeneity(gs, i):
    g = gs[i - 1]
    L = Ring(fx.PARAMS + ("lam",))
    lam = L.gen("lam")
    scaled = g.to_ring(L)
    mapping = {v: RationalFunction(L.gen(v) * lam ** WEIGHTS[v]) for v in fx.PARAMS}
    lhs = substitute(g, mapping)
    assert lhs == RationalFunction(scaled * lam ** (2 * i))


def test_modular_quantities_are_images(gs):
    gp = focus_quantities(fx.riccati3(PrimeField(32003)), 4).quantities
    R = fx.param_ring(PrimeField(32003))
    assert [g.to_ring(R) for g in gp] == [reduce_mod_p(g, 32003) for g in gs]


def test_ideal_level_agreement(gs):
    # each quantity is a nonzero element outside the ideal of the lower ones
    for i in range(1, 4):
        assert not ideal_membership(gs[i], IdealBasis(gs[:i]))


def test_complexify_examples():
    c = complexify(fx.riccati3())
    E = Ring(fx.PARAMS, c[(1, 0)].ring.domain)
    assert c[(1, 0)] == E.one
    assert c[(1, 1)] == E("-1/2*(i*a02 - b02 - b20)")
    zero = {v: 0 for v in fx.PARAMS}
    at_zero = {u: p.partial_eval(zero) for u, p in c.items()}
    assert {u for u, p in at_zero.items() if not p.is_zero()} == {(1, 0)}


def test_malformed_systems():
    R = Ring(("x", "y", "a"))
    for P, Q in [("-y + 1", "x"), ("y", "x"), ("-y", "x + a*x"), ("x^2", "x")]:
        with pytest.raises(MalformedSystem):
            focus_quantities(PlanarSystem(R, R(P), R(Q)), 1)
    with pytest.raises(ValueError):
        focus_quantities(PlanarSystem(R, R("-y"), R("x")), 0)


def test_over_extension_field():
    sys = fx.v7_system(1)
    res = focus_quantities(sys, 3)
    assert all(g.is_zero() for g in res.quantities)


@pytest.mark.stretch
def test_eight_quantities():
    res = focus_quantities(fx.riccati3(), 8)
    assert residual(res).is_zero()
    assert [len(g.terms) for g in res.quantities][:4] == [4, 29, 117, 350]
