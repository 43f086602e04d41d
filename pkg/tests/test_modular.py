import random

import pytest
from gmpy2 import mpq

from centerfocus import fixtures as fx
from centerfocus.domains import PrimeField
from centerfocus.groebner import groebner_basis
from centerfocus.modular import lift_poly, monic_lift, rational_reconstruct, wang_bound
from centerfocus.poly import Ring

M = 32003


@pytest.mark.parametrize("c, expect", [(16001, "-1/2"), (15273, "-51/44"), (10666, "-5/3")])
def test_reconstruction_vectors(c, expect):
    assert rational_reconstruct(c, M) == mpq(expect)


def test_reconstruction_outside_wang_bound():
    # 161/67 has numerator above isqrt(32003 // 2) = 126, so no pair in the
    # symmetric box maps to 3346
    assert wang_bound(M) == 126
    assert (161 * pow(67, -1, M)) % M == 3346
    assert rational_reconstruct(3346, M) is None


@pytest.mark.xfail(strict=True, reason="161/67 lies outside the symmetric Wang bound for a single prime")
def test_reconstruction_of_3346_literal():
    assert rational_reconstruct(3346, M) == mpq(161, 67)


def test_round_trip_1000():
    rng = random.Random(2024)
    B = wang_bound(M)
    for _ in range(1000):
        b = rng.randint(1, B)
        a = rng.randint(-B, B)
        q = mpq(a, b)
        if q.denominator > B:
            continue
        c = (q.numerator * pow(q.denominator, -1, M)) % M
        assert rational_reconstruct(c, M) == q


def test_reconstruction_edges():
    assert rational_reconstruct(0, M) == 0
    assert rational_reconstruct(5, M) == 5
    with pytest.raises(ValueError):
        rational_reconstruct(M, M)
    with pytest.raises(ValueError):
        rational_reconstruct(-1, M)


def test_lift_examples():
    F = fx.param_ring(PrimeField(M))
    assert lift_poly(F("a02*b11 - 16001*b11^2 - 2*b02*b20")) == fx.param_ring()(
        "a02*b11 + 1/2*b11^2 - 2*b02*b20")
    p = F("3*a02 - 100*b20 + 126")
    assert lift_poly(p) == fx.param_ring()("3*a02 - 100*b20 + 126")
    with pytest.raises(ValueError):
        lift_poly(fx.param_ring()("a02"))


def test_lift_i7_generators():
    F = fx.param_ring(PrimeField(M))
    lifted = [lift_poly(F(t)) for t in fx.MODULAR_IDEALS[7]]
    hat = [fx.param_ring()(t) for t in fx.I7_HAT]
    assert lifted[:5] == hat[:5]
    assert lifted[5] is None


@pytest.mark.parametrize("s", range(1, 7))
def test_lift_recovers_rational_components(s):
    Gp = groebner_basis(fx.modular_ideal(s))
    Gq = groebner_basis(fx.center_ideal(s))
    assert [lift_poly(g) for g in Gp.basis] == Gq.basis
    assert [monic_lift(g) for g in Gp.basis] == Gq.basis
