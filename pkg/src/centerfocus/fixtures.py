"""Built-in data for the cubic generalized Riccati family.

Everything is stored as text in the polynomial grammar and parsed on first
use, so a typo surfaces as a parse error rather than as a wrong polynomial.
"""

from __future__ import annotations

from functools import lru_cache

from .domains import DEFAULT_PRIME, ExtIR6, PrimeField
from .focus import PlanarSystem
from .groebner import IdealBasis
from .poly import Ring, RationalFunction

# parameter order a02 > b02 > b11 > b12 > b20 > b30 > b21
PARAMS = ("a02", "b02", "b11", "b12", "b20", "b30", "b21")
PHASE = ("x", "y")

RICCATI3_P = "-y + a02*y^2"
RICCATI3_Q = "x + b20*x^2 + b11*x*y + b02*y^2 + b30*x^3 + b21*x^2*y + b12*x*y^2"

CENTER_IDEALS = {
    1: ["b21", "b20", "b02"],
    2: ["b30", "b12", "b02", "b11*b20 - b21"],
    3: ["b30", "b21", "b12",
        "-2*b02*b11^2 + 4*b02^2*b20 - b11^2*b20",
        "2*a02*b11 + b11^2 - 4*b02*b20",
        "2*a02*b02 - b02*b11 - b11*b20",
        "4*a02^2 - b11^2 - 4*b20^2"],
    4: ["b21", "b11", "a02"],
    5: ["a02",
        "b02*b21 + b11*b30",
        "2*b02*b12 + b12*b20 + b02*b30",
        "b02*b11 + b11*b20 - b21",
        "b02^2 + b02*b20 + b30",
        "b12*b20*b21 - 2*b11*b12*b30 - b11*b30^2",
        "b11*b20*b21 - b21^2 - b11^2*b30",
        "b12*b20^2 - 4*b12*b30 - b02*b20*b30 - 2*b30^2",
        "b11*b12*b20 - 2*b12*b21 + b11*b20*b30 - b21*b30",
        "-(b12*b21^2) + b11^2*b12*b30 + b11^2*b30^2"],
    6: ["b21", "b12", "b11", "b02"],
    7: ["b21", "b12", "b30", "3*b02 + 5*b20", "5*a02 - b11", "6*b11^2 + 25*b20^2"],
}

# alternative basis of I_5
I5_HAT = [
    "b02^3 + b02^2*b20 - 2*b02*b12 - b12*b20",
    "-b02*b11 - b11*b20 + b21",
    "b02^2 + b02*b20 + b30",
]

# wrong lifts of the two modular components
I7_HAT = ["b30", "b21", "b12", "b11 + 51/44*b20", "b02 + 5/3*b20", "a02 + 161/67*b20"]
I8_HAT = ["b30", "b21", "b12", "b11 - 51/44*b20", "b02 + 5/3*b20", "a02 - 161/67*b20"]

# components found over GF(32003)
MODULAR_IDEALS = {
    1: ["b21", "b20", "b02"],
    2: ["b30", "b12", "b02", "b11*b20 - b21"],
    3: ["b30", "b21", "b12",
        "a02*b11 - 16001*b11^2 - 2*b02*b20",
        "a02*b02 + 16001*b02*b11 + 16001*b11*b20",
        "a02^2 - 8001*b11^2 - b20^2",
        "b02*b11^2 - 2*b02^2*b20 - 16001*b11^2*b20"],
    4: ["b21", "b11", "a02"],
    5: ["a02",
        "b02*b21 + b11*b30",
        "b02*b12 - 16001*b12*b20 - 16001*b02*b30",
        "b02*b11 + b11*b20 - b21",
        "b02^2 + b02*b20 + b30",
        "b12*b20*b21 - 2*b11*b12*b30 - b11*b30^2",
        "b11*b20*b21 - b11^2*b30 - b21^2",
        "b12*b20^2 - b02*b20*b30 - 4*b12*b30 - 2*b30^2",
        "b11*b12*b20 + b11*b20*b30 - 2*b12*b21 - b21*b30",
        "b11^2*b12*b30 + b11^2*b30^2 - b12*b21^2"],
    6: ["b21", "b12", "b11", "b02"],
    7: ["b30", "b21", "b12", "b11 - 15273*b20", "b02 - 10666*b20", "a02 + 3346*b20"],
    8: ["b30", "b21", "b12", "b11 + 15273*b20", "b02 - 10666*b20", "a02 - 3346*b20"],
}

HAMILTONIAN_V6 = "1/2*x^2 + 1/2*y^2 + 1/3*b20*x^3 + 1/4*b30*x^4 - 1/3*a02*y^3"

# the V_2 subfamily and its Darboux certificate
SC1_P = "-y + a02*y^2"
SC1_Q = "x + b20*x^2 + b11*x*y + b11*b20*x^2*y"
SC1_F = "1 + b11*y"
SC1_K = "b11*x + b11*b20*x^2"

# V_7 systems over Q(i, r6); {s} is the branch sign, + or -
V7_P = "-y {s} 1/6*i*r6*b20*y^2"
V7_Q = "x + b20*x^2 {s} 5/6*i*r6*b20*x*y - 5/3*b20*y^2"
V7_F = ("1 + 1/3*b20^2*x^2 - 1/18*b20^2*y^2 + 4/3*b20*x"
        " {s} 1/9*i*r6*b20^2*x*y {s} 1/3*i*r6*b20*y")

# 3-minor polynomial on V_1
MINOR_F = (
    "-140*a02^6*b12 + 61*a02^4*b11^2*b12 + 9*a02^3*b11^3*b12"
    " - 2*a02^2*b11^4*b12 - 36*a02^4*b12^2 + 9*a02^2*b11^2*b12^2"
    " + 600*a02^5*b11*b30 + 450*a02^4*b11^2*b30"
    " + 45*a02^3*b11^3*b30 - 15*a02^2*b11^4*b30"
    " - 100*a02^4*b12*b30 + 64*a02^3*b11*b12*b30"
    " + 37*a02^2*b11^2*b12*b30 + 11*a02*b11^3*b12*b30"
    " + 12*a02*b11*b12^2*b30 - 6*b11^2*b12^2*b30"
    " + 750*a02^3*b11*b30^2 + 240*a02^2*b11^2*b30^2"
    " - 15*a02*b11^3*b30^2 - 90*a02*b11*b12*b30^2"
    " + 18*b11^2*b12*b30^2 + 210*a02*b11*b30^3"
)

# parametrizations: parameter -> (numerator, denominator) over t1, t2, t3
PARAM_V5 = {
    "a02": ("0", "1"),
    "b20": ("-t2*(t2^2 - 2*t3)", "t2^2 - t3"),
    "b30": ("-t2^2*t3", "t2^2 - t3"),
    "b11": ("t1", "1"),
    "b21": ("t1*t2*t3", "t2^2 - t3"),
    "b02": ("t2", "1"),
    "b12": ("t3", "1"),
}
PARAM_V3 = {
    "a02": ("-t1*(t1^2 + 4*t2^2)", "2*(t1 - 2*t2)*(t1 + 2*t2)"),
    "b20": ("2*t1^2*t2", "4*t2^2 - t1^2"),
    "b30": ("0", "1"),
    "b11": ("t1", "1"),
    "b21": ("0", "1"),
    "b02": ("t2", "1"),
    "b12": ("0", "1"),
}
# components with triangular generators, free parameters named after themselves
PARAM_V1 = {"b21": ("0", "1"), "b20": ("0", "1"), "b02": ("0", "1")}
PARAM_V2 = {"b30": ("0", "1"), "b12": ("0", "1"), "b02": ("0", "1"), "b21": ("b11*b20", "1")}
PARAM_V4 = {"b21": ("0", "1"), "b11": ("0", "1"), "a02": ("0", "1")}
PARAM_V6 = {"b21": ("0", "1"), "b12": ("0", "1"), "b11": ("0", "1"), "b02": ("0", "1")}

PARAMETRIZATION_TEXT = {1: PARAM_V1, 2: PARAM_V2, 3: PARAM_V3, 4: PARAM_V4, 5: PARAM_V5, 6: PARAM_V6}

# expected results of the cyclicity analysis
EXPECTED_DIMENSIONS = {1: 4, 2: 3, 3: 2, 4: 4, 5: 3, 6: 3}
CYCLICITY = {1: "2", 2: "3", 3: ">=2", 4: "2", 5: "3", 6: "3"}
RECONSTRUCTION_VECTORS = [(16001, "-1/2"), (15273, "-51/44"), (3346, "161/67"), (10666, "-5/3")]


@lru_cache(maxsize=None)
def param_ring(domain="QQ"):
    return Ring(PARAMS, domain)


@lru_cache(maxsize=None)
def system_ring(domain="QQ"):
    return Ring(PHASE + PARAMS, domain)


@lru_cache(maxsize=None)
def riccati3(domain="QQ"):
    R = system_ring(domain)
    return PlanarSystem(R, R(RICCATI3_P), R(RICCATI3_Q))


def _ideal(texts, ring):
    return IdealBasis([ring(t) for t in texts], ring)


def center_ideal(s, domain="QQ"):
    return _ideal(CENTER_IDEALS[s], param_ring(domain))


def center_ideals(domain="QQ"):
    return {s: center_ideal(s, domain) for s in CENTER_IDEALS}


def i5_hat(domain="QQ"):
    return _ideal(I5_HAT, param_ring(domain))


def i7_hat(domain="QQ"):
    return _ideal(I7_HAT, param_ring(domain))


def i8_hat(domain="QQ"):
    return _ideal(I8_HAT, param_ring(domain))


def modular_ideal(s, prime=DEFAULT_PRIME):
    return _ideal(MODULAR_IDEALS[s], param_ring(PrimeField(prime)))


def hamiltonian_v6():
    return system_ring()(HAMILTONIAN_V6)


def v6_system():
    return riccati3().restrict({"b21": 0, "b12": 0, "b11": 0, "b02": 0})


def sc1_system():
    R = Ring(("x", "y", "a02", "b11", "b20"))
    return PlanarSystem(R, R(SC1_P), R(SC1_Q))


def v7_ring():
    return Ring(("x", "y", "b20"), ExtIR6())


def v7_system(sign=1):
    s = "+" if sign > 0 else "-"
    R = v7_ring()
    return PlanarSystem(R, R(V7_P.format(s=s)), R(V7_Q.format(s=s)))


def v7_darboux(sign=1):
    s = "+" if sign > 0 else "-"
    return v7_ring()(V7_F.format(s=s))


def minor_polynomial():
    return param_ring()(MINOR_F)


@lru_cache(maxsize=None)
def t_ring():
    return Ring(("t1", "t2", "t3"))


def parametrization(k):
    """Parametrization of the component V_k as a map to rational functions.

    Free parameters of the triangular components map to themselves, so the
    target ring is the parameter ring for k in {1, 2, 4, 6} and ``t1..t3``
    otherwise.
    """
    text = PARAMETRIZATION_TEXT[k]
    ring = t_ring() if k in (3, 5) else param_ring()
    out = {}
    for v in PARAMS:
        if v in text:
            n, d = text[v]
            out[v] = RationalFunction(ring(n), ring(d))
        else:
            out[v] = RationalFunction(ring(v))
    return out
