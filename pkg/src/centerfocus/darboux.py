"""Verification of Darboux polynomials, Darboux integrals and Hamiltonians.

For ``mu = prod f_i^{s_i}`` with ``X(f_i) = K_i f_i`` the integrating-factor
condition ``div(mu * (P, Q)) = 0`` reduces to the polynomial identity
``sum s_i K_i + div(P, Q) = 0``, so fractional exponents need no roots.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction

from gmpy2 import mpq

from .groebner import _Elem, _leading, _make_monic, _negkey_fn
from .poly import Poly

FIRST_INTEGRAL = "first_integral"
INTEGRATING_FACTOR = "integrating_factor"


@dataclass
class DarbouxCertificate:
    factors: list = field(default_factory=list)   # [(f_i, s_i)]
    kind: str = INTEGRATING_FACTOR

    def __post_init__(self):
        if self.kind not in (FIRST_INTEGRAL, INTEGRATING_FACTOR):
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        self.factors = [(f, _exponent(s)) for f, s in self.factors]


def _exponent(s):
    if isinstance(s, Fraction):
        return mpq(s.numerator, s.denominator)
    return mpq(s)


def exact_divide(a, b, order=None):
    """``(q, r)`` with ``a = q*b + r`` by multivariate division (degrevlex by default).

    For a single divisor ``r == 0`` exactly when ``b`` divides ``a``.
    """
    ring = a.ring
    order = ring.order_for(order) if not hasattr(order, "key") else order
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    dom = ring.domain
    mod = dom.modulus
    key = order.key
    lm = _leading(b.terms, key)
    lc = b.terms[lm]
    inv = dom.inv(lc)
    divisor = _Elem(lm, _make_monic(b.terms, lm, mod, dom))
    negkey = _negkey_fn(order)
    p = dict(a.terms)
    q = {}
    r = {}
    heap = [(negkey(m), m) for m in p]
    heapq.heapify(heap)
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m)
        if not c:
            continue
        if all(x <= y for x, y in zip(lm, m)):
            u = tuple(y - x for x, y in zip(lm, m))
            q[u] = (c * inv) % mod if mod else c * inv
            for gm, gc in divisor.terms.items():
                if gm == lm:
                    continue
                nm = tuple(x + y for x, y in zip(u, gm))
                v = p.get(nm)
                if v is None:
                    heapq.heappush(heap, (negkey(nm), nm))
                    v = 0
                v = v - c * gc
                p[nm] = v % mod if mod else v
        else:
            r[m] = c
    return Poly(ring, q), Poly(ring, r)


def cofactor(sys, f):
    """Cofactor ``K`` with ``X(f) = K f``, or None when ``f`` is not a Darboux polynomial."""
    f = sys.ring(f)
    if f.is_zero():
        raise ValueError("f must be nonzero")
    q, r = exact_divide(sys.vector_field(f), f)
    if not r.is_zero():
        return None
    return q


def divergence(sys):
    return sys.divergence()


def _cofactor_sum(sys, cert):
    dom = sys.ring.domain
    total = sys.ring.zero
    for f, s in cert.factors:
        K = cofactor(sys, f)
        if K is None:
            return None
        total = total + K * dom.convert(s)
    return total


def verify_integrating_factor(sys, cert):
    """True iff ``sum s_i K_i + div = 0`` (``mu = prod f_i^s_i`` is an integrating factor)."""
    if cert.kind != INTEGRATING_FACTOR:
        raise ValueError("certificate is not an integrating factor")
    total = _cofactor_sum(sys, cert)
    if total is None:
        return False
    return (total + sys.divergence()).is_zero()


def verify_first_integral_darboux(sys, cert):
    if cert.kind != FIRST_INTEGRAL:
        raise ValueError("certificate is not a first integral")
    total = _cofactor_sum(sys, cert)
    return total is not None and total.is_zero()


def verify_hamiltonian(sys, H):
    H = sys.ring(H)
    return sys.P == -H.diff(sys.y) and sys.Q == H.diff(sys.x)


def is_invariant(sys, f, K):
    """Direct check of ``f_x P + f_y Q - K f = 0``."""
    return (sys.vector_field(f) - K * f).is_zero()
