"""Rational reconstruction of residues and lifting of modular polynomials."""

from __future__ import annotations

from math import gcd, isqrt

from gmpy2 import mpq

from .domains import QQ
from .poly import Poly, Ring


def wang_bound(m):
    return isqrt(m // 2)


def rational_reconstruct(c, m):
    """Return ``a/b`` with ``a = b*c mod m`` and ``|a|, b <= sqrt(m/2)``, or None.

    Half-extended Euclidean algorithm on ``(m, c)``, stopped at the first
    remainder inside the bound.
    """
    if not 0 <= c < m:
        raise ValueError("residue must satisfy 0 <= c < m")
    bound = wang_bound(m)
    r0, r1 = m, c
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or gcd(s1, m) != 1:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    if gcd(r1, s1) != 1:
        return None
    return mpq(r1, s1)


def lift_poly(p, ring=None):
    """Coefficient-wise reconstruction of a polynomial over GF(p); None on failure."""
    mod = p.ring.domain.modulus
    if not mod:
        raise ValueError("lift_poly expects a polynomial over a prime field")
    ring = ring or Ring(p.ring.vars, QQ)
    terms = {}
    for m, c in p.terms.items():
        q = rational_reconstruct(c % mod, mod)
        if q is None:
            return None
        terms[m] = q
    return Poly(ring, terms)


def monic_lift(p, order=None):
    """Lift after scaling to leading coefficient 1 (how modular bases are normalised)."""
    return lift_poly(p.monic(order))
