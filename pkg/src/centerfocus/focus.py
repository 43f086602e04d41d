"""Focus quantities of planar systems ``x' = -y + P~, y' = x + Q~``.

We build ``Phi = x^2 + y^2 + phi_3 + phi_4 + ...`` degree by degree so that

    Phi_x * P + Phi_y * Q = g_1 (x^2+y^2)^2 + g_2 (x^2+y^2)^3 + ...

The linear part acts on degree-``d`` forms through the constant integer matrix
of ``L = -y d/dx + x d/dy``; for even ``d`` its image misses the direction of
``(x^2+y^2)^(d/2)`` and the obstruction along it is the focus quantity.  The
component of ``phi_d`` along that direction is fixed to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from gmpy2 import mpq

from . import linalg
from .domains import ExtIR6, QI6
from .poly import Poly, Ring


class MalformedSystem(ValueError):
    pass


class PlanarSystem:
    """``x' = P``, ``y' = Q`` over a ring containing the phase variables.

    Every other ring variable is a parameter.
    """

    def __init__(self, ring, P, Q, x="x", y="y"):
        self.ring = ring
        self.P = ring(P)
        self.Q = ring(Q)
        self.x = x
        self.y = y
        if x not in ring.index or y not in ring.index:
            raise MalformedSystem(f"phase variables {x}, {y} missing from {ring}")
        self.params = [v for v in ring.vars if v not in (x, y)]
        self.param_ring = Ring(self.params, ring.domain)

    def __repr__(self):
        return f"PlanarSystem(P={self.P}, Q={self.Q})"

    def phase_parts(self, p):
        """``{(a, b): coefficient}`` with ``x^a y^b`` phase monomials."""
        return p.coeffs_in([self.x, self.y], self.param_ring)

    def check_form(self):
        """Raise unless the linear part is (-y, x) with no constant term."""
        one = self.param_ring.one
        for name, poly, lin in (("P", self.P, {(0, 1): -one}), ("Q", self.Q, {(1, 0): one})):
            parts = self.phase_parts(poly)
            for u, c in parts.items():
                if sum(u) <= 1 and c != lin.get(u, 0):
                    raise MalformedSystem(f"{name} must have linear part {'-y' if name == 'P' else 'x'} "
                                          f"and no constant term")
            for u in lin:
                if u not in parts:
                    raise MalformedSystem(f"{name} is missing its linear part")

    def nonlinear_parts(self):
        P = {u: c for u, c in self.phase_parts(self.P).items() if sum(u) >= 2}
        Q = {u: c for u, c in self.phase_parts(self.Q).items() if sum(u) >= 2}
        return P, Q

    def degree(self):
        parts = list(self.phase_parts(self.P)) + list(self.phase_parts(self.Q))
        return max((sum(u) for u in parts), default=0)

    def vector_field(self, f):
        """``f_x * P + f_y * Q``."""
        return f.diff(self.x) * self.P + f.diff(self.y) * self.Q

    def divergence(self):
        return self.P.diff(self.x) + self.Q.diff(self.y)

    def restrict(self, values):
        """Fix some parameters to domain constants."""
        ring = self.ring.drop(list(values))
        P = self.P.partial_eval(values).to_ring(ring)
        Q = self.Q.partial_eval(values).to_ring(ring)
        return PlanarSystem(ring, P, Q, self.x, self.y)

    def with_domain(self, domain):
        ring = self.ring.with_domain(domain)
        return PlanarSystem(ring, self.P.to_ring(ring), self.Q.to_ring(ring), self.x, self.y)


@dataclass(frozen=True)
class LyapunovMatrix:
    degree: int
    matrix: list
    kernel: list = field(default_factory=list)
    left_kernel: list = field(default_factory=list)

    @property
    def kernel_dim(self):
        return len(self.kernel)


@lru_cache(maxsize=None)
def lyapunov_matrix(d):
    """Matrix of ``L(phi) = -y phi_x + x phi_y`` on the basis ``x^(d-j) y^j``."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    m = [[0] * (d + 1) for _ in range(d + 1)]
    for j in range(d + 1):
        a, b = d - j, j
        if a:
            m[j + 1][j] -= a
        if b:
            m[j - 1][j] += b
    ker = linalg.nullspace(m)
    lker = linalg.nullspace(linalg.transpose(m))
    return LyapunovMatrix(d, m, ker, lker)


def _power_vector(d):
    """Coefficients of ``(x^2+y^2)^(d/2)`` on ``x^(d-j) y^j``."""
    h = d // 2
    return [mpq(comb(h, j // 2)) if j % 2 == 0 else mpq(0) for j in range(d + 1)]


@lru_cache(maxsize=None)
def _solver(d):
    """``(ell, Ninv)``: normalised left null vector (or None) and the solving matrix.

    For odd ``d`` Ninv is the inverse of M_d.  For even ``d`` it is the inverse
    of ``M_d + v ell`` which, applied to a vector in the image of M_d, returns
    the unique preimage with ``ell . phi = 0``.
    """
    lm = lyapunov_matrix(d)
    M = linalg.to_q(lm.matrix)
    if d % 2:
        return None, linalg.inverse(M)
    v = _power_vector(d)
    ell = lm.left_kernel[0]
    s = sum(a * b for a, b in zip(ell, v))
    ell = [a / s for a in ell]
    N = [[M[r][c] + v[r] * ell[c] for c in range(d + 1)] for r in range(d + 1)]
    return ell, linalg.inverse(N)


@dataclass
class FocusQuantityResult:
    quantities: list
    phi: dict
    system: PlanarSystem = None

    def __getitem__(self, i):
        return self.quantities[i - 1]

    def __len__(self):
        return len(self.quantities)

    def phi_poly(self):
        """``Phi`` as a polynomial in the system's ring."""
        sys = self.system
        ring = sys.ring
        X, Y = ring.gen(sys.x), ring.gen(sys.y)
        total = ring.zero
        for (a, b), c in self.phi.items():
            total = total + c.to_ring(ring) * X ** a * Y ** b
        return total


def _lin_combo(row, vec, ring):
    mod = ring.domain.modulus
    dom = ring.domain
    acc = {}
    for w, p in zip(row, vec):
        if not w or not p.terms:
            continue
        w = dom.convert(w)
        for m, c in p.terms.items():
            acc[m] = acc.get(m, 0) + w * c
    if mod:
        return Poly(ring, {m: c % mod for m, c in acc.items() if c % mod})
    return Poly(ring, {m: c for m, c in acc.items() if c})


def focus_quantities(sys, k):
    """First ``k`` focus quantities of ``sys`` and the truncated ``Phi``.

    Works over the system's coefficient domain (rationals, a prime field or
    Q(i, r6)).  ``phi`` maps ``(a, b)`` to the coefficient of ``x^a y^b``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    sys.check_form()
    R = sys.param_ring
    one = R.one
    Pn, Qn = sys.nonlinear_parts()
    phi = {(2, 0): one, (0, 2): one}
    quantities = []
    for d in range(3, 2 * k + 3):
        S = {}
        for (a, b), c in list(phi.items()):
            dd = a + b
            if dd >= d:
                continue
            need = d + 1 - dd
            if a:
                for (u, v), pc in Pn.items():
                    if u + v == need:
                        key = (a - 1 + u, b + v)
                        S[key] = S.get(key, R.zero) + (c * pc).scale(R.domain.convert(a))
            if b:
                for (u, v), qc in Qn.items():
                    if u + v == need:
                        key = (a + u, b - 1 + v)
                        S[key] = S.get(key, R.zero) + (c * qc).scale(R.domain.convert(b))
        svec = [S.get((d - j, j), R.zero) for j in range(d + 1)]
        ell, Ninv = _solver(d)
        if ell is None:
            rhs = [-s for s in svec]
        else:
            g = _lin_combo(ell, svec, R)
            quantities.append(g)
            v = _power_vector(d)
            rhs = [g.scale(R.domain.convert(vj)) - s if vj else -s for vj, s in zip(v, svec)]
        for j in range(d + 1):
            coeff = _lin_combo(Ninv[j], rhs, R)
            if coeff.terms:
                phi[(d - j, j)] = coeff
    return FocusQuantityResult(quantities, phi, sys)


def residual(result, degree=None):
    """Phase-degree <= ``degree`` part of ``Phi_x P + Phi_y Q - sum g (x^2+y^2)^m``."""
    sys = result.system
    ring = sys.ring
    k = len(result.quantities)
    degree = 2 * k + 2 if degree is None else degree
    Phi = result.phi_poly()
    X, Y = ring.gen(sys.x), ring.gen(sys.y)
    r2 = X * X + Y * Y
    lhs = sys.vector_field(Phi)
    for m, g in enumerate(result.quantities, start=2):
        lhs = lhs - g.to_ring(ring) * r2 ** m
    ix, iy = ring.index[sys.x], ring.index[sys.y]
    return Poly(ring, {mono: c for mono, c in lhs.terms.items() if mono[ix] + mono[iy] <= degree})


# ---------------------------------------------------------------------------
# complex coordinates


def complexify(sys):
    """Coefficients of ``z' = z + sum c_ab z^a zb^b`` after ``z = x + i y`` and time ``t -> i t``.

    Returns ``{(a, b): Poly}`` over Q(i, r6) in the parameters.
    """
    if sys.degree() > 3:
        raise ValueError("complexify supports systems of degree at most 3")
    ext = ExtIR6()
    params = sys.params
    zring = Ring(["z", "zb"] + params, ext)
    z, zb = zring.gen("z"), zring.gen("zb")
    i = zring.constant(QI6(0, 1))
    half = zring.constant(QI6(mpq(1, 2)))
    xs = half * (z + zb)
    ys = -i * half * (z - zb)
    P = _phase_substitute(sys, sys.P, xs, ys, zring)
    Q = _phase_substitute(sys, sys.Q, xs, ys, zring)
    zdot = -i * (P + i * Q)
    pring = Ring(params, ext)
    return zdot.coeffs_in(["z", "zb"], pring)


def _phase_substitute(sys, p, xs, ys, zring):
    parts = sys.phase_parts(p)
    total = zring.zero
    for (a, b), c in parts.items():
        total = total + c.map_coeffs(QI6.lift, Ring(sys.params, zring.domain)).to_ring(zring) * xs ** a * ys ** b
    return total


def focus_quantities_complex(sys, k):
    """Independent route to the focus quantities through complex coordinates.

    In ``(z, zb)`` the linear operator is diagonal, ``L(z^a zb^b) = i(a-b) z^a zb^b``,
    so each degree is solved by division; the obstruction is the coefficient of
    ``(z zb)^m``.  Uses the same normalisation (no ``(z zb)^m`` term in Phi), so
    the results coincide with :func:`focus_quantities`.  Returns rational
    polynomials in the parameters.
    """
    ext = ExtIR6()
    params = sys.params
    zring = Ring(["z", "zb"] + params, ext)
    pring = Ring(params, ext)
    z, zb = zring.gen("z"), zring.gen("zb")
    i = zring.constant(QI6(0, 1))
    half = zring.constant(QI6(mpq(1, 2)))
    xs = half * (z + zb)
    ys = -i * half * (z - zb)
    P = _phase_substitute(sys, sys.P, xs, ys, zring)
    Q = _phase_substitute(sys, sys.Q, xs, ys, zring)
    zdot = P + i * Q
    zbdot = P - i * Q
    Fz = {u: c for u, c in zdot.coeffs_in(["z", "zb"], pring).items() if sum(u) >= 2}
    Fzb = {u: c for u, c in zbdot.coeffs_in(["z", "zb"], pring).items() if sum(u) >= 2}
    phi = {(1, 1): pring.one}
    out = []
    I = QI6(0, 1)
    for d in range(3, 2 * k + 3):
        S = {}
        for (a, b), c in list(phi.items()):
            if a + b >= d:
                continue
            need = d + 1 - (a + b)
            if a:
                for (u, v), f in Fz.items():
                    if u + v == need:
                        key = (a - 1 + u, b + v)
                        S[key] = S.get(key, pring.zero) + (c * f) * a
            if b:
                for (u, v), f in Fzb.items():
                    if u + v == need:
                        key = (a + u, b - 1 + v)
                        S[key] = S.get(key, pring.zero) + (c * f) * b
        if d % 2 == 0:
            out.append(S.get((d // 2, d // 2), pring.zero))
        for (a, b), s in S.items():
            if a != b and s.terms:
                phi[(a, b)] = s * (-(I * (a - b)).inverse())
    qring = Ring(params)
    return [g.map_coeffs(lambda c: QI6.lift(c).a if not (c.b or c.c or c.d) else _not_real(c), qring)
            for g in out]


def _not_real(c):
    raise ArithmeticError(f"focus quantity has non-rational coefficient {c}")
