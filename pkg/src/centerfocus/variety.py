"""Component-level checks: parametrizations, Jacobians, ranks and tangent spaces."""

from __future__ import annotations

import random
from dataclasses import dataclass

from gmpy2 import mpq

from . import linalg
from .groebner import IdealBasis, elimination_ideal
from .poly import Poly, RationalFunction, Ring, eval_point, substitute


class NotOnVariety(ValueError):
    pass


class SamplingExhausted(RuntimeError):
    pass


@dataclass
class Parametrization:
    """Map from every family parameter to a rational function of free parameters."""

    map: dict

    def __post_init__(self):
        for v, f in self.map.items():
            if not isinstance(f, RationalFunction):
                raise TypeError(f"{v}: expected a RationalFunction")
            if f.den.is_zero():
                raise ZeroDivisionError(f"{v}: zero denominator")
        rings = {f.ring for f in self.map.values()}
        if len(rings) != 1:
            raise ValueError("all entries must share one ring")
        self.ring = rings.pop()

    def denominators(self):
        out = []
        for f in self.map.values():
            if not f.den.is_constant() and not any(f.den == d for d in out):
                out.append(f.den)
        return out

    def point(self, values):
        """Rational point of the family at free-parameter ``values``; None if a denominator vanishes."""
        pt = {}
        for v, f in self.map.items():
            den = eval_point(f.den, values)
            if not den:
                return None
            pt[v] = eval_point(f.num, values) / den
        return pt

    def ideal(self, family_ring, w="w"):
        """Implicitization ideal ``<d_v*v - n_v, 1 - w*prod(d)>`` in ``w, free params, family params``."""
        free = list(self.ring.vars)
        clash = set(free) & set(family_ring.vars)
        if clash:
            raise ValueError(f"free parameters {sorted(clash)} clash with family parameters")
        big = Ring([w] + free + list(family_ring.vars), family_ring.domain)
        W = big.gen(w)
        gens = []
        D = big.one
        for d in self.denominators():
            D = D * d.to_ring(big)
        if not D.is_constant():
            gens.append(big.one - W * D)
        for v in family_ring.vars:
            f = self.map[v]
            gens.append(f.den.to_ring(big) * big.gen(v) - f.num.to_ring(big))
        return IdealBasis(gens, big)


def implicitize(par, family_ring, budget=None, w="w"):
    """Eliminate ``w`` and the free parameters from the implicitization ideal."""
    I = par.ideal(family_ring, w)
    drop = [v for v in I.ring.vars if v not in family_ring.index]
    E = elimination_ideal(I, drop, budget)
    return IdealBasis([g.to_ring(family_ring) for g in E.gens], family_ring)


def vanishes_on_parametrization(p, par):
    rf = substitute(p, par.map if isinstance(par, Parametrization) else par)
    return rf.is_zero()


def jacobian(fs, variables):
    return [[f.diff(v) for v in variables] for f in fs]


def eval_matrix(J, point):
    return [[eval_point(e, point) for e in row] for row in J]


def rank_at_point(J, point):
    """Exact rank of a polynomial matrix evaluated at a rational point."""
    if not J or not J[0]:
        return 0
    return linalg.bareiss_rank(eval_matrix(J, point))


def on_variety(ideal, point):
    return all(not eval_point(g, point) for g in ideal.gens)


def tangent_space_dim(ideal, point):
    if not on_variety(ideal, point):
        raise NotOnVariety("point does not lie on the variety of the ideal")
    J = jacobian(ideal.gens, ideal.ring.vars)
    return ideal.ring.nvars - rank_at_point(J, point)


# ---------------------------------------------------------------------------
# sampling


def random_rational(rng, height=9, nonzero=False):
    num = rng.randint(-height, height)
    while nonzero and not num:
        num = rng.randint(-height, height)
    den = rng.randint(1, height)
    return mpq(num, den)


def sample_points(par, count, rng, accept=None, max_draws=1000, height=9, nonzero=False):
    """Deterministic pseudo-random points on a parametrized component.

    ``accept(point) -> bool`` rejects degenerate points and ``nonzero`` keeps
    free parameters off the coordinate hyperplanes; raises
    :class:`SamplingExhausted` if ``max_draws`` draws yield too few points.
    """
    out = []
    draws = 0
    free = par.ring.vars
    while len(out) < count:
        if draws >= max_draws:
            raise SamplingExhausted(f"found {len(out)} of {count} points in {max_draws} draws")
        draws += 1
        vals = {v: random_rational(rng, height, nonzero) for v in free}
        pt = par.point(vals)
        if pt is None:
            continue
        if accept is not None and not accept(pt):
            continue
        out.append(pt)
    return out


def make_rng(seed):
    return random.Random(seed)
