"""Buchberger's algorithm and the ideal-theoretic tests built on it.

The engine works on the raw term dicts of :class:`~centerfocus.poly.Poly`.
Basis elements are kept monic; reduction is heap driven so each monomial is
visited once in decreasing order.  Pair selection is the normal strategy
(smallest lcm first, ties broken by pair indices) and pairs are pruned with
the Gebauer-Moeller installation of Buchberger's two criteria.
"""

from __future__ import annotations

import time
from heapq import heappush, heappop, heapify
from itertools import combinations
from operator import add as _add, sub as _sub

from .orders import MonomialOrder
from .poly import Poly, Ring, RingMismatch


class BudgetExceeded(RuntimeError):
    """A Groebner computation hit its resource budget (not a mathematical failure)."""


class Budget:
    """Limits on critical pairs examined, basis size and wall-clock seconds.

    ``None`` means unlimited.  One budget may be shared by several
    computations; the counters accumulate.
    """

    def __init__(self, max_pairs=None, max_seconds=None, max_basis=None):
        self.max_pairs = max_pairs
        self.max_seconds = max_seconds
        self.max_basis = max_basis
        self.pairs = 0
        self._t0 = None

    def start(self):
        if self._t0 is None:
            self._t0 = time.monotonic()

    def charge_pairs(self, n):
        self.pairs += n
        if self.max_pairs is not None and self.pairs > self.max_pairs:
            raise BudgetExceeded(f"pair budget of {self.max_pairs} exceeded")

    def check_time(self):
        if self.max_seconds is not None and self._t0 is not None:
            if time.monotonic() - self._t0 > self.max_seconds:
                raise BudgetExceeded(f"time budget of {self.max_seconds}s exceeded")

    def check_basis(self, size):
        if self.max_basis is not None and size > self.max_basis:
            raise BudgetExceeded(f"basis size budget of {self.max_basis} exceeded")


UNLIMITED = None


class IdealBasis:
    """Finite generator list of an ideal, tagged with its ring and monomial order."""

    def __init__(self, gens, ring=None, order=None):
        gens = list(gens)
        if ring is None:
            if not gens:
                raise ValueError("ring required for an empty generator list")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatch("all generators must share one ring")
        self.ring = ring
        self.gens = [g for g in gens if not g.is_zero()]
        self.order = ring.order_for(order) if not isinstance(order, MonomialOrder) else order

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __repr__(self):
        return f"IdealBasis([{', '.join(map(str, self.gens))}])"


class GroebnerBasis:
    """Reduced Groebner basis, sorted by decreasing leading monomial."""

    reduced = True

    def __init__(self, basis, ring, order):
        self.basis = basis
        self.ring = ring
        self.order = order

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    @property
    def gens(self):
        return self.basis

    def is_unit(self):
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def reduce(self, p):
        return normal_form(p, self.basis, self.order)

    def contains(self, p):
        return self.reduce(p).is_zero()

    def leading_monomials(self):
        return [g.LM(self.order) for g in self.basis]

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.basis))}])"


# ---------------------------------------------------------------------------
# monomial helpers


def _negkey_fn(order):
    if order.kind == "degrevlex":
        return lambda m: (-sum(m),) + m[::-1]
    if order.kind == "lex":
        return lambda m: tuple(-e for e in m)
    key = order.key
    return lambda m: tuple(-e for e in key(m))


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(map(max, a, b))


class _Elem:
    __slots__ = ("lm", "deg", "terms")

    def __init__(self, lm, terms):
        self.lm = lm
        self.deg = sum(lm)
        self.terms = terms


def _reduce_terms(terms, reducers, negkey, mod, budget=None):
    """Full normal form of ``terms`` by monic ``reducers`` (list of _Elem).

    Returns a new term dict.  The first reducer (in list order) whose leading
    monomial divides a term is used, so the result is deterministic.
    """
    p = dict(terms)
    heap = [(negkey(m), m) for m in p]
    heapify(heap)
    rem = {}
    steps = 0
    while heap:
        _, m = heappop(heap)
        c = p.pop(m)
        if not c:
            continue
        dm = sum(m)
        red = None
        for r in reducers:
            if r.deg <= dm and _divides(r.lm, m):
                red = r
                break
        if red is None:
            rem[m] = c
            continue
        steps += 1
        if budget is not None and steps % 256 == 0:
            budget.check_time()
        q = tuple(map(_sub, m, red.lm))
        lm = red.lm
        for gm, gc in red.terms.items():
            if gm == lm:
                continue
            nm = tuple(map(_add, q, gm))
            v = p.get(nm)
            if v is None:
                v = -c * gc
                if mod:
                    v %= mod
                p[nm] = v
                heappush(heap, (negkey(nm), nm))
            else:
                v = v - c * gc
                p[nm] = v % mod if mod else v
    return rem


def _make_monic(terms, lm, mod, dom):
    lc = terms[lm]
    if lc == 1:
        return terms
    inv = dom.inv(lc)
    if mod:
        return {m: c * inv % mod for m, c in terms.items()}
    return {m: c * inv for m, c in terms.items()}


def _leading(terms, key):
    return max(terms, key=key)


def _spoly(f, g, mod):
    l = _lcm(f.lm, g.lm)
    u = tuple(map(_sub, l, f.lm))
    v = tuple(map(_sub, l, g.lm))
    out = {}
    for m, c in f.terms.items():
        if m != f.lm:
            out[tuple(map(_add, m, u))] = c
    for m, c in g.terms.items():
        if m == g.lm:
            continue
        nm = tuple(map(_add, m, v))
        s = out.get(nm, 0) - c
        if mod:
            s %= mod
        if s:
            out[nm] = s
        else:
            out.pop(nm, None)
    return out


# ---------------------------------------------------------------------------
# Buchberger


def _buchberger(polys, ring, order, budget=None, seed=()):
    """Return a list of monic term dicts forming a (non-reduced) Groebner basis.

    ``seed`` is a list of term dicts already known to form a Groebner basis in
    ``order``; pairs among them are not examined.
    """
    dom = ring.domain
    mod = dom.modulus
    key = order.key
    negkey = _negkey_fn(order)
    if budget is not None:
        budget.start()

    elems = []          # all basis elements ever added
    active = []         # indices of the current minimal basis (reducer set)
    pairs = []          # list of (i, j) with i < j

    def reducers():
        return [elems[k] for k in active]

    def unit():
        return [{ring.zero_mono: dom.one}]

    def update(ih):
        nonlocal active, pairs
        h = elems[ih]
        mh = h.lm
        if budget is not None:
            budget.charge_pairs(len(active))
        cand = list(active)
        new = []
        for pos, ig in enumerate(cand):
            mg = elems[ig].lm
            l = _lcm(mh, mg)
            coprime = l == tuple(map(_add, mh, mg))
            if coprime:
                new.append((ig, l, True))
                continue
            redundant = False
            for ix in cand[pos + 1:]:
                if _divides(_lcm(mh, elems[ix].lm), l):
                    redundant = True
                    break
            if not redundant:
                for _, l2, _c in new:
                    if _divides(l2, l):
                        redundant = True
                        break
            if not redundant:
                new.append((ig, l, False))
        kept_new = [(ig, ih) for ig, l, coprime in new if not coprime]
        old = []
        for (i, j) in pairs:
            mi, mj = elems[i].lm, elems[j].lm
            l = _lcm(mi, mj)
            if (not _divides(mh, l)) or _lcm(mi, mh) == l or _lcm(mj, mh) == l:
                old.append((i, j))
        pairs = old + kept_new
        active = [ig for ig in active if not _divides(mh, elems[ig].lm)] + [ih]
        if budget is not None:
            budget.check_basis(len(active))

    for t in seed:
        lm = _leading(t, key)
        elems.append(_Elem(lm, t))
        active.append(len(elems) - 1)

    work = sorted((p.terms for p in polys if p.terms), key=lambda t: key(_leading(t, key)))
    for t in work:
        r = _reduce_terms(t, reducers(), negkey, mod, budget)
        if not r:
            continue
        lm = _leading(r, key)
        if not any(lm):
            return unit()
        elems.append(_Elem(lm, _make_monic(r, lm, mod, dom)))
        update(len(elems) - 1)

    while pairs:
        if budget is not None:
            budget.check_time()
        best = min(range(len(pairs)),
                   key=lambda k: (key(_lcm(elems[pairs[k][0]].lm, elems[pairs[k][1]].lm)), pairs[k]))
        i, j = pairs.pop(best)
        s = _spoly(elems[i], elems[j], mod)
        if not s:
            continue
        r = _reduce_terms(s, reducers(), negkey, mod, budget)
        if not r:
            continue
        lm = _leading(r, key)
        if not any(lm):
            return unit()
        elems.append(_Elem(lm, _make_monic(r, lm, mod, dom)))
        update(len(elems) - 1)

    return [elems[k].terms for k in active]


def _interreduce(basis, ring, order, budget=None):
    dom = ring.domain
    mod = dom.modulus
    key = order.key
    negkey = _negkey_fn(order)
    items = [(_leading(t, key), t) for t in basis]
    items.sort(key=lambda it: key(it[0]))
    minimal = []
    for lm, t in items:
        if not any(_divides(l2, lm) for l2, _ in minimal):
            minimal.append((lm, t))
    out = []
    for k, (lm, t) in enumerate(minimal):
        others = [_Elem(l2, t2) for j, (l2, t2) in enumerate(minimal) if j != k]
        r = _reduce_terms(t, others, negkey, mod, budget)
        out.append(_make_monic(r, lm, mod, dom))
    polys = [Poly(ring, t) for t in out]
    polys.sort(key=lambda g: key(g.LM(order)), reverse=True)
    return polys


def groebner_basis(ideal, order=None, budget=None, seed=None):
    """Reduced Groebner basis of an :class:`IdealBasis` (or a list of polynomials).

    ``seed`` may be a :class:`GroebnerBasis` whose elements are a subset of the
    ideal and already a Groebner basis in ``order``.
    """
    if not isinstance(ideal, IdealBasis):
        ideal = IdealBasis(ideal, order=order)
    order = ideal.order if order is None else ideal.ring.order_for(order)
    ring = ideal.ring
    if not ideal.gens and not seed:
        return GroebnerBasis([], ring, order)
    seed_terms = [g.to_ring(ring).terms for g in seed] if seed else ()
    raw = _buchberger(ideal.gens, ring, order, budget, seed_terms)
    return GroebnerBasis(_interreduce(raw, ring, order, budget), ring, order)


def _as_gb(ideal, order=None, budget=None):
    if isinstance(ideal, GroebnerBasis) and (order is None or ideal.order == order):
        return ideal
    return groebner_basis(ideal if isinstance(ideal, IdealBasis) else IdealBasis(list(ideal)),
                          order, budget)


def normal_form(p, G, order=None):
    """Remainder of ``p`` on division by the list ``G`` (first divisor wins)."""
    ring = p.ring
    order = ring.order_for(order) if not isinstance(order, MonomialOrder) else order
    key = order.key
    mod = ring.domain.modulus
    dom = ring.domain
    reducers = []
    for g in G:
        if g.ring != ring:
            raise RingMismatch("normal_form: ring mismatch")
        if g.is_zero():
            continue
        lm = _leading(g.terms, key)
        reducers.append(_Elem(lm, _make_monic(g.terms, lm, mod, dom)))
    return Poly(ring, _reduce_terms(p.terms, reducers, _negkey_fn(order), mod))


def is_groebner(G, order=None):
    """Buchberger criterion: every S-polynomial reduces to zero."""
    G = list(G)
    if not G:
        return True
    ring = G[0].ring
    order = ring.order_for(order) if not isinstance(order, MonomialOrder) else order
    key = order.key
    mod = ring.domain.modulus
    dom = ring.domain
    elems = []
    for g in G:
        lm = _leading(g.terms, key)
        elems.append(_Elem(lm, _make_monic(g.terms, lm, mod, dom)))
    negkey = _negkey_fn(order)
    for f, g in combinations(elems, 2):
        s = _spoly(f, g, mod)
        if s and _reduce_terms(s, elems, negkey, mod):
            return False
    return True


def is_reduced(G, order=None):
    G = list(G)
    if not G:
        return True
    order = G[0].ring.order_for(order) if not isinstance(order, MonomialOrder) else order
    lms = [g.LM(order) for g in G]
    for g, lm in zip(G, lms):
        if g.LC(order) != 1:
            return False
        for lm2 in lms:
            if lm2 is lm:
                continue
            if any(_divides(lm2, m) for m in g.terms):
                return False
    return True


# ---------------------------------------------------------------------------
# ideal operations


def ideal_membership(p, ideal, budget=None):
    G = _as_gb(ideal, None, budget)
    return normal_form(p, G.basis, G.order).is_zero()


def radical_membership(p, ideal, budget=None, shortcut=True, wvar="w", powers=1):
    """Rabinowitsch test: ``p`` vanishes on V(I) iff <I, 1 - w*p> = <1>.

    With ``shortcut`` an ordinary membership hit of ``p^m`` for some
    ``m <= powers`` answers without the auxiliary computation.
    """
    ring = ideal.ring
    if p.ring != ring:
        raise RingMismatch("radical_membership: ring mismatch")
    if p.is_zero():
        return True
    G = None
    if shortcut or isinstance(ideal, GroebnerBasis):
        G = _as_gb(ideal, None, budget)
        r = normal_form(p, G.basis, G.order)
        if r.is_zero():
            return True
        q = r
        for _ in range(1, powers if shortcut else 1):
            if budget is not None:
                budget.check_time()
            q = normal_form(q * r, G.basis, G.order)
            if q.is_zero():
                return True
        p = r
    name = wvar
    while name in ring.index:
        name += "_"
    big = ring.extend([name])
    w = big.gen(name)
    order = big.order_for(_extend_order(ideal.order if G is None else G.order, ring, big))
    rab = big.one - w * p.to_ring(big)
    if G is not None:
        res = groebner_basis(IdealBasis([rab], big, order), order, budget,
                             seed=[g.to_ring(big) for g in G.basis])
    else:
        gens = [g.to_ring(big) for g in ideal.gens] + [rab]
        res = groebner_basis(IdealBasis(gens, big, order), order, budget)
    return res.is_unit()


def _extend_order(order, ring, big):
    """Same order on ``big`` (ring + trailing variables), new variables placed last."""
    if order.kind == "elim":
        return MonomialOrder("elim", big.nvars, order.block)
    return MonomialOrder(order.kind, big.nvars)


def elimination_ideal(ideal, drop, budget=None):
    """Generators of ``I`` intersected with the subring free of ``drop``.

    The result lives in the ring with the dropped variables removed and is a
    reduced degrevlex Groebner basis there.
    """
    ring = ideal.ring
    drop = list(drop)
    unknown = [v for v in drop if v not in ring.index]
    if unknown:
        raise KeyError(f"unknown variables {unknown}")
    sub = ring.drop(drop)
    if not drop:
        return IdealBasis(list(ideal.gens), sub, "degrevlex")
    order = MonomialOrder("elim", ring.nvars, [ring.index[v] for v in drop])
    G = groebner_basis(IdealBasis(ideal.gens, ring, order), order, budget)
    idx = [ring.index[v] for v in drop]
    kept = [g for g in G.basis if all(m[k] == 0 for m in g.terms for k in idx)]
    return IdealBasis([g.to_ring(sub) for g in kept], sub, "degrevlex")


def ideal_intersect(*ideals, budget=None, tvar="t"):
    """Intersection via ``t*A + (1-t)*B`` and elimination of ``t``, folded left."""
    if not ideals:
        raise ValueError("need at least one ideal")
    ring = ideals[0].ring
    for I in ideals:
        if I.ring != ring:
            raise RingMismatch("ideal_intersect: ring mismatch")
    name = tvar
    while name in ring.index:
        name += "_"
    acc = IdealBasis(list(ideals[0].gens), ring)
    big = ring.extend([name], front=True)
    t = big.gen(name)
    for B in ideals[1:]:
        gens = [t * g.to_ring(big) for g in acc.gens] + [(big.one - t) * g.to_ring(big) for g in B.gens]
        elim = elimination_ideal(IdealBasis(gens, big), [name], budget)
        acc = IdealBasis([g.to_ring(ring) for g in elim.gens], ring)
    return acc


def ideal_equal(A, B, budget=None):
    GA = _as_gb(A, None, budget)
    GB = _as_gb(B, GA.order, budget) if not isinstance(B, GroebnerBasis) else B
    return (all(normal_form(g, GB.basis, GB.order).is_zero() for g in A.gens)
            and all(normal_form(g, GA.basis, GA.order).is_zero() for g in B.gens))


def ideal_dimension(ideal, budget=None):
    """Krull dimension from the leading monomials of a Groebner basis.

    The largest set S of variables such that no leading monomial involves only
    variables of S.  dim <1> = -1; the zero ideal has dimension n.
    """
    G = _as_gb(ideal, None, budget)
    n = G.ring.nvars
    if G.is_unit():
        return -1
    supports = [frozenset(k for k, e in enumerate(m) if e) for m in G.leading_monomials()]
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            s = set(S)
            if not any(sup <= s for sup in supports):
                return size
    return 0
