"""Sparse exact multivariate polynomials.

A :class:`Poly` is an immutable map from exponent tuples to nonzero
coefficients of its ring's domain.  Arithmetic never touches floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product as _iproduct
from operator import add as _add

from gmpy2 import mpq

from .domains import QQ, PrimeField, QI6, make_domain, DomainError
from .orders import MonomialOrder, order_from_spec

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class RingMismatch(ValueError):
    pass


class Ring:
    """Polynomial ring: an ordered variable list, a coefficient domain and a default order."""

    def __init__(self, variables, domain=QQ, order="degrevlex"):
        variables = tuple(variables)
        domain = make_domain(domain)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        for v in variables:
            if not _IDENT.match(v):
                raise ValueError(f"invalid variable name {v!r}")
            if v in ("i", "r6"):
                raise ValueError(f"{v!r} is a reserved token, not a variable name")
        self.vars = variables
        self.nvars = len(variables)
        self.domain = domain
        self.index = {v: k for k, v in enumerate(variables)}
        self.order = order_from_spec(order, variables) if not isinstance(order, MonomialOrder) else order
        self.zero_mono = (0,) * self.nvars

    def __eq__(self, other):
        return isinstance(other, Ring) and self.vars == other.vars and self.domain == other.domain

    def __hash__(self):
        return hash((self.vars, self.domain))

    def __repr__(self):
        return f"Ring({list(self.vars)}, {self.domain!r})"

    # construction helpers
    def __call__(self, x):
        if isinstance(x, Poly):
            return x.to_ring(self)
        if isinstance(x, str):
            return parse_poly(x, self)
        return self.constant(x)

    def constant(self, c):
        c = self.domain.convert(c)
        return Poly(self, {self.zero_mono: c} if c else {})

    @property
    def zero(self):
        return Poly(self, {})

    @property
    def one(self):
        return self.constant(1)

    def gen(self, name):
        if name not in self.index:
            raise KeyError(f"unknown variable {name!r}")
        m = [0] * self.nvars
        m[self.index[name]] = 1
        return Poly(self, {tuple(m): self.domain.one})

    def gens(self):
        return [self.gen(v) for v in self.vars]

    def monomial(self, exps, coeff=1):
        return self.from_terms({tuple(exps): coeff})

    def from_terms(self, terms):
        """Checked constructor: converts coefficients and drops zeros."""
        out = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != self.nvars or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m}")
            c = self.domain.convert(c)
            if c:
                out[m] = c
        return Poly(self, out)

    def order_for(self, spec=None):
        if spec is None:
            return self.order
        return order_from_spec(spec, self.vars)

    # derived rings
    def extend(self, names, front=False):
        names = tuple(n for n in names if n not in self.index)
        vs = names + self.vars if front else self.vars + names
        return Ring(vs, self.domain)

    def drop(self, names):
        names = set(names)
        return Ring([v for v in self.vars if v not in names], self.domain)

    def with_domain(self, domain):
        return Ring(self.vars, domain)


def _norm(c, mod):
    return c % mod if mod else c


class Poly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # basic protocol
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            other = self.ring.constant(other)
        except (TypeError, ValueError, DomainError):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({str(self)!r}, {self.ring!r})"

    def __str__(self):
        return canonical_string(self)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatch(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring.constant(other)

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        mod = self.ring.domain.modulus
        terms = dict(self.terms)
        for m, c in other.terms.items():
            if m in terms:
                s = _norm(terms[m] + c, mod)
                if s:
                    terms[m] = s
                else:
                    del terms[m]
            else:
                terms[m] = c
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        mod = self.ring.domain.modulus
        return Poly(self.ring, {m: _norm(-c, mod) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(self.ring.domain.convert(other))
        other = self._coerce(other)
        mod = self.ring.domain.modulus
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        terms = {}
        get = terms.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(map(_add, ma, mb))
                terms[m] = get(m, 0) + ca * cb
        if mod:
            terms = {m: c % mod for m, c in terms.items() if c % mod}
        else:
            terms = {m: c for m, c in terms.items() if c}
        return Poly(self.ring, terms)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a natural number")
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        mod = self.ring.domain.modulus
        if mod:
            c = c % mod
        if not c:
            return Poly(self.ring, {})
        if mod:
            return Poly(self.ring, {m: v * c % mod for m, v in self.terms.items()})
        return Poly(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono, c):
        """Multiply by the single term ``c * x^mono``."""
        mod = self.ring.domain.modulus
        if mod:
            return Poly(self.ring, {tuple(map(_add, m, mono)): v * c % mod for m, v in self.terms.items()})
        return Poly(self.ring, {tuple(map(_add, m, mono)): v * c for m, v in self.terms.items()})

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant():
                raise TypeError("use RationalFunction for non-constant division")
            other = other.constant_value()
        c = self.ring.domain.convert(other)
        return self.scale(self.ring.domain.inv(c))

    # inspection
    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def constant_value(self):
        return self.terms.get(self.ring.zero_mono, self.ring.domain.zero)

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, var):
        k = self.ring.index[var]
        return max((m[k] for m in self.terms), default=-1)

    def variables(self):
        used = set()
        for m in self.terms:
            used.update(k for k, e in enumerate(m) if e)
        return [self.ring.vars[k] for k in sorted(used)]

    def sorted_terms(self, order=None):
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order=None):
        key = (order or self.ring.order).key
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def LM(self, order=None):
        return self.leading_term(order)[0]

    def LC(self, order=None):
        return self.leading_term(order)[1]

    def monic(self, order=None):
        if not self.terms:
            return self
        return self.scale(self.ring.domain.inv(self.LC(order)))

    # calculus and evaluation
    def diff(self, var):
        return diff(self, var)

    def eval(self, point):
        return eval_point(self, point)

    def partial_eval(self, point):
        """Substitute domain constants for some variables, keeping the ring."""
        ring = self.ring
        dom = ring.domain
        mod = dom.modulus
        idx = [(ring.index[v], dom.convert(c)) for v, c in point.items()]
        terms = {}
        for m, c in self.terms.items():
            m = list(m)
            for k, val in idx:
                e = m[k]
                if e:
                    c = c * val ** e
                    m[k] = 0
            if mod:
                c %= mod
            m = tuple(m)
            terms[m] = terms.get(m, 0) + c
        return Poly(ring, {m: (c % mod if mod else c) for m, c in terms.items() if (c % mod if mod else c)})

    def to_ring(self, ring):
        """Re-embed into a ring that contains every variable actually used."""
        if ring == self.ring:
            return self
        pos = []
        for k, v in enumerate(self.ring.vars):
            if v in ring.index:
                pos.append((k, ring.index[v]))
        used = {k for m in self.terms for k, e in enumerate(m) if e}
        mapped = {k for k, _ in pos}
        if not used <= mapped:
            missing = [self.ring.vars[k] for k in sorted(used - mapped)]
            raise RingMismatch(f"variables {missing} not in target ring")
        dom = ring.domain
        terms = {}
        for m, c in self.terms.items():
            nm = [0] * ring.nvars
            for k, j in pos:
                nm[j] = m[k]
            c = dom.convert(c)
            if c:
                terms[tuple(nm)] = c
        return Poly(ring, terms)

    def coeffs_in(self, names, coeff_ring):
        """Split as ``sum_u c_u * u`` with ``u`` monomials in ``names``.

        Returns a dict mapping exponent tuples (ordered like ``names``) to
        polynomials of ``coeff_ring`` over the remaining variables.
        """
        sel = [self.ring.index[v] for v in names]
        rest = [(k, coeff_ring.index[v]) for k, v in enumerate(self.ring.vars) if v not in names]
        groups = {}
        for m, c in self.terms.items():
            u = tuple(m[k] for k in sel)
            nm = [0] * coeff_ring.nvars
            for k, j in rest:
                nm[j] = m[k]
            groups.setdefault(u, {})[tuple(nm)] = c
        return {u: Poly(coeff_ring, t) for u, t in groups.items()}

    def map_coeffs(self, fn, ring=None):
        ring = ring or self.ring
        terms = {}
        for m, c in self.terms.items():
            c = fn(c)
            if c:
                terms[m] = c
        return Poly(ring, terms)


# ---------------------------------------------------------------------------
# functional forms


def arith(op, p, q):
    if p.ring != q.ring:
        raise RingMismatch(f"ring mismatch: {p.ring} vs {q.ring}")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def diff(p, var):
    ring = p.ring
    if var not in ring.index:
        raise KeyError(f"unknown variable {var!r}")
    k = ring.index[var]
    mod = ring.domain.modulus
    terms = {}
    for m, c in p.terms.items():
        e = m[k]
        if e:
            c = c * e
            if mod:
                c %= mod
            if c:
                terms[m[:k] + (e - 1,) + m[k + 1:]] = c
    return Poly(ring, terms)


def eval_point(p, point):
    """Evaluate at a full assignment ``{name: value}``; returns a domain element."""
    ring = p.ring
    dom = ring.domain
    missing = [v for v in ring.vars if v not in point]
    if missing:
        raise KeyError(f"missing assignment for {missing}")
    vals = [dom.convert(point[v]) for v in ring.vars]
    mod = dom.modulus
    total = dom.zero
    for m, c in p.terms.items():
        for v, e in zip(vals, m):
            if e:
                c = c * v ** e if not mod else c * pow(v, e, mod) % mod
        total = total + c
    return total % mod if mod else total


def reduce_mod_p(p, prime):
    """Image of a rational polynomial in ``GF(prime)[same variables]``."""
    gf = PrimeField(prime)
    ring = Ring(p.ring.vars, gf)
    return p.map_coeffs(gf.convert, ring)


def canonical_string(p, order=None):
    if isinstance(order, str):
        order = p.ring.order_for(order)
    if not p.terms:
        return "0"
    dom = p.ring.domain
    names = p.ring.vars
    out = []
    for m, c in p.sorted_terms(order):
        neg, body = dom.format(c)
        mono = "*".join(
            names[k] if e == 1 else f"{names[k]}^{e}" for k, e in enumerate(m) if e
        )
        if mono:
            text = mono if body == "1" else f"{body}*{mono}"
        else:
            text = body
        if not out:
            out.append(("-" if neg else "") + text)
        else:
            out.append(("- " if neg else "+ ") + text)
    return " ".join(out)


# ---------------------------------------------------------------------------
# parsing

class ParseError(ValueError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} at offset {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None or mt.end() == pos:
            break
        if mt.group(1) is not None:
            toks.append(("int", mt.group(1), mt.start(1)))
        elif mt.group(2) is not None:
            toks.append(("id", mt.group(2), mt.start(2)))
        elif mt.group(3) is not None:
            if mt.group(3) not in "+-*/^()":
                raise ParseError(f"unexpected character {mt.group(3)!r}", mt.start(3))
            toks.append(("op", mt.group(3), mt.start(3)))
        pos = mt.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text, ring):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            raise ParseError(f"expected {op!r}", t[2])

    def expr(self):
        neg = False
        t = self.peek()
        if t[0] == "op" and t[1] == "-":
            self.take()
            neg = True
        acc = self.term()
        if neg:
            acc = -acc
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if t[1] == "+" else acc - rhs
            else:
                return acc

    def term(self):
        acc = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        base = self.base()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            t = self.take()
            if t[0] != "int":
                raise ParseError("expected natural exponent", t[2])
            base = base ** int(t[1])
        return base

    def base(self):
        t = self.take()
        ring = self.ring
        if t[0] == "int":
            num = int(t[1])
            if self.peek()[:2] == ("op", "/"):
                self.take()
                d = self.take()
                if d[0] != "int":
                    raise ParseError("expected positive integer denominator", d[2])
                den = int(d[1])
                if den == 0:
                    raise ParseError("zero denominator", d[2])
                return ring.constant(mpq(num, den))
            return ring.constant(num)
        if t[0] == "id":
            name = t[1]
            if name in ring.index:
                return ring.gen(name)
            if name in ("i", "r6"):
                if name not in ring.domain.reserved:
                    raise ParseError(f"{name!r} is only allowed over QQ(i,r6)", t[2])
                return ring.constant(ring.domain.generator(name))
            raise ParseError(f"unknown identifier {name!r}", t[2])
        if t[:2] == ("op", "("):
            inner = self.expr()
            self.expect_op(")")
            return inner
        if t[0] == "end":
            raise ParseError("unexpected end of input", t[2])
        raise ParseError(f"unexpected token {t[1]!r}", t[2])


def parse_poly(text, ring):
    parser = _Parser(text, ring)
    result = parser.expr()
    t = parser.peek()
    if t[0] != "end":
        raise ParseError(f"unexpected token {t[1]!r}", t[2])
    return result


# ---------------------------------------------------------------------------
# rational functions


class RationalFunction:
    """Unreduced quotient of two polynomials; zero iff the numerator is zero."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = num.ring.one
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.ring != den.ring:
            raise RingMismatch("numerator and denominator rings differ")
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    @classmethod
    def lift(cls, x, ring):
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Poly):
            return cls(x)
        return cls(ring.constant(x))

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, o):
        o = RationalFunction.lift(o, self.ring)
        if o.den == self.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, o):
        return self + (-RationalFunction.lift(o, self.ring))

    def __rsub__(self, o):
        return RationalFunction.lift(o, self.ring) - self

    def __mul__(self, o):
        o = RationalFunction.lift(o, self.ring)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = RationalFunction.lift(o, self.ring)
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __pow__(self, n):
        return RationalFunction(self.num ** n, self.den ** n)

    def __eq__(self, o):
        if not isinstance(o, (RationalFunction, Poly)):
            o = self.ring.constant(o)
        o = RationalFunction.lift(o, self.ring)
        return (self.num * o.den - o.num * self.den).is_zero()

    __hash__ = None

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def substitute(p, mapping, ring=None):
    """Substitute rational functions (or polynomials/constants) for variables of ``p``.

    The result lives in ``ring``, by default the common ring of the mapped
    values (or ``p.ring`` if every value is a constant).  Unmapped variables
    are carried over by name.
    """
    mapping = dict(mapping)
    unknown = [v for v in mapping if v not in p.ring.index]
    if unknown:
        raise KeyError(f"unknown variables {unknown}")
    if ring is None:
        rings = {v.ring for v in mapping.values() if isinstance(v, (Poly, RationalFunction))}
        if len(rings) > 1:
            raise RingMismatch("substituted values live in different rings")
        ring = rings.pop() if rings else p.ring
    vals = {}
    for v, val in mapping.items():
        if isinstance(val, Poly):
            val = RationalFunction(val.to_ring(ring))
        elif isinstance(val, RationalFunction):
            val = RationalFunction(val.num.to_ring(ring), val.den.to_ring(ring))
        else:
            val = RationalFunction(ring.constant(val))
        vals[p.ring.index[v]] = val
    passthrough = {}
    for k, v in enumerate(p.ring.vars):
        if k not in vals:
            passthrough[k] = ring.gen(v) if v in ring.index else None

    # common denominator: prod over substituted variables of den^maxexp
    maxexp = {k: max((m[k] for m in p.terms), default=0) for k in vals}
    num_pows = {}
    den_pows = {}

    def npow(k, e):
        key = (k, e)
        if key not in num_pows:
            num_pows[key] = vals[k].num ** e
        return num_pows[key]

    def dpow(k, e):
        key = (k, e)
        if key not in den_pows:
            den_pows[key] = vals[k].den ** e
        return den_pows[key]

    dom = ring.domain
    total = ring.zero
    for m, c in p.terms.items():
        t = ring.constant(dom.convert(c))
        for k, e in enumerate(m):
            if k in vals:
                if e:
                    t = t * npow(k, e)
                if maxexp[k] - e and not vals[k].den == 1:
                    t = t * dpow(k, maxexp[k] - e)
            elif e:
                g = passthrough[k]
                if g is None:
                    raise RingMismatch(f"variable {p.ring.vars[k]!r} missing from target ring")
                t = t * g ** e
        total = total + t
    den = ring.one
    for k, E in maxexp.items():
        if E and not vals[k].den == 1:
            den = den * dpow(k, E)
    return RationalFunction(total, den)


def monomials_up_to(nvars, degree):
    """All exponent tuples of total degree <= degree (used by tests and samplers)."""
    out = []
    for m in _iproduct(range(degree + 1), repeat=nvars):
        if sum(m) <= degree:
            out.append(m)
    return out


def as_fraction(c):
    """Convert a rational coefficient to ``fractions.Fraction``."""
    if isinstance(c, QI6):
        raise TypeError("not a rational")
    q = mpq(c)
    return Fraction(int(q.numerator), int(q.denominator))


