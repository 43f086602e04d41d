"""Coefficient domains: the rationals, prime fields and the field Q(i, sqrt 6).

Coefficients are plain Python objects that support ``+ - * /`` and truth
testing.  Rationals are ``gmpy2.mpq``; prime-field elements are ``int`` kept
in ``[0, p)`` (polynomial code applies the modulus); elements of Q(i, r6) are
:class:`QI6` instances.
"""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq, mpz, is_prime

DEFAULT_PRIME = 32003


class DomainError(ArithmeticError):
    pass


class Rationals:
    name = "QQ"
    modulus = None
    reserved: tuple = ()

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def convert(self, x):
        if isinstance(x, QI6):
            if x.b or x.c or x.d:
                raise DomainError(f"{x} is not rational")
            return x.a
        if isinstance(x, Fraction):
            return mpq(x.numerator, x.denominator)
        return mpq(x)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero in QQ")
        return 1 / a

    def is_one(self, a):
        return a == 1

    def format(self, a):
        """Return ``(negative, text)`` with ``text`` the absolute value."""
        if a < 0:
            return True, _fmt_q(-a)
        return False, _fmt_q(a)


class PrimeField:
    """The field Z/pZ; elements are ints in ``[0, p)``."""

    reserved: tuple = ()

    def __init__(self, p=DEFAULT_PRIME):
        p = int(p)
        if p < 2 or not is_prime(p):
            raise DomainError(f"modulus {p} is not prime")
        self.modulus = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GF", self.modulus))

    def __repr__(self):
        return self.name

    def convert(self, x):
        p = self.modulus
        if isinstance(x, int):
            return x % p
        if isinstance(x, QI6):
            x = Rationals().convert(x)
        q = mpq(x) if not isinstance(x, Fraction) else mpq(x.numerator, x.denominator)
        num, den = int(q.numerator), int(q.denominator)
        if den % p == 0:
            raise DomainError(f"denominator of {q} is divisible by {p}")
        return num * pow(den, -1, p) % p

    def inv(self, a):
        if a % self.modulus == 0:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return pow(int(a), -1, self.modulus)

    def is_one(self, a):
        return a == 1

    def symmetric(self, a):
        p = self.modulus
        return a - p if a > p // 2 else a

    def format(self, a):
        s = self.symmetric(a)
        return (s < 0), str(abs(s))


class QI6:
    """Element ``a + b*i + c*r6 + d*i*r6`` with ``i^2 = -1`` and ``r6^2 = 6``."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a, self.b, self.c, self.d = mpq(a), mpq(b), mpq(c), mpq(d)

    @classmethod
    def lift(cls, x):
        if isinstance(x, QI6):
            return x
        if isinstance(x, Fraction):
            x = mpq(x.numerator, x.denominator)
        return cls(x)

    def parts(self):
        return (self.a, self.b, self.c, self.d)

    def __add__(self, o):
        o = QI6.lift(o)
        return QI6(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return QI6(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, o):
        return self + (-QI6.lift(o))

    def __rsub__(self, o):
        return QI6.lift(o) - self

    def __mul__(self, o):
        o = QI6.lift(o)
        a, b, c, d = self.parts()
        e, f, g, h = o.parts()
        return QI6(
            a * e - b * f + 6 * c * g - 6 * d * h,
            a * f + b * e + 6 * (c * h + d * g),
            a * g + c * e - b * h - d * f,
            a * h + d * e + b * g + c * f,
        )

    __rmul__ = __mul__

    def regular_matrix(self):
        """Matrix of ``v -> self * v`` on the basis (1, i, r6, i*r6)."""
        a, b, c, d = self.parts()
        return [
            [a, -b, 6 * c, -6 * d],
            [b, a, 6 * d, 6 * c],
            [c, -d, a, -b],
            [d, c, b, a],
        ]

    def inverse(self):
        if not self:
            raise ZeroDivisionError("division by zero in QQ(i,r6)")
        sol = solve_exact(self.regular_matrix(), [mpq(1), mpq(0), mpq(0), mpq(0)])
        return QI6(*sol)

    def __truediv__(self, o):
        return self * QI6.lift(o).inverse()

    def __rtruediv__(self, o):
        return QI6.lift(o) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        r, base = QI6(1), self
        while n:
            if n & 1:
                r = r * base
            base = base * base
            n >>= 1
        return r

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)) or type(o) is type(mpq(0)):
            o = QI6.lift(o)
        if not isinstance(o, QI6):
            return NotImplemented
        return self.parts() == o.parts()

    def __hash__(self):
        if not (self.b or self.c or self.d):
            return hash(self.a)
        return hash(self.parts())

    def __repr__(self):
        return f"QI6({self.a}, {self.b}, {self.c}, {self.d})"

    def __str__(self):
        neg, body = ExtIR6().format(self)
        return ("-" if neg else "") + (body or "1")


class ExtIR6:
    name = "QQ(i,r6)"
    modulus = None
    reserved = ("i", "r6")

    def __init__(self):
        self.zero = QI6(0)
        self.one = QI6(1)

    def __eq__(self, other):
        return isinstance(other, ExtIR6)

    def __hash__(self):
        return hash("QQ(i,r6)")

    def __repr__(self):
        return self.name

    def convert(self, x):
        return QI6.lift(x)

    def inv(self, a):
        return QI6.lift(a).inverse()

    def is_one(self, a):
        return a == 1

    def generator(self, name):
        if name == "i":
            return QI6(0, 1)
        if name == "r6":
            return QI6(0, 0, 1)
        raise KeyError(name)

    def format(self, a):
        parts = [(q, s) for q, s in zip(a.parts(), ("", "i", "r6", "i*r6")) if q]
        if len(parts) == 1:
            q, s = parts[0]
            neg = q < 0
            q = abs(q)
            if not s:
                return neg, _fmt_q(q)
            return neg, s if q == 1 else f"{_fmt_q(q)}*{s}"
        chunks = []
        for q, s in parts:
            neg = q < 0
            body = _fmt_q(abs(q)) if not s else (s if abs(q) == 1 else f"{_fmt_q(abs(q))}*{s}")
            if not chunks:
                chunks.append(("-" if neg else "") + body)
            else:
                chunks.append(("- " if neg else "+ ") + body)
        return False, "(" + " ".join(chunks) + ")"


def _fmt_q(q):
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def solve_exact(a, b):
    """Solve the square system ``a x = b`` over the rationals by Gauss-Jordan."""
    n = len(a)
    m = [[mpq(v) for v in row] + [mpq(rhs)] for row, rhs in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def make_domain(spec):
    """Build a domain from ``"QQ"``, ``"QQ(i,r6)"``, ``"GF(p)"`` or an int prime."""
    if isinstance(spec, (Rationals, PrimeField, ExtIR6)):
        return spec
    if isinstance(spec, int):
        return PrimeField(spec)
    s = str(spec).replace(" ", "")
    if s in ("QQ", "Q"):
        return Rationals()
    if s in ("QQ(i,r6)", "ExtIR6"):
        return ExtIR6()
    if s.startswith("GF(") and s.endswith(")"):
        return PrimeField(int(s[3:-1]))
    raise DomainError(f"unknown coefficient domain {spec!r}")


QQ = Rationals()
QQ_I_R6 = ExtIR6()
MPZ = type(mpz(0))
