"""Monomial orders on exponent tuples.

Every order is realised by a sort key that is a linear function of the
exponent vector, so ``key(m*u) = key(m) + key(u)`` componentwise and
comparisons are plain tuple comparisons.
"""

from __future__ import annotations


class MonomialOrder:
    """Lex, degrevlex or block-elimination order over the ring's variable sequence.

    ``block`` holds the indices of the eliminated (first-block) variables for
    the elimination order; inside each block degrevlex is used.
    """

    __slots__ = ("kind", "nvars", "block", "_key")

    def __init__(self, kind="degrevlex", nvars=0, block=()):
        if kind not in ("lex", "degrevlex", "elim"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.nvars = nvars
        self.block = tuple(sorted(block))
        if kind == "lex":
            self._key = _lex_key
        elif kind == "degrevlex":
            self._key = _drl_key
        else:
            if not self.block:
                raise ValueError("elimination order needs a nonempty block")
            first = self.block
            rest = tuple(i for i in range(nvars) if i not in set(first))
            self._key = _make_elim_key(first, rest)

    def key(self, m):
        return self._key(m)

    def __call__(self, m):
        return self._key(m)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and self.kind == other.kind
                and self.nvars == other.nvars and self.block == other.block)

    def __hash__(self):
        return hash((self.kind, self.nvars, self.block))

    def __repr__(self):
        if self.kind == "elim":
            return f"MonomialOrder('elim', {self.nvars}, block={self.block})"
        return f"MonomialOrder({self.kind!r}, {self.nvars})"

    def is_elimination_for(self, idx):
        return self.kind == "elim" and set(idx) <= set(self.block)


def _lex_key(m):
    return m


def _drl_key(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


def _make_elim_key(first, rest):
    rf = tuple(reversed(first))
    rr = tuple(reversed(rest))

    def key(m):
        return ((sum(m[i] for i in first),) + tuple(-m[i] for i in rf)
                + (sum(m[i] for i in rest),) + tuple(-m[i] for i in rr))

    return key


def order_from_spec(spec, variables):
    """Parse ``lex``, ``degrevlex`` or ``elim:v1,v2`` against a variable list."""
    variables = list(variables)
    if isinstance(spec, MonomialOrder):
        return spec
    spec = spec.strip()
    if spec in ("lex", "degrevlex"):
        return MonomialOrder(spec, len(variables))
    if spec in ("drl", "dp"):
        return MonomialOrder("degrevlex", len(variables))
    if spec.startswith("elim:"):
        names = [v.strip() for v in spec[5:].split(",") if v.strip()]
        unknown = [v for v in names if v not in variables]
        if unknown:
            raise ValueError(f"unknown variables in elimination block: {unknown}")
        return MonomialOrder("elim", len(variables), [variables.index(v) for v in names])
    raise ValueError(f"unknown monomial order {spec!r}")
