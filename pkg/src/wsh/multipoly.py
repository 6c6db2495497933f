"""Multivariate polynomials over the coefficient field.

Used for shuffle-algebra elements in z_1..z_n and for the commutative ring
of central parameters and degree-zero generators that houses the E-series.
Terms are stored as a dict {exponent tuple: nonzero coefficient}.
"""

from __future__ import annotations

from itertools import permutations


class MultiPoly:
    __slots__ = ("nvars", "terms", "field")

    def __init__(self, nvars, terms, field, *, _clean=False):
        if not _clean:
            terms = {e: c for e, c in terms.items() if c != field.zero}
        self.nvars = nvars
        self.terms = terms
        self.field = field

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(c, nvars, field):
        z = (0,) * nvars
        if c == field.zero:
            return MultiPoly(nvars, {}, field, _clean=True)
        return MultiPoly(nvars, {z: c}, field, _clean=True)

    @staticmethod
    def variable(i, nvars, field):
        e = [0] * nvars
        e[i] = 1
        return MultiPoly(nvars, {tuple(e): field.one}, field, _clean=True)

    @staticmethod
    def zero(nvars, field):
        return MultiPoly(nvars, {}, field, _clean=True)

    # -- ring operations ---------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            return self + MultiPoly.constant(self._scalar(other), self.nvars, self.field)
        self._check(other)
        out = dict(self.terms)
        zero = self.field.zero
        for e, c in other.terms.items():
            s = out.get(e, zero) + c
            if s == zero:
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.nvars, out, self.field, _clean=True)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, MultiPoly) else -self._scalar(other))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return MultiPoly(
            self.nvars, {e: -c for e, c in self.terms.items()}, self.field, _clean=True
        )

    def _scalar(self, x):
        if isinstance(x, int):
            return self.field.from_int(x)
        return x

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = self._scalar(other)
            if c == self.field.zero:
                return MultiPoly.zero(self.nvars, self.field)
            return MultiPoly(
                self.nvars, {e: v * c for e, v in self.terms.items()}, self.field
            )
        self._check(other)
        zero = self.field.zero
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, zero) + c1 * c2
                if s == zero:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(self.nvars, out, self.field, _clean=True)

    __rmul__ = __mul__

    def __truediv__(self, x):
        c = self._scalar(x)
        inv = self.field.one / c
        return self * inv

    def __pow__(self, n):
        out = MultiPoly.constant(self.field.one, self.nvars, self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return self == MultiPoly.constant(self._scalar(other), self.nvars, self.field)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- structure ---------------------------------------------------------

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i):
        return max((e[i] for e in self.terms), default=-1)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.field.zero)

    def permute_vars(self, perm):
        """Apply variable substitution z_i -> z_perm[i]."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for i, p in enumerate(perm):
                ne[p] += e[i]
            out[tuple(ne)] = c
        return MultiPoly(self.nvars, out, self.field, _clean=True)

    def extend(self, nvars, offset=0):
        """View in a larger variable set, with variables shifted by offset."""
        if nvars < self.nvars + offset:
            raise ValueError("extend target too small")
        out = {}
        for e, c in self.terms.items():
            ne = (0,) * offset + e + (0,) * (nvars - self.nvars - offset)
            out[ne] = c
        return MultiPoly(nvars, out, self.field, _clean=True)

    def substitute_scalars(self, values):
        """Substitute field elements for variables: values is {index: elem}.
        The result keeps the same variable count."""
        out = MultiPoly.zero(self.nvars, self.field)
        for e, c in self.terms.items():
            coeff = c
            ne = list(e)
            for i, v in values.items():
                if e[i]:
                    coeff = coeff * v ** e[i]
                    ne[i] = 0
            out = out + MultiPoly(self.nvars, {tuple(ne): coeff}, self.field)
        return out

    def evaluate(self, point):
        """Full evaluation at a list of field elements."""
        acc = self.field.zero
        for e, c in self.terms.items():
            v = c
            for i, ei in enumerate(e):
                if ei:
                    v = v * point[i] ** ei
            acc = acc + v
        return acc

    def is_symmetric(self):
        for i in range(self.nvars - 1):
            perm = list(range(self.nvars))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.permute_vars(perm) != self:
                return False
        return True

    def symmetrize(self):
        out = MultiPoly.zero(self.nvars, self.field)
        for perm in permutations(range(self.nvars)):
            out = out + self.permute_vars(perm)
        return out

    # -- division ----------------------------------------------------------

    def _lead(self):
        e = max(self.terms)  # lex on exponent tuples
        return e, self.terms[e]

    def divexact(self, divisor):
        """Exact division; raises ValueError when self is not a multiple."""
        if not divisor:
            raise ZeroDivisionError("division by zero polynomial")
        self._check(divisor)
        rem = self
        quot = MultiPoly.zero(self.nvars, self.field)
        de, dc = divisor._lead()
        while rem:
            re, rc = rem._lead()
            qe = tuple(a - b for a, b in zip(re, de))
            if any(q < 0 for q in qe):
                raise ValueError("inexact multivariate division")
            t = MultiPoly(self.nvars, {qe: rc / dc}, self.field, _clean=True)
            quot = quot + t
            rem = rem - t * divisor
        return quot

    # -- printing ----------------------------------------------------------

    def to_str(self, names=None):
        if not self.terms:
            return "0"
        names = names or ["z%d" % (i + 1) for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                names[i] if k == 1 else "%s^%d" % (names[i], k)
                for i, k in enumerate(e)
                if k
            )
            cs = self.field.to_str(c)
            if mono:
                parts.append("(%s)*%s" % (cs, mono))
            else:
                parts.append("(%s)" % cs)
        return " + ".join(parts)

    def __repr__(self):
        return "MultiPoly(%s)" % self.to_str()
