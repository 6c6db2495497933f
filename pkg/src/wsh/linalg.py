"""Exact dense linear algebra over the coefficient field.

Two layers:

* generic Gauss-Jordan over field elements (inverse, small solves);
* fraction-free echelon forms ("SpanBasis") that clear denominators and
  run on integer kappa-polynomial rows, with content stripping to control
  coefficient blowup.  Rank, membership, and kernels all go through this.

Specialized-mode vectors (Fractions) travel the same code path: a cleared
row is then a vector of degree-0 polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import _poly as P
from .field import FieldElem

# ----------------------------------------------------------------------
# generic dense matrices (tuples/lists of rows of field elements)
# ----------------------------------------------------------------------


def identity(n, field):
    return [
        [field.one if i == j else field.zero for j in range(n)] for i in range(n)
    ]


def mat_mul(A, B, field):
    if A and len(A[0]) != len(B):
        raise ValueError("dimension mismatch")
    nb = len(B[0]) if B else 0
    zero = field.zero
    out = [[zero] * nb for _ in range(len(A))]
    for i, row in enumerate(A):
        oi = out[i]
        for k, a in enumerate(row):
            if a == zero:
                continue
            bk = B[k]
            for j in range(nb):
                b = bk[j]
                if b != zero:
                    oi[j] = oi[j] + a * b
    return out


def mat_vec(A, v, field):
    zero = field.zero
    out = []
    for row in A:
        acc = zero
        for a, x in zip(row, v):
            if a != zero and x != zero:
                acc = acc + a * x
        out.append(acc)
    return out


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c):
    return [[a * c for a in row] for row in A]


def mat_is_zero(A, field):
    zero = field.zero
    return all(a == zero for row in A for a in row)


def transpose(A):
    return [list(col) for col in zip(*A)]


def mat_inv(A, field):
    n = len(A)
    zero, one = field.zero, field.one
    work = [list(row) + ident_row for row, ident_row in zip(A, identity(n, field))]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col] != zero), None)
        if piv is None:
            raise ValueError("singular matrix")
        work[col], work[piv] = work[piv], work[col]
        inv = one / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != zero:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return [row[n:] for row in work]


# ----------------------------------------------------------------------
# fraction-free echelon machinery
# ----------------------------------------------------------------------


def clear_denominators(vec, field):
    """Field-element vector -> integer kappa-polynomial row (common
    denominator removed, content stripped)."""
    if field.mode == "specialized":
        den = 1
        for x in vec:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in vec]
        g = 0
        for c in ints:
            g = gcd(g, c)
        if g > 1:
            ints = [c // g for c in ints]
        return [(c,) if c else () for c in ints]
    lcm = (1,)
    for x in vec:
        d = x.den
        g = P.pgcd(lcm, d)
        lcm = P.pmul(lcm, P.pdivexact(d, g))
    row = [P.pmul(x.num, P.pdivexact(lcm, x.den)) for x in vec]
    return _strip_content(row)


def _strip_content(row):
    g = 0
    for p in row:
        for c in p:
            g = gcd(g, c)
            if g == 1:
                return row
    if g > 1:
        row = [tuple(c // g for c in p) for p in row]
    return row


def _row_eliminate(v, b, col):
    """Fraction-free elimination of column col from v using row b."""
    f = v[col]
    p = b[col]
    out = [P.psub(P.pmul(p, x), P.pmul(f, y)) for x, y in zip(v, b)]
    return _strip_content(out)


class SpanBasis:
    """Incremental row-echelon basis over Q(kappa), fraction-free."""

    def __init__(self, field, width=None, pivot_limit=None):
        self.field = field
        self.rows = []  # (pivot_col, poly row), sorted by pivot_col
        self.width = width
        # pivots are only sought in columns < pivot_limit (for kernels)
        self.pivot_limit = pivot_limit

    @property
    def dim(self):
        return len(self.rows)

    def _reduce_row(self, row):
        for piv, b in self.rows:
            if row[piv]:
                row = _row_eliminate(row, b, piv)
        return row

    def _pivot_of(self, row):
        limit = self.pivot_limit if self.pivot_limit is not None else len(row)
        for j in range(limit):
            if row[j]:
                return j
        return None

    def reduce(self, vec):
        """Reduce a field-element vector; returns the residual poly row."""
        return self._reduce_row(clear_denominators(vec, self.field))

    def add(self, vec) -> bool:
        """Insert a vector; True when it enlarges the span."""
        return self.add_row(clear_denominators(vec, self.field))

    def add_row(self, row) -> bool:
        row = self._reduce_row(row)
        piv = self._pivot_of(row)
        if piv is None:
            return False
        self.rows.append((piv, row))
        self.rows.sort(key=lambda t: t[0])
        return True

    def contains(self, vec) -> bool:
        row = self.reduce(vec)
        limit = self.pivot_limit if self.pivot_limit is not None else len(row)
        return all(not p for p in row[:limit])


def rank_of_vectors(vectors, field) -> int:
    basis = SpanBasis(field)
    n = 0
    for v in vectors:
        if basis.add(v):
            n += 1
    return n


def kernel_of_vectors(vectors, field):
    """Left kernel of the list: coefficient vectors a with sum a_i v_i = 0.

    Returns (rank, kernel) where kernel is a list of field-element
    coefficient vectors (one per dependency, echelonized).
    """
    if not vectors:
        return 0, []
    m = len(vectors[0])
    k = len(vectors)
    basis = SpanBasis(field, pivot_limit=m)
    kernel = []
    rank = 0
    scales = []  # cleared_row = scale * original vector, per row
    for i, v in enumerate(vectors):
        v = list(v)
        row = clear_denominators(v, field)
        j = next((j for j, p in enumerate(row) if p), None)
        scales.append(
            field.one if j is None else field.from_poly(row[j]) / v[j]
        )
        aug = [()] * k
        aug[i] = (1,)
        if basis.add_row(row + aug):
            rank += 1
        else:
            # vector part vanished; the tail records the dependency on the
            # cleared rows -- rescale back to the original vectors
            red = basis._reduce_row(row + aug)
            coeffs = [field.from_poly(p) * s for p, s in zip(red[m:], scales)]
            coeffs += [field.zero] * (k - len(coeffs))
            kernel.append(coeffs)
    return rank, kernel


# ----------------------------------------------------------------------
# rational specialization certificates
# ----------------------------------------------------------------------

# Fixed evaluation points for rank certificates: a nonzero minor at any of
# these implies a nonzero minor over Q(kappa), so ranks computed here are
# rigorous lower bounds for the exact rank (and kernel dimensions computed
# here are rigorous upper bounds for the exact kernel dimension).
CERTIFICATE_POINTS = (
    Fraction(9973, 577),
    Fraction(104729, 313),
    Fraction(-7919, 1201),
)


def _as_fraction(x, point):
    if isinstance(x, FieldElem):
        return x.evaluate(point)
    return Fraction(x)


def evaluate_vectors(vectors, point):
    return [[_as_fraction(x, point) for x in v] for v in vectors]


def fraction_rank(rows) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    r = 0
    while r < len(rows) and col < ncols:
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        pval = prow[col]
        for i in range(r + 1, len(rows)):
            f = rows[i][col]
            if f:
                rows[i] = [a - f / pval * b for a, b in zip(rows[i], prow)]
        rank += 1
        r += 1
        col += 1
    return rank


def rank_lower_bound(vectors, point=None) -> int:
    """Rank certificate by rational specialization (exact lower bound)."""
    point = point or CERTIFICATE_POINTS[0]
    return fraction_rank(evaluate_vectors(vectors, point))


def certified_rank(vectors, field, upper_hint=None):
    """Exact rank when cheap: tries specialization points first; when the
    certified lower bound matches the number of vectors (full rank) that is
    already exact, otherwise falls back to fraction-free elimination."""
    n = len(vectors)
    if n == 0:
        return 0
    for point in CERTIFICATE_POINTS:
        try:
            lb = rank_lower_bound(vectors, point)
        except ZeroDivisionError:
            continue
        if lb == n or (upper_hint is not None and lb == upper_hint):
            return lb
        break
    return rank_of_vectors(vectors, field)
