"""Graded operators on symmetric functions truncated at total degree N.

An operator of rank r is stored per source degree n as an exact matrix
from the degree-n component to the degree-(n+r) component, both in
power-sum coordinates.  Every identity check reports the window of source
degrees it actually verified; a pass is always a pass-on-window claim.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import linalg
from .partitions import add_part, content_power_sum, partitions_of
from .symfunc import SymFunc, SymmetricFunctions


class WindowError(ValueError):
    """Raised when a truncated identity has an empty validity window."""


@dataclass
class CheckOutcome:
    id: str
    window: tuple
    status: str  # pass | fail | skipped
    detail: str = ""
    failing_block: int = None

    @property
    def ok(self):
        return self.status != "fail"

    def as_dict(self):
        d = {"id": self.id, "window": list(self.window), "status": self.status}
        if self.detail:
            d["detail"] = self.detail
        if self.failing_block is not None:
            d["first_failing_block"] = self.failing_block
        return d


class GradedOp:
    """Homogeneous operator of a fixed rank with one exact matrix per
    source degree on its validity window."""

    __slots__ = ("rank", "blocks", "field")

    def __init__(self, rank, blocks, field):
        if not blocks:
            raise WindowError("truncation too small: empty validity window")
        self.rank = rank
        self.blocks = blocks
        self.field = field

    @property
    def window(self):
        return (min(self.blocks), max(self.blocks))

    def block(self, n):
        return self.blocks[n]

    def _common(self, other):
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        degs = sorted(set(self.blocks) & set(other.blocks))
        if not degs:
            raise WindowError("truncation too small: empty validity window")
        return degs

    def __add__(self, other):
        degs = self._common(other)
        return GradedOp(
            self.rank,
            {n: linalg.mat_add(self.blocks[n], other.blocks[n]) for n in degs},
            self.field,
        )

    def __sub__(self, other):
        degs = self._common(other)
        return GradedOp(
            self.rank,
            {n: linalg.mat_sub(self.blocks[n], other.blocks[n]) for n in degs},
            self.field,
        )

    def scale(self, c):
        return GradedOp(
            self.rank,
            {n: linalg.mat_scale(b, c) for n, b in self.blocks.items()},
            self.field,
        )

    def compose(self, other):
        """self after other (operator product self . other)."""
        blocks = {}
        for n, b in other.blocks.items():
            m = n + other.rank
            if m in self.blocks:
                blocks[n] = linalg.mat_mul(self.blocks[m], b, self.field)
        if not blocks:
            raise WindowError("truncation too small: empty validity window")
        return GradedOp(self.rank + other.rank, blocks, self.field)

    def commutator(self, other):
        return self.compose(other) - other.compose(self)

    def is_zero(self):
        return all(linalg.mat_is_zero(b, self.field) for b in self.blocks.values())

    def first_failing_block(self):
        for n in sorted(self.blocks):
            if not linalg.mat_is_zero(self.blocks[n], self.field):
                return n
        return None

    def __eq__(self, other):
        if not isinstance(other, GradedOp) or self.rank != other.rank:
            return False
        return (self - other).is_zero()

    def flatten(self, degrees=None):
        """Row-major concatenation of blocks, degree-major, fixed partition
        order; the coordinate vector used by span and rank computations."""
        degs = sorted(self.blocks) if degrees is None else degrees
        out = []
        for n in degs:
            for row in self.blocks[n]:
                out.extend(row)
        return out

    def apply(self, f: SymFunc) -> SymFunc:
        """Apply to a power-sum-basis symmetric function."""
        field = self.field
        out = {}
        for n in f.degrees():
            if n not in self.blocks:
                raise WindowError("degree %d outside operator window" % n)
            parts_src = partitions_of(n)
            parts_dst = partitions_of(n + self.rank)
            idx = {lam: i for i, lam in enumerate(parts_src)}
            v = [field.zero] * len(parts_src)
            for lam, c in f.homogeneous(n).items():
                v[idx[lam]] = c
            w = linalg.mat_vec(self.blocks[n], v, field)
            for lam, c in zip(parts_dst, w):
                if c != field.zero:
                    out[lam] = out.get(lam, field.zero) + c
        return SymFunc("p", out, field)


def ad(a, b):
    return a.commutator(b)


def ad_power(a, b, d):
    for _ in range(d):
        b = a.commutator(b)
    return b


class OpContext:
    """Truncation context: cached Jack bases, generators, and spans."""

    def __init__(self, field, N=8):
        if N < 2:
            raise ValueError("truncation must be >= 2")
        self.field = field
        self.N = N
        self.sym = SymmetricFunctions(field)
        self._mult = {}
        self._sek = {}
        self._d1 = {}
        self._drd = {}
        self._dprime = {}
        self._lower = {}
        self._spans = {}

    def dims(self, n):
        return len(partitions_of(n))

    # -- generators --------------------------------------------------------

    def multiplication(self, l) -> GradedOp:
        """Multiplication by the power sum p_l (rank l, order 0)."""
        if not 1 <= l <= self.N:
            raise WindowError("power-sum degree %d beyond truncation" % l)
        if l not in self._mult:
            field = self.field
            blocks = {}
            for n in range(0, self.N - l + 1):
                src = partitions_of(n)
                dst = partitions_of(n + l)
                idx = {lam: i for i, lam in enumerate(dst)}
                mat = [[field.zero] * len(src) for _ in dst]
                for j, lam in enumerate(src):
                    mat[idx[add_part(lam, l)]][j] = field.one
                blocks[n] = mat
            self._mult[l] = GradedOp(l, blocks, field)
        return self._mult[l]

    def identity_op(self) -> GradedOp:
        """Rank-0 identity on every degree of the truncation window."""
        field = self.field
        blocks = {
            n: linalg.identity(self.dims(n), field) for n in range(self.N + 1)
        }
        return GradedOp(0, blocks, field)

    def sekiguchi(self, l) -> GradedOp:
        """The commuting rank-0 operator diagonal on the Jack basis with
        eigenvalue sum-of-content-powers (exponent l-1)."""
        if l < 1:
            raise ValueError("index must be >= 1")
        if l not in self._sek:
            field = self.field
            blocks = {}
            for n in range(0, self.N + 1):
                C = self.sym.jack_matrix(n)
                Cinv = self.sym.jack_matrix_inv(n)
                eigs = [content_power_sum(lam, l, field) for lam in partitions_of(n)]
                mid = [[c * eigs[j] for j, c in enumerate(row)] for row in C]
                blocks[n] = linalg.mat_mul(mid, Cinv, field)
            self._sek[l] = GradedOp(0, blocks, field)
        return self._sek[l]

    def d1(self, k) -> GradedOp:
        """Rank-1 generators: bracket of the (k+1)-st commuting operator
        with multiplication by p_1 (k = 0 gives the multiplication itself)."""
        if k < 0:
            raise ValueError("index must be >= 0")
        if k not in self._d1:
            if k == 0:
                self._d1[k] = self.multiplication(1)
            else:
                self._d1[k] = self.sekiguchi(k + 1).commutator(self.multiplication(1))
        return self._d1[k]

    def drd(self, r, d) -> GradedOp:
        """D_{r,d}: bracket of the (d+1)-st commuting operator with D_{r,0}.

        D_{r,0} is the derived rank-r generator produced by the recursion
        (r-1) D_{r,0} = [D_{1,1}, D_{r-1,0}] starting from D_{1,0} = p_1;
        in closed form it is (-1)^(r-1) times multiplication by p_r (the
        sign comes with the content convention, see content_power_sum).
        """
        if (r, d) not in self._drd:
            if d == 0:
                base = self.multiplication(r)
                if r % 2 == 0:
                    base = base.scale(-self.field.one)
                self._drd[r, d] = base
            else:
                self._drd[r, d] = self.sekiguchi(d + 1).commutator(self.drd(r, 0))
        return self._drd[r, d]

    def dprime(self, r, d) -> GradedOp:
        """D'_{r,d}: d-fold bracket of the order-2 commuting operator."""
        if (r, d) not in self._dprime:
            self._dprime[r, d] = ad_power(self.sekiguchi(2), self.drd(r, 0), d)
        return self._dprime[r, d]

    def lowering(self, k) -> GradedOp:
        """D_{-1,k}: kappa times the adjoint of d1(k) for the Jack pairing
        (diagonal in power-sum coordinates)."""
        if k not in self._lower:
            field = self.field
            up = self.d1(k)
            blocks = {}
            for n, A in up.blocks.items():
                g_src = self.sym.gram_diag(n)
                g_dst = self.sym.gram_diag(n + 1)
                rows = len(A[0])  # adjoint block: p(n) x p(n+1), source degree n+1
                mat = [
                    [A[j][i] * g_dst[j] / g_src[i] for j in range(len(A))]
                    for i in range(rows)
                ]
                blocks[n + 1] = mat
            op = GradedOp(-1, blocks, field)
            self._lower[k] = op.scale(field.kappa)
        return self._lower[k]

    # -- spectral helpers ---------------------------------------------------

    def jack_conjugate_block(self, op: GradedOp, n):
        """Rank-0 block expressed in the Jack basis."""
        if op.rank != 0:
            raise ValueError("rank-0 operator required")
        C = self.sym.jack_matrix(n)
        Cinv = self.sym.jack_matrix_inv(n)
        return linalg.mat_mul(Cinv, linalg.mat_mul(op.block(n), C, self.field), self.field)

    def jack_eigenvalues(self, op: GradedOp, n):
        """Diagonal in the Jack basis; raises when off-diagonal entries
        survive."""
        B = self.jack_conjugate_block(op, n)
        zero = self.field.zero
        for i, row in enumerate(B):
            for j, x in enumerate(row):
                if i != j and x != zero:
                    raise ArithmeticError("operator not diagonal in Jack basis")
        return [B[i][i] for i in range(len(B))]

    # -- relation checks -----------------------------------------------------

    def _zero_check(self, cid, op: GradedOp) -> CheckOutcome:
        bad = op.first_failing_block()
        if bad is None:
            return CheckOutcome(cid, op.window, "pass")
        return CheckOutcome(
            cid,
            op.window,
            "fail",
            detail="first failing block at degree %d" % bad,
            failing_block=bad,
        )

    def quadratic_relation_op(self) -> GradedOp:
        """The defining quadratic relation among rank-1 generators."""
        D = self.d1
        kk = self.field.kappa * (self.field.kappa - 1)
        expr = (
            ad(D(2), D(1)).scale(self.field.from_int(3))
            - ad(D(3), D(0))
            + ad(D(1), D(0))
        )
        extra = (D(0).compose(D(0)) + ad(D(1), D(0))).scale(kk)
        return expr + extra

    def rank2_family_op(self, k, l) -> GradedOp:
        """Two-index family generating all rank-2 relations."""
        D = self.d1
        three = self.field.from_int(3)
        kk = self.field.kappa * (self.field.kappa - 1)
        expr = (
            ad(D(l + 2), D(k + 1)).scale(three)
            - ad(D(l + 1), D(k + 2)).scale(three)
            - ad(D(l + 3), D(k))
            + ad(D(l), D(k + 3))
            + ad(D(l + 1), D(k))
            - ad(D(l), D(k + 1))
        )
        extra = (
            D(k).compose(D(l))
            + D(l).compose(D(k))
            + ad(D(l + 1), D(k))
            - ad(D(l), D(k + 1))
        ).scale(kk)
        return expr + extra

    def exchange_coefficient_op(self, l, k) -> GradedOp:
        """Coefficient of z^-l w^-k in the generating-function exchange
        relation with cubic kernel u^3 - (kappa^2-kappa+1)u - kappa(kappa-1)."""
        field = self.field
        kap = field.kappa
        kcoeffs = {
            3: field.one,
            1: -(kap * kap - kap + 1),
            0: -(kap * (kap - 1)),
        }
        D = self.d1
        total = None
        for i, ki in kcoeffs.items():
            for j in range(i + 1):
                c = ki * field.from_int(comb(i, j) * (-1) ** j)
                if c == field.zero:
                    continue
                term = (
                    D(l + i - j).compose(D(k + j)) + D(k + i - j).compose(D(l + j))
                ).scale(c)
                total = term if total is None else total + term
        return total

    def check_relation(self, rid, *args) -> CheckOutcome:
        try:
            return self._check_relation(rid, *args)
        except WindowError as e:
            return CheckOutcome(
                "%s%r" % (rid, args), (0, -1), "skipped", detail=str(e)
            )

    def _check_relation(self, rid, *args) -> CheckOutcome:
        D0, D1 = self.sekiguchi, self.d1
        if rid == "def1":
            l, k = args
            return self._zero_check(
                "def1(%d,%d)" % (l, k), ad(D0(l), D0(k))
            )
        if rid == "def2":
            l, k = args
            op = ad(D0(l), D1(k)) - D1(k + l - 1)
            return self._zero_check("def2(%d,%d)" % (l, k), op)
        if rid == "def3":
            return self._zero_check("def3", self.quadratic_relation_op())
        if rid == "def4":
            op = ad(D1(0), ad(D1(0), D1(1)))
            return self._zero_check("def4", op)
        if rid == "rank2":
            k, l = args
            return self._zero_check(
                "rank2(%d,%d)" % (k, l), self.rank2_family_op(k, l)
            )
        if rid == "exchange":
            l, k = args
            return self._zero_check(
                "exchange(%d,%d)" % (l, k), self.exchange_coefficient_op(l, k)
            )
        if rid == "kl_identity":
            k, l = args
            op = ad(self.drd(k, 1), self.drd(l, 0)) - self.drd(k + l, 0).scale(
                self.field.from_int(k * l)
            )
            return self._zero_check("kl_identity(%d,%d)" % (k, l), op)
        if rid == "recursion":
            (l,) = args
            op = self.drd(l, 0).scale(self.field.from_int(l - 1)) - ad(
                self.d1(1), self.drd(l - 1, 0)
            )
            return self._zero_check("recursion(%d)" % l, op)
        raise ValueError("unknown relation id %r" % rid)

    # -- order filtration --------------------------------------------------

    def filtration_span(self, r, d):
        """Echelonized span of the inductive order filtration piece
        (rank r, order <= d) of the raising half, as flattened operators."""
        if d < 0:
            return _Span(self, r, d, [])
        key = (r, d)
        if key not in self._spans:
            if r == 1:
                ops = [self.d1(k) for k in range(d + 1)]
            else:
                ops = []
                for r1 in range(1, r):
                    r2 = r - r1
                    for d1 in range(d + 1):
                        d2 = d - d1
                        for a in self.filtration_span(r1, d1).ops:
                            for b in self.filtration_span(r2, d2).ops:
                                ops.append(a.compose(b))
                for l in range(0, d + 2):
                    for a in self.filtration_span(r - 1, d - l + 1).ops:
                        ops.append(ad(self.d1(l), a))
            self._spans[key] = _Span(self, r, d, ops)
        return self._spans[key]

    def free_monomial_count(self, r, d):
        """Number of monomials of bidegree exactly (rank r, order d) in free
        commutative generators indexed by rank >= 1, order >= 0."""
        return _count_monomials(r, d, 1, 0)

    def leading_term_check(self, r, d) -> CheckOutcome:
        """Membership of D'_{r,d} - r^(d-1) D_{r,d} in the order-(d-1)
        filtration piece; at d = 0 the two generators coincide outright."""
        cid = "leading_term(%d,%d)" % (r, d)
        if d == 0:
            op = self.dprime(r, 0) - self.drd(r, 0)
            return self._zero_check(cid, op)
        coeff = self.field.from_int(r) ** (d - 1)
        op = self.dprime(r, d) - self.drd(r, d).scale(coeff)
        span = self.filtration_span(r, d - 1)
        if span.contains(op):
            return CheckOutcome(cid, op.window, "pass")
        return CheckOutcome(cid, op.window, "fail")

    def graded_dimension_check(self, r, d) -> CheckOutcome:
        cid = "graded_dim(%d,%d)" % (r, d)
        got = self.filtration_span(r, d).dim - self.filtration_span(r, d - 1).dim
        want = self.free_monomial_count(r, d)
        window = (0, self.N - r)
        if got == want:
            return CheckOutcome(cid, window, "pass", detail="dimension %d" % got)
        return CheckOutcome(
            cid, window, "fail", detail="got %d, expected %d" % (got, want)
        )


class _Span:
    """Echelonized span of flattened graded operators of one rank."""

    def __init__(self, ctx, r, d, candidates):
        self.ctx = ctx
        self.rank_grade = r
        self.order = d
        self.basis = linalg.SpanBasis(ctx.field)
        self.ops = []
        self.window_limited = False
        for op in candidates:
            vec = op.flatten()
            if len(vec) < len(candidates):
                self.window_limited = True
            if self.basis.add(vec):
                self.ops.append(op)

    @property
    def dim(self):
        return self.basis.dim

    def contains(self, op: GradedOp) -> bool:
        return self.basis.contains(op.flatten())


def _count_monomials(r, d, min_r, min_d):
    """Multisets of generators (rank, order) >= (min_r, min_d) in lex order
    with given rank and order totals."""
    if r == 0:
        return 1 if d == 0 else 0
    total = 0
    for gr in range(min_r, r + 1):
        d_start = min_d if gr == min_r else 0
        for gd in range(d_start, d + 1):
            total += _count_monomials(r - gr, d - gd, gr, gd)
    return total
