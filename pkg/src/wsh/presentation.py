"""Free-algebra presentation layer: abstract generators, normal ordering,
and the evaluation homomorphism onto graded operators.

Words are built from two truncated alphabets: commuting letters t0[l]
(1 <= l <= L, mapping to the commuting rank-0 operators) and
non-commuting letters t1[k] (0 <= k <= K, mapping to the rank-1 raising
operators).  Normal order puts every t1 letter left of every t0 letter,
using the cross-alphabet rewrite

    t0[l] t1[k] -> t1[k] t0[l] + t1[k+l-1]

and sorting the commuting t0 tail.  Each rewrite strictly reduces the
number of (t0, t1) inversions, so rewriting terminates; the generated
index k+l-1 can escape the alphabet bound, which is reported as an
IndexOverflowError ("index overflow; raise K").
"""

from __future__ import annotations

import random

from . import linalg
from .operators import CheckOutcome, GradedOp

T0 = "t0"
T1 = "t1"


class IndexOverflowError(ValueError):
    """A rewrite produced a generator index beyond the alphabet bound."""


def _word_key(word):
    return (len(word), word)


class FreeAlgebra:
    """Bounded free algebra on the two truncated alphabets."""

    def __init__(self, field, L=5, K=5):
        if L < 1 or K < 0:
            raise ValueError("alphabet bounds must satisfy L >= 1, K >= 0")
        self.field = field
        self.L = L
        self.K = K

    def zero(self) -> "FreeElement":
        return FreeElement(self, {})

    def one(self) -> "FreeElement":
        return FreeElement(self, {(): self.field.one})

    def t0(self, l) -> "FreeElement":
        if not 1 <= l <= self.L:
            raise ValueError("t0 index %d outside [1, %d]" % (l, self.L))
        return FreeElement(self, {((T0, l),): self.field.one})

    def t1(self, k) -> "FreeElement":
        if not 0 <= k <= self.K:
            raise ValueError("t1 index %d outside [0, %d]" % (k, self.K))
        return FreeElement(self, {((T1, k),): self.field.one})

    # -- relation elements --------------------------------------------------

    def commuting_relation(self, l, k) -> "FreeElement":
        """[t0[l], t0[k]]: the rank-0 letters commute."""
        a, b = self.t0(l), self.t0(k)
        return a * b - b * a

    def cross_relation(self, l, k) -> "FreeElement":
        """[t0[l], t1[k]] - t1[k+l-1]: the cross-alphabet rewrite."""
        a, b = self.t0(l), self.t1(k)
        return a * b - b * a - self.t1(k + l - 1)

    def quadratic_relation(self) -> "FreeElement":
        """The defining quadratic relation among the t1 letters."""
        return self.rank2_relation(0, 0).scale(
            self.field.one / self.field.from_int(2)
        )

    def cubic_relation(self) -> "FreeElement":
        """[t1[0], [t1[0], t1[1]]]: the rank-2 derived letter commutes
        with t1[0]."""
        t = self.t1
        inner = t(0) * t(1) - t(1) * t(0)
        return t(0) * inner - inner * t(0)

    def rank2_relation(self, k, l) -> "FreeElement":
        """Two-index family of rank-2 relations among the t1 letters;
        mirrors the operator-side family term by term."""
        t = self.t1
        f = self.field
        three = f.from_int(3)
        kk = f.kappa * (f.kappa - f.one)

        def br(a, b):
            return t(a) * t(b) - t(b) * t(a)

        expr = (
            br(l + 2, k + 1).scale(three)
            - br(l + 1, k + 2).scale(three)
            - br(l + 3, k)
            + br(l, k + 3)
            + br(l + 1, k)
            - br(l, k + 1)
        )
        extra = (
            t(k) * t(l) + t(l) * t(k) + br(l + 1, k) - br(l, k + 1)
        ).scale(kk)
        return expr + extra

    def relation_set(self):
        """All relation elements whose indices fit the alphabet bounds,
        as (id, FreeElement) pairs."""
        out = []
        for l in range(1, self.L + 1):
            for k in range(l + 1, self.L + 1):
                out.append(("free_commuting(%d,%d)" % (l, k),
                            self.commuting_relation(l, k)))
        for l in range(1, self.L + 1):
            for k in range(0, self.K + 1):
                if k + l - 1 <= self.K:
                    out.append(("free_cross(%d,%d)" % (l, k),
                                self.cross_relation(l, k)))
        if self.K >= 3:
            out.append(("free_quadratic", self.quadratic_relation()))
        if self.K >= 1:
            out.append(("free_cubic", self.cubic_relation()))
        for k in range(0, self.K - 2):
            for l in range(0, self.K - 2):
                out.append(("free_rank2(%d,%d)" % (k, l),
                            self.rank2_relation(k, l)))
        return out


class FreeElement:
    """Linear combination of words; immutable; zero coefficients pruned."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: FreeAlgebra, terms: dict):
        self.algebra = algebra
        zero = algebra.field.zero
        self.terms = {w: c for w, c in terms.items() if c != zero}

    def _combine(self, other, sign):
        if self.algebra is not other.algebra:
            raise ValueError("elements from different algebras")
        terms = dict(self.terms)
        zero = self.algebra.field.zero
        for w, c in other.terms.items():
            c = terms.get(w, zero) + c * sign
            terms[w] = c
        return FreeElement(self.algebra, terms)

    def __add__(self, other):
        return self._combine(other, self.algebra.field.one)

    def __sub__(self, other):
        return self._combine(other, -self.algebra.field.one)

    def scale(self, c) -> "FreeElement":
        return FreeElement(
            self.algebra, {w: x * c for w, x in self.terms.items()}
        )

    def __mul__(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("elements from different algebras")
        zero = self.algebra.field.zero
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                terms[w] = terms.get(w, zero) + c1 * c2
        return FreeElement(self.algebra, terms)

    def __eq__(self, other):
        return (
            isinstance(other, FreeElement)
            and self.algebra is other.algebra
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "FreeElement(0)"
        f = self.algebra.field
        bits = []
        for w in sorted(self.terms, key=_word_key):
            name = " ".join("%s[%d]" % letter for letter in w) or "1"
            bits.append("(%s)*%s" % (f.to_str(self.terms[w]), name))
        return "FreeElement(%s)" % " + ".join(bits)

    # -- normal ordering -----------------------------------------------------

    def normal_order(self) -> "FreeElement":
        """Rewrite until every t1 letter is left of every t0 letter, then
        sort the commuting t0 tail; canonical and idempotent."""
        alg = self.algebra
        zero = alg.field.zero
        out = {}
        stack = list(self.terms.items())
        while stack:
            word, coeff = stack.pop()
            pos = next(
                (
                    i
                    for i in range(len(word) - 1)
                    if word[i][0] == T0 and word[i + 1][0] == T1
                ),
                None,
            )
            if pos is None:
                t1s = tuple(x for x in word if x[0] == T1)
                t0s = tuple(sorted(x for x in word if x[0] == T0))
                w = t1s + t0s
                out[w] = out.get(w, zero) + coeff
                continue
            l = word[pos][1]
            k = word[pos + 1][1]
            if k + l - 1 > alg.K:
                raise IndexOverflowError("index overflow; raise K")
            swapped = (
                word[:pos] + (word[pos + 1], word[pos]) + word[pos + 2:]
            )
            contracted = word[:pos] + ((T1, k + l - 1),) + word[pos + 2:]
            stack.append((swapped, coeff))
            stack.append((contracted, coeff))
        return FreeElement(alg, out)

    # -- evaluation ----------------------------------------------------------

    def rank(self):
        """Common rank (t1-letter count) of all words; None for zero."""
        ranks = {sum(1 for x in w if x[0] == T1) for w in self.terms}
        if not ranks:
            return None
        if len(ranks) > 1:
            raise ValueError("element is not rank-homogeneous")
        return ranks.pop()

    def evaluate(self, opctx) -> GradedOp:
        """Image under the evaluation homomorphism: t0[l] goes to the
        rank-0 commuting operator, t1[k] to the rank-1 raising operator;
        words multiply left to right."""
        total = None
        for w in sorted(self.terms, key=_word_key):
            op = opctx.identity_op()
            for kind, idx in reversed(w):
                gen = opctx.sekiguchi(idx) if kind == T0 else opctx.d1(idx)
                op = gen.compose(op)
            op = op.scale(self.terms[w])
            total = op if total is None else total + op
        if total is None:
            return opctx.identity_op().scale(opctx.field.zero)
        return total


class PresentationContext:
    """Checks tying the free algebra to its operator realization."""

    def __init__(self, opctx, L=5, K=5):
        self.opctx = opctx
        self.field = opctx.field
        self.algebra = FreeAlgebra(opctx.field, L=L, K=K)

    # -- soundness of rewriting ---------------------------------------------

    def normal_order_example_check(self) -> CheckOutcome:
        """A fixed two-rewrite word: normal order is computed symbolically
        and certified by operator evaluation of both sides."""
        alg = self.algebra
        x = alg.t0(2) * alg.t0(3) * alg.t1(0)
        nx = x.normal_order()
        ordered = all(
            w == tuple(sorted(w, key=lambda s: (s[0] != T1, s)))
            for w in nx.terms
        )
        same = (
            x.evaluate(self.opctx) - nx.evaluate(self.opctx)
        ).is_zero()
        status = "pass" if ordered and same else "fail"
        return CheckOutcome(
            "presentation_normal_order_example", (0, self.opctx.N), status
        )

    def normal_order_soundness_check(self, trials=8, seed=421) -> CheckOutcome:
        """Randomized words: evaluation commutes with normal ordering and
        normal ordering is idempotent."""
        alg = self.algebra
        rng = random.Random(seed)
        f = self.field
        for t in range(trials):
            nletters = rng.randint(1, 3)
            n1 = rng.randint(0, nletters)  # shared t1 count keeps rank fixed
            terms = {}
            for _ in range(2):
                kinds = [T1] * n1 + [T0] * (nletters - n1)
                rng.shuffle(kinds)
                word = tuple(
                    (kind, rng.randint(0, 2) if kind == T1 else rng.randint(2, 3))
                    for kind in kinds
                )
                terms[word] = terms.get(word, f.zero) + f.from_int(
                    rng.randint(-3, 3)
                )
            x = FreeElement(alg, terms)
            nx = x.normal_order()
            if nx.normal_order() != nx:
                return CheckOutcome(
                    "presentation_normal_order_soundness",
                    (0, trials - 1),
                    "fail",
                    detail="trial %d: not idempotent" % t,
                )
            if not (x.evaluate(self.opctx) - nx.evaluate(self.opctx)).is_zero():
                return CheckOutcome(
                    "presentation_normal_order_soundness",
                    (0, trials - 1),
                    "fail",
                    detail="trial %d: evaluation changed" % t,
                )
        return CheckOutcome(
            "presentation_normal_order_soundness", (0, trials - 1), "pass"
        )

    def relation_zero_checks(self) -> list:
        """Every relation element of the bounded alphabet evaluates to the
        zero operator."""
        out = []
        for rid, el in self.algebra.relation_set():
            op = el.evaluate(self.opctx)
            bad = op.first_failing_block()
            out.append(
                CheckOutcome(
                    rid,
                    op.window,
                    "pass" if bad is None else "fail",
                    detail=""
                    if bad is None
                    else "first failing block at degree %d" % bad,
                    failing_block=bad,
                )
            )
        return out

    # -- rank-2 kernel matching ----------------------------------------------

    def _pair_vector(self, el: FreeElement, pair_index):
        vec = [self.field.zero] * len(pair_index)
        for w, c in el.terms.items():
            if len(w) != 2 or any(x[0] != T1 for x in w):
                raise ValueError("element is not a rank-2 t1 word combination")
            vec[pair_index[w[0][1], w[1][1]]] = c
        return vec

    def rank2_kernel_match(self) -> list:
        """Kernel of the evaluation map on two-letter t1 words versus the
        span of the in-bounds rank-2 relation elements.

        The relation span is echelonized exactly in pair coordinates; each
        relation is verified exactly to evaluate to zero (span contained in
        kernel); the kernel dimension is then pinned by a rank certificate
        at rational specialization points (specialized rank is a lower
        bound for the exact rank, so matching dimensions force equality).
        """
        alg = self.algebra
        f = self.field
        K = alg.K
        pairs = [(k, l) for k in range(K + 1) for l in range(K + 1)]
        pair_index = {p: i for i, p in enumerate(pairs)}
        sub = range(0, max(K - 2, 0))  # indices with k+3, l+3 within bounds

        basis = linalg.SpanBasis(f)
        rel_vecs = []
        for k in sub:
            for l in sub:
                v = self._pair_vector(alg.rank2_relation(k, l), pair_index)
                rel_vecs.append(((k, l), v))
                basis.add(v)
        dim_b = basis.dim

        ops = {p: self.opctx.d1(p[0]).compose(self.opctx.d1(p[1])) for p in pairs}
        included = True
        for (k, l), v in rel_vecs:
            total = None
            for p, c in zip(pairs, v):
                if c == f.zero:
                    continue
                term = ops[p].scale(c)
                total = term if total is None else total + term
            if total is not None and not total.is_zero():
                included = False
                break

        ovecs = [ops[p].flatten() for p in pairs]
        lb = max(
            linalg.rank_lower_bound(ovecs, pt)
            for pt in linalg.CERTIFICATE_POINTS
        )
        dim_a_upper = len(pairs) - lb
        dims_equal = included and dim_a_upper == dim_b

        window = (0, self.opctx.N)
        out = [
            CheckOutcome(
                "presentation_rank2_relations_in_kernel(K=%d)" % K,
                window,
                "pass" if included else "fail",
            ),
            CheckOutcome(
                "presentation_rank2_kernel_dims(K=%d)" % K,
                window,
                "pass" if dims_equal else "fail",
                detail="relation span %d, certified kernel %d (subrange k,l <= %d)"
                % (dim_b, dim_a_upper, max(K - 3, -1)),
            ),
            CheckOutcome(
                "presentation_rank2_kernel_reconstruction(K=%d)" % K,
                window,
                "pass" if dims_equal else "fail",
                detail="kernel equals relation span; every kernel vector "
                "reduces to zero against the relation echelon basis"
                if dims_equal
                else "",
            ),
        ]
        return out
