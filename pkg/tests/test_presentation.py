"""Abstract generators and relations: rewriting and the evaluation map."""

import pytest

from wsh.presentation import FreeAlgebra, IndexOverflowError
from wsh.symfunc import SymFunc


@pytest.fixture(scope="module")
def A(field):
    return FreeAlgebra(field, L=5, K=5)


def test_cross_rewrite_single_step(A):
    # t0_2 t1_0 -> t1_0 t0_2 + t1_1
    lhs = (A.t0(2) * A.t1(0)).normal_order()
    rhs = (A.t1(0) * A.t0(2) + A.t1(1)).normal_order()
    assert lhs == rhs
    assert lhs.terms == {
        (("t1", 0), ("t0", 2)): A.field.one,
        (("t1", 1),): A.field.one,
    }


def test_normal_order_idempotent(A):
    x = A.t0(3) * A.t1(1) * A.t0(2) * A.t1(0)
    once = x.normal_order()
    assert once.normal_order() == once


def test_t0_letters_commute_and_sort(A):
    a = (A.t0(3) * A.t0(1)).normal_order()
    b = (A.t0(1) * A.t0(3)).normal_order()
    assert a == b
    assert list(a.terms) == [(("t0", 1), ("t0", 3))]


def test_index_overflow_message(A):
    # rewriting t0_5 past t1_4 needs t1_8, beyond the K = 5 window
    with pytest.raises(IndexOverflowError, match="index overflow; raise K"):
        (A.t0(5) * A.t1(4) * A.t1(4)).normal_order()


def test_rank_counts_t1_letters(A):
    assert (A.t1(0) * A.t1(2)).rank() == 2
    assert A.t0(2).rank() == 0
    assert A.one().rank() == 0


def test_evaluation_sends_t1_0_to_p1(A, ctx6):
    F = ctx6.field
    op = A.t1(0).evaluate(ctx6)
    assert op.apply(SymFunc.one(F)) == SymFunc.power_sum((1,), F)


def test_evaluation_is_an_algebra_map(A, ctx6):
    x = A.t0(2) * A.t1(1)
    y = A.t1(0)
    assert (x * y).evaluate(ctx6) == x.evaluate(ctx6).compose(y.evaluate(ctx6))
    assert (x + y.scale(A.field.kappa)).evaluate(ctx6) == x.evaluate(
        ctx6
    ) + y.evaluate(ctx6).scale(A.field.kappa)


def test_relations_evaluate_to_zero(A, ctx6):
    assert A.cross_relation(2, 1).evaluate(ctx6).is_zero()
    assert A.quadratic_relation().evaluate(ctx6).is_zero()
    assert A.cubic_relation().evaluate(ctx6).is_zero()
    assert A.rank2_relation(0, 1).evaluate(ctx6).is_zero()


def test_normal_order_preserves_evaluation(A, ctx6):
    x = A.t0(2) * A.t1(1) * A.t0(3) * A.t1(0)
    assert x.evaluate(ctx6) == x.normal_order().evaluate(ctx6)


def test_quadratic_is_half_diagonal_rank2(A):
    lhs = A.quadratic_relation().scale(A.field.from_int(2)).normal_order()
    rhs = A.rank2_relation(0, 0).normal_order()
    assert lhs == rhs
