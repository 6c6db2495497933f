"""Multivariate polynomials over the coefficient field."""

import pytest

from wsh.field import RationalFunctionField
from wsh.multipoly import MultiPoly

F = RationalFunctionField()


def var(i, n=2):
    return MultiPoly.variable(i, n, F)


def test_ring_ops():
    x, y = var(0), var(1)
    p = (x + y) * (x - y)
    assert p == x**2 - y**2
    assert p - p == MultiPoly.zero(2, F)
    assert (p * 2) / 2 == p


def test_zero_coefficients_pruned():
    x = var(0)
    p = x - x
    assert not p.terms and not p


def test_permute_vars():
    x, y = var(0), var(1)
    p = x**2 * y
    assert p.permute_vars([1, 0]) == y**2 * x


def test_symmetrize_and_is_symmetric():
    x, y = var(0), var(1)
    p = x**2 * y
    s = p.symmetrize()
    assert s.is_symmetric()
    assert s == x**2 * y + y**2 * x
    assert not p.is_symmetric()


def test_extend_and_substitute():
    x = MultiPoly.variable(0, 1, F)
    p = (x + 1) ** 2
    q = p.extend(3, offset=1)
    assert q.nvars == 3 and q.degree_in(1) == 2
    evaluated = q.substitute_scalars({1: F.from_int(2)})
    assert evaluated == MultiPoly.constant(F.from_int(9), 3, F)


def test_evaluate():
    x, y = var(0), var(1)
    p = x * y + y**2
    assert p.evaluate([F.from_int(2), F.kappa]) == F.kappa * 2 + F.kappa**2


def test_divexact_roundtrip():
    x, y = var(0), var(1)
    a = x**2 - y**2 + x * y + 1
    b = x + y + 2
    assert (a * b).divexact(b) == a
    with pytest.raises(ValueError):
        (a * b + 1).divexact(b)


def test_total_degree_and_coefficient():
    x, y = var(0), var(1)
    p = x**3 * y + y
    assert p.total_degree() == 4
    assert p.coefficient((3, 1)) == F.one
    assert p.coefficient((2, 2)) == F.zero
