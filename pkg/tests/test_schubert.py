import pytest
from hypothesis import given, strategies as st

from fanochords.algebra import GF
from fanochords.geometry import plucker_ideal
from fanochords.hilbert import dimension_degree
from fanochords.schubert import (Partition, SchubertCycle, grassmannian_degree, pieri_multiply,
                                 rectangle_tableaux)


def test_degrees():
    assert grassmannian_degree(1, 3) == 2
    assert grassmannian_degree(1, 4) == 5
    assert grassmannian_degree(1, 5) == 14
    assert grassmannian_degree(0, 4) == 1
    assert grassmannian_degree(2, 5) == 42
    with pytest.raises(ValueError):
        grassmannian_degree(4, 3)


def test_pieri_small_products():
    s1 = pieri_multiply(SchubertCycle.fundamental(2, 4))
    assert s1 == SchubertCycle(2, 4, {Partition((1,)): 1})
    sq = pieri_multiply(s1)
    assert sq.coeffs == {Partition((2,)): 1, Partition((1, 1)): 1}
    top = pieri_multiply(SchubertCycle(2, 4, {Partition((4, 3)): 1}))
    assert top == SchubertCycle.point_class(2, 4)
    assert pieri_multiply(SchubertCycle.point_class(2, 4)).coeffs == {}


def test_partition_validation():
    assert Partition((2, 1, 0)) == Partition((2, 1))
    assert str(Partition((1, 1))) == "sigma_1,1"
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        SchubertCycle(2, 2, {Partition((3,)): 1})


@pytest.mark.parametrize("n", [3, 4, 5])
def test_agrees_with_hilbert_degree(n):
    data = dimension_degree(plucker_ideal(n, GF(32003)))
    assert data.projective_dimension == 2 * (n - 1)
    assert data.degree == grassmannian_degree(1, n)


@given(st.integers(0, 6), st.integers(1, 6))
def test_duality(k, extra):
    n = k + extra
    assert grassmannian_degree(k, n) == grassmannian_degree(n - k - 1, n)


@given(st.integers(1, 3), st.integers(1, 4))
def test_hook_length(rows, cols):
    assert grassmannian_degree(rows - 1, rows + cols - 1) == rectangle_tableaux(rows, cols)


@given(st.integers(1, 3), st.integers(1, 4), st.integers(0, 12))
def test_pieri_raises_weighted_size(rows, cols, steps):
    c = SchubertCycle.fundamental(rows, cols)
    for i in range(min(steps, rows * cols)):
        before = c
        c = pieri_multiply(c)
        total = sum(c.coeffs.values())
        assert c.weighted_size() == (i + 1) * total
        assert all(lam.size == i + 1 for lam in c.coeffs)
        assert total >= sum(before.coeffs.values()) or i + 1 > rows * cols // 2
