import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fanochords.algebra import GF, LEX, QQ, PolynomialRing
from fanochords.geometry import (cubic_veronese, image_ideal_interpolation, plucker_ideal,
                                 scroll_parametrization, slice_degree)
from fanochords.groebner import Ideal, eliminate
from fanochords.hilbert import (NotACurve, NotHomogeneous, arithmetic_genus, dimension_degree,
                                hilbert_series, series_from_leading_terms)


def test_series_of_polynomial_ring_and_hyperplane():
    R = PolynomialRing(("x", "y"), QQ)
    assert hilbert_series(Ideal(R, [])).reduced() == ([1], 2)
    assert hilbert_series(Ideal(R, [R.var(0)])).reduced() == ([1], 1)


def test_grassmannian_series(F):
    num, d = hilbert_series(plucker_ideal(5, F)).reduced()
    assert d == 9 and sum(num) == 14


def test_scroll_by_elimination(F):
    names = ("x0", "x1", "y0", "y1", "z00", "z01", "z02", "z10", "z11", "z12")
    R = PolynomialRing(names, F)
    x0, x1, y0, y1, *z = R.gens()
    images = [x0 * y0 ** 2, x0 * y0 * y1, x0 * y1 ** 2, x1 * y0 ** 2, x1 * y0 * y1, x1 * y1 ** 2]
    E = eliminate(Ideal(R, [zi - im for zi, im in zip(z, images)]), 4)
    data = dimension_degree(E)
    assert (data.projective_dimension, data.degree) == (2, 4)


def test_point_and_twisted_cubic():
    R = PolynomialRing(("a", "b", "c"), QQ)
    a, b, c = R.gens()
    data = dimension_degree(Ideal(R, [a, b]))
    assert (data.projective_dimension, data.degree) == (0, 1)
    S = PolynomialRing(("t", "s", "z0", "z1", "z2", "z3"), GF(32003))
    t, s, *z = S.gens()
    E = eliminate(Ideal(S, [z[i] - t ** i * s ** (3 - i) for i in range(4)]), 2)
    data = dimension_degree(E)
    assert (data.projective_dimension, data.degree) == (1, 3)
    assert slice_degree(E, 1, seed=3) == 3


def test_genus_examples():
    R = PolynomialRing(("x", "y", "z"), QQ)
    x, y, z = R.gens()
    assert arithmetic_genus(Ideal(R, [x])) == 0
    cubic = Ideal(R, [y ** 2 * z - x ** 3 - x * z ** 2])
    assert dimension_degree(cubic).hilbert_polynomial == (Fraction(0), Fraction(3))
    assert arithmetic_genus(cubic) == (3 - 1) * (3 - 2) // 2
    with pytest.raises(NotACurve):
        arithmetic_genus(Ideal(R, [x, y]))


def test_non_homogeneous_rejected():
    R = PolynomialRing(("x", "y"), QQ)
    with pytest.raises(NotHomogeneous):
        hilbert_series(Ideal(R, [R.var(0) - 1]))


@pytest.mark.parametrize("ideal, dim, expected", [
    ("scroll", 2, 4), ("G(1,3)", 4, 2), ("del_pezzo", 2, 9)])
def test_degree_matches_slicing(F, ideal, dim, expected):
    if ideal == "scroll":
        phi = scroll_parametrization(F)
        I = Ideal(phi.target_ring(), image_ideal_interpolation(phi, 2, seed=1))
    elif ideal == "G(1,3)":
        I = plucker_ideal(3, F)
    else:
        phi = cubic_veronese(F)
        I = Ideal(phi.target_ring(), image_ideal_interpolation(phi, 2, seed=1))
    data = dimension_degree(I)
    assert (data.projective_dimension, data.degree) == (dim, expected)
    for seed in range(3):
        assert slice_degree(I, dim, seed) == expected


def test_polynomial_agrees_with_series_eventually(F):
    I = plucker_ideal(4, F)
    hs = hilbert_series(I)
    data = dimension_degree(I)
    coeffs = hs.coefficients(20)
    t0 = next(t for t in range(20) if all(data.evaluate(u) == coeffs[u] for u in range(t, 20)))
    assert all(data.evaluate(t) == coeffs[t] for t in range(t0, t0 + 6))
    assert data.hilbert_polynomial[-1] * 720 == data.degree  # leading coefficient deg / 6!


# properties --------------------------------------------------------------------------------

def standard_counts(gens, n, upto):
    out = []
    for d in range(upto + 1):
        count = 0
        for combo in itertools.combinations_with_replacement(range(n), d):
            e = [0] * n
            for j in combo:
                e[j] += 1
            if not any(all(a <= b for a, b in zip(g, e)) for g in gens):
                count += 1
        out.append(count)
    return out


monomial_ideals = st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.tuples(*[st.integers(0, 5)] * n).filter(lambda e: 0 < sum(e) <= 5),
                         min_size=1, max_size=5)))


@given(monomial_ideals)
def test_series_matches_brute_force(case):
    n, gens = case
    hs = series_from_leading_terms(gens, n)
    assert hs.coefficients(8) == standard_counts(gens, n, 8)


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(0, 2), st.integers(0, 2),
                          st.integers(0, 2)), min_size=1, max_size=4), st.integers(1, 3))
def test_series_independent_of_order(terms, deg):
    R = PolynomialRing(("x", "y", "z"), GF(32003))
    x, y, z = R.gens()
    f = R.zero()
    for c, a, b, _ in terms:
        if a + b <= deg:
            f = f + R.constant(c) * x ** a * y ** b * z ** (deg - a - b)
    g = x * y * z - y ** 3
    I = Ideal(R, [f, g])
    from_lex = series_from_leading_terms(I.groebner(LEX).leading_exponents(), 3)
    assert from_lex.reduced() == hilbert_series(I).reduced()
