import random

import pytest
import sympy
from hypothesis import given, strategies as st

from fanochords.algebra import GF, GREVLEX, LEX, QQ, PolynomialRing, elim
from fanochords.groebner import (GroebnerTimeout, Ideal, NotZeroDimensional, buchberger,
                                 count_points, eliminate, is_radical_zero_dim, normal_form,
                                 saturate, time_budget)


def ring(names, field=QQ, order=GREVLEX):
    R = PolynomialRing(names, field, order)
    return R, R.gens()


def test_circle_and_line_lex():
    R, (x, y) = ring(("x", "y"), QQ, LEX)
    G = buchberger([x ** 2 + y ** 2 - 1, x - y])
    assert list(G) == [x - y, y ** 2 - R.constant(sympy.Rational(1, 2))]
    R, (x, y) = ring(("x", "y"), GF(32003), LEX)
    G = buchberger([x ** 2 + y ** 2 - 1, x - y])
    assert list(G) == [x - y, y ** 2 - 16002]  # 1/2 = 16002 mod 32003


def test_principal_ideal():
    R, (x, y) = ring(("x", "y"))
    for order in (LEX, GREVLEX):
        assert list(Ideal(R, [x]).groebner(order)) == [x.to_ring(R.with_order(order))]


def test_normal_form_examples():
    R, (x, y) = ring(("x", "y"), QQ, LEX)
    G = Ideal(R, [x - y]).groebner()
    assert normal_form(x ** 2, G) == y ** 2
    assert normal_form(x - y, G).is_zero()
    assert normal_form(R.one(), G) == R.one()


def test_eliminate_cuspidal_cubic():
    R, (t, x, y) = ring(("t", "x", "y"))
    E = eliminate(Ideal(R, [x - t ** 2, y - t ** 3]), 1)
    assert E.ring.names == ("x", "y")
    x2, y2 = E.ring.gens()
    assert [g.monic() for g in E.generators] == [(x2 ** 3 - y2 ** 2).monic()]


def test_eliminate_nothing():
    R, (x, y) = ring(("x", "y"))
    I = Ideal(R, [x * y - 1])
    assert eliminate(I, 0).equals(I)


def test_eliminate_scroll_graph_contains_three_quadrics(F):
    names = ("x0", "x1", "y0", "y1", "z00", "z01", "z02", "z10", "z11", "z12")
    R, v = ring(names, F)
    x0, x1, y0, y1, *z = v
    images = [x0 * y0 ** 2, x0 * y0 * y1, x0 * y1 ** 2, x1 * y0 ** 2, x1 * y0 * y1, x1 * y1 ** 2]
    E = eliminate(Ideal(R, [zi - im for zi, im in zip(z, images)]), 4)
    z00, z01, z02, z10, z11, z12 = E.ring.gens()
    for q in (z00 * z11 - z01 * z10, z00 * z02 - z01 ** 2, z10 * z12 - z11 ** 2):
        assert E.contains(q)


def test_saturation_examples():
    R, (x, y, z) = ring(("x", "y", "z"))
    assert saturate(Ideal(R, [x * z, y * z]), z).equals(Ideal(R, [x, y]))
    I = Ideal(R, [x ** 2 - y, x * y * z])
    assert saturate(I, R.one()).equals(I)
    assert saturate(Ideal(R, [x ** 2]), x).is_unit()


def test_count_points_examples():
    R, (x, y) = ring(("x", "y"))
    assert count_points(Ideal(R, [x ** 2 - 1, y ** 2 - 1])) == 4
    S, (u,) = ring(("u",))
    assert count_points(Ideal(S, [u])) == 1
    assert count_points(Ideal(S, [u ** 2])) == 2
    with pytest.raises(NotZeroDimensional):
        count_points(Ideal(R, [x]))


def test_count_points_independent_of_order(F):
    R, (x, y, z) = ring(("x", "y", "z"), F)
    I = Ideal(R, [x ** 2 + y * z - 3, y ** 2 - x + 1, z ** 2 - x * y - 2])
    assert count_points(I, LEX) == count_points(I, GREVLEX) == count_points(I, elim(1)) == 8


def test_radical_examples(F):
    S, (u,) = ring(("u",), F)
    assert is_radical_zero_dim(Ideal(S, [u ** 2 - 1]))
    assert not is_radical_zero_dim(Ideal(S, [u ** 2]))
    R, (x, y) = ring(("x", "y"), F)
    assert is_radical_zero_dim(Ideal(R, [x ** 2 - 1, y ** 2 - y]))
    assert not is_radical_zero_dim(Ideal(R, [x ** 2, y - 1]))
    with pytest.raises(NotZeroDimensional):
        is_radical_zero_dim(Ideal(R, [x * y]))


def test_timeout_reports_progress(F):
    names = tuple(f"v{i}" for i in range(7))
    R, v = ring(names, F)
    rng = random.Random(1)
    gens = [sum((R.monomial(tuple(rng.randrange(3) for _ in range(7)), rng.randrange(1, 99))
                 for _ in range(6)), R.zero()) for _ in range(5)]
    with pytest.raises(GroebnerTimeout) as err:
        buchberger(gens, R, max_pairs=3)
    assert err.value.progress["pairs_reduced"] >= 3
    with pytest.raises(GroebnerTimeout):
        with time_budget(0.0):
            buchberger(gens, R)


def test_cache_reuse(F):
    R, (x, y) = ring(("x", "y"), F)
    I = Ideal(R, [x ** 2 - y, y ** 2 - x])
    assert I.groebner() is I.groebner()


# sympy as an independent oracle ---------------------------------------------------------

sx, sy, sz = sympy.symbols("x y z")
small = st.lists(st.tuples(st.integers(-3, 3), st.integers(0, 2), st.integers(0, 2),
                           st.integers(0, 2)), min_size=1, max_size=4)


def _both(terms_list, R):
    ours, theirs = [], []
    x, y, z = R.gens()
    for terms in terms_list:
        f, g = R.zero(), 0
        for c, a, b, d in terms:
            f = f + R.constant(c) * x ** a * y ** b * z ** d
            g += c * sx ** a * sy ** b * sz ** d
        ours.append(f)
        theirs.append(g)
    return ours, theirs


def _as_sympy(p, R):
    x = sympy.symbols(R.names)
    return sum(sympy.Rational(c) * sympy.Mul(*[v ** e for v, e in zip(x, ex)])
               for ex, c in p.sorted_terms())


@given(st.lists(small, min_size=1, max_size=3), st.sampled_from(["lex", "grevlex"]))
def test_matches_sympy_reduced_basis(gens, order):
    R = PolynomialRing(("x", "y", "z"), QQ, LEX if order == "lex" else GREVLEX)
    ours, theirs = _both(gens, R)
    theirs = [t for t in theirs if t != 0]
    G = buchberger(ours, R)
    if not theirs:
        assert len(G) == 0
        return
    expected = sympy.groebner(theirs, sx, sy, sz, order=order, domain="QQ")
    expected = [e / sympy.LC(e, sx, sy, sz, order=order) for e in expected.exprs]
    assert [sympy.expand(_as_sympy(g, R)) for g in G] == [sympy.expand(e) for e in expected]


@given(st.lists(small, min_size=1, max_size=3), st.lists(small, min_size=3, max_size=3))
def test_combinations_reduce_to_zero(gens, mults):
    R = PolynomialRing(("x", "y", "z"), GF(32003))
    ours, _ = _both(gens, R)
    cofs, _ = _both(mults, R)
    G = buchberger(ours, R)
    assert G.s_pairs_reduce_to_zero()
    combo = sum((c * g for c, g in zip(cofs, ours)), R.zero())
    assert normal_form(combo, G).is_zero()


@given(st.lists(small, min_size=1, max_size=3))
def test_basis_is_canonical(gens):
    R = PolynomialRing(("x", "y", "z"), GF(32003))
    ours, _ = _both(gens, R)
    assert list(buchberger(ours, R)) == list(buchberger(list(reversed(ours)), R))
