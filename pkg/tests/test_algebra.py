from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fanochords.algebra import (GF, GREVLEX, LEX, QQ, ArityMismatch, FieldError, MonomialOverflow,
                                ParseError, PolynomialRing, RingMismatch, elim, field_inverse,
                                format_polynomial, jacobian_matrix, parse_ideal_text, poly_arith)
from fanochords.algebra.monomial import MAX_DEGREE, monomial_order


def test_field_inverse_examples():
    assert field_inverse(GF(7)(3)) == GF(7)(5)
    assert field_inverse(GF(32003)(1)) == GF(32003)(1)
    assert field_inverse(QQ(Fraction(2, 3))) == QQ(Fraction(3, 2))


def test_field_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        field_inverse(GF(7)(0))
    with pytest.raises(ZeroDivisionError):
        field_inverse(QQ(0))


def test_field_canonical_values():
    assert GF(7)(-1).value == 6
    assert QQ(Fraction(4, -6)).value == Fraction(-2, 3)
    with pytest.raises(FieldError):
        GF(32001)


def test_poly_arith_examples():
    R = PolynomialRing(("x", "y"), QQ)
    x, y = R.gens()
    assert poly_arith(x + y, x - y, "add") == 2 * x
    assert poly_arith(x + y, x - y, "mul") == x ** 2 - y ** 2
    assert poly_arith(x + y, R.zero(), "mul").is_zero()


def test_ring_mismatch():
    R = PolynomialRing(("x", "y"), QQ)
    S = PolynomialRing(("x", "y"), GF(7))
    with pytest.raises(RingMismatch):
        R.var(0) + S.var(0)


def test_evaluate_examples(zring):
    z = dict(zip(("00", "01", "02", "10", "11", "12"), zring.gens()))
    f = z["00"] * z["11"] - z["01"] * z["10"]
    assert f.evaluate([1, 0, 0, 0, 0, 0]).value == 0
    R = PolynomialRing(("x",), GF(7))
    assert (R.var(0) ** 2).evaluate([3]).value == 2
    assert R.constant(5).evaluate([4]).value == 5
    with pytest.raises(ArityMismatch):
        f.evaluate([1, 2])


def test_substitute_examples(zring, F):
    S = PolynomialRing(("x0", "x1", "y0", "y1"), F)
    x0, x1, y0, y1 = S.gens()
    images = [x0 * y0 ** 2, x0 * y0 * y1, x0 * y1 ** 2, x1 * y0 ** 2, x1 * y0 * y1, x1 * y1 ** 2]
    z00, z01, z02, z10, z11, z12 = zring.gens()
    assert (z00 * z02 - z01 ** 2).substitute(images).is_zero()
    assert (z00 * z12 - z01 * z11).substitute(images).is_zero()
    f = z00 * z11 - 3 * z12 + 1
    assert f.substitute(zring.gens()) == f


def test_substitute_rejects_mixed_rings(zring, F):
    S = PolynomialRing(("a",), F)
    T = PolynomialRing(("b",), F)
    with pytest.raises(RingMismatch):
        zring.var(0).substitute([S.var(0)] * 5 + [T.var(0)])
    with pytest.raises(ArityMismatch):
        zring.var(0).substitute([S.var(0)] * 5)


def test_jacobian_examples(zring):
    R = PolynomialRing(("x", "y"), QQ)
    x, y = R.gens()
    assert [[e.value for e in r] for r in jacobian_matrix([x ** 2 + y ** 2 - 1], [1, 0])] == [[2, 0]]
    assert [[e.value for e in r] for r in jacobian_matrix([x * y], [0, 0])] == [[0, 0]]
    z00, z01, z02, z10, z11, z12 = zring.gens()
    row = [e.value for e in jacobian_matrix([z00 * z11 - z01 * z10], [1, 0, 0, 0, 0, 0])[0]]
    assert row == [0, 0, 0, 0, 1, 0]


def test_orders_and_elimination_block():
    mo = monomial_order(elim(2), 4)
    assert mo.encode((0, 1, 0, 0)) > mo.encode((0, 0, 9, 9))
    lex = monomial_order(LEX, 2)
    assert lex.encode((1, 0)) > lex.encode((0, 5))
    grevlex = monomial_order(GREVLEX, 3)
    # x*z < y^2 in grevlex
    assert grevlex.encode((1, 0, 1)) < grevlex.encode((0, 2, 0))


def test_degree_overflow():
    R = PolynomialRing(("x",), QQ)
    with pytest.raises(MonomialOverflow):
        R.monomial((MAX_DEGREE + 1,))
    with pytest.raises(MonomialOverflow):
        R.var(0) ** MAX_DEGREE * R.var(0)


def test_text_roundtrip_and_errors():
    text = "ring vars=x,y field=Fp:32003 order=lex\nideal\nx^2 + y^2 - 1\n# comment\n2*x*y - 3/2\n"
    ring, gens = parse_ideal_text(text)
    assert ring.field == GF(32003) and len(gens) == 2
    assert [format_polynomial(g) for g in gens] == ["x^2 + y^2 - 1", "2*x*y + 16000"]
    with pytest.raises(ParseError) as err:
        parse_ideal_text("ring vars=x field=QQ order=lex\nx^^2\n")
    assert (err.value.line, err.value.column) == (2, 3)
    with pytest.raises(ParseError):
        parse_ideal_text("ring vars=x field=QQ order=lex\nx + w\n")


def test_parse_is_whitespace_insensitive():
    R = PolynomialRing(("x", "y"), QQ)
    assert R.parse(" 3 * x ^ 2*y -  y ") == R.parse("3*x^2*y-y")


# properties -------------------------------------------------------------------------

P = 10007
coeff = st.integers(0, P - 1)
exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(exps, coeff, max_size=6)
points = st.tuples(coeff, coeff, coeff)
R3 = PolynomialRing(("a", "b", "c"), GF(P))


@given(polys, polys, points)
def test_evaluate_is_a_homomorphism(f, g, pt):
    f, g = R3.from_dict(f), R3.from_dict(g)
    assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)


@given(polys, polys, st.lists(polys, min_size=3, max_size=3))
def test_substitute_is_a_homomorphism(f, g, images):
    f, g = R3.from_dict(f), R3.from_dict(g)
    imgs = [R3.from_dict(i) for i in images]
    assert (f * g).substitute(imgs) == f.substitute(imgs) * g.substitute(imgs)
    assert (f + g).substitute(imgs) == f.substitute(imgs) + g.substitute(imgs)


@given(polys, points)
def test_jacobian_matches_symbolic_derivative(f, pt):
    f = R3.from_dict(f)
    row = jacobian_matrix([f], pt)[0]
    assert row == [f.diff(j).evaluate(pt) for j in range(3)]


@given(polys)
def test_no_zero_terms_stored(f):
    p = R3.from_dict(f)
    assert all(c != 0 for _, c in p.sorted_terms())
    assert (p - p).is_zero() and len(p - p) == 0
