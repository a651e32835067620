from fractions import Fraction

from hypothesis import given, settings, strategies as st

from asreg.polynomials import CommPoly, LinearForm, det, poly_divisible, restrict_to_line

Y1, Y2, Y3, Y4 = CommPoly.gens()


def test_parse_and_str_round_trip():
    p = CommPoly.parse("Y1^2*Y2 - 3*Y3")
    assert str(p) == "Y1^2*Y2 - 3*Y3"
    assert CommPoly.parse(str(p)) == p
    assert p.degree == 3 and not p.is_homogeneous()


def test_partial():
    assert CommPoly.parse("Y1^2*Y2 - 3*Y3").partial(0) == 2 * Y1 * Y2


def test_two_by_two_det():
    assert det([[Y1, Y2], [Y3, Y4]]) == Y1 * Y4 - Y2 * Y3


def test_divisible_by_a_product_of_forms():
    ok, quo = poly_divisible(Y1 * Y2 * Y3, [LinearForm.coordinate(0), LinearForm.coordinate(1)])
    assert ok and quo == Y3
    ok, quo = poly_divisible(Y1 * Y3, [LinearForm.coordinate(0), LinearForm.coordinate(1)])
    assert not ok and quo is None


def test_restriction_to_a_line():
    # Y1 Y2 on (0,0,1,0) + t (1,1,0,0) is t^2
    assert restrict_to_line(Y1 * Y2, (0, 0, 1, 0), (1, 1, 0, 0)) == [0, 0, 1]
    assert restrict_to_line(Y1 * Y2, (0, 0, 1, 0), (0, 0, 0, 1)) == []


coef = st.integers(-4, 4)


@settings(max_examples=40, deadline=None)
@given(st.lists(coef, min_size=4, max_size=4), st.lists(coef, min_size=4, max_size=4))
def test_product_evaluates_pointwise(a, b):
    f = sum((c * v for c, v in zip(a, (Y1, Y2, Y3, Y4))), CommPoly.const(0))
    g = sum((c * v for c, v in zip(b, (Y1, Y2, Y3, Y4))), CommPoly.const(1))
    pt = (Fraction(1, 2), 2, -1, 3)
    assert (f * g)(pt) == f(pt) * g(pt)
