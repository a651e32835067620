from fractions import Fraction

import pytest

from asreg.catalog import catalog
from asreg.linalg import QMatrix
from asreg.parser import ParseError, format_presentation, parse_expr, parse_file, parse_form
from asreg.tensor import TensorElement

TEXT = """\
# plane-pair example
generators: x1 x2 x3 x4
relation: x1*x2 - 2*x2*x1
relation: x3*x4 - x4*x3 - 1/2*x1*x2
quadric: (x1, x2 - x3)
tau: 1,0,0,0;0,2,0,0;0,0,1,0;0,0,0,1
"""


def test_expression_terms():
    e = parse_expr("x1*x2 - 2*x2*x1")
    assert e == TensorElement.word((0, 1)) - TensorElement.word((1, 0), 4, 2)
    assert e.format() == "x1*x2 - 2*x2*x1"


def test_linear_form():
    assert list(parse_form("x1 - 3/2*x4")) == [1, 0, 0, Fraction(-3, 2)]


def test_file_round_trip():
    pf = parse_file(TEXT)
    assert pf.presentation.relation_dim == 2
    assert pf.tau == QMatrix.diag([1, 2, 1, 1])
    text = format_presentation(pf.presentation, pf.quadric, pf.tau)
    again = parse_file(text)
    assert again.presentation == pf.presentation
    assert again.quadric == pf.quadric and again.tau == pf.tau
    assert format_presentation(again.presentation, again.quadric, again.tau) == text


@pytest.mark.parametrize("cid", ["poly4", "plalg_c", "pltwist_d", "ex_quadric_only"])
def test_catalog_round_trip(cid):
    P = catalog(cid).P
    assert parse_file(format_presentation(P)).presentation == P


def test_custom_generator_names():
    pf = parse_file("generators: a b\nrelation: a*b - b*a\n")
    assert pf.presentation.gen_names == ("a", "b")


@pytest.mark.parametrize("text, where", [
    ("relation: x1*x5\n", "line 1"),
    ("relation: x1*x2\nrelation: x1\n", "line 2"),
    ("relation: x1*x2*x3\n", "line 1"),
    ("generators: a a\n", "line 1"),
    ("bogus: 1\n", "line 1"),
    ("quadric: (x1)\n", "line 1"),
    ("tau: 1,2;3\n", "line 1"),
])
def test_parse_errors_carry_positions(text, where):
    with pytest.raises(ParseError) as info:
        parse_file(text)
    assert where in str(info.value)
